#include "legch/linearized.hpp"

#include <algorithm>

namespace legch {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (row(r)[c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v) {
    row(r)[c / 64] |= bit;
  } else {
    row(r)[c / 64] &= ~bit;
  }
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  row(r)[c / 64] ^= std::uint64_t{1} << (c % 64);
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

namespace {

void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool row_zero(const std::uint64_t* r, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (r[i]) return false;
  }
  return true;
}

// Row-reduces m in place; returns the rank. `track`, if given, receives the
// same row operations.
std::size_t eliminate(BitMatrix& m, BitMatrix* track) {
  std::size_t rank = 0;
  const std::size_t words = m.words_per_row();
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row(pivot), m.row(pivot) + words, m.row(rank));
      if (track) {
        std::swap_ranges(track->row(pivot), track->row(pivot) + track->words_per_row(),
                         track->row(rank));
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m.get(r, c)) {
        xor_row(m.row(r), m.row(rank), words);
        if (track) xor_row(track->row(r), track->row(rank), track->words_per_row());
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t index_in(const std::vector<Gen>& basis, Gen g) {
  return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), g) -
                                  basis.begin());
}

void toggle_gen(LinearChain& c, Gen g) {
  auto it = std::lower_bound(c.begin(), c.end(), g);
  if (it != c.end() && *it == g) {
    c.erase(it);
  } else {
    c.insert(it, g);
  }
}

// Assembles boundary matrices from per-generator images and checks d^2 = 0.
LinearizedComplex assemble(const GradedAlphabet& alphabet,
                           const std::vector<LinearChain>& images) {
  LinearizedComplex out;
  for (Gen g = 0; g < alphabet.size(); ++g) out.basis[alphabet.degree(g)].push_back(g);
  for (const auto& [k, gens] : out.basis) {
    auto below = out.basis.find(k - 1);
    const std::size_t cols = below == out.basis.end() ? 0 : below->second.size();
    BitMatrix m(gens.size(), cols);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Gen b : images[static_cast<std::size_t>(gens[i])]) {
        if (below == out.basis.end() || alphabet.degree(b) != k - 1) {
          throw Error(ErrorKind::InternalInconsistency,
                      "linearized image of " + alphabet.name(gens[i]) + " contains " +
                          alphabet.name(b) + " of the wrong degree");
        }
        m.set(i, index_in(below->second, b), true);
      }
    }
    out.ranks[k] = rank_gf2(m);
    out.boundary.emplace(k, std::move(m));
  }
  // d_{k} d_{k+1} = 0: each row of d_{k+1} combines rows of d_k to zero.
  for (const auto& [k, upper] : out.boundary) {
    auto lower = out.boundary.find(k - 1);
    if (lower == out.boundary.end()) continue;
    const BitMatrix& low = lower->second;
    for (std::size_t r = 0; r < upper.rows(); ++r) {
      std::vector<std::uint64_t> acc(low.words_per_row(), 0);
      for (std::size_t c = 0; c < upper.cols(); ++c) {
        if (upper.get(r, c)) xor_row(acc.data(), low.row(c), acc.size());
      }
      if (!row_zero(acc.data(), acc.size())) {
        throw Error(ErrorKind::NotAnAugmentation, "linearized differential does not square to zero");
      }
    }
  }
  return out;
}

}  // namespace

std::size_t rank_gf2(BitMatrix m) { return eliminate(m, nullptr); }

LinearChain project(const Augmentation& eps, const Word& w) {
  LinearChain out;
  std::size_t unaugmented = 0;
  Gen missing = 0;
  for (Gen g : w) {
    if (!eps.contains(g)) {
      ++unaugmented;
      missing = g;
    }
  }
  if (unaugmented == 0) {
    for (Gen g : w) toggle_gen(out, g);
  } else if (unaugmented == 1) {
    out.push_back(missing);
  }
  return out;
}

std::size_t LinearizedComplex::dim(int k) const {
  auto it = basis.find(k);
  return it == basis.end() ? 0 : it->second.size();
}

std::size_t LinearizedComplex::rank(int k) const {
  auto it = ranks.find(k);
  return it == ranks.end() ? 0 : it->second;
}

long long LinearizedComplex::homology_dim(int k) const {
  return static_cast<long long>(dim(k)) - static_cast<long long>(rank(k)) -
         static_cast<long long>(rank(k + 1));
}

LinearChain LinearizedComplex::image(Gen g) const {
  for (const auto& [k, gens] : basis) {
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end()) continue;
    LinearChain out;
    auto below = basis.find(k - 1);
    if (below == basis.end()) return out;
    const BitMatrix& m = boundary.at(k);
    const auto r = static_cast<std::size_t>(it - gens.begin());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) out.push_back(below->second[c]);
    }
    return out;
  }
  return {};
}

LinearizedComplex linearized_complex(const Differential& d, const GradedAlphabet& alphabet,
                                     const Augmentation& eps) {
  if (!is_augmentation(d, alphabet, eps)) {
    throw Error(ErrorKind::NotAnAugmentation, "the given set is not an augmentation");
  }
  std::vector<LinearChain> images(static_cast<std::size_t>(alphabet.size()));
  for (Gen g = 0; g < alphabet.size(); ++g) {
    for (const Word& w : d[g]) {
      for (Gen b : project(eps, w)) toggle_gen(images[static_cast<std::size_t>(g)], b);
    }
  }
  return assemble(alphabet, images);
}

LinearizedComplex geometric_linearized(const FrontDiagram& front,
                                       const GradedAlphabet& alphabet,
                                       const Augmentation& eps) {
  std::vector<LinearChain> images(static_cast<std::size_t>(alphabet.size()));
  for (const Disk& disk : enumerate_disks(front)) {
    const Word& w = disk.corners;
    const auto missing = std::count_if(w.begin(), w.end(),
                                       [&](Gen g) { return !eps.contains(g); });
    for (Gen b : w) {
      const auto others_missing = missing - (eps.contains(b) ? 0 : 1);
      if (others_missing == 0) toggle_gen(images[static_cast<std::size_t>(disk.target)], b);
    }
  }
  return assemble(alphabet, images);
}

LaurentPoly poincare_polynomial(const LinearizedComplex& complex) {
  LaurentPoly p;
  for (const auto& [k, gens] : complex.basis) p.add(k, complex.homology_dim(k));
  return p;
}

LaurentPoly reduce(const LaurentPoly& chekanov) {
  LaurentPoly p;
  const long long p0 = chekanov.coeff(0);
  if (p0 % 2 != 0) {
    throw Error(ErrorKind::DualityViolation,
                "constant term of " + format_poly(chekanov) + " is odd");
  }
  p.add(0, p0 / 2);
  for (const auto& [e, c] : chekanov.terms()) {
    if (e >= 1) p.add(e, c - (e == 1 ? 1 : 0));
  }
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) {
      throw Error(ErrorKind::DualityViolation,
                  format_poly(chekanov) + " has no nonnegative reduced form");
    }
  }
  if (LaurentPoly::monomial(1) + p + p.inverted() != chekanov) {
    throw Error(ErrorKind::DualityViolation, format_poly(chekanov) + " is not of the form t + p(t) + p(1/t)");
  }
  return p;
}

bool has_chekanov_shape(const LaurentPoly& chekanov, int tb) {
  for (const auto& [e, c] : chekanov.terms()) {
    if (c < 0) return false;
  }
  if (chekanov.at_minus_one() != tb) return false;
  if (chekanov.coeff(1) < 1) return false;
  const LaurentPoly rest = chekanov - LaurentPoly::monomial(1);
  return rest == rest.inverted();
}

std::optional<LaurentPoly> linear_shortcut(const LinearizedComplex& complex,
                                           const GradedAlphabet& alphabet, int tb) {
  if (alphabet.size() > 0 && alphabet.min_degree() < -1) return std::nullopt;
  const long long a = static_cast<long long>(complex.dim(-1)) -
                      static_cast<long long>(complex.rank(0));
  LaurentPoly p;
  p.add(1, a);
  p.add(0, a + (tb + 1) / 2);
  return p;
}

std::vector<LinearChain> homology_basis(const LinearizedComplex& complex, int k) {
  auto it = complex.basis.find(k);
  if (it == complex.basis.end()) return {};
  const std::vector<Gen>& gens = it->second;
  const std::size_t n = gens.size();

  // Kernel of d_k: track row combinations that reduce to zero.
  std::vector<std::vector<std::uint64_t>> kernel;
  auto bit = complex.boundary.find(k);
  BitMatrix track = BitMatrix::identity(n);
  if (bit != complex.boundary.end()) {
    BitMatrix m = bit->second;
    const std::size_t r = eliminate(m, &track);
    for (std::size_t i = r; i < n; ++i) {
      kernel.emplace_back(track.row(i), track.row(i) + track.words_per_row());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      kernel.emplace_back(track.row(i), track.row(i) + track.words_per_row());
    }
  }

  // Boundaries: rows of d_{k+1}. Extend their span by kernel vectors.
  std::vector<std::vector<std::uint64_t>> rows;
  auto above = complex.boundary.find(k + 1);
  if (above != complex.boundary.end()) {
    for (std::size_t i = 0; i < above->second.rows(); ++i) {
      rows.emplace_back(above->second.row(i), above->second.row(i) + above->second.words_per_row());
    }
  }
  auto rank_of = [&](const std::vector<std::vector<std::uint64_t>>& rs) {
    BitMatrix m(rs.size(), n);
    for (std::size_t i = 0; i < rs.size(); ++i) std::copy(rs[i].begin(), rs[i].end(), m.row(i));
    return rank_gf2(std::move(m));
  };
  std::size_t current = rank_of(rows);
  std::vector<LinearChain> out;
  for (const auto& v : kernel) {
    rows.push_back(v);
    const std::size_t next = rank_of(rows);
    if (next == current) {
      rows.pop_back();
      continue;
    }
    current = next;
    LinearChain cycle;
    for (std::size_t i = 0; i < n; ++i) {
      if ((v[i / 64] >> (i % 64)) & 1) cycle.push_back(gens[i]);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<LaurentPoly> ChekanovSet::reduced_set() const {
  std::vector<LaurentPoly> out;
  for (const auto& [p, count] : multiplicity) out.push_back(p);
  return out;
}

ChekanovSet chekanov_set(const FrontDiagram& front, std::size_t cap) {
  ChekanovSet out;
  out.invariants = classical_invariants(front);
  if (out.invariants.r != 0) return out;
  const GradedAlphabet alphabet = maslov_and_grading(front);
  const Differential d = differential(front, alphabet);
  for (Augmentation& eps : enumerate_augmentations(d, alphabet, cap)) {
    const LinearizedComplex complex = linearized_complex(d, alphabet, eps);
    AugmentationPolynomial entry{std::move(eps), poincare_polynomial(complex), {}};
    entry.reduced = reduce(entry.chekanov);
    ++out.multiplicity[entry.reduced];
    out.per_augmentation.push_back(std::move(entry));
  }
  return out;
}

}  // namespace legch
