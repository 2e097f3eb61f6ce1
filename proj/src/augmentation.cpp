#include "legch/augmentation.hpp"

#include <algorithm>

namespace legch {

Augmentation::Augmentation(std::vector<Gen> augmented) : augmented_(std::move(augmented)) {
  std::sort(augmented_.begin(), augmented_.end());
  augmented_.erase(std::unique(augmented_.begin(), augmented_.end()), augmented_.end());
}

bool Augmentation::contains(Gen g) const {
  return std::binary_search(augmented_.begin(), augmented_.end(), g);
}

bool Augmentation::evaluate(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Gen g) { return contains(g); });
}

bool Augmentation::evaluate(const Chain& c) const {
  bool v = false;
  for (const Word& w : c) v ^= evaluate(w);
  return v;
}

Augmentation Augmentation::with(const std::vector<Gen>& extra) const {
  std::vector<Gen> all = augmented_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Augmentation(std::move(all));
}

bool operator<(const Augmentation& a, const Augmentation& b) {
  const auto& x = a.augmented_;
  const auto& y = b.augmented_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  // A proper prefix has a 0 where the longer set has a 1.
  return x.size() > y.size();
}

const char* to_string(LevelClass c) noexcept {
  switch (c) {
    case LevelClass::Ample: return "ample";
    case LevelClass::Sparse: return "sparse";
    case LevelClass::Inadmissible: return "inadmissible";
  }
  return "?";
}

LevelClass classify_level(const std::array<Gen, 3>& triple, const Augmentation& eps) {
  const bool x = eps.contains(triple[0]);
  const bool y = eps.contains(triple[1]);
  const bool z = eps.contains(triple[2]);
  const bool xyz = x ^ (x && y && z) ^ z;  // [xyz] = x + xyz + z
  if (!xyz) return LevelClass::Inadmissible;
  const bool xy = !(x && y);  // [xy] = 1 + xy
  return xy ? LevelClass::Sparse : LevelClass::Ample;
}

SplitCusp split_at_e(const Differential& d, const GradedAlphabet& alphabet, Gen s, Gen e) {
  if (!alphabet.is_cusp(s)) {
    throw Error(ErrorKind::NotSpecialForm, alphabet.name(s) + " is not a right cusp");
  }
  if (!alphabet.is_crossing(e)) {
    throw Error(ErrorKind::NotSpecialForm, "no crossing e to split at");
  }
  SplitCusp out;
  for (const Word& w : d[s]) {
    if (!w.empty() && w.back() == e) {
      out.s1.toggle(Word(w.begin(), w.end() - 1));
    } else {
      out.s2.toggle(w);
    }
  }
  out.s2.toggle(Word{});
  return out;
}

bool is_augmentation(const Differential& d, const GradedAlphabet& alphabet,
                     const Augmentation& eps) {
  for (Gen g : eps.augmented()) {
    if (!alphabet.is_crossing(g) || alphabet.degree(g) != 0) return false;
  }
  for (Gen g = 0; g < d.size(); ++g) {
    if (eps.evaluate(d[g])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Search. Each equation eps(d c) = 0 is abelianized to a Z2 polynomial in the
// degree-0 crossings (monomials as bitmasks; x^2 = x on {0,1}). Variables are
// assigned in diagram order and every equation is checked as soon as its last
// variable is fixed.

namespace {

struct Equation {
  std::vector<std::uint64_t> monomials;
  int last_var = -1;
};

class AugmentationSearch {
 public:
  AugmentationSearch(const Differential& d, const GradedAlphabet& alphabet)
      : vars_(alphabet.degree_zero()) {
    std::vector<int> var_of(static_cast<std::size_t>(alphabet.size()), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) var_of[vars_[i]] = static_cast<int>(i);

    by_last_.resize(vars_.size() + 1);
    for (Gen g = 0; g < d.size(); ++g) {
      if (alphabet.degree(g) != 1) continue;
      std::vector<std::uint64_t> monos;
      for (const Word& w : d[g]) {
        std::uint64_t mask = 0;
        bool alive = true;
        for (Gen x : w) {
          if (var_of[x] < 0) {
            alive = false;
            break;
          }
          mask |= std::uint64_t{1} << var_of[x];
        }
        if (alive) monos.push_back(mask);
      }
      std::sort(monos.begin(), monos.end());
      // Cancel equal monomials pairwise.
      Equation eq;
      for (std::size_t i = 0; i < monos.size();) {
        std::size_t j = i;
        while (j < monos.size() && monos[j] == monos[i]) ++j;
        if ((j - i) % 2 == 1) eq.monomials.push_back(monos[i]);
        i = j;
      }
      if (eq.monomials.empty()) continue;
      std::uint64_t all = 0;
      for (auto m : eq.monomials) all |= m;
      eq.last_var = all == 0 ? -1 : 63 - __builtin_clzll(all);
      by_last_[static_cast<std::size_t>(eq.last_var + 1)].push_back(std::move(eq));
    }
  }

  std::vector<Augmentation> run() {
    if (!satisfied(by_last_[0], 0)) return {};
    dfs(0, 0);
    return std::move(found_);
  }

 private:
  static bool satisfied(const std::vector<Equation>& eqs, std::uint64_t assignment) {
    for (const Equation& eq : eqs) {
      bool v = false;
      for (auto m : eq.monomials) v ^= (m & assignment) == m;
      if (v) return false;
    }
    return true;
  }

  void dfs(std::size_t k, std::uint64_t assignment) {
    if (k == vars_.size()) {
      std::vector<Gen> set;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (assignment >> i & 1) set.push_back(vars_[i]);
      }
      found_.emplace_back(std::move(set));
      return;
    }
    for (int bit : {1, 0}) {
      const std::uint64_t next = assignment | (static_cast<std::uint64_t>(bit) << k);
      if (satisfied(by_last_[k + 1], next)) dfs(k + 1, next);
    }
  }

  std::vector<Gen> vars_;
  std::vector<std::vector<Equation>> by_last_;
  std::vector<Augmentation> found_;
};

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Differential& d,
                                                  const GradedAlphabet& alphabet,
                                                  std::size_t cap) {
  const std::size_t vars = alphabet.degree_zero().size();
  if (vars > cap || vars > 64) {
    throw Error(ErrorKind::SearchTooLarge,
                std::to_string(vars) + " degree-0 crossings exceed the search cap of " +
                    std::to_string(std::min<std::size_t>(cap, 64)));
  }
  return AugmentationSearch(d, alphabet).run();
}

}  // namespace legch
