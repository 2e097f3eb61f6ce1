#include <random>

#include "doctest.h"
#include "legch/constructions.hpp"
#include "legch/linearized.hpp"
#include "legch/table.hpp"
#include "oracles.hpp"

using namespace legch;

namespace {

namespace k2l {
constexpr Gen a = 0, abar = 1, b = 2, bbar = 3, p = 4, q = 5, c = 6, cbar = 7;
}

struct Setup {
  FrontDiagram f;
  GradedAlphabet al;
  Differential d;
  explicit Setup(FrontDiagram front)
      : f(std::move(front)), al(maslov_and_grading(f)), d(differential(f, al)) {}
};

}  // namespace

TEST_CASE("rank over GF(2)") {
  CHECK(rank_gf2(BitMatrix(3, 4)) == 0);
  CHECK(rank_gf2(BitMatrix::identity(70)) == 70);
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 0, true);
  m.set(1, 1, true);
  CHECK(rank_gf2(m) == 1);
  m.flip(1, 1);
  CHECK(rank_gf2(m) == 2);
  CHECK_FALSE(m.is_zero());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = rng() % 20, cols = rng() % 150;
    BitMatrix x(rows, cols);
    std::vector<std::vector<std::uint8_t>> y(rows, std::vector<std::uint8_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          x.set(r, c, true);
          y[r][c] = 1;
        }
    CHECK(rank_gf2(x) == static_cast<std::size_t>(oracle::rank_mod2(y)));
  }
}

TEST_CASE("projection to the linear part") {
  CHECK(project(Augmentation({0, 1, 2}), {0, 1, 2}) == LinearChain{0, 1, 2});
  CHECK(project(Augmentation({0}), {0, 5}) == LinearChain{5});
  CHECK(project(Augmentation({0, 1}), {}).empty());
  CHECK(project(Augmentation({0}), {1, 2}).empty());
  CHECK(project(Augmentation({0}), {0, 0}) == LinearChain{});
}

TEST_CASE("K2 degree-0 boundary") {
  using namespace k2l;
  const Setup s(k2());
  const LinearizedComplex full = linearized_complex(s.d, s.al, Augmentation({a, abar, b, bbar, c, cbar}));
  CHECK(full.rank(0) == 0);
  CHECK(full.image(c).empty());
  const LinearizedComplex part = linearized_complex(s.d, s.al, Augmentation({a, abar, b, c}));
  CHECK(part.rank(0) == 1);
  CHECK(part.image(c) == LinearChain{q});
  CHECK(geometric_linearized(s.f, s.al, Augmentation({a, abar, b, bbar, c, cbar})).image(c).empty());
}

TEST_CASE("K1 linearized complex") {
  const Setup s(k1());
  const LinearizedComplex lc = linearized_complex(s.d, s.al, Augmentation({0, 1, 2}));
  CHECK(lc.image(3) == LinearChain{1});
  CHECK(lc.dim(0) == 3);
  CHECK(lc.rank(1) == 1);
  CHECK(lc.homology_dim(0) == 2);
  CHECK(lc.homology_dim(1) == 1);
  for (const Augmentation& e : enumerate_augmentations(s.d, s.al)) {
    const LinearizedComplex x = linearized_complex(s.d, s.al, e);
    CHECK(poincare_polynomial(x) == parse_poly("t + 2"));
    for (Gen g : {0, 1, 2}) CHECK(x.image(g).empty());
  }
  CHECK_THROWS_AS(linearized_complex(s.d, s.al, Augmentation({1})), Error);
}

TEST_CASE("Chekanov polynomials of the basic fronts") {
  const ChekanovSet u = chekanov_set(unknot());
  REQUIRE(u.per_augmentation.size() == 1);
  CHECK(u.per_augmentation[0].chekanov == parse_poly("t"));
  CHECK(u.reduced_set() == std::vector<LaurentPoly>{LaurentPoly{}});

  const ChekanovSet one = chekanov_set(k1());
  CHECK(one.ch() == 1);
  CHECK(one.multiplicity.at(parse_poly("1")) == 5);

  const ChekanovSet two = chekanov_set(k2());
  CHECK(two.ch() == 2);
  CHECK(two.multiplicity.at(parse_poly("1")) == 12);
  CHECK(two.multiplicity.at(parse_poly("2+t")) == 4);
  for (const auto& ap : two.per_augmentation) {
    if (ap.reduced == parse_poly("2+t")) CHECK(ap.chekanov == parse_poly("2t + 4 + t^-1"));
  }

  const ChekanovSet lt = chekanov_set(left_trefoil());
  CHECK(lt.ch() == 0);
  CHECK(lt.per_augmentation.empty());
  CHECK(lt.invariants.r == 1);
}

TEST_CASE("reduce") {
  CHECK(reduce(parse_poly("t+2")) == parse_poly("1"));
  CHECK(reduce(parse_poly("2t+4+t^-1")) == parse_poly("2+t"));
  CHECK(reduce(parse_poly("t")) == LaurentPoly{});
  CHECK(reduce(parse_poly("t^-3 + 2t^-1 + 2 + 3t + t^3")) == parse_poly("1+2t+t^3"));
  for (const char* bad : {"t + 1", "0", "2t + t^-2", "t^-1 + 2", "2t + 2 + t^-1 + t^2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(reduce(parse_poly(bad)), Error);
  }
  CHECK(has_chekanov_shape(parse_poly("2t+4+t^-1"), 1));
  CHECK_FALSE(has_chekanov_shape(parse_poly("2t+4+t^-1"), -1));
  CHECK_FALSE(has_chekanov_shape(parse_poly("2"), 2));
  CHECK_FALSE(has_chekanov_shape(parse_poly("-t^-1 + t + 2t^2 - t^2"), -1));
}

TEST_CASE("linear shortcut on K2 and K_n") {
  for (int n = 1; n <= 5; ++n) {
    const Setup s(k_n(n));
    const int tb = classical_invariants(s.f).tb;
    for (const Augmentation& e : enumerate_augmentations(s.d, s.al)) {
      const LinearizedComplex lc = linearized_complex(s.d, s.al, e);
      const auto sc = linear_shortcut(lc, s.al, tb);
      REQUIRE(sc.has_value());
      CHECK(*sc == reduce(poincare_polynomial(lc)));
    }
  }
  const Setup t(twist_knot(2));
  const LinearizedComplex lc =
      linearized_complex(t.d, t.al, enumerate_augmentations(t.d, t.al).front());
  CHECK(t.al.min_degree() < -1);
  CHECK_FALSE(linear_shortcut(lc, t.al, classical_invariants(t.f).tb).has_value());
}

TEST_CASE("homology bases") {
  const Setup s(k2());
  for (const Augmentation& e : enumerate_augmentations(s.d, s.al)) {
    const LinearizedComplex lc = linearized_complex(s.d, s.al, e);
    for (const auto& [k, gens] : lc.basis) {
      const auto basis = homology_basis(lc, k);
      CHECK(static_cast<long long>(basis.size()) == lc.homology_dim(k));
      for (const LinearChain& z : basis) {
        LinearChain boundary;
        for (Gen g : z)
          for (Gen x : lc.image(g)) {
            auto it = std::find(boundary.begin(), boundary.end(), x);
            if (it == boundary.end()) boundary.push_back(x);
            else boundary.erase(it);
          }
        CHECK(boundary.empty());
      }
    }
  }
}

TEST_CASE("random fronts: homology, duality, geometric agreement") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const FrontDiagram f = random_front(rng, 4, 12, i % 2 == 1);
    const ClassicalInvariants inv = classical_invariants(f);
    CAPTURE(serialize_front(f));
    if (inv.r != 0) {
      CHECK(chekanov_set(f).ch() == 0);
      continue;
    }
    const Setup s(f);
    for (const Augmentation& e : enumerate_augmentations(s.d, s.al)) {
      const LinearizedComplex alg = linearized_complex(s.d, s.al, e);
      const LinearizedComplex geo = geometric_linearized(f, s.al, e);
      CHECK(alg.basis == geo.basis);
      CHECK(alg.boundary == geo.boundary);
      for (const auto& [k, m] : alg.boundary) {
        auto lower = alg.boundary.find(k - 1);
        if (lower == alg.boundary.end()) continue;
        for (std::size_t row = 0; row < m.rows(); ++row) {
          std::vector<std::uint8_t> acc(lower->second.cols(), 0);
          for (std::size_t col = 0; col < m.cols(); ++col)
            if (m.get(row, col))
              for (std::size_t j = 0; j < lower->second.cols(); ++j)
                acc[j] ^= lower->second.get(col, j) ? 1 : 0;
          CHECK(std::all_of(acc.begin(), acc.end(), [](std::uint8_t v) { return v == 0; }));
        }
      }
      const LaurentPoly p = poincare_polynomial(alg);
      CHECK(p == oracle::homology_poly(s.d, s.al, e.augmented()));
      CHECK(p.at_minus_one() == inv.tb);
      CHECK(has_chekanov_shape(p, inv.tb));
      const LaurentPoly red = reduce(p);
      CHECK(parse_poly("t") + red + red.inverted() == p);
      if (s.al.min_degree() >= 0) CHECK(red.max_exponent() <= 0);
    }
  }
}
