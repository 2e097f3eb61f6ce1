#include <random>

#include "doctest.h"
#include "legch/constructions.hpp"
#include "legch/dga.hpp"
#include "legch/table.hpp"
#include "oracles.hpp"

using namespace legch;

namespace {

// K1 letters
namespace k1l {
constexpr Gen a = 0, b = 1, c = 2, r = 3, s = 4;
}

// K2 letters; abar etc. are the barred crossings.
namespace k2l {
constexpr Gen a = 0, abar = 1, b = 2, bbar = 3, p = 4, q = 5, c = 6, cbar = 7, r = 8, s = 9,
              t = 10;
}

Chain one() { return Chain{Word{}}; }

}  // namespace

TEST_CASE("K1 differential") {
  using namespace k1l;
  const FrontDiagram f = k1();
  const GradedAlphabet al = maslov_and_grading(f);
  const Differential d = differential(f, al);
  CHECK(d[a].empty());
  CHECK(d[b].empty());
  CHECK(d[c].empty());
  CHECK(d[r] == Chain{{}, {a}, {a, b, c}, {c}});
  CHECK(d[s] == Chain{{}, {c}, {c, b, a}, {a}});
  CHECK(format_chain(al, d[r]) == "1 + c1 + c1 c2 c3 + c3");
  CHECK(admissible_disks(f, a).empty());
}

TEST_CASE("K2 differential") {
  using namespace k2l;
  const FrontDiagram f = k2();
  const GradedAlphabet al = maslov_and_grading(f);
  const Differential d = differential(f, al);
  auto br = [](Gen x, Gen y) { return Chain{{}, {x, y}}; };
  auto br3 = [](Gen x, Gen y, Gen z) { return Chain{{x}, {x, y, z}, {z}}; };
  CHECK(d[c] == Chain{{a}} * br(abar, bbar) * Chain{{q}});
  CHECK(d[cbar] == Chain{{q}} * br(b, a) * Chain{{abar}});
  CHECK(d[p] == br(b, a) * br(abar, bbar));
  CHECK(d[r] == one() + br3(a, b, c) + Chain{{a, p, q}});
  CHECK(d[s] == br(a, abar) + Chain{{a}} * br3(abar, bbar, cbar) + br3(c, b, a) * Chain{{abar}});
  CHECK(d[t] == one() + br3(cbar, bbar, abar) + Chain{{q, p, abar}});
  for (Gen x : {a, abar, b, bbar, q}) CHECK(d[x].empty());

  std::set<Word> corners;
  for (const Disk& disk : admissible_disks(f, p)) corners.insert(disk.corners);
  CHECK(admissible_disks(f, p).size() == 4);
  CHECK(corners == std::set<Word>{{}, {b, a}, {abar, bbar}, {b, a, abar, bbar}});
}

TEST_CASE("unknot: the disk and the cusp convention cancel") {
  const FrontDiagram f = unknot();
  const GradedAlphabet al = maslov_and_grading(f);
  CHECK(admissible_disks(f, 0).size() == 1);
  CHECK(admissible_disks(f, 0)[0].corners.empty());
  CHECK(differential(f, al)[0].empty());
}

TEST_CASE("chain arithmetic is over Z2") {
  Chain x{{0}, {1}};
  x.toggle({0});
  CHECK(x == Chain{{1}});
  x += Chain{{1}};
  CHECK(x.empty());
  CHECK(Chain{{0}, {1}} * Chain{{2}} == Chain{{0, 2}, {1, 2}});
  CHECK((Chain{{0}, {1}} * Chain{{0}, {1}}).size() == 4);
  CHECK((one() + one()).empty());
}

TEST_CASE("Leibniz extension") {
  const FrontDiagram f = k2();
  const GradedAlphabet al = maslov_and_grading(f);
  const Differential d = differential(f, al);
  CHECK(d.apply(Word{}).empty());
  CHECK(d.apply(Word{k2l::a, k2l::p}) == Chain{{k2l::a}} * d[k2l::p]);
  CHECK(d.apply(Word{k2l::p, k2l::p}) == d[k2l::p] * Chain{{k2l::p}} + Chain{{k2l::p}} * d[k2l::p]);
}

TEST_CASE("verify_d_squared rejects a non-differential") {
  // d x = y, d y = 1: d^2 x = 1.
  const Differential bad({Chain{{1}}, Chain{Word{}}});
  CHECK_FALSE(verify_d_squared(bad));
  CHECK_FALSE(oracle::d_squared_vanishes(bad));
  const Differential good({Chain{{1}}, Chain{}});
  CHECK(verify_d_squared(good));
}

TEST_CASE("suppress_multi_nonzero drops words with two nonzero-degree factors") {
  using namespace k2l;
  const FrontDiagram f = k2();
  const GradedAlphabet al = maslov_and_grading(f);
  const Differential d = differential(f, al);
  const Chain kept = suppress_multi_nonzero(al, d[r]);
  CHECK_FALSE(kept.contains({a, p, q}));
  CHECK(kept.contains({a, b, c}));
  CHECK(kept.contains({}));
}

TEST_CASE("random fronts: d^2 = 0 and degree drop") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FrontDiagram f = random_front(rng, 4, 12, i % 3 == 0);
    CAPTURE(serialize_front(f));
    if (classical_invariants(f).r != 0) {
      const Differential u = ungraded_differential(f);
      CHECK(verify_d_squared(u));
      CHECK(oracle::d_squared_vanishes(u));
      continue;
    }
    const GradedAlphabet al = maslov_and_grading(f);
    const Differential d = differential(f, al);
    CHECK(verify_d_squared(d));
    CHECK(oracle::d_squared_vanishes(d));
    for (Gen g = 0; g < al.size(); ++g) {
      for (const Word& w : d[g]) CHECK(word_degree(al, w) == al.degree(g) - 1);
    }
    const Differential u = ungraded_differential(f);
    REQUIRE(u.size() == d.size());
    for (Gen g = 0; g < al.size(); ++g) CHECK(u[g] == d[g]);
  }
}
