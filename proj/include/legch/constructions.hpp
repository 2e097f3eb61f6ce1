#pragma once

#include <string_view>
#include <vector>

#include "legch/augmentation.hpp"
#include "legch/front.hpp"
#include "legch/laurent.hpp"

namespace legch {

FrontDiagram unknot();
// Plat closure of sigma_2^3 on four strands.
FrontDiagram k1();
// Plat closure of (sigma_2 sigma_4)^2 sigma_3^2 (sigma_2 sigma_4) on six strands.
FrontDiagram k2();
// Maximal-tb left-handed trefoil; r = 1.
FrontDiagram left_trefoil();

// K followed by K' shifted below it, joined by one crossing between K's
// lowest strand and the top strand of K'. Generators: those of K, then those
// of K', then the joining crossing; cusps of K precede cusps of K'.
FrontDiagram connected_sum(const FrontDiagram& k, const FrontDiagram& k_prime);
FrontDiagram connected_sum(const std::vector<FrontDiagram>& parts);

// Plat closure on 2n + 2 strands of e_n^2 o_n^2 e_n with
// e_n = s2 s4 ... s2n and o_n = s3 s5 ... s2n-1. Requires n >= 1.
FrontDiagram k_n(int n);

// Twist knot whose unique reduced polynomial is t^d. Requires d >= 1.
FrontDiagram twist_knot(int d);

// #_d (a_d T_d) for p = sum a_d t^d, with T_0 = K1; p = 0 gives the unknot.
FrontDiagram realize(const LaurentPoly& p);

// A front is special when it has a crossing at position 2 and, after the last
// such crossing e, no event touches positions 1 to 3. The top right cusp s
// then closes the two strands that sit at positions 1 and 2 just before e.
struct SpecialForm {
  FrontDiagram diagram;
  std::size_t e_event = 0;
  Gen e = 0;
  Gen s = 0;
  Gen t_cusp = 0;
  // Potential of the strand at position 1 minus that at position 2 just
  // before e. The degree of e is 1 - d.
  int d = 0;
};

bool is_special(const FrontDiagram& front);
// Throws NotSpecialForm, or RotationNonzero when no potential exists.
SpecialForm special_form(const FrontDiagram& front);
int maslov_number(const SpecialForm& special);

struct TauResult {
  FrontDiagram diagram;
  Gen a = 0, b = 0, c = 0, p = 0, q = 0, r = 0;
  // Generator of K -> generator of tau(K).
  std::vector<Gen> old_to_new;
};

TauResult tau_detailed(const SpecialForm& special);
FrontDiagram tau(const FrontDiagram& front);
FrontDiagram tau_iterate(const FrontDiagram& front, int n);

// Fertility of eps on a special front. Throws MaslovZero when d = 0.
bool is_fertile(const Augmentation& eps, const SpecialForm& special, const Differential& d,
                const GradedAlphabet& alphabet);

struct WordFamily {
  FrontDiagram diagram;  // tau^|w|(K)
  std::vector<Augmentation> members;
};

// Extends eps along w: 'a' adds the ample subsets abc, ab of each new
// triple, 's' the sparse subsets a, bc, c; only genuine augmentations are
// kept. w must start with 'a' and avoid "ss".
WordFamily word_family(std::string_view w, const FrontDiagram& base, const Augmentation& eps);

}  // namespace legch
