#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "legch/dga.hpp"

namespace legch {

// An augmentation, identified with its set of augmented degree-0 crossings.
class Augmentation {
 public:
  Augmentation() = default;
  explicit Augmentation(std::vector<Gen> augmented);

  const std::vector<Gen>& augmented() const { return augmented_; }
  bool contains(Gen g) const;
  std::size_t size() const { return augmented_.size(); }

  // Z2 value of a word after substituting 1 for augmented crossings and 0 for
  // every other generator.
  bool evaluate(const Word& w) const;
  bool evaluate(const Chain& c) const;

  Augmentation with(const std::vector<Gen>& extra) const;

  friend bool operator==(const Augmentation&, const Augmentation&) = default;
  // Indicator strings compared with 1 before 0: {a,b,c} < {a,b} < {a} < {b,c}.
  friend bool operator<(const Augmentation& a, const Augmentation& b);

 private:
  std::vector<Gen> augmented_;  // sorted
};

constexpr std::size_t kDefaultSearchCap = 30;

// All augmentations, in the order of operator<. Throws SearchTooLarge when
// there are more than `cap` degree-0 crossings (cap is at most 64).
std::vector<Augmentation> enumerate_augmentations(const Differential& d,
                                                  const GradedAlphabet& alphabet,
                                                  std::size_t cap = kDefaultSearchCap);

// Direct substitution into the full noncommutative differential.
bool is_augmentation(const Differential& d, const GradedAlphabet& alphabet,
                     const Augmentation& eps);

enum class LevelClass { Ample, Sparse, Inadmissible };

const char* to_string(LevelClass c) noexcept;

// Classifies the augmented part of an ordered triple xyz.
LevelClass classify_level(const std::array<Gen, 3>& triple, const Augmentation& eps);

struct SplitCusp {
  Chain s1;  // e-terminated words of d(s) with the final e removed
  Chain s2;  // the remaining words, with the leading 1 removed
};

// d(s) = 1 + s1 e + s2. Throws NotSpecialForm unless s is a right cusp and e
// a crossing.
SplitCusp split_at_e(const Differential& d, const GradedAlphabet& alphabet, Gen s, Gen e);

}  // namespace legch
