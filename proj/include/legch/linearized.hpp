#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "legch/augmentation.hpp"
#include "legch/dga.hpp"
#include "legch/laurent.hpp"

namespace legch {

// Dense GF(2) matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c);
  bool is_zero() const;

  const std::uint64_t* row(std::size_t r) const { return &data_[r * words_]; }
  std::uint64_t* row(std::size_t r) { return &data_[r * words_]; }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

std::size_t rank_gf2(BitMatrix m);

// Z2-linear combination of generators: the sorted set with coefficient 1.
using LinearChain = std::vector<Gen>;

// Linear part of w under eps.
LinearChain project(const Augmentation& eps, const Word& w);

struct LinearizedComplex {
  std::map<int, std::vector<Gen>> basis;
  // boundary[k] has one row per generator of degree k, holding its image in
  // the degree k-1 basis. Absent degrees are zero maps.
  std::map<int, BitMatrix> boundary;
  std::map<int, std::size_t> ranks;

  std::size_t dim(int k) const;
  std::size_t rank(int k) const;
  long long homology_dim(int k) const;
  // Image of generator g in the degree k-1 basis.
  LinearChain image(Gen g) const;
};

// Throws NotAnAugmentation if eps is not an augmentation or the result does
// not square to zero.
LinearizedComplex linearized_complex(const Differential& d, const GradedAlphabet& alphabet,
                                     const Augmentation& eps);

// The same complex counted from disks whose other corners are all augmented.
LinearizedComplex geometric_linearized(const FrontDiagram& front,
                                       const GradedAlphabet& alphabet,
                                       const Augmentation& eps);

LaurentPoly poincare_polynomial(const LinearizedComplex& complex);

// The p with P = t + p(t) + p(1/t). Throws DualityViolation if none exists.
LaurentPoly reduce(const LaurentPoly& chekanov);

// Nonnegative, P(-1) = tb, P - t palindromic, t^1 coefficient at least 1.
bool has_chekanov_shape(const LaurentPoly& chekanov, int tb);

// For alphabets with every degree >= -1: p = a t + b with a = n_{-1} - r_0
// and b = a + (tb + 1) / 2. Empty when some degree is below -1.
std::optional<LaurentPoly> linear_shortcut(const LinearizedComplex& complex,
                                           const GradedAlphabet& alphabet, int tb);

// Cycles representing a basis of H_k.
std::vector<LinearChain> homology_basis(const LinearizedComplex& complex, int k);

struct AugmentationPolynomial {
  Augmentation eps;
  LaurentPoly chekanov;
  LaurentPoly reduced;
};

struct ChekanovSet {
  ClassicalInvariants invariants;
  std::vector<AugmentationPolynomial> per_augmentation;
  // Reduced polynomial -> number of augmentations producing it.
  std::map<LaurentPoly, int> multiplicity;

  int ch() const { return static_cast<int>(multiplicity.size()); }
  std::vector<LaurentPoly> reduced_set() const;
};

// Full pipeline. A front with r != 0 has no augmentations and ch = 0.
ChekanovSet chekanov_set(const FrontDiagram& front, std::size_t cap = kDefaultSearchCap);

}  // namespace legch
