#pragma once

#include <map>
#include <string>
#include <string_view>

namespace legch {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, long long>> terms);
  static LaurentPoly constant(long long c);
  static LaurentPoly monomial(int exponent, long long c = 1);

  long long coeff(int exponent) const;
  void add(int exponent, long long c);
  const std::map<int, long long>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;  // 0 for the zero polynomial
  int max_exponent() const;
  long long at_minus_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(long long k, const LaurentPoly& p);
  // p(t) -> p(1/t)
  LaurentPoly inverted() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  // Report order: by degree, then coefficients from the lowest exponent up.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::map<int, long long> terms_;
};

// Increasing exponent order, e.g. "t^-1 + 4 + 2t"; "0" for zero.
std::string format_poly(const LaurentPoly& p);

// Accepts sums of terms "c", "c t", "ct", "c*t^k", "t^-1", with optional signs.
LaurentPoly parse_poly(std::string_view text);

}  // namespace legch
