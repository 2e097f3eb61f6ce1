#include "legch/laurent.hpp"

#include <cctype>
#include <string>

#include "legch/error.hpp"

namespace legch {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, long long>> terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

LaurentPoly LaurentPoly::constant(long long c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, long long c) {
  LaurentPoly p;
  p.add(exponent, c);
  return p;
}

long long LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, long long c) {
  if (c == 0) return;
  auto& slot = terms_[exponent];
  slot += c;
  if (slot == 0) terms_.erase(exponent);
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

long long LaurentPoly::at_minus_one() const {
  long long v = 0;
  for (const auto& [e, c] : terms_) v += (e % 2 == 0) ? c : -c;
  return v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly operator*(long long k, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms_) out.add(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(-e, c);
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.max_exponent() != b.max_exponent()) return a.max_exponent() < b.max_exponent();
  return a.terms_ < b.terms_;
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly p;
    skip();
    if (i_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (i_ < s_.size()) {
      long long sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      long long coef = 1;
      bool have_coef = false;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = number();
        have_coef = true;
        skip();
        if (peek() == '*') {
          ++i_;
          skip();
          if (peek() != 't') fail("expected 't' after '*'");
        }
      }
      int exponent = 0;
      if (peek() == 't') {
        ++i_;
        skip();
        exponent = 1;
        if (peek() == '^') {
          ++i_;
          skip();
          bool paren = peek() == '(';
          if (paren) ++i_;
          long long esign = 1;
          if (peek() == '-' || peek() == '+') {
            esign = peek() == '-' ? -1 : 1;
            ++i_;
          }
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          exponent = static_cast<int>(esign * number());
          if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++i_;
          }
        }
      } else if (!have_coef) {
        fail("expected a term");
      }
      p.add(exponent, sign * coef);
      skip();
    }
    return p;
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  long long number() {
    long long v = 0;
    std::size_t digits = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
      if (++digits > 15) fail("number too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Syntax, "polynomial '" + std::string(s_) + "' at offset " +
                                       std::to_string(i_) + ": " + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace legch
