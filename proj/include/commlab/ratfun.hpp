#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "commlab/f2poly.hpp"
#include "commlab/laurent.hpp"

namespace commlab {

/// Element x^shift * num / den of F_2(x) in canonical form: num and den have
/// nonzero constant term, gcd(num, den) = 1, and zero is (0, 0/1).
class F2RatFun {
 public:
  F2RatFun() : den_(F2Poly::one()) {}
  /// Image of an integer in F_2.
  explicit F2RatFun(int c) : den_(F2Poly::one()) {
    if (c % 2 != 0) num_ = F2Poly::one();
  }
  explicit F2RatFun(const F2LaurentPoly& p);
  F2RatFun(const F2Poly& num, const F2Poly& den, std::int64_t shift = 0);

  static F2RatFun monomial(std::int64_t e) { return F2RatFun(F2Poly::one(), F2Poly::one(), e); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// Throws NotDivisible unless the denominator is 1.
  F2LaurentPoly to_laurent() const;

  std::int64_t shift() const { return shift_; }
  const F2Poly& num() const { return num_; }
  const F2Poly& den() const { return den_; }

  F2RatFun inverse() const;

  F2RatFun& operator+=(const F2RatFun& o);
  F2RatFun& operator-=(const F2RatFun& o) { return *this += o; }
  F2RatFun& operator*=(const F2RatFun& o);
  F2RatFun& operator/=(const F2RatFun& o) { return *this *= o.inverse(); }
  friend F2RatFun operator+(F2RatFun a, const F2RatFun& b) { return a += b; }
  friend F2RatFun operator-(F2RatFun a, const F2RatFun& b) { return a += b; }
  friend F2RatFun operator*(F2RatFun a, const F2RatFun& b) { return a *= b; }
  friend F2RatFun operator/(F2RatFun a, const F2RatFun& b) { return a /= b; }
  F2RatFun operator-() const { return *this; }

  /// f(x) -> f(1/x)
  F2RatFun inverted() const;
  /// f(x) -> f(x^k), k >= 1
  F2RatFun stretched(std::int64_t k) const;

  friend bool operator==(const F2RatFun&, const F2RatFun&) = default;

 private:
  void normalize();

  std::int64_t shift_ = 0;
  F2Poly num_;
  F2Poly den_;
};

/// `N` or `N/D` with N, D in the Laurent grammar (parenthesized when they
/// have several terms).
std::string to_string(const F2RatFun& f, char var = 's');
F2RatFun parse_ratfun(std::string_view text);

}  // namespace commlab
