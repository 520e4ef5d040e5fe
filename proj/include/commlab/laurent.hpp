#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "commlab/f2poly.hpp"

namespace commlab {

/// Element of F_2[t, 1/t], i.e. a finitely supported vector in the direct sum
/// of copies of Z/2 indexed by Z. Stored as the sorted set of exponents with
/// coefficient 1, so equality is set equality.
class F2LaurentPoly {
 public:
  F2LaurentPoly() = default;
  explicit F2LaurentPoly(std::vector<std::int64_t> support);

  static F2LaurentPoly monomial(std::int64_t e) { return F2LaurentPoly({e}); }
  static F2LaurentPoly one() { return monomial(0); }
  /// x^shift * p
  static F2LaurentPoly from_poly(const F2Poly& p, std::int64_t shift = 0);

  const std::vector<std::int64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::int64_t min_exponent() const { return support_.empty() ? 0 : support_.front(); }
  std::int64_t max_exponent() const { return support_.empty() ? 0 : support_.back(); }
  bool coeff(std::int64_t e) const;

  /// Writes this as x^shift * p with p(0) = 1 (p = 0 for the zero element).
  std::pair<std::int64_t, F2Poly> split() const;

  F2LaurentPoly& operator+=(const F2LaurentPoly& other);
  friend F2LaurentPoly operator+(F2LaurentPoly a, const F2LaurentPoly& b) { return a += b; }
  friend F2LaurentPoly operator*(const F2LaurentPoly& a, const F2LaurentPoly& b);

  /// x^k * this
  F2LaurentPoly shifted(std::int64_t k) const;
  /// p(x) -> p(1/x)
  F2LaurentPoly inverted() const;
  /// p(x) -> p(x^k), k >= 1
  F2LaurentPoly stretched(std::int64_t k) const;

  friend bool operator==(const F2LaurentPoly&, const F2LaurentPoly&) = default;

 private:
  std::vector<std::int64_t> support_;
};

/// Exact division in F_2[t, 1/t]; throws NotDivisible if b does not divide a.
F2LaurentPoly exact_divide(const F2LaurentPoly& a, const F2LaurentPoly& b);

/// 1 + x + ... + x^(count-1) for count >= 0; for count < 0 the sum
/// x^-1 + ... + x^count. This is the multiplier turning a derivation's value
/// on a generator g into its value on g^count.
F2LaurentPoly geometric_sum(std::int64_t count, std::int64_t step);

/// Textual form `0 | term (+ term)*`, term `1 | x | x^e`. The parser accepts
/// any single-letter variable among `t` and `s`.
std::string to_string(const F2LaurentPoly& p, char var = 't');
F2LaurentPoly parse_laurent(std::string_view text);

}  // namespace commlab
