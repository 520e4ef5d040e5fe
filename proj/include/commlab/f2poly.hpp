#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace commlab {

/// Dense polynomial over F_2 with nonnegative exponents. Bit i of the packed
/// word vector is the coefficient of x^i; the vector never has a trailing
/// zero word, so the zero polynomial is the empty vector.
class F2Poly {
 public:
  F2Poly() = default;

  static F2Poly one() { return monomial(0); }
  static F2Poly monomial(std::int64_t e);
  static F2Poly from_exponents(const std::vector<std::int64_t>& exps);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  /// -1 for the zero polynomial.
  std::int64_t degree() const;
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::int64_t low_degree() const;
  std::int64_t popcount() const;

  bool coeff(std::int64_t i) const;
  void flip(std::int64_t i);

  std::vector<std::int64_t> exponents() const;

  F2Poly& operator+=(const F2Poly& other);
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);

  F2Poly shifted_up(std::int64_t k) const;
  /// Divides by x^k; the caller guarantees the low k coefficients vanish.
  F2Poly shifted_down(std::int64_t k) const;

  /// p(x) -> p(x^k)
  F2Poly stretched(std::int64_t k) const;
  /// x^deg * p(1/x); keeps a nonzero constant term nonzero.
  F2Poly reversed() const;

  friend bool operator==(const F2Poly&, const F2Poly&) = default;
  friend auto operator<=>(const F2Poly& a, const F2Poly& b) {
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

/// (quotient, remainder); throws NotDivisible on a zero divisor.
std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b);
F2Poly operator%(const F2Poly& a, const F2Poly& b);
F2Poly operator/(const F2Poly& a, const F2Poly& b);

F2Poly gcd(F2Poly a, F2Poly b);

/// Inverse of a modulo m; throws NotDivisible when gcd(a, m) != 1.
F2Poly inverse_mod(const F2Poly& a, const F2Poly& m);

F2Poly mul_mod(const F2Poly& a, const F2Poly& b, const F2Poly& m);

}  // namespace commlab
