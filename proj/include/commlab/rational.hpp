#pragma once

#include <gmpxx.h>

#include <set>
#include <string>
#include <string_view>

namespace commlab {

/// Exact rationals, always kept in lowest terms with positive denominator.
using BigRat = mpq_class;
using BigInt = mpz_class;

/// Accepts `a` or `a/b` with optional surrounding whitespace.
BigRat parse_rational(std::string_view text);
std::string to_string(const BigRat& q);

inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }

/// True iff every prime factor of d lies in `primes` (d != 0).
bool is_s_unit_denominator(BigInt d, const std::set<unsigned long>& primes);

/// Removes from d every prime factor of n; returns the part coprime to n.
BigInt coprime_part(BigInt d, const BigInt& n);

/// p-adic valuation of a nonzero integer.
long valuation(BigInt x, const BigInt& p);

}  // namespace commlab
