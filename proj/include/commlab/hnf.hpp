#pragma once

#include <cstdint>
#include <vector>

#include "commlab/matrix.hpp"

namespace commlab {

/// Hermite normal form over the Laurent ring F_2[s, 1/s] of a square matrix
/// whose rows generate a full-rank submodule. Entries of both matrices are
/// F2RatFun values with denominator 1.
///
/// H = U * B with U invertible over F_2[s, 1/s]. H is upper triangular, each
/// diagonal entry is a polynomial with nonzero constant term, and every entry
/// above a diagonal entry d is a polynomial of degree < deg d. Two inputs
/// generate the same submodule iff their H agree.
struct HnfResult {
  MatF2Rat H;
  MatF2Rat U;
};

HnfResult hnf_f2poly(const MatF2Rat& B);

/// log_2 of the index of the row module of H in F_2[s,1/s]^n: the summed
/// degrees of the diagonal entries.
std::int64_t submodule_index(const MatF2Rat& H);

/// Remainder of the row vector v modulo the row module of H. The map is
/// F_2-linear, vanishes exactly on the module, and component j has degree
/// below deg H(j,j).
std::vector<F2RatFun> reduce_mod_hnf(const MatF2Rat& H, std::vector<F2RatFun> v);

bool in_row_module(const MatF2Rat& H, const std::vector<F2RatFun>& v);

/// Unique polynomial of degree < deg d congruent to the Laurent polynomial x
/// modulo d (d has nonzero constant term), together with the quotient
/// (x - r) / d.
struct LaurentDivision {
  F2RatFun quotient;
  F2RatFun remainder;
};
LaurentDivision laurent_divmod(const F2RatFun& x, const F2Poly& d);

F2Poly pow_mod(F2Poly base, std::int64_t e, const F2Poly& m);

}  // namespace commlab
