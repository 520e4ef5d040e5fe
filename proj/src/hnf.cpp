#include "commlab/hnf.hpp"

#include <utility>

namespace commlab {

F2Poly pow_mod(F2Poly base, std::int64_t e, const F2Poly& m) {
  F2Poly result = F2Poly::one() % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

LaurentDivision laurent_divmod(const F2RatFun& x, const F2Poly& d) {
  if (!x.is_laurent()) fail(ErrorCode::NotDivisible, "laurent_divmod of a non-Laurent element");
  if (x.is_zero()) return {F2RatFun(), F2RatFun()};
  if (d.is_one()) return {x, F2RatFun()};
  const auto e = x.shift();
  F2Poly unit;
  if (e >= 0) {
    unit = pow_mod(F2Poly::monomial(1), e, d);
  } else {
    // d = 1 + s*q, so q is the inverse of s modulo d.
    F2Poly s_inv = (d + F2Poly::one()).shifted_down(1);
    unit = pow_mod(s_inv, -e, d);
  }
  F2Poly r = mul_mod(x.num(), unit, d);
  F2RatFun rem(r, F2Poly::one());
  F2RatFun diff = x + rem;
  F2RatFun quo = diff.is_zero() ? F2RatFun() : F2RatFun(exact_divide(diff.to_laurent(), F2LaurentPoly::from_poly(d)));
  return {std::move(quo), std::move(rem)};
}

namespace {

void add_row_multiple(MatF2Rat& m, std::size_t target, std::size_t source, const F2RatFun& c) {
  if (c.is_zero()) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(source, j).is_zero()) m(target, j) += c * m(source, j);
}

void scale_row(MatF2Rat& m, std::size_t row, const F2RatFun& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= c;
}

void swap_rows(MatF2Rat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

HnfResult hnf_f2poly(const MatF2Rat& B) {
  if (!B.is_square()) fail(ErrorCode::DimensionMismatch, "hnf_f2poly expects a square matrix");
  for (const auto& x : B.data())
    if (!x.is_laurent()) fail(ErrorCode::DimensionMismatch, "hnf_f2poly entries must be Laurent polynomials");
  const auto n = B.rows();
  MatF2Rat H = B;
  MatF2Rat U = MatF2Rat::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = col; i < n; ++i) {
        if (H(i, col).is_zero()) continue;
        if (best == n || H(i, col).num().degree() < H(best, col).num().degree()) best = i;
      }
      if (best == n) fail(ErrorCode::SingularMatrix, "rows do not span a full-rank submodule");
      swap_rows(H, col, best);
      swap_rows(U, col, best);
      const auto& pivot = H(col, col);
      bool done = true;
      for (std::size_t i = col + 1; i < n; ++i) {
        if (H(i, col).is_zero()) continue;
        const auto& x = H(i, col);
        F2RatFun q(x.num() / pivot.num(), F2Poly::one(), x.shift() - pivot.shift());
        add_row_multiple(H, i, col, q);
        add_row_multiple(U, i, col, q);
        if (!H(i, col).is_zero()) done = false;
      }
      if (done) break;
    }
    // Make the pivot a polynomial with nonzero constant term.
    F2RatFun unit = F2RatFun::monomial(-H(col, col).shift());
    scale_row(H, col, unit);
    scale_row(U, col, unit);
  }

  for (std::size_t col = 1; col < n; ++col) {
    const F2Poly d = H(col, col).num();
    for (std::size_t i = 0; i < col; ++i) {
      if (H(i, col).is_zero()) continue;
      auto [q, r] = laurent_divmod(H(i, col), d);
      add_row_multiple(H, i, col, q);
      add_row_multiple(U, i, col, q);
    }
  }
  return {std::move(H), std::move(U)};
}

std::int64_t submodule_index(const MatF2Rat& H) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < H.rows(); ++j) total += H(j, j).num().degree();
  return total;
}

std::vector<F2RatFun> reduce_mod_hnf(const MatF2Rat& H, std::vector<F2RatFun> v) {
  if (v.size() != H.cols()) fail(ErrorCode::DimensionMismatch, "vector length does not match HNF");
  for (std::size_t j = 0; j < H.rows(); ++j) {
    if (v[j].is_zero()) continue;
    auto [q, r] = laurent_divmod(v[j], H(j, j).num());
    if (q.is_zero()) continue;
    for (std::size_t k = j; k < H.cols(); ++k)
      if (!H(j, k).is_zero()) v[k] += q * H(j, k);
  }
  return v;
}

bool in_row_module(const MatF2Rat& H, const std::vector<F2RatFun>& v) {
  for (const auto& x : reduce_mod_hnf(H, v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace commlab
