#include "commlab/storus.hpp"

#include "commlab/error.hpp"

namespace commlab::torus {

namespace {

bool sqrt_in(const BigInt& d, const Field& field) {
  switch (field.kind) {
    case Field::Kind::R: return d > 0;
    case Field::Kind::Q: return false;  // d squarefree and not 1
    case Field::Kind::Qp: return is_square_qp(BigRat(d), BigInt(field.p));
  }
  return false;
}

bool is_integer(const BigRat& x) { return x.get_den() == 1; }

}  // namespace

TorusFactor gm() { return {}; }
TorusFactor norm_one(const BigInt& d) { return {TorusFactor::Kind::NormOne, d}; }
TorusFactor rest_scalars(const BigInt& d) { return {TorusFactor::Kind::RestScalars, d}; }

bool is_prime(const BigInt& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

bool is_square_qp(const BigRat& x, const BigInt& p) {
  if (x == 0) fail(ErrorCode::ZeroInput, "x must be nonzero");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, p.get_str() + " is not prime");
  BigInt num = x.get_num(), den = x.get_den();
  const auto v = valuation(num, p) - valuation(den, p);
  if (v % 2 != 0) return false;
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) num /= p;
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) den /= p;
  // num/den is a square iff num*den is (den^2 is a unit square).
  BigInt u = num * den;
  if (p == 2) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return r == 1;
  }
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == 1;
}

BigInt squarefree_part(const BigInt& n) {
  if (n == 0) fail(ErrorCode::ZeroInput, "squarefree part of 0");
  BigInt rest = abs(n);
  BigInt out = n < 0 ? -1 : 1;
  unsigned long f = 2;
  for (; f <= 1000000 && BigInt(f) * f <= rest; ++f) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f)) {
      rest /= f;
      ++e;
    }
    if (e % 2) out *= f;
  }
  if (rest == 1) return out;
  if (BigInt(f) * f > rest) return out * rest;  // rest is prime
  // No factor up to 10^6: rest is a prime, a product of two distinct
  // primes, or a prime square, provided it is below 10^18.
  if (rest >= BigInt("1000000000000000000"))
    fail(ErrorCode::ExceedsFactorBound, "cofactor " + rest.get_str() + " exceeds the factoring bound");
  if (mpz_perfect_square_p(rest.get_mpz_t())) return out;
  return out * rest;
}

void validate(const TorusSpec& spec) {
  for (const auto& f : spec.factors) {
    if (f.kind == TorusFactor::Kind::Gm) continue;
    if (f.d == 0 || f.d == 1) fail(ErrorCode::InvalidSpec, "quadratic torus needs d not in {0, 1}");
    if (squarefree_part(f.d) != f.d) fail(ErrorCode::InvalidSpec, "d = " + f.d.get_str() + " is not squarefree");
  }
}

int rank_over(const TorusSpec& spec, const Field& field) {
  validate(spec);
  if (field.kind == Field::Kind::Qp && !is_prime(BigInt(field.p)))
    fail(ErrorCode::NotPrime, std::to_string(field.p) + " is not prime");
  int r = 0;
  for (const auto& f : spec.factors) {
    switch (f.kind) {
      case TorusFactor::Kind::Gm: r += 1; break;
      case TorusFactor::Kind::NormOne: r += sqrt_in(f.d, field) ? 1 : 0; break;
      case TorusFactor::Kind::RestScalars: r += sqrt_in(f.d, field) ? 2 : 1; break;
    }
  }
  return r;
}

RankReport s_rank(const TorusSpec& spec, const std::set<unsigned long>& S) {
  RankReport rep;
  rep.rank_R = rank_over(spec, {Field::Kind::R, 0});
  rep.rank_Q = rank_over(spec, {Field::Kind::Q, 0});
  rep.N = rep.rank_R - rep.rank_Q;
  for (auto p : S) {
    rep.rank_Qp[p] = rank_over(spec, {Field::Kind::Qp, p});
    rep.N += rep.rank_Qp[p];
  }
  return rep;
}

TorusSpec torus_from_matrix2(const MatQ& M) {
  if (M.rows() != 2 || M.cols() != 2) fail(ErrorCode::DimensionMismatch, "expected a 2x2 matrix");
  for (const auto& x : M.data())
    if (!is_integer(x)) fail(ErrorCode::InvalidSpec, "matrix entries must be integers");
  const BigInt det = BigRat(M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0)).get_num();
  const BigInt tr = BigRat(M(0, 0) + M(1, 1)).get_num();
  if (det != 1 && det != -1) fail(ErrorCode::InvalidSpec, "determinant must be +-1");
  if (det == 1 && abs(tr) < 2) fail(ErrorCode::FiniteOrder, "elliptic matrix has finite order");
  const BigInt disc = tr * tr - 4 * det;
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
    fail(ErrorCode::ReducibleCharPoly, "characteristic polynomial splits over Q");
  // For det = -1 the closure has two components; its identity component is
  // the closure of <M^2>, the norm-one torus of the same quadratic field.
  return {{norm_one(squarefree_part(disc))}};
}

std::string to_string(const TorusFactor& f) {
  switch (f.kind) {
    case TorusFactor::Kind::Gm: return "Gm";
    case TorusFactor::Kind::NormOne: return "NormOne(" + f.d.get_str() + ")";
    case TorusFactor::Kind::RestScalars: return "RestScalars(" + f.d.get_str() + ")";
  }
  return {};
}

}  // namespace commlab::torus
