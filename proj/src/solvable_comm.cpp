#include "commlab/solvable_comm.hpp"

namespace commlab::solv {

namespace {

/// Largest multiplicative order searched for K.
constexpr long kMaxOrder = 10'000'000;

BigRat power(long n, long e) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? BigRat(BigInt(1), m) : BigRat(m);
}

bool in_z_1_over_n(const BigRat& x, long n) { return coprime_part(x.get_den(), BigInt(n)) == 1; }

void check_base(long n) {
  if (n < 2) fail(ErrorCode::InvalidSpec, "base n must be at least 2");
}

long multiplicative_order(long n, const BigInt& m) {
  if (m == 1) return 1;
  BigInt x = BigInt(n) % m;
  for (long k = 1; k <= kMaxOrder; ++k) {
    if (x == 1) return k;
    x = (x * n) % m;
  }
  fail(ErrorCode::LevelBoundExceeded, "order of " + std::to_string(n) + " modulo " + m.get_str() + " exceeds the search bound");
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool is_column(const MatQ& v, std::size_t d) { return v.rows() == d && v.cols() == 1; }

std::string q_power(long k, bool zero_is_trivial) {
  if (k == 0) return zero_is_trivial ? "0" : "ℚ^0";
  if (k == 1) return "ℚ";
  return "ℚ^" + std::to_string(k);
}

}  // namespace

AffineMap affine_compose(const AffineMap& a, const AffineMap& b) { return {a.r * b.r, a.r * b.q + a.q}; }

AffineMap affine_inverse(const AffineMap& a) {
  if (a.r == 0) fail(ErrorCode::InvalidSpec, "affine map with r = 0 is not invertible");
  return {1 / a.r, -a.q / a.r};
}

void validate(const BSElement& g) {
  check_base(g.n);
  if (!in_z_1_over_n(g.b, g.n))
    fail(ErrorCode::InvalidSpec, "translation " + to_string(g.b) + " is not in Z[1/" + std::to_string(g.n) + "]");
}

BSElement bs_identity(long n) {
  check_base(n);
  return {n, 0, 0};
}

BSElement bs_mul(const BSElement& g, const BSElement& h) {
  if (g.n != h.n) fail(ErrorCode::BaseMismatch, "elements of BS(1, n) with different n");
  validate(g);
  validate(h);
  return {g.n, g.a + h.a, power(g.n, g.a) * h.b + g.b};
}

BSElement bs_inv(const BSElement& g) {
  validate(g);
  return {g.n, -g.a, -power(g.n, -g.a) * g.b};
}

BSDomain bs_comm_domain(const AffineMap& c, long n) {
  check_base(n);
  if (c.r == 0) fail(ErrorCode::InvalidSpec, "affine map with r = 0 is not invertible");
  const BigInt N(n);
  const BigInt q_den = coprime_part(c.q.get_den(), N);
  return {multiplicative_order(n, q_den), coprime_part(lcm(c.r.get_den(), c.q.get_den()), N)};
}

bool in_bs_domain(const BSDomain& dom, const BSElement& g) {
  return g.a % dom.K == 0 && in_z_1_over_n(g.b / BigRat(dom.D), g.n);
}

BSElement bs_comm_apply(const AffineMap& c, const BSElement& g) {
  validate(g);
  const auto dom = bs_comm_domain(c, g.n);
  if (!in_bs_domain(dom, g)) fail(ErrorCode::OutOfDomain, "element lies outside the domain of the commensuration");
  BSElement out{g.n, g.a, c.r * g.b + c.q * (1 - power(g.n, g.a))};
  validate(out);
  return out;
}

MatQ solve_inner_derivation(const std::vector<MatQ>& Ts, const std::vector<MatQ>& vs) {
  if (Ts.empty() || Ts.size() != vs.size()) fail(ErrorCode::DimensionMismatch, "need one vector per matrix, at least one pair");
  const auto d = Ts[0].rows();
  for (std::size_t i = 0; i < Ts.size(); ++i)
    if (Ts[i].rows() != d || Ts[i].cols() != d || !is_column(vs[i], d))
      fail(ErrorCode::DimensionMismatch, "matrices must be d x d and vectors d x 1");

  const MatQ I = MatQ::identity(d);
  for (std::size_t i = 0; i < Ts.size(); ++i)
    for (std::size_t j = i + 1; j < Ts.size(); ++j) {
      if (!(Ts[i] * Ts[j] == Ts[j] * Ts[i])) fail(ErrorCode::IncompatibleCocycle, "actions do not commute");
      if (!((Ts[j] - I) * vs[i] == (Ts[i] - I) * vs[j]))
        fail(ErrorCode::IncompatibleCocycle, "vectors violate the cocycle condition");
    }

  // Stacked system [T_i - I | v_i].
  MatQ aug(d * Ts.size(), d + 1);
  for (std::size_t i = 0; i < Ts.size(); ++i)
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug(i * d + r, c) = Ts[i](r, c) - I(r, c);
      aug(i * d + r, d) = vs[i](r, 0);
    }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == d) fail(ErrorCode::IncompatibleCocycle, "stacked system is inconsistent");
  if (pivots.size() < d) fail(ErrorCode::DegenerateAction, "the actions share a nonzero fixed vector");
  MatQ x(d, 1);
  for (std::size_t r = 0; r < d; ++r) x(r, 0) = aug(r, d);
  return x;
}

StructureDescriptor reduced_comm_structure(long N, long dim_Z, const std::string& tag) {
  if (N < 0 || dim_Z < 0) fail(ErrorCode::InvalidSpec, "N and dim_Z must be nonnegative");
  if (tag != "trivial" && tag != "bs") fail(ErrorCode::UnknownInstantiation, "unknown reduced-part instantiation '" + tag + "'");
  StructureDescriptor s;
  s.tag = tag;
  s.N = N;
  s.dim_Z = dim_Z;
  s.dims = {0, static_cast<std::size_t>(N), 0, static_cast<std::size_t>(dim_Z)};
  s.description = N == 0 ? "Aut" : "Hom(" + q_power(N, false) + "," + q_power(dim_Z, true) + ") ⋊ Aut";
  if (tag == "bs" && N == 1 && dim_Z == 0) s.description += " ≅ ℚ ⋊ ℚ*";
  return s;
}

}  // namespace commlab::solv
