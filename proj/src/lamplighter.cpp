#include "commlab/lamplighter.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "commlab/error.hpp"
#include "commlab/hnf.hpp"

namespace commlab::lamp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  const auto l = std::lcm(a, b);
  if (l > kMaxLevel) fail(ErrorCode::LevelBoundExceeded, "level " + std::to_string(l) + " exceeds bound");
  return l;
}

void require_level(std::int64_t level) {
  if (level < 1) fail(ErrorCode::InvalidSpec, "level must be positive");
}

/// Ascending.
std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d * d != n) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::optional<F2LaurentPoly> try_divide(const F2LaurentPoly& a, const F2LaurentPoly& b) {
  auto [sa, pa] = a.split();
  auto [sb, pb] = b.split();
  auto [q, r] = divmod(pa, pb);
  if (!r.is_zero()) return std::nullopt;
  return F2LaurentPoly::from_poly(q, sa - sb);
}

F2RatFun s_times(const F2RatFun& x) { return x.is_zero() ? x : x * F2RatFun::monomial(1); }

std::vector<F2RatFun> mat_vec(const MatF2Rat& A, const std::vector<F2RatFun>& x) {
  std::vector<F2RatFun> y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero() && !x[j].is_zero()) y[i] += A(i, j) * x[j];
  return y;
}

/// Multiplication by p(s) on F_2(u)^k, u = s^k, basis (1, s, ..., s^(k-1)).
MatF2Rat laurent_block(const F2LaurentPoly& p, std::int64_t k) {
  MatF2Rat M(k, k);
  for (std::int64_t q = 0; q < k; ++q)
    for (auto e : p.support()) {
      const auto w = floor_div(e + q, k);
      const auto r = e + q - k * w;
      M(r, q) += F2RatFun::monomial(w);
    }
  return M;
}

MatF2Rat ratfun_block(const F2RatFun& a, std::int64_t k) {
  MatF2Rat num = laurent_block(F2LaurentPoly::from_poly(a.num(), a.shift()), k);
  if (a.den().is_one()) return num;
  return num * inverse(laurent_block(F2LaurentPoly::from_poly(a.den()), k));
}

/// Level-n matrix A, m | n: does A commute with multiplication by t^m?
bool commutes_with_shift(const MatF2Rat& A, std::int64_t n, std::int64_t m) {
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      F2RatFun ta = i >= m ? A(i - m, j) : s_times(A(i + n - m, j));
      F2RatFun at = j + m < n ? A(i, j + m) : s_times(A(i, j + m - n));
      if (!(ta == at)) return false;
    }
  return true;
}

/// Inverse of raising: the level-m matrix of a level-n matrix that is
/// F_2(t^m)-linear.
MatF2Rat lower(const MatF2Rat& A, std::int64_t n, std::int64_t m) {
  const auto k = n / m;
  MatF2Rat B(m, m);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j)
      for (std::int64_t q = 0; q < k; ++q) {
        const auto& x = A(i + m * q, j);
        if (!x.is_zero()) B(i, j) += F2RatFun::monomial(q) * x.stretched(k);
      }
  return B;
}

F2Poly lcm_poly(const F2Poly& a, const F2Poly& b) { return (a * b) / gcd(a, b); }

std::optional<F2LaurentPoly> try_apply_lin(const CommInftyElt& lin, bool flip, const F2LaurentPoly& k) {
  const auto m = lin.level();
  auto y = mat_vec(lin.A, to_coords(flip ? k.inverted() : k, m));
  for (const auto& c : y)
    if (!c.is_laurent()) return std::nullopt;
  return from_coords(y, m);
}

/// The derivation u -> beta(sigma^flip(tau(t^(eps u)))), in canonical form.
VDerElt derived_der(const CommInftyElt& beta, bool flip, const VDerElt& tau) {
  if (tau.value.is_zero()) return {};
  const auto b = beta.level();
  const auto L0 = lcm64(tau.level, b);
  auto w0 = vder_eval(tau, flip ? -L0 : L0);
  if (flip) w0 = w0.inverted();
  const auto z = mat_vec(beta.A, to_coords(w0, b));
  const auto r = L0 / b;

  F2Poly D = F2Poly::one();
  for (const auto& x : z)
    if (!x.is_zero()) D = lcm_poly(D, x.den());

  // Least j with D (1 + s^r) | 1 + s^(rj): then the value on t^(j L0),
  // (1 + s^r + ... + s^(r(j-1))) z, is a Laurent polynomial.
  std::int64_t j = 1;
  if (!D.is_one()) {
    const F2Poly f = D * (F2Poly::one() + F2Poly::monomial(r));
    const F2Poly x = F2Poly::monomial(r) % f;
    F2Poly cur = x;
    while (!cur.is_one()) {
      cur = mul_mod(cur, x, f);
      ++j;
      if (j * L0 > kMaxLevel) fail(ErrorCode::LevelBoundExceeded, "derivation level exceeds bound");
    }
  }
  const F2RatFun P(geometric_sum(j, r));
  std::vector<F2RatFun> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = P * z[i];
  return canonical_vder(j * L0, from_coords(v, b));
}

}  // namespace

LampElement lamp_mul(const LampElement& g, const LampElement& h) {
  return {g.k + h.k.shifted(g.n), g.n + h.n};
}

LampElement lamp_inv(const LampElement& g) { return {g.k.shifted(-g.n), -g.n}; }

VDerElt canonical_vder(std::int64_t level, const F2LaurentPoly& value) {
  require_level(level);
  if (value.is_zero()) return {};
  for (auto m : divisors(level))
    if (auto v = try_divide(value, geometric_sum(level / m, m))) return {m, *v};
  return {level, value};
}

VDerElt vder_raise(const VDerElt& d, std::int64_t n) {
  require_level(n);
  if (n % d.level != 0) fail(ErrorCode::NotDivisible, "target level is not a multiple of the derivation level");
  return {n, vder_eval(d, n)};
}

F2LaurentPoly vder_eval(const VDerElt& d, std::int64_t u) {
  if (u % d.level != 0) fail(ErrorCode::NotDivisible, "exponent is not a multiple of the derivation level");
  if (d.value.is_zero()) return {};
  return geometric_sum(u / d.level, d.level) * d.value;
}

VDerElt vder_add(const VDerElt& a, const VDerElt& b) {
  const auto L = lcm64(a.level, b.level);
  return canonical_vder(L, vder_eval(a, L) + vder_eval(b, L));
}

std::vector<F2RatFun> to_coords(const F2LaurentPoly& k, std::int64_t level) {
  require_level(level);
  std::vector<std::vector<std::int64_t>> buckets(level);
  for (auto e : k.support()) {
    const auto q = floor_div(e, level);
    buckets[e - q * level].push_back(q);
  }
  std::vector<F2RatFun> x;
  x.reserve(level);
  for (auto& b : buckets) x.emplace_back(F2LaurentPoly(std::move(b)));
  return x;
}

F2LaurentPoly from_coords(const std::vector<F2RatFun>& x, std::int64_t level) {
  if (static_cast<std::int64_t>(x.size()) != level) fail(ErrorCode::DimensionMismatch, "coordinate vector length");
  std::vector<std::int64_t> exps;
  for (std::int64_t j = 0; j < level; ++j) {
    if (x[j].is_zero()) continue;
    if (!x[j].is_laurent()) fail(ErrorCode::OutOfDomain, "coordinate is not a Laurent polynomial");
    const auto p = x[j].to_laurent();
    for (auto q : p.support()) exps.push_back(j + level * q);
  }
  return F2LaurentPoly(std::move(exps));
}

MatF2Rat flip_matrix(std::int64_t level) {
  require_level(level);
  MatF2Rat R(level, level);
  R(0, 0) = F2RatFun(1);
  for (std::int64_t j = 1; j < level; ++j) R(level - j, j) = F2RatFun::monomial(-1);
  return R;
}

CommInftyElt comm_infty_raise(const CommInftyElt& c, std::int64_t n) {
  require_level(n);
  const auto m = c.level();
  if (n % m != 0) fail(ErrorCode::NotDivisible, "target level is not a multiple of the matrix level");
  const auto k = n / m;
  if (k == 1) return c;
  MatF2Rat out(n, n);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      if (c.A(i, j).is_zero()) continue;
      const auto block = ratfun_block(c.A(i, j), k);
      for (std::int64_t r = 0; r < k; ++r)
        for (std::int64_t q = 0; q < k; ++q) out(i + m * r, j + m * q) = block(r, q);
    }
  return {std::move(out)};
}

CommInftyElt canonical_comm_infty(const MatF2Rat& A) {
  if (!A.is_square() || A.rows() == 0) fail(ErrorCode::DimensionMismatch, "linear part must be a nonempty square matrix");
  const auto n = static_cast<std::int64_t>(A.rows());
  for (auto m : divisors(n)) {
    if (m == n) break;
    if (commutes_with_shift(A, n, m)) return {lower(A, n, m)};
  }
  return {A};
}

CommInftyElt comm_infty_compose(const CommInftyElt& a, const CommInftyElt& b) {
  const auto L = lcm64(a.level(), b.level());
  return canonical_comm_infty(comm_infty_raise(a, L).A * comm_infty_raise(b, L).A);
}

CommInftyElt comm_infty_inverse(const CommInftyElt& a) { return {inverse(a.A)}; }

CommInftyElt comm_infty_flip_conjugate(const CommInftyElt& a) {
  const auto R = flip_matrix(a.level());
  const auto bar = [](const F2RatFun& x) { return x.inverted(); };
  return {R * a.A.map(bar) * R.map(bar)};
}

std::int64_t LampComm::level() const { return std::lcm(der.level, lin.level()); }

LampComm identity_comm() { return {}; }

LampComm flip_comm() {
  LampComm c;
  c.flip = true;
  return c;
}

LampComm make_comm(const VDerElt& der, const MatF2Rat& A, bool flip) {
  if (determinant(A).is_zero()) fail(ErrorCode::SingularMatrix, "linear part is singular");
  return {canonical_vder(der.level, der.value), canonical_comm_infty(A), flip};
}

LampComm comm_compose(const LampComm& c1, const LampComm& c2) {
  const auto lin2 = c1.flip ? comm_infty_flip_conjugate(c2.lin) : c2.lin;
  LampComm out;
  out.flip = c1.flip != c2.flip;
  out.lin = comm_infty_compose(c1.lin, lin2);
  out.der = vder_add(c1.der, derived_der(c1.lin, c1.flip, c2.der));
  return out;
}

LampComm comm_invert(const LampComm& c) {
  const auto inv = comm_infty_inverse(c.lin);
  LampComm out;
  out.flip = c.flip;
  out.lin = c.flip ? comm_infty_flip_conjugate(inv) : inv;
  out.der = derived_der(out.lin, c.flip, c.der);
  return out;
}

int theta_sign(const LampComm& c) { return c.flip ? -1 : 1; }

bool in_domain(const LampComm& c, const LampElement& g) {
  return g.n % c.level() == 0 && try_apply_lin(c.lin, c.flip, g.k).has_value();
}

LampElement comm_apply(const LampComm& c, const LampElement& g) {
  if (g.n % c.level() != 0)
    fail(ErrorCode::OutOfDomain, "n = " + std::to_string(g.n) + " is not a multiple of " + std::to_string(c.level()));
  auto k = try_apply_lin(c.lin, c.flip, g.k);
  if (!k) fail(ErrorCode::OutOfDomain, "lamp configuration is outside the domain of the linear part");
  const auto n = c.flip ? -g.n : g.n;
  return {*k + vder_eval(c.der, n), n};
}

}  // namespace commlab::lamp
