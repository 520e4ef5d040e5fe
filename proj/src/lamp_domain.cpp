// Submodules of K, domains of commensurations, reconstruction from partial
// data and the window computation of K1 / (1 + t^m) K1.

#include <cstdlib>
#include <numeric>
#include <string>

#include "commlab/error.hpp"
#include "commlab/hnf.hpp"
#include "commlab/lamplighter.hpp"

namespace commlab::lamp {

namespace {

using BitVec = std::vector<std::uint64_t>;

BitVec zero_bits(std::size_t n) { return BitVec((n + 63) / 64, 0); }
bool get_bit(const BitVec& v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1u; }
void flip_bit(BitVec& v, std::size_t i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }
void xor_into(BitVec& a, const BitVec& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

std::size_t gf2_rank(std::vector<BitVec> rows, std::size_t nbits) {
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < nbits && rank < rows.size(); ++bit) {
    std::size_t p = rank;
    while (p < rows.size() && !get_bit(rows[p], bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (get_bit(rows[i], bit)) xor_into(rows[i], rows[rank]);
    ++rank;
  }
  return rank;
}

/// Kernel of the F_2-linear map sending basis vector i to images[i]
/// (nbits-long). Result vectors have images.size() bits.
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t nbits) {
  const auto n = images.size();
  const auto total = nbits + n;
  std::vector<BitVec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec r = zero_bits(total);
    for (std::size_t b = 0; b < nbits; ++b)
      if (get_bit(images[i], b)) flip_bit(r, b);
    flip_bit(r, nbits + i);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < nbits && rank < n; ++bit) {
    std::size_t p = rank;
    while (p < n && !get_bit(rows[p], bit)) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != rank && get_bit(rows[i], bit)) xor_into(rows[i], rows[rank]);
    ++rank;
  }
  std::vector<BitVec> kernel;
  for (std::size_t i = rank; i < n; ++i) {
    BitVec v = zero_bits(n);
    for (std::size_t b = 0; b < n; ++b)
      if (get_bit(rows[i], nbits + b)) flip_bit(v, b);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

MatF2Rat rows_matrix(std::int64_t level, const std::vector<F2LaurentPoly>& gens) {
  MatF2Rat B(level, level);
  for (std::int64_t i = 0; i < level; ++i) {
    const auto x = to_coords(gens[i], level);
    for (std::int64_t j = 0; j < level; ++j) B(i, j) = x[j];
  }
  return B;
}

/// dim V1 - dim V2 on the exponent window [-W, W], where V1 is the part of
/// the window inside K1 and V2 = (1 + t^m) * (part of [-W, W - m] inside K1).
std::int64_t window_quotient_dim(const SubmoduleBasis& K1, std::int64_t m, std::int64_t W) {
  const auto& H = K1.H;
  const auto b = K1.level;
  std::vector<std::size_t> offset(b + 1, 0);
  for (std::int64_t j = 0; j < b; ++j) offset[j + 1] = offset[j] + H(j, j).num().degree();
  const auto nbits = offset[b];

  const auto N = static_cast<std::size_t>(2 * W + 1);
  std::vector<BitVec> images;
  images.reserve(N);
  for (std::int64_t e = -W; e <= W; ++e) {
    const auto rem = reduce_mod_hnf(H, to_coords(F2LaurentPoly::monomial(e), b));
    BitVec v = zero_bits(nbits);
    for (std::int64_t j = 0; j < b; ++j) {
      if (rem[j].is_zero()) continue;
      const auto p = rem[j].to_laurent();
      for (auto q : p.support()) flip_bit(v, offset[j] + q);
    }
    images.push_back(std::move(v));
  }

  auto V1 = gf2_kernel(images, nbits);
  const std::vector<BitVec> shorter(images.begin(), images.end() - m);
  std::vector<BitVec> V2;
  for (const auto& v : gf2_kernel(shorter, nbits)) {
    BitVec w = zero_bits(N);
    for (std::size_t i = 0; i + m < N; ++i)
      if (get_bit(v, i)) {
        flip_bit(w, i);
        flip_bit(w, i + m);
      }
    V2.push_back(std::move(w));
  }

  const auto r1 = gf2_rank(V1, N);
  const auto r2 = gf2_rank(V2, N);
  auto both = V1;
  both.insert(both.end(), V2.begin(), V2.end());
  if (gf2_rank(both, N) != r1) fail(ErrorCode::NotInvariant, "(1 + t^m) K1 is not contained in K1");
  return static_cast<std::int64_t>(r1) - static_cast<std::int64_t>(r2);
}

}  // namespace

SubmoduleBasis whole_module(std::int64_t level) {
  if (level < 1) fail(ErrorCode::InvalidSpec, "level must be positive");
  return {level, MatF2Rat::identity(level)};
}

SubmoduleBasis submodule_from_generators(std::int64_t level, const std::vector<F2LaurentPoly>& gens) {
  if (level < 1) fail(ErrorCode::InvalidSpec, "level must be positive");
  if (static_cast<std::int64_t>(gens.size()) != level)
    fail(ErrorCode::DimensionMismatch, "expected one generator per basis vector");
  return {level, hnf_f2poly(rows_matrix(level, gens)).H};
}

std::vector<F2LaurentPoly> generators(const SubmoduleBasis& S) {
  std::vector<F2LaurentPoly> out;
  for (std::int64_t i = 0; i < S.level; ++i) {
    std::vector<F2RatFun> row(S.level);
    for (std::int64_t j = 0; j < S.level; ++j) row[j] = S.H(i, j);
    out.push_back(from_coords(row, S.level));
  }
  return out;
}

SubmoduleBasis submodule_raise(const SubmoduleBasis& S, std::int64_t n) {
  if (n < 1 || n % S.level != 0) fail(ErrorCode::NotDivisible, "target level is not a multiple of the submodule level");
  if (n == S.level) return S;
  // Over F_2[t^n] the module is generated by t^(bq) h_i, q < n/b.
  std::vector<F2LaurentPoly> gens;
  for (const auto& h : generators(S))
    for (std::int64_t q = 0; q < n / S.level; ++q) gens.push_back(h.shifted(q * S.level));
  MatF2Rat B = rows_matrix(n, gens);
  return {n, hnf_f2poly(B).H};
}

bool submodule_contains(const SubmoduleBasis& S, const F2LaurentPoly& k) {
  return in_row_module(S.H, to_coords(k, S.level));
}

std::int64_t submodule_index_log2(const SubmoduleBasis& S) { return submodule_index(S.H); }

CommDomain comm_domain(const LampComm& c) {
  const auto a = c.lin.level();
  const auto& A = c.lin.A;
  F2Poly delta = F2Poly::one();
  for (const auto& x : A.data())
    if (!x.is_zero()) delta = (delta * x.den()) / gcd(delta, x.den());
  if (delta.is_one()) return {c.level(), whole_module(a)};

  // Rows x with x A^T integral: the lower-right block of the HNF of
  // [[delta A^T, I], [delta I, 0]].
  const F2RatFun d(delta, F2Poly::one());
  MatF2Rat M(2 * a, 2 * a);
  for (std::int64_t i = 0; i < a; ++i) {
    for (std::int64_t j = 0; j < a; ++j) M(i, j) = d * A(j, i);
    M(i, a + i) = F2RatFun(1);
    M(a + i, i) = d;
  }
  const auto H = hnf_f2poly(M).H;
  SubmoduleBasis D{a, MatF2Rat(a, a)};
  for (std::int64_t i = 0; i < a; ++i)
    for (std::int64_t j = 0; j < a; ++j) D.H(i, j) = H(a + i, a + j);
  if (c.flip) {
    auto gens = generators(D);
    for (auto& g : gens) g = g.inverted();
    D = submodule_from_generators(a, gens);
  }
  return {c.level(), D};
}

PartialData partial_data_of(const LampComm& c) {
  const auto L = c.level();
  PartialData data;
  data.level = L;
  data.domain = submodule_raise(comm_domain(c).k_domain, L);
  for (const auto& h : generators(data.domain)) data.gen_images.push_back(comm_apply(c, {h, 0}));
  data.tm_image = comm_apply(c, {F2LaurentPoly(), L});
  return data;
}

LampComm comm_from_partial(const PartialData& data, std::int64_t window) {
  const auto m = data.level;
  if (m < 1) fail(ErrorCode::InvalidSpec, "level must be positive");
  if (data.domain.level != m || static_cast<std::int64_t>(data.gen_images.size()) != m)
    fail(ErrorCode::DimensionMismatch, "domain and images must have one entry per basis vector");
  const auto& tm = data.tm_image;
  if (tm.n != m && tm.n != -m)
    fail(ErrorCode::ExponentMismatch, "image of t^m must have n = +-" + std::to_string(m));
  const bool flip = tm.n == -m;
  for (const auto& y : data.gen_images)
    if (y.n != 0) fail(ErrorCode::NotAHomomorphism, "lamp generator mapped outside K");

  const auto gens = generators(data.domain);
  MatF2Rat X(m, m), Y(m, m);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto x = to_coords(flip ? gens[i].inverted() : gens[i], m);
    const auto y = to_coords(data.gen_images[i].k, m);
    for (std::int64_t j = 0; j < m; ++j) {
      X(j, i) = x[j];
      Y(j, i) = y[j];
    }
  }
  if (determinant(Y).is_zero()) fail(ErrorCode::NotAHomomorphism, "images do not span a finite-index subgroup");
  // tau(t^-m) = t^-m tau(t^m) in characteristic 2.
  const VDerElt der{m, flip ? tm.k.shifted(m) : tm.k};
  auto c = make_comm(der, Y * inverse(X), flip);

  if (!(comm_apply(c, {F2LaurentPoly(), m}) == tm))
    fail(ErrorCode::NotAHomomorphism, "image of t^m is not reproduced");
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t e = -window; e <= window; ++e) {
      // t^(em) h t^(-em) must map to T^e y T^(-e).
      LampElement conj{data.gen_images[i].k.shifted(e * tm.n), 0};
      if (!(comm_apply(c, {gens[i].shifted(e * m), 0}) == conj))
        fail(ErrorCode::NotAHomomorphism, "conjugation relation fails");
    }
  return c;
}

LampComm diagonal_embed(const MatF2Rat& M) {
  if (!M.is_square() || M.rows() == 0) fail(ErrorCode::DimensionMismatch, "embedding expects a nonempty square matrix");
  for (const auto& x : M.data())
    if (!x.is_zero() && !x.is_one()) fail(ErrorCode::InvalidSpec, "entries must lie in F_2");
  return make_comm(VDerElt{}, M, false);
}

std::int64_t quotient_dim(const SubmoduleBasis& K1, std::int64_t m, std::int64_t window) {
  if (m < 1) fail(ErrorCode::InvalidSpec, "m must be positive");
  std::int64_t maxdeg = 0;
  for (const auto& h : generators(K1)) {
    if (!submodule_contains(K1, h.shifted(m))) fail(ErrorCode::NotInvariant, "K1 is not t^m-invariant");
    maxdeg = std::max(maxdeg, h.max_exponent());
  }
  std::int64_t W = window > 0 ? window : 4 * (K1.level + maxdeg + m);
  auto dim = window_quotient_dim(K1, m, W);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const auto wider = window_quotient_dim(K1, m, 2 * W);
    if (wider == dim) return dim;
    W *= 2;
    dim = wider;
  }
  fail(ErrorCode::LevelBoundExceeded, "window computation did not stabilize");
}

}  // namespace commlab::lamp
