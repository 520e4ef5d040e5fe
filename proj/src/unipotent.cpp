#include "commlab/unipotent.hpp"

#include <map>
#include <string>

#include "commlab/error.hpp"

namespace commlab::unip {

namespace {

void check_dim(std::size_t n, std::size_t max_dim) {
  if (n > max_dim) fail(ErrorCode::DimensionMismatch, "dimension " + std::to_string(n) + " exceeds the cap");
}

MatQ bracket(const MatQ& X, const MatQ& Y) { return X * Y - Y * X; }

MatQ basis_matrix(std::size_t n, std::size_t k) {
  std::vector<BigRat> v(lie_dim(n));
  v[k] = 1;
  return from_basis(n, v);
}

/// Polynomial in the strictly-upper entries of g with rational coefficients.
struct MPoly {
  std::map<std::vector<int>, BigRat> terms;

  MPoly() = default;
  explicit MPoly(int c) {
    if (c != 0) terms[{}] = c;
  }
  static MPoly variable(std::size_t count, std::size_t k) {
    MPoly p;
    std::vector<int> e(count, 0);
    e[k] = 1;
    p.terms[e] = 1;
    return p;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms) {
      auto& slot = terms[e];
      slot += c;
      if (slot == 0) terms.erase(e);
    }
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    MPoly neg = o;
    for (auto& [e, c] : neg.terms) c = -c;
    return *this += neg;
  }
  MPoly scaled(const BigRat& s) const {
    MPoly out;
    if (s == 0) return out;
    for (const auto& [e, c] : terms) out.terms[e] = c * s;
    return out;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e = ea.empty() ? eb : ea;
        if (!ea.empty() && !eb.empty())
          for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        auto& slot = out.terms[e];
        slot += ca * cb;
        if (slot == 0) out.terms.erase(e);
      }
    return out;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;
};

using MatPoly = Matrix<MPoly>;

MatPoly scaled(const MatPoly& m, const BigRat& s) { return m.map([&](const MPoly& p) { return p.scaled(s); }); }

int total_degree(const std::vector<int>& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

bool is_unitriangular(const MatQ& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (g(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_strictly_upper(const MatQ& X) {
  if (!X.is_square()) return false;
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (X(i, j) != 0) return false;
  return true;
}

MatQ unitri_log(const MatQ& g, std::size_t max_dim) {
  if (!is_unitriangular(g)) fail(ErrorCode::InvalidSpec, "matrix is not unitriangular");
  const auto n = g.rows();
  check_dim(n, max_dim);
  const MatQ N = g - MatQ::identity(n);
  MatQ X(n, n), power = N;
  for (std::size_t k = 1; k < n; ++k) {
    X = X + BigRat(k % 2 == 1 ? 1 : -1, k) * power;
    power = power * N;
  }
  return X;
}

MatQ unitri_exp(const MatQ& X, std::size_t max_dim) {
  if (!is_strictly_upper(X)) fail(ErrorCode::InvalidSpec, "matrix is not strictly upper triangular");
  const auto n = X.rows();
  check_dim(n, max_dim);
  MatQ g = MatQ::identity(n), term = MatQ::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = BigRat(1, k) * (term * X);
    g = g + term;
  }
  return g;
}

MatQ pth_root(const MatQ& g, long p) {
  if (p < 1) fail(ErrorCode::InvalidSpec, "root order must be positive");
  return unitri_exp(BigRat(1, p) * unitri_log(g));
}

MatQ matrix_power(const MatQ& g, long e) {
  MatQ base = e < 0 ? inverse(g) : g;
  MatQ out = MatQ::identity(g.rows());
  for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
    if (k & 1) out = out * base;
    base = base * base;
  }
  return out;
}

bool is_s_integral(const MatQ& g, const std::set<unsigned long>& S) {
  for (const auto& x : g.data())
    if (!is_s_unit_denominator(x.get_den(), S)) return false;
  return true;
}

std::size_t lie_dim(std::size_t n) { return n * (n - 1) / 2; }

std::size_t basis_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) fail(ErrorCode::DimensionMismatch, "basis index needs i < j < n");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<BigRat> to_basis(const MatQ& X) {
  if (!is_strictly_upper(X)) fail(ErrorCode::InvalidSpec, "matrix is not strictly upper triangular");
  std::vector<BigRat> v;
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = i + 1; j < X.rows(); ++j) v.push_back(X(i, j));
  return v;
}

MatQ from_basis(std::size_t n, const std::vector<BigRat>& v) {
  if (v.size() != lie_dim(n)) fail(ErrorCode::DimensionMismatch, "basis vector length");
  MatQ X(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) X(i, j) = v[k++];
  return X;
}

LieAut identity_aut(std::size_t n) { return {n, MatQ::identity(lie_dim(n))}; }

LieAut diagonal_aut(std::size_t n, const std::vector<BigRat>& scales) {
  if (scales.size() != lie_dim(n)) fail(ErrorCode::DimensionMismatch, "one scale per basis element");
  LieAut a = identity_aut(n);
  for (std::size_t k = 0; k < scales.size(); ++k) a.L(k, k) = scales[k];
  return a;
}

LieAut conjugation_aut(const MatQ& h) {
  const auto n = h.rows();
  const auto hinv = inverse(h);
  LieAut a{n, MatQ(lie_dim(n), lie_dim(n))};
  for (std::size_t k = 0; k < lie_dim(n); ++k) {
    const auto col = to_basis(h * basis_matrix(n, k) * hinv);
    for (std::size_t r = 0; r < col.size(); ++r) a.L(r, k) = col[r];
  }
  return a;
}

LieAut compose(const LieAut& a, const LieAut& b) {
  if (a.n != b.n) fail(ErrorCode::DimensionMismatch, "automorphisms of different algebras");
  return {a.n, a.L * b.L};
}

MatQ apply(const LieAut& a, const MatQ& X) {
  const auto v = to_basis(X);
  if (v.size() != a.L.cols()) fail(ErrorCode::DimensionMismatch, "automorphism and matrix sizes differ");
  std::vector<BigRat> w(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t k = 0; k < v.size(); ++k) w[r] += a.L(r, k) * v[k];
  return from_basis(a.n, w);
}

bool lie_aut_check(const LieAut& a) {
  const auto m = lie_dim(a.n);
  if (a.L.rows() != m || a.L.cols() != m) fail(ErrorCode::DimensionMismatch, "automorphism matrix has wrong size");
  if (determinant(a.L) == 0) fail(ErrorCode::SingularMap, "Lie algebra map is singular");
  std::vector<MatQ> images;
  for (std::size_t k = 0; k < m; ++k) images.push_back(apply(a, basis_matrix(a.n, k)));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      if (!(apply(a, bracket(basis_matrix(a.n, x), basis_matrix(a.n, y))) == bracket(images[x], images[y])))
        return false;
  return true;
}

MatQ comm_from_lie_aut(const LieAut& a, const MatQ& g) {
  if (!lie_aut_check(a)) fail(ErrorCode::NotAnAutomorphism, "map does not preserve brackets");
  if (g.rows() != a.n) fail(ErrorCode::DimensionMismatch, "matrix size does not match the automorphism");
  return unitri_exp(apply(a, unitri_log(g)));
}

BigInt congruence_domain(const LieAut& a, const std::set<unsigned long>& S) {
  if (!lie_aut_check(a)) fail(ErrorCode::NotAnAutomorphism, "map does not preserve brackets");
  const auto n = a.n;
  const auto m = lie_dim(n);

  // Generic g = I + N with one variable per strictly-upper entry.
  MatPoly N(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) N(i, j) = MPoly::variable(m, basis_index(n, i, j));

  MatPoly log(n, n), power = N;
  for (std::size_t k = 1; k < n; ++k) {
    log = log + scaled(power, BigRat(k % 2 == 1 ? 1 : -1, k));
    power = power * N;
  }
  MatPoly Y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = basis_index(n, i, j);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
          const auto& c = a.L(r, basis_index(n, u, v));
          if (c != 0) Y(i, j) += log(u, v).scaled(c);
        }
    }
  MatPoly image = MatPoly::identity(n), term = MatPoly::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = scaled(term * Y, BigRat(1, k));
    image = image + term;
  }

  // For each prime q outside S: least e with v_q(c) + deg * e >= 0 for
  // every coefficient c of a monomial of degree deg.
  std::map<unsigned long, long> exponent;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [e, c] : image(i, j).terms) {
        BigInt den = c.get_den();
        const long deg = total_degree(e);
        for (unsigned long q = 2; den > 1; ++q) {
          if (!mpz_divisible_ui_p(den.get_mpz_t(), q)) continue;
          long v = 0;
          while (mpz_divisible_ui_p(den.get_mpz_t(), q)) {
            den /= q;
            ++v;
          }
          if (S.count(q)) continue;
          auto& slot = exponent[q];
          slot = std::max(slot, (v + deg - 1) / deg);
        }
      }
  BigInt D = 1;
  for (const auto& [q, e] : exponent) {
    BigInt f;
    mpz_ui_pow_ui(f.get_mpz_t(), q, e);
    D *= f;
  }
  return D;
}

}  // namespace commlab::unip
