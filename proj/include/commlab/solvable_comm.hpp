#pragma once

// Commensurators of reduced solvable groups: BS(1, n) inside Aff(Q) with
// Comm(BS(1, n)) = Q x| Q*, the inner-derivation solver, and the block group
// law Comm = Hom(Q^N, Z(G)(Q)) x| Aut_Q(G).

#include <string>
#include <vector>

#include "commlab/error.hpp"
#include "commlab/matrix.hpp"
#include "commlab/rational.hpp"

namespace commlab::solv {

/// x -> r x + q
struct AffineMap {
  BigRat r = 1;
  BigRat q = 0;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

AffineMap affine_compose(const AffineMap& a, const AffineMap& b);  ///< a o b
AffineMap affine_inverse(const AffineMap& a);

/// x -> n^a x + b, b in Z[1/n].
struct BSElement {
  long n = 2;
  long a = 0;
  BigRat b = 0;
  friend bool operator==(const BSElement&, const BSElement&) = default;
};

/// Throws InvalidSpec unless n >= 2 and b in Z[1/n].
void validate(const BSElement& g);
BSElement bs_identity(long n);
BSElement bs_mul(const BSElement& g, const BSElement& h);  ///< g o h
BSElement bs_inv(const BSElement& g);

struct BSDomain {
  long K = 1;
  BigInt D = 1;
};

/// Conjugation by c preserves BS(1, n) on {a in K Z, b in D Z[1/n]}. D is the
/// n-coprime part of lcm(den r, den q); K is the order of n modulo the
/// n-coprime part of den q.
BSDomain bs_comm_domain(const AffineMap& c, long n);
bool in_bs_domain(const BSDomain& dom, const BSElement& g);
/// c o g o c^-1 = (a, r b + q (1 - n^a)); throws OutOfDomain.
BSElement bs_comm_apply(const AffineMap& c, const BSElement& g);

/// Exact x with (T_i - I) x = v_i for every i. Throws IncompatibleCocycle when
/// the T_i do not commute, the cocycle condition fails, or the system is
/// inconsistent; DegenerateAction when the T_i share a fixed vector.
MatQ solve_inner_derivation(const std::vector<MatQ>& Ts, const std::vector<MatQ>& vs);

// Reduced-part automorphisms. An instantiation provides identity, compose,
// inverse, and its actions: T on Q^N1, C on the center block of dimension dZ,
// C1 on the center block of dimension dZ1.

struct Dims {
  std::size_t N0 = 0, N1 = 0, dZ = 0, dZ1 = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct TrivialReduced {
  static TrivialReduced identity() { return {}; }
  TrivialReduced compose(const TrivialReduced&) const { return {}; }
  TrivialReduced inverse() const { return {}; }
  MatQ T(const Dims& d) const { return MatQ::identity(d.N1); }
  MatQ C(const Dims& d) const { return MatQ::identity(d.dZ); }
  MatQ C1(const Dims& d) const { return MatQ::identity(d.dZ1); }
  friend bool operator==(const TrivialReduced&, const TrivialReduced&) = default;
};

/// Q x| Q* acting on the centre by its scale r.
struct BSReduced {
  AffineMap map;
  static BSReduced identity() { return {}; }
  BSReduced compose(const BSReduced& o) const { return {affine_compose(map, o.map)}; }
  BSReduced inverse() const { return {affine_inverse(map)}; }
  MatQ T(const Dims& d) const { return MatQ::identity(d.N1); }
  MatQ C(const Dims& d) const { return map.r * MatQ::identity(d.dZ); }
  MatQ C1(const Dims& d) const { return map.r * MatQ::identity(d.dZ1); }
  friend bool operator==(const BSReduced&, const BSReduced&) = default;
};

/// Element of the block group acting on coordinates (z; x0; z1; x1):
///
///   [ C   Hc  0   0   ]
///   [ 0   P   0   H10 ]
///   [ 0   0   C1  H1z ]
///   [ 0   0   0   T   ]
///
/// modulo the (z, x1) corner, where (T, C, C1) are the actions of the
/// reduced part. Hc = h_central (dZ x N0), H10 = h_10 (N0 x N1), H1z = h_1z
/// (dZ1 x N1). Products are right to left, so the Hom blocks are twisted by
/// precomposition with the lower-right action and postcomposition with the
/// upper-left one.
template <class Red>
struct CommDesc {
  Dims dims;
  MatQ h_central;
  MatQ P;
  MatQ h_10;
  MatQ h_1z;
  Red red;

  friend bool operator==(const CommDesc&, const CommDesc&) = default;
};

template <class Red>
CommDesc<Red> comm_desc_identity(const Dims& d) {
  return {d, MatQ(d.dZ, d.N0), MatQ::identity(d.N0), MatQ(d.N0, d.N1), MatQ(d.dZ1, d.N1), Red::identity()};
}

template <class Red>
void check_shape(const CommDesc<Red>& a) {
  const auto& d = a.dims;
  auto shape = [](const MatQ& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; };
  if (!shape(a.h_central, d.dZ, d.N0) || !shape(a.P, d.N0, d.N0) || !shape(a.h_10, d.N0, d.N1) ||
      !shape(a.h_1z, d.dZ1, d.N1))
    fail(ErrorCode::DimensionMismatch, "block sizes do not match the declared dimensions");
}

template <class Red>
CommDesc<Red> comm_desc_mul(const CommDesc<Red>& g, const CommDesc<Red>& h) {
  if (!(g.dims == h.dims)) fail(ErrorCode::DimensionMismatch, "descriptors have different dimensions");
  check_shape(g);
  check_shape(h);
  const auto& d = g.dims;
  CommDesc<Red> out;
  out.dims = d;
  out.h_central = g.red.C(d) * h.h_central + g.h_central * h.P;
  out.P = g.P * h.P;
  out.h_10 = g.P * h.h_10 + g.h_10 * h.red.T(d);
  out.h_1z = g.red.C1(d) * h.h_1z + g.h_1z * h.red.T(d);
  out.red = g.red.compose(h.red);
  return out;
}

template <class Red>
CommDesc<Red> comm_desc_inv(const CommDesc<Red>& g) {
  check_shape(g);
  const auto& d = g.dims;
  const MatQ Pinv = inverse(g.P);
  const MatQ Tinv = inverse(g.red.T(d));
  CommDesc<Red> out;
  out.dims = d;
  out.red = g.red.inverse();
  out.P = Pinv;
  out.h_central = MatQ(d.dZ, d.N0) - inverse(g.red.C(d)) * g.h_central * Pinv;
  out.h_10 = MatQ(d.N0, d.N1) - Pinv * g.h_10 * Tinv;
  out.h_1z = MatQ(d.dZ1, d.N1) - inverse(g.red.C1(d)) * g.h_1z * Tinv;
  return out;
}

/// The block matrix of a descriptor. Products of such matrices acquire a
/// (z, x1) corner Hc H10; the descriptor group is the quotient by matrices
/// supported there, so compare products with that corner cleared.
template <class Red>
MatQ comm_desc_matrix(const CommDesc<Red>& g) {
  const auto& d = g.dims;
  const std::size_t z = 0, x0 = d.dZ, z1 = x0 + d.N0, x1 = z1 + d.dZ1, total = x1 + d.N1;
  MatQ M(total, total);
  auto place = [&](const MatQ& B, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) M(r0 + i, c0 + j) = B(i, j);
  };
  place(g.red.C(d), z, z);
  place(g.h_central, z, x0);
  place(g.P, x0, x0);
  place(g.h_10, x0, x1);
  place(g.red.C1(d), z1, z1);
  place(g.h_1z, z1, x1);
  place(g.red.T(d), x1, x1);
  return M;
}

struct StructureDescriptor {
  std::string tag;
  long N = 0;
  long dim_Z = 0;
  Dims dims;
  std::string description;
};

/// Comm(Delta) = Hom(Q^N, Z(G)(Q)) x| Aut_Q(G) for a reduced-part tag
/// ("trivial" or "bs"); the Hom part is the h_1z block (dim_Z x N).
/// Throws UnknownInstantiation.
StructureDescriptor reduced_comm_structure(long N, long dim_Z, const std::string& tag);

}  // namespace commlab::solv
