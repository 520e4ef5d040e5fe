#pragma once

// The lamplighter group Gamma = K x| Z, K = F_2[t, 1/t], and its abstract
// commensurator in the coordinates (VDer(Z, K) x| Comm_inf(K)) x| Z/2.
//
// Conventions used throughout:
//  * (k1, n1)(k2, n2) = (k1 + t^n1 k2, n1 + n2).
//  * At level m, s = t^m and K is free over F_2[s, 1/s] with basis
//    (1, t, ..., t^(m-1)); an element k has coordinate column vector x with
//    k = sum_j t^j x_j(s).
//  * The flip sigma sends k(t) to k(1/t) (e_i -> e_-i). In level-m
//    coordinates sigma(x) = R * xbar, where xbar substitutes s -> 1/s,
//    R(0,0) = 1 and R(m-j, j) = 1/s for 0 < j < m. Conjugating a linear part
//    by sigma therefore maps A to R * Abar * Rbar.
//  * A commensuration c = (tau, A, flip) acts on (k, n) with n a multiple of
//    c.level() by
//        (k, n) -> (A sigma^flip(k) + tau(t^(eps n)), eps n),  eps = -1 iff flip.
//    Composition is right to left: compose(c1, c2) applies c2 first.
//  * tau and A are each kept at their own minimal level. The derivation
//    level and the matrix size can differ; c.level() is their lcm.

#include <cstdint>
#include <optional>
#include <vector>

#include "commlab/laurent.hpp"
#include "commlab/matrix.hpp"

namespace commlab::lamp {

struct LampElement {
  F2LaurentPoly k;
  std::int64_t n = 0;
  friend bool operator==(const LampElement&, const LampElement&) = default;
};

LampElement lamp_mul(const LampElement& g, const LampElement& h);
LampElement lamp_inv(const LampElement& g);

/// Class of a derivation tau on (level)Z with tau(t^level) = value.
struct VDerElt {
  std::int64_t level = 1;
  F2LaurentPoly value;
  friend bool operator==(const VDerElt&, const VDerElt&) = default;
};

/// Minimal-level representative of the class of (level, value).
VDerElt canonical_vder(std::int64_t level, const F2LaurentPoly& value);
/// Value on t^n times the geometric sum; throws NotDivisible unless level | n.
VDerElt vder_raise(const VDerElt& d, std::int64_t n);
/// tau(t^u); requires level | u.
F2LaurentPoly vder_eval(const VDerElt& d, std::int64_t u);
VDerElt vder_add(const VDerElt& a, const VDerElt& b);

/// F_2[t^m, t^-m]-linear automorphism of K (tensor F_2(s)), stored as its
/// m x m matrix over F_2(s) in the level-m basis.
struct CommInftyElt {
  MatF2Rat A = MatF2Rat::identity(1);
  std::int64_t level() const { return static_cast<std::int64_t>(A.rows()); }
  friend bool operator==(const CommInftyElt&, const CommInftyElt&) = default;
};

/// Restriction of scalars from F_2(t^m) to F_2(t^n), m | n. Entry a(s) of A
/// becomes the k x k block (k = n/m, u = s^k) of multiplication by a(s) on
/// the F_2(u)-basis (1, s, ..., s^(k-1)); block entry (r, q) lands at
/// position (i + m r, j + m q) of the level-n matrix.
CommInftyElt comm_infty_raise(const CommInftyElt& c, std::int64_t n);
CommInftyElt canonical_comm_infty(const MatF2Rat& A);
CommInftyElt comm_infty_compose(const CommInftyElt& a, const CommInftyElt& b);
CommInftyElt comm_infty_inverse(const CommInftyElt& a);
/// sigma o A o sigma at the same level.
CommInftyElt comm_infty_flip_conjugate(const CommInftyElt& a);

std::vector<F2RatFun> to_coords(const F2LaurentPoly& k, std::int64_t level);
/// Throws OutOfDomain if a coordinate is not a Laurent polynomial.
F2LaurentPoly from_coords(const std::vector<F2RatFun>& x, std::int64_t level);
/// The flip as a matrix R with sigma(x) = R * xbar.
MatF2Rat flip_matrix(std::int64_t level);

struct LampComm {
  VDerElt der;
  CommInftyElt lin;
  bool flip = false;

  std::int64_t level() const;
  friend bool operator==(const LampComm&, const LampComm&) = default;
};

LampComm identity_comm();
LampComm flip_comm();
/// Canonicalizes both parts.
LampComm make_comm(const VDerElt& der, const MatF2Rat& A, bool flip);

LampComm comm_compose(const LampComm& c1, const LampComm& c2);
LampComm comm_invert(const LampComm& c);
int theta_sign(const LampComm& c);

/// Finite-index F_2[t^level, t^-level]-submodule of K given by an HNF whose
/// rows are level-`level` coordinate vectors of generators.
struct SubmoduleBasis {
  std::int64_t level = 1;
  MatF2Rat H = MatF2Rat::identity(1);
  friend bool operator==(const SubmoduleBasis&, const SubmoduleBasis&) = default;
};

SubmoduleBasis whole_module(std::int64_t level);
/// HNF of the module generated by the given elements of K (exactly `level`
/// generators are required).
SubmoduleBasis submodule_from_generators(std::int64_t level, const std::vector<F2LaurentPoly>& gens);
std::vector<F2LaurentPoly> generators(const SubmoduleBasis& S);
SubmoduleBasis submodule_raise(const SubmoduleBasis& S, std::int64_t n);
bool submodule_contains(const SubmoduleBasis& S, const F2LaurentPoly& k);
std::int64_t submodule_index_log2(const SubmoduleBasis& S);

struct CommDomain {
  std::int64_t level = 1;   ///< n-components must be multiples of this
  SubmoduleBasis k_domain;  ///< allowed K-components
};

CommDomain comm_domain(const LampComm& c);
bool in_domain(const LampComm& c, const LampElement& g);
/// Throws OutOfDomain outside comm_domain(c).
LampElement comm_apply(const LampComm& c, const LampElement& g);

struct PartialData {
  std::int64_t level = 1;
  SubmoduleBasis domain;                 ///< at `level`
  std::vector<LampElement> gen_images;   ///< images of generators(domain)
  LampElement tm_image;                  ///< image of t^level
};

/// Canonical commensuration determined by a partial automorphism given on
/// generators. `window` bounds the conjugation relations re-checked.
LampComm comm_from_partial(const PartialData& data, std::int64_t window = 4);

/// Generator images of c on the domain raised to c.level(); feeding them to
/// comm_from_partial recovers c.
PartialData partial_data_of(const LampComm& c);

/// GL_n(F_2) embedded blockwise: e_{n l + j} -> sum_i M(i, j) e_{n l + i}.
/// Entries of M must be 0 or 1.
LampComm diagonal_embed(const MatF2Rat& M);

/// F_2-dimension of K1 / (1 + t^m) K1 computed on exponent windows. A
/// window of 0 picks 4 * (level + max degree + m) and doubles until two
/// consecutive widths agree.
std::int64_t quotient_dim(const SubmoduleBasis& K1, std::int64_t m, std::int64_t window = 0);

/// Upper bound on the level of any derivation produced while composing.
inline constexpr std::int64_t kMaxLevel = std::int64_t{1} << 22;

}  // namespace commlab::lamp
