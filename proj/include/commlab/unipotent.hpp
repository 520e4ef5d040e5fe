#pragma once

// Unitriangular groups U_n(Q) through their Lie algebras: exact log/exp,
// unique p-th roots, S-integrality, and the commensurations induced by Lie
// algebra automorphisms.

#include <cstddef>
#include <set>

#include "commlab/matrix.hpp"
#include "commlab/rational.hpp"

namespace commlab::unip {

/// Largest dimension accepted by log/exp; factorial denominators grow with n.
inline constexpr std::size_t kDefaultMaxDim = 12;

bool is_unitriangular(const MatQ& g);
bool is_strictly_upper(const MatQ& X);

/// Throws InvalidSpec unless g is unitriangular.
MatQ unitri_log(const MatQ& g, std::size_t max_dim = kDefaultMaxDim);
/// Throws InvalidSpec unless X is strictly upper triangular.
MatQ unitri_exp(const MatQ& X, std::size_t max_dim = kDefaultMaxDim);
/// The unique unitriangular X with X^p = g.
MatQ pth_root(const MatQ& g, long p);
MatQ matrix_power(const MatQ& g, long e);
bool is_s_integral(const MatQ& g, const std::set<unsigned long>& S);

/// Linear map on strictly upper n x n matrices in the basis E_ij (i < j),
/// ordered lexicographically by (i, j).
struct LieAut {
  std::size_t n = 0;
  MatQ L;
};

std::size_t lie_dim(std::size_t n);
std::size_t basis_index(std::size_t n, std::size_t i, std::size_t j);
std::vector<BigRat> to_basis(const MatQ& X);
MatQ from_basis(std::size_t n, const std::vector<BigRat>& v);

LieAut identity_aut(std::size_t n);
/// E_ij -> scales[basis_index(i, j)] E_ij.
LieAut diagonal_aut(std::size_t n, const std::vector<BigRat>& scales);
/// X -> h X h^-1 for invertible upper-triangular h.
LieAut conjugation_aut(const MatQ& h);
LieAut compose(const LieAut& a, const LieAut& b);
MatQ apply(const LieAut& a, const MatQ& X);

/// Exact bracket check on all basis pairs; throws SingularMap if L is not
/// invertible.
bool lie_aut_check(const LieAut& a);
/// exp(L(log g)); throws NotAnAutomorphism unless lie_aut_check passes.
MatQ comm_from_lie_aut(const LieAut& a, const MatQ& g);

/// Positive D coprime to S such that g with strictly-upper entries in
/// D * Z[1/S] maps into U_n(Z[1/S]). Conservative: for each prime q outside
/// S it takes the least exponent that clears every coefficient of the image
/// entries, viewed as polynomials in the entries of g.
BigInt congruence_domain(const LieAut& a, const std::set<unsigned long>& S);

}  // namespace commlab::unip
