#pragma once

// Ranks of S-arithmetic points of Q-tori that are products of G_m and
// quadratic tori: N = rank_R - rank_Q + sum_{p in S} rank_Qp.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "commlab/matrix.hpp"
#include "commlab/rational.hpp"

namespace commlab::torus {

struct TorusFactor {
  enum class Kind { Gm, NormOne, RestScalars };
  Kind kind = Kind::Gm;
  BigInt d = 0;  ///< squarefree, not 0 or 1; unused for Gm

  friend bool operator==(const TorusFactor&, const TorusFactor&) = default;
};

struct TorusSpec {
  std::vector<TorusFactor> factors;
  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
};

TorusFactor gm();
TorusFactor norm_one(const BigInt& d);
TorusFactor rest_scalars(const BigInt& d);

struct Field {
  enum class Kind { R, Q, Qp };
  Kind kind = Kind::Q;
  unsigned long p = 0;
};

struct RankReport {
  int rank_R = 0;
  int rank_Q = 0;
  std::map<unsigned long, int> rank_Qp;
  int N = 0;
};

bool is_prime(const BigInt& p);
/// Throws ZeroInput for x = 0 and NotPrime.
bool is_square_qp(const BigRat& x, const BigInt& p);

/// Squarefree part of a nonzero integer, sign kept. Trial division to 10^6,
/// then a perfect-square test on the cofactor; cofactors of 10^18 or more
/// throw ExceedsFactorBound.
BigInt squarefree_part(const BigInt& n);

/// Throws InvalidSpec.
void validate(const TorusSpec& spec);
int rank_over(const TorusSpec& spec, const Field& field);
RankReport s_rank(const TorusSpec& spec, const std::set<unsigned long>& S);

/// The identity component of the Zariski closure of the cyclic group
/// generated by an integer matrix with |det| = 1.
TorusSpec torus_from_matrix2(const MatQ& M);

std::string to_string(const TorusFactor& f);

}  // namespace commlab::torus
