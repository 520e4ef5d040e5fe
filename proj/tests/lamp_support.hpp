#pragma once

// Random commensurations of the lamplighter group whose denominators stay in
// a fixed small set, so that composed levels remain bounded.

#include "commlab/lamplighter.hpp"
#include "test_support.hpp"

namespace commlab::testing {

inline F2RatFun random_small_unit_ratio(Rng& rng) {
  static const char* const factors[] = {"1", "1+s", "1+s+s^2", "1+s+s^3"};
  auto pick = [&] { return parse_ratfun(factors[uniform(rng, 0, 3)]); };
  return F2RatFun::monomial(uniform(rng, -2, 2)) * pick() / pick();
}

/// E1 * diag * E2 with unimodular E1, E2 over F_2[s, 1/s].
inline MatF2Rat random_lin_matrix(Rng& rng, std::int64_t level, std::int64_t max_degree) {
  auto elementary = [&] {
    MatF2Rat E = MatF2Rat::identity(level);
    for (int step = 0; step < 2 && level > 1; ++step) {
      auto i = uniform(rng, 0, level - 1), j = uniform(rng, 0, level - 1);
      if (i == j) continue;
      MatF2Rat T = MatF2Rat::identity(level);
      T(i, j) = F2RatFun(random_laurent(rng, -1, max_degree / 2));
      E = E * T;
    }
    return E;
  };
  MatF2Rat D(level, level);
  for (std::int64_t i = 0; i < level; ++i) D(i, i) = random_small_unit_ratio(rng);
  return elementary() * D * elementary();
}

inline lamp::LampComm random_lamp_comm(Rng& rng, std::int64_t max_level, std::int64_t max_degree = 4) {
  const auto a = uniform(rng, 1, max_level);
  const auto d = uniform(rng, 1, max_level);
  lamp::VDerElt der{d, random_laurent(rng, -2, max_degree / 2)};
  return lamp::make_comm(der, random_lin_matrix(rng, a, max_degree), uniform(rng, 0, 1) == 1);
}

/// Laurent polynomial whose multiples lie in the K-domain of c.
inline F2LaurentPoly domain_killer(const lamp::LampComm& c) {
  F2Poly delta = F2Poly::one();
  for (const auto& x : c.lin.A.data())
    if (!x.is_zero()) delta = (delta * x.den()) / gcd(delta, x.den());
  auto k = F2LaurentPoly::from_poly(delta).stretched(c.lin.level());
  return c.flip ? k.inverted() : k;
}

inline lamp::LampElement random_domain_element(Rng& rng, const lamp::LampComm& c, std::int64_t n_level) {
  return {domain_killer(c) * random_laurent(rng, -6, 6), n_level * uniform(rng, -2, 2)};
}

}  // namespace commlab::testing
