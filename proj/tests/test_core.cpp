#include <doctest.h>

#include <map>

#include "commlab/hnf.hpp"
#include "commlab/laurent.hpp"
#include "commlab/matrix.hpp"
#include "commlab/ratfun.hpp"
#include "commlab/rational.hpp"
#include "test_support.hpp"

using namespace commlab;
using namespace commlab::testing;

namespace {

// Schoolbook product on exponent multisets, independent of the packed
// representation used by the library.
F2LaurentPoly convolve(const F2LaurentPoly& a, const F2LaurentPoly& b) {
  std::map<std::int64_t, int> counts;
  for (auto x : a.support())
    for (auto y : b.support()) counts[x + y] ^= 1;
  std::vector<std::int64_t> exps;
  for (auto [e, c] : counts)
    if (c) exps.push_back(e);
  return F2LaurentPoly(exps);
}

bool is_monomial(const F2RatFun& f) { return f.is_laurent() && f.num().is_one(); }

}  // namespace

TEST_CASE("laurent polynomial arithmetic examples") {
  CHECK((F2LaurentPoly({0}) + F2LaurentPoly({0})).is_zero());
  CHECK(F2LaurentPoly({0, 1}) * F2LaurentPoly({0, 1}) == F2LaurentPoly({0, 2}));
  CHECK(F2LaurentPoly({-1, 0}) * F2LaurentPoly({1}) == F2LaurentPoly({0, 1}));
  CHECK(F2LaurentPoly({3, 3, 5}) == F2LaurentPoly({5}));
}

TEST_CASE("laurent product agrees with exponent convolution") {
  Rng rng(1);
  for (int iter = 0; iter < 300; ++iter) {
    auto a = random_laurent(rng, -70, 90);
    auto b = random_laurent(rng, -5, 140);
    CHECK(a * b == convolve(a, b));
  }
}

TEST_CASE("laurent text round trip") {
  CHECK(to_string(parse_laurent("1+t^-2+t^5")) == "t^-2+1+t^5");
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("t+t").is_zero());
  CHECK(parse_laurent(" s^3 + 1 ") == F2LaurentPoly({0, 3}));
  CHECK_THROWS_AS(parse_laurent("2t"), Error);
  CHECK_THROWS_AS(parse_laurent("t^x"), Error);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    auto p = random_laurent(rng, -20, 20);
    CHECK(parse_laurent(to_string(p)) == p);
  }
}

TEST_CASE("geometric sums satisfy the derivation rule") {
  // tau(g^(a+b)) = tau(g^a) + g^a tau(g^b) with g acting by x^step
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b)
      CHECK(geometric_sum(a + b, 3) == geometric_sum(a, 3) + geometric_sum(b, 3).shifted(3 * a));
}

TEST_CASE("F2 polynomial division and gcd") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, 150);
    auto b = random_nonzero_poly(rng, 70);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    auto g = gcd(a * b, b * b);
    CHECK(((a * b) % g).is_zero());
    CHECK((g % b).is_zero());
  }
  auto m = F2Poly::from_exponents({0, 1, 3});  // irreducible cubic
  for (std::int64_t e = 1; e < 7; ++e) {
    auto x = F2Poly::from_exponents({e % 3, 0});
    if ((x % m).is_zero()) continue;
    CHECK(mul_mod(x, inverse_mod(x, m), m).is_one());
  }
}

TEST_CASE("rational function field axioms on random triples") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto a = random_ratfun(rng, 6), b = random_ratfun(rng, 6), c = random_ratfun(rng, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a + a).is_zero());
    CHECK(a.inverted().inverted() == a);
    CHECK((a * b).inverted() == a.inverted() * b.inverted());
    CHECK((a + b).stretched(3) == a.stretched(3) + b.stretched(3));
  }
}

TEST_CASE("rational function canonical form") {
  auto f = rf("(t+t^2)/(t^3+t)");  // = (1+t)/(1+t^2) = 1/(1+t)
  CHECK(f == rf("1/(1+s)"));
  CHECK(f.den() == F2Poly::from_exponents({0, 1}));
  CHECK(f.num().is_one());
  CHECK(rf("s^-2").shift() == -2);
  CHECK(rf("0") == F2RatFun());
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto g = random_ratfun(rng, 5);
    CHECK(parse_ratfun(to_string(g)) == g);
  }
}

TEST_CASE("matf2rat_inverse examples") {
  CHECK(inverse(MatF2Rat::identity(2)) == MatF2Rat::identity(2));
  CHECK(inverse(ratfun_matrix({{"s", "0"}, {"0", "1"}})) == ratfun_matrix({{"1/s", "0"}, {"0", "1"}}));
  auto u = ratfun_matrix({{"1", "1"}, {"0", "1"}});
  CHECK(inverse(u) == u);
  CHECK(u * inverse(u) == MatF2Rat::identity(2));
  CHECK_THROWS_AS(inverse(ratfun_matrix({{"1", "s"}, {"1", "s"}})), Error);
  CHECK(inverse(MatF2Rat(0, 0)) == MatF2Rat(0, 0));
}

TEST_CASE("inverse is an involution on random invertible matrices") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    auto a = random_invertible_ratfun_matrix(rng, 1 + i % 4, 3);
    auto inv = inverse(a);
    CHECK(a * inv == MatF2Rat::identity(a.rows()));
    CHECK(inverse(inv) == a);
  }
}

TEST_CASE("hnf_f2poly examples") {
  auto id = hnf_f2poly(MatF2Rat::identity(2));
  CHECK(id.H == MatF2Rat::identity(2));
  CHECK(id.U == MatF2Rat::identity(2));

  auto scaled = hnf_f2poly(ratfun_matrix({{"s", "0"}, {"0", "1"}}));
  CHECK(scaled.H == MatF2Rat::identity(2));
  CHECK(scaled.U == ratfun_matrix({{"1/s", "0"}, {"0", "1"}}));

  auto B = ratfun_matrix({{"1+s", "0"}, {"1", "1"}});
  auto res = hnf_f2poly(B);
  // Upper-triangular form of the module spanned by (1+s, 0) and (1, 1).
  CHECK(res.H == ratfun_matrix({{"1", "1"}, {"0", "1+s"}}));
  CHECK(res.U * B == res.H);

  CHECK(hnf_f2poly(MatF2Rat(0, 0)).H == MatF2Rat(0, 0));
  CHECK_THROWS_AS(hnf_f2poly(ratfun_matrix({{"1", "s"}, {"1", "s"}})), Error);
}

TEST_CASE("submodule_index examples") {
  CHECK(submodule_index(MatF2Rat::identity(2)) == 0);
  CHECK(submodule_index(ratfun_matrix({{"1+s", "0"}, {"0", "1"}})) == 1);
  CHECK(submodule_index(ratfun_matrix({{"1+s", "0"}, {"0", "1+s"}})) == 2);
}

TEST_CASE("hnf properties on random lattices") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 3;
    auto B1 = random_laurent_matrix(rng, n, 3);
    auto B2 = random_laurent_matrix(rng, n, 3);
    auto r1 = hnf_f2poly(B1);
    CHECK(r1.U * B1 == r1.H);
    CHECK(is_monomial(determinant(r1.U)));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a > b) CHECK(r1.H(a, b).is_zero());
        if (a < b) {
          CHECK(r1.H(a, b).is_laurent());
          CHECK(r1.H(a, b).shift() >= 0);
          CHECK(r1.H(a, b).num().degree() + r1.H(a, b).shift() < r1.H(b, b).num().degree());
        }
      }
    // idempotent
    CHECK(hnf_f2poly(r1.H).H == r1.H);
    // index additive under products
    auto r2 = hnf_f2poly(B2);
    CHECK(submodule_index(hnf_f2poly(B1 * B2).H) == submodule_index(r1.H) + submodule_index(r2.H));
    // same module after a unimodular change of generators
    auto E = MatF2Rat::identity(n);
    if (n > 1) E(1, 0) = F2RatFun(random_laurent(rng, -2, 2));
    E(0, 0) = F2RatFun::monomial(uniform(rng, -3, 3));
    CHECK(hnf_f2poly(E * B1).H == r1.H);
    // rows of B1 are in the module, remainder of a generic vector is reduced
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<F2RatFun> row(n);
      for (std::size_t b = 0; b < n; ++b) row[b] = B1(a, b);
      CHECK(in_row_module(r1.H, row));
    }
  }
}

TEST_CASE("rational parsing and helpers") {
  CHECK(parse_rational("6/4") == BigRat(3, 2));
  CHECK(parse_rational("-7") == BigRat(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(is_s_unit_denominator(BigInt(10), {2, 5}));
  CHECK_FALSE(is_s_unit_denominator(BigInt(6), {2}));
  CHECK(coprime_part(BigInt(24), BigInt(2)) == 3);
  CHECK(valuation(BigInt(48), BigInt(2)) == 4);
}
