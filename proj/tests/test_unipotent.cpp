#include <doctest.h>

#include "commlab/unipotent.hpp"
#include "unip_support.hpp"

using namespace commlab;
using namespace commlab::unip;
using namespace commlab::testing;

namespace {

MatQ unit(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, BigRat>> entries) {
  MatQ g = MatQ::identity(n);
  for (const auto& [i, j, v] : entries) g(i, j) = v;
  return g;
}

MatQ nil(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, BigRat>> entries) {
  MatQ X(n, n);
  for (const auto& [i, j, v] : entries) X(i, j) = v;
  return X;
}

}  // namespace

TEST_CASE("unitri_log examples") {
  CHECK(unitri_log(MatQ::identity(3)) == MatQ(3, 3));
  CHECK(unitri_log(unit(3, {{0, 2, 1}})) == nil(3, {{0, 2, 1}}));
  CHECK(unitri_log(unit(3, {{0, 1, 1}, {1, 2, 1}})) == nil(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, BigRat(-1, 2)}}));
  CHECK_THROWS_AS(unitri_log(nil(2, {{0, 1, 1}})), Error);
}

TEST_CASE("unitri_exp examples") {
  CHECK(unitri_exp(MatQ(3, 3)) == MatQ::identity(3));
  CHECK(unitri_exp(nil(3, {{0, 2, 1}})) == unit(3, {{0, 2, 1}}));
  CHECK(unitri_exp(nil(3, {{0, 1, 1}, {1, 2, 1}})) == unit(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, BigRat(1, 2)}}));
  CHECK_THROWS_AS(unitri_exp(MatQ::identity(2)), Error);
  CHECK_THROWS_AS(unitri_exp(MatQ(13, 13)), Error);
}

TEST_CASE("log and exp are mutually inverse") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto g = random_unitriangular(rng, n, 5);
    CHECK(unitri_exp(unitri_log(g)) == g);
    auto X = random_strictly_upper(rng, n, 5);
    CHECK(unitri_log(unitri_exp(X)) == X);
  }
}

TEST_CASE("pth_root examples") {
  CHECK(pth_root(MatQ::identity(4), 7) == MatQ::identity(4));
  CHECK(pth_root(unit(3, {{0, 2, 1}}), 2) == unit(3, {{0, 2, BigRat(1, 2)}}));
  CHECK_THROWS_AS(pth_root(MatQ::identity(2), 0), Error);
}

TEST_CASE("pth_root is the unique root") {
  Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    const long p = std::vector<long>{2, 3, 5}[i % 3];
    auto g = random_unitriangular(rng, 4, 4);
    auto r = pth_root(g, p);
    CHECK(matrix_power(r, p) == g);
    CHECK(pth_root(matrix_power(g, p), p) == g);
  }
}

TEST_CASE("is_s_integral examples") {
  auto half = unit(3, {{0, 2, BigRat(1, 2)}});
  CHECK(is_s_integral(half, {2}));
  CHECK_FALSE(is_s_integral(half, {}));
  CHECK(is_s_integral(unit(3, {{0, 1, BigRat(3, 10)}}), {2, 5}));
  CHECK_FALSE(is_s_integral(unit(3, {{0, 1, BigRat(3, 10)}}), {2}));
}

TEST_CASE("roots stay S-integral exactly when p is in S") {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    auto g = random_s_integral_unitriangular(rng, 4, {2});
    CHECK(is_s_integral(pth_root(g, 2), {2}));
  }
  auto witness = unit(4, {{0, 3, 1}});
  CHECK_FALSE(is_s_integral(pth_root(witness, 3), {2}));
}

TEST_CASE("basis ordering") {
  CHECK(basis_index(3, 0, 1) == 0);
  CHECK(basis_index(3, 0, 2) == 1);
  CHECK(basis_index(3, 1, 2) == 2);
  CHECK(basis_index(4, 2, 3) == 5);
  Rng rng(34);
  auto X = random_strictly_upper(rng, 5, 3);
  CHECK(from_basis(5, to_basis(X)) == X);
}

TEST_CASE("lie_aut_check examples") {
  CHECK(lie_aut_check(identity_aut(3)));
  CHECK_FALSE(lie_aut_check(diagonal_aut(3, {2, 2, 2})));
  // x = E12, z = E13, y = E23
  CHECK(lie_aut_check(diagonal_aut(3, {2, 4, 2})));
  CHECK_THROWS_AS(lie_aut_check(diagonal_aut(3, {1, 0, 1})), Error);
}

TEST_CASE("conjugations are automorphisms and act as conjugation") {
  Rng rng(35);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 5));
    auto h = random_invertible_upper(rng, n, 4);
    auto a = conjugation_aut(h);
    CHECK(lie_aut_check(a));
    auto g = random_unitriangular(rng, n, 4);
    CHECK(comm_from_lie_aut(a, g) == h * g * inverse(h));
  }
}

TEST_CASE("comm_from_lie_aut examples") {
  Rng rng(36);
  auto g = random_unitriangular(rng, 3, 5);
  CHECK(comm_from_lie_aut(identity_aut(3), g) == g);
  CHECK(comm_from_lie_aut(diagonal_aut(3, {2, 4, 2}), unit(3, {{0, 1, 1}})) == unit(3, {{0, 1, 2}}));
  CHECK_THROWS_AS(comm_from_lie_aut(diagonal_aut(3, {2, 2, 2}), g), Error);
}

TEST_CASE("comm_from_lie_aut is a homomorphism and respects composition") {
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    auto a = random_lie_aut(rng, n);
    auto b = random_lie_aut(rng, n);
    auto g = random_unitriangular(rng, n, 4), h = random_unitriangular(rng, n, 4);
    CHECK(comm_from_lie_aut(a, g * h) == comm_from_lie_aut(a, g) * comm_from_lie_aut(a, h));
    CHECK(comm_from_lie_aut(compose(a, b), g) == comm_from_lie_aut(a, comm_from_lie_aut(b, g)));
  }
}

TEST_CASE("congruence_domain examples") {
  CHECK(congruence_domain(identity_aut(3), {}) == 1);
  CHECK(congruence_domain(identity_aut(3), {5}) == 1);
  CHECK(congruence_domain(diagonal_aut(3, {2, 4, 2}), {2}) == 1);
  auto third = diagonal_aut(3, {BigRat(1, 3), BigRat(1, 9), BigRat(1, 3)});
  auto D = congruence_domain(third, {2});
  CHECK(D == 9);
  CHECK_THROWS_AS(congruence_domain(diagonal_aut(3, {2, 2, 2}), {2}), Error);
}

TEST_CASE("congruence_domain maps the congruence subgroup into U_n(Z[1/S])") {
  Rng rng(38);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    auto a = random_lie_aut(rng, n);
    const std::set<unsigned long> S = {2};
    auto D = congruence_domain(a, S);
    CHECK(D >= 1);
    CHECK(coprime_part(D, BigInt(2)) == D);
    for (int j = 0; j < 5; ++j) {
      auto g = random_s_integral_unitriangular(rng, n, S);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) g(r, c) *= BigRat(D);
      CHECK(is_s_integral(comm_from_lie_aut(a, g), S));
    }
  }
}
