#include <random>

#include "cli.hpp"

namespace commlab::cli {

namespace {

using io::Json;
using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Json torus_example() {
  const auto spec = torus::torus_from_matrix2(MatQ(2, 2, {2, 1, 1, 1}));
  const std::vector<std::pair<std::set<unsigned long>, int>> cases = {{{}, 1}, {{3}, 1}, {{11}, 2}, {{3, 11}, 2}};
  bool pass = spec.factors.size() == 1 && spec.factors[0] == torus::norm_one(5);
  Json rows = Json::array();
  for (const auto& [S, expected] : cases) {
    const int N = torus::s_rank(spec, S).N;
    pass = pass && N == expected;
    rows.push_back({{"S", Json(std::vector<unsigned long>(S.begin(), S.end()))}, {"N", N}, {"expected", expected}});
  }
  return {{"demo", "torus-example"}, {"matrix", "2,1;1,1"}, {"torus", io::encode(spec)}, {"rows", rows}, {"pass", pass}};
}

Json lamplighter_gl_embed() {
  std::vector<MatF2Rat> group;
  for (int bits = 0; bits < 16; ++bits) {
    MatF2Rat M(2, 2);
    for (int k = 0; k < 4; ++k) M(k / 2, k % 2) = F2RatFun((bits >> k) & 1);
    if (!determinant(M).is_zero()) group.push_back(M);
  }
  std::vector<lamp::LampComm> images;
  for (const auto& M : group) images.push_back(lamp::diagonal_embed(M));

  bool injective = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) injective = injective && !(images[i] == images[j]);

  bool homomorphism = true;
  Json table = Json::array();
  for (std::size_t i = 0; i < group.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < group.size(); ++j) {
      const auto product = group[i] * group[j];
      std::size_t k = 0;
      while (!(group[k] == product)) ++k;
      homomorphism = homomorphism && lamp::comm_compose(images[i], images[j]) == images[k];
      row.push_back(k);
    }
    table.push_back(row);
  }

  // The swap exchanges e_{2k} and e_{2k+1}.
  const auto swap = lamp::diagonal_embed(MatF2Rat(2, 2, {F2RatFun(0), F2RatFun(1), F2RatFun(1), F2RatFun(0)}));
  const lamp::LampElement e0{parse_laurent("1"), 0}, e3{parse_laurent("t^3"), 0};
  const bool swaps = lamp::comm_apply(swap, e0).k == parse_laurent("t") && lamp::comm_apply(swap, e3).k == parse_laurent("t^2");

  Json elements = Json::array();
  for (std::size_t i = 0; i < group.size(); ++i) elements.push_back({{"M", io::encode(group[i])}, {"comm", io::encode(images[i])}});
  return {{"demo", "lamplighter-gl-embed"},
          {"order", group.size()},
          {"elements", elements},
          {"multiplication_table", table},
          {"injective", injective},
          {"homomorphism", homomorphism},
          {"swap_exchanges_lamps", swaps},
          {"pass", group.size() == 6 && injective && homomorphism && swaps}};
}

Json bs_affine(std::uint64_t seed) {
  Rng rng(seed);
  const long n = 2;
  const solv::AffineMap c{1, BigRat(1, 3)};
  const auto dom = solv::bs_comm_domain(c, n);
  const auto t2 = solv::bs_comm_apply(c, {n, 2, 0});
  bool pass = dom.K == 2 && dom.D == 3 && t2 == solv::BSElement{n, 2, -1};

  auto sample = [&] {
    BigRat b(draw(rng, -30, 30));
    b /= BigRat(BigInt(1) << static_cast<unsigned>(draw(rng, 0, 4)));
    return solv::BSElement{n, dom.K * draw(rng, -3, 3), BigRat(dom.D) * b};
  };
  const int samples = 200;
  int homomorphism_failures = 0;
  for (int i = 0; i < samples; ++i) {
    const auto g = sample(), h = sample();
    if (!(solv::bs_comm_apply(c, solv::bs_mul(g, h)) == solv::bs_mul(solv::bs_comm_apply(c, g), solv::bs_comm_apply(c, h))))
      ++homomorphism_failures;
  }
  pass = pass && homomorphism_failures == 0;
  const auto structure = solv::reduced_comm_structure(1, 0, "bs");
  return {{"demo", "bs-bogopolski"},
          {"n", n},
          {"c", io::encode(c)},
          {"domain", {{"K", dom.K}, {"D", dom.D.get_str()}}},
          {"image_of_t2", io::encode(t2)},
          {"samples", samples},
          {"homomorphism_failures", homomorphism_failures},
          {"structure", structure.description},
          {"pass", pass}};
}

Json radicability(std::uint64_t seed) {
  Rng rng(seed);
  const std::set<unsigned long> S = {2};
  const int samples = 200;
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    MatQ g = MatQ::identity(4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c) {
        g(r, c) = BigRat(draw(rng, -20, 20));
        g(r, c) /= BigRat(BigInt(1) << static_cast<unsigned>(draw(rng, 0, 4)));
      }
    const auto root = unip::pth_root(g, 2);
    if (!unip::is_s_integral(root, S) || !(unip::matrix_power(root, 2) == g)) ++failures;
  }
  MatQ witness = MatQ::identity(4);
  witness(0, 3) = 1;
  const auto cube_root = unip::pth_root(witness, 3);
  const bool leaves = !unip::is_s_integral(cube_root, S) && unip::matrix_power(cube_root, 3) == witness;
  return {{"demo", "radicability"},
          {"S", {2}},
          {"samples", samples},
          {"square_root_failures", failures},
          {"witness", io::encode(witness)},
          {"witness_cube_root", io::encode(cube_root)},
          {"cube_root_leaves_S_integers", leaves},
          {"pass", failures == 0 && leaves}};
}

}  // namespace

Json run_demo(const std::string& name, std::uint64_t seed) {
  if (name == "torus-example") return torus_example();
  if (name == "lamplighter-gl-embed") return lamplighter_gl_embed();
  if (name == "bs-bogopolski") return bs_affine(seed);
  if (name == "radicability") return radicability(seed);
  fail(ErrorCode::UnknownDemo, "unknown demo '" + name + "'");
}

}  // namespace commlab::cli
