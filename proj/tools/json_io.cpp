#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace commlab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t decode_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string decode_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  bad(std::string(what) + " must be a string");
}

const Json& rows_of(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  for (const auto& row : j)
    if (!row.is_array() || row.size() != j[0].size()) bad("matrix rows must be arrays of equal length");
  return j;
}

template <class T>
Json encode_matrix(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json load(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"'))
    return Json::parse(text);
  std::ifstream in(text);
  if (!in) bad("cannot read '" + text + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

Json encode(const BigRat& q) { return to_string(q); }

BigRat decode_rational(const Json& j) { return parse_rational(decode_string(j, "rational")); }

BigInt decode_integer(const Json& j) {
  const BigRat q = decode_rational(j);
  if (q.get_den() != 1) bad("expected an integer, got " + to_string(q));
  return q.get_num();
}

Json encode(const MatQ& m) { return encode_matrix(m); }

MatQ decode_matq(const Json& j) {
  rows_of(j);
  const std::size_t r = j.size(), c = r == 0 ? 0 : j[0].size();
  MatQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = decode_rational(j[i][k]);
  return m;
}

MatQ decode_matq(const Json& j, std::size_t rows, std::size_t cols) {
  MatQ m = decode_matq(j);
  if (m.rows() == 0 && rows == 0) return MatQ(0, cols);
  if (m.rows() != rows || m.cols() != cols)
    fail(ErrorCode::DimensionMismatch, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  return m;
}

MatQ decode_column(const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  MatQ v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) v(i, 0) = decode_rational(j[i]);
  return v;
}

Json encode_column(const MatQ& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(to_string(v(i, 0)));
  return out;
}

Json encode(const MatF2Rat& m) { return encode_matrix(m); }

MatF2Rat decode_matf2(const Json& j) {
  rows_of(j);
  const std::size_t r = j.size(), c = r == 0 ? 0 : j[0].size();
  MatF2Rat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = parse_ratfun(decode_string(j[i][k], "matrix entry"));
  return m;
}

Json encode(const lamp::LampElement& g) { return {{"k", to_string(g.k)}, {"n", g.n}}; }

lamp::LampElement decode_lamp_element(const Json& j) {
  lamp::LampElement g;
  g.k = parse_laurent(decode_string(field(j, "k"), "k"));
  if (j.contains("n")) g.n = decode_int(j.at("n"), "n");
  return g;
}

Json encode(const lamp::LampComm& c) {
  return {{"level", c.level()},
          {"der_level", c.der.level},
          {"der", to_string(c.der.value)},
          {"A", encode(c.lin.A)},
          {"flip", c.flip}};
}

lamp::LampComm decode_lamp_comm(const Json& j) {
  if (!j.is_object()) bad("commensuration must be an object");
  std::int64_t der_level = 1;
  if (j.contains("der_level"))
    der_level = decode_int(j.at("der_level"), "der_level");
  else if (j.contains("level"))
    der_level = decode_int(j.at("level"), "level");
  if (der_level < 1) bad("levels must be positive");
  const auto der = parse_laurent(j.contains("der") ? decode_string(j.at("der"), "der") : "0");
  const MatF2Rat A = j.contains("A") ? decode_matf2(j.at("A")) : MatF2Rat::identity(1);
  if (A.rows() == 0 || !A.is_square()) bad("A must be a nonempty square matrix");
  bool flip = false;
  if (j.contains("flip")) {
    if (!j.at("flip").is_boolean()) bad("flip must be a boolean");
    flip = j.at("flip").get<bool>();
  }
  return lamp::make_comm(lamp::canonical_vder(der_level, der), A, flip);
}

lamp::LampComm load_lamp_comm(const std::string& text) {
  if (text == "identity") return lamp::identity_comm();
  if (text == "flip") return lamp::flip_comm();
  return decode_lamp_comm(load(text));
}

Json encode(const lamp::PartialData& d) {
  Json gens = Json::array(), images = Json::array();
  for (const auto& g : lamp::generators(d.domain)) gens.push_back(to_string(g));
  for (const auto& g : d.gen_images) images.push_back(encode(g));
  return {{"level", d.level}, {"domain", gens}, {"images", images}, {"tm_image", encode(d.tm_image)}};
}

lamp::PartialData decode_partial_data(const Json& j) {
  lamp::PartialData d;
  d.level = decode_int(field(j, "level"), "level");
  if (d.level < 1) bad("level must be positive");
  if (j.contains("domain")) {
    std::vector<F2LaurentPoly> gens;
    for (const auto& g : j.at("domain")) gens.push_back(parse_laurent(decode_string(g, "generator")));
    d.domain = lamp::submodule_from_generators(d.level, gens);
  } else {
    d.domain = lamp::whole_module(d.level);
  }
  const auto& images = field(j, "images");
  if (!images.is_array()) bad("images must be an array");
  for (const auto& g : images) d.gen_images.push_back(decode_lamp_element(g));
  d.tm_image = decode_lamp_element(field(j, "tm_image"));
  return d;
}

Json encode(const solv::BSElement& g) { return {{"a", g.a}, {"b", to_string(g.b)}}; }

solv::BSElement decode_bs_element(const Json& j, long n) {
  solv::BSElement g{n, 0, 0};
  if (j.contains("a")) g.a = decode_int(j.at("a"), "a");
  if (j.contains("b")) g.b = decode_rational(j.at("b"));
  solv::validate(g);
  return g;
}

Json encode(const solv::AffineMap& c) { return {{"r", to_string(c.r)}, {"q", to_string(c.q)}}; }

solv::AffineMap decode_affine(const Json& j) {
  solv::AffineMap c;
  if (j.contains("r")) c.r = decode_rational(j.at("r"));
  if (j.contains("q")) c.q = decode_rational(j.at("q"));
  return c;
}

Json encode(const unip::LieAut& a) { return {{"n", a.n}, {"L", encode(a.L)}}; }

unip::LieAut decode_lie_aut(const Json& j) {
  const auto n = decode_int(field(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  const auto m = unip::lie_dim(static_cast<std::size_t>(n));
  return {static_cast<std::size_t>(n), decode_matq(field(j, "L"), m, m)};
}

torus::TorusSpec decode_torus_spec(const Json& j) {
  if (!j.is_array()) bad("torus spec must be an array of factors");
  torus::TorusSpec spec;
  for (const auto& f : j) {
    const auto kind = decode_string(field(f, "kind"), "kind");
    if (kind == "Gm") {
      spec.factors.push_back(torus::gm());
      continue;
    }
    const BigInt d = decode_integer(field(f, "d"));
    if (kind == "NormOne")
      spec.factors.push_back(torus::norm_one(d));
    else if (kind == "RestScalars")
      spec.factors.push_back(torus::rest_scalars(d));
    else
      bad("unknown torus factor '" + kind + "'");
  }
  return spec;
}

Json encode(const torus::TorusSpec& s) {
  Json out = Json::array();
  for (const auto& f : s.factors) {
    switch (f.kind) {
      case torus::TorusFactor::Kind::Gm: out.push_back({{"kind", "Gm"}}); break;
      case torus::TorusFactor::Kind::NormOne: out.push_back({{"kind", "NormOne"}, {"d", f.d.get_str()}}); break;
      case torus::TorusFactor::Kind::RestScalars:
        out.push_back({{"kind", "RestScalars"}, {"d", f.d.get_str()}});
        break;
    }
  }
  return out;
}

Json encode(const torus::RankReport& r) {
  Json qp = Json::object();
  for (const auto& [p, k] : r.rank_Qp) qp[std::to_string(p)] = k;
  return {{"N", r.N}, {"rank_R", r.rank_R}, {"rank_Q", r.rank_Q}, {"rank_Qp", qp}};
}

Json encode(const solv::Dims& d) { return {{"N0", d.N0}, {"N1", d.N1}, {"dZ", d.dZ}, {"dZ1", d.dZ1}}; }

solv::Dims decode_dims(const Json& j) {
  auto get = [&](const char* key) -> std::size_t {
    if (!j.contains(key)) return 0;
    const auto v = decode_int(j.at(key), key);
    if (v < 0) bad("dimensions must be nonnegative");
    return static_cast<std::size_t>(v);
  };
  return {get("N0"), get("N1"), get("dZ"), get("dZ1")};
}

template <class Red>
solv::CommDesc<Red> decode_comm_desc(const Json& j, const solv::Dims& d) {
  auto g = solv::comm_desc_identity<Red>(d);
  if (!j.is_object()) bad("descriptor must be an object");
  if (j.contains("h_central")) g.h_central = decode_matq(j.at("h_central"), d.dZ, d.N0);
  if (j.contains("P")) g.P = decode_matq(j.at("P"), d.N0, d.N0);
  if (j.contains("h_10")) g.h_10 = decode_matq(j.at("h_10"), d.N0, d.N1);
  if (j.contains("h_1z")) g.h_1z = decode_matq(j.at("h_1z"), d.dZ1, d.N1);
  if constexpr (std::is_same_v<Red, solv::BSReduced>) {
    if (j.contains("red")) g.red = {decode_affine(j.at("red"))};
    if (g.red.map.r == 0) fail(ErrorCode::InvalidSpec, "reduced part needs r != 0");
  }
  if (determinant(g.P) == 0) fail(ErrorCode::SingularMatrix, "P must be invertible");
  return g;
}

template <class Red>
Json encode(const solv::CommDesc<Red>& g) {
  Json out = {{"h_central", encode(g.h_central)}, {"P", encode(g.P)}, {"h_10", encode(g.h_10)}, {"h_1z", encode(g.h_1z)}};
  if constexpr (std::is_same_v<Red, solv::BSReduced>) out["red"] = encode(g.red.map);
  return out;
}

template solv::CommDesc<solv::TrivialReduced> decode_comm_desc(const Json&, const solv::Dims&);
template solv::CommDesc<solv::BSReduced> decode_comm_desc(const Json&, const solv::Dims&);
template Json encode(const solv::CommDesc<solv::TrivialReduced>&);
template Json encode(const solv::CommDesc<solv::BSReduced>&);

}  // namespace commlab::io
