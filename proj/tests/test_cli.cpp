#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lamp_support.hpp"
#include "unip_support.hpp"

using namespace commlab;
using namespace commlab::testing;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented command lines") {
  auto r = invoke({"torus-rank", "--disc", "5", "--primes", "11"});
  CHECK(r.code == 0);
  CHECK(r.json()["N"] == 2);

  r = invoke({"torus-rank", "--matrix", "2,1;1,1", "--primes", "3,11"});
  CHECK(r.json()["N"] == 2);
  CHECK(r.json()["rank_Qp"]["3"] == 0);

  r = invoke({"lamp", "apply", "--comm", "identity", "--elem", R"({"k":"t^2","n":0})"});
  CHECK(r.json() == Json::parse(R"({"k":"t^2","n":0})"));

  r = invoke({"unipotent", "root", "--p", "2", "--matrix", "[[1,0,1],[0,1,0],[0,0,1]]"});
  CHECK(r.json()["matrix"][0][2] == "1/2");

  r = invoke({"bs", "domain", "--n", "2", "--r", "1", "--q", "1/3"});
  CHECK(r.json() == Json::parse(R"({"K":2,"D":"3"})"));
  r = invoke({"bs", "conj", "--n", "2", "--q", "1/3", "--elem", R"({"a":2,"b":"0"})"});
  CHECK(r.json() == Json::parse(R"({"a":2,"b":"-1"})"));
  r = invoke({"bs", "mul", "--n", "2", "--a", R"({"a":0,"b":"1/2"})", "--b", R"({"a":1,"b":0})"});
  CHECK(r.json() == Json::parse(R"({"a":1,"b":"1/2"})"));

  r = invoke({"solve-inner", "--ts", R"([[[2,0],[0,3]],[[3,0],[0,2]]])", "--vs", "[[1,2],[2,1]]"});
  CHECK(r.json()["x"] == Json::parse(R"(["1","1"])"));

  r = invoke({"unipotent", "log", "--matrix", "[[1,1,0],[0,1,1],[0,0,1]]"});
  CHECK(r.json()["matrix"][0][2] == "-1/2");
  r = invoke({"unipotent", "exp", "--matrix", "[[0,1,0],[0,0,1],[0,0,0]]"});
  CHECK(r.json()["matrix"][0][2] == "1/2");
  r = invoke({"unipotent", "apply-aut", "--aut", R"({"n":3,"L":[[2,0,0],[0,4,0],[0,0,2]]})", "--matrix",
           "[[1,1,0],[0,1,0],[0,0,1]]"});
  CHECK(r.json()["matrix"][0][1] == "2");
}

TEST_CASE("exit codes and error reports") {
  auto r = invoke({"bs", "conj", "--n", "2", "--q", "1/3", "--elem", R"({"a":1,"b":"0"})"});
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "OutOfDomain");
  CHECK(r.error().contains("detail"));

  r = invoke({"lamp", "mul", "--a", R"({"k":)", "--b", R"({"k":"1"})"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "ParseError");

  r = invoke({"lamp", "mul", "--a", R"({"k":"t^x"})", "--b", R"({"k":"1"})"});
  CHECK(r.code == 2);

  r = invoke({"no-such-command"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "ParseError");

  r = invoke({"demo", "no-such-demo"});
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "UnknownDemo");

  r = invoke({"torus-rank", "--disc", "12"});
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "InvalidSpec");

  r = invoke({"comm-desc", "structure", "--N", "1", "--dim-z", "0", "--tag", "other"});
  CHECK(r.error()["error"] == "UnknownInstantiation");

  r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("torus-rank") != std::string::npos);
}

TEST_CASE("lamp commands agree with the library and round-trip") {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto c1 = random_lamp_comm(rng, 3), c2 = random_lamp_comm(rng, 3);
    const auto j1 = io::encode(c1).dump(), j2 = io::encode(c2).dump();
    CHECK(io::decode_lamp_comm(Json::parse(j1)) == c1);

    auto r = invoke({"lamp", "compose", "--c1", j1, "--c2", j2});
    REQUIRE(r.code == 0);
    CHECK(io::decode_lamp_comm(r.json()) == lamp::comm_compose(c1, c2));
    CHECK(io::encode(io::decode_lamp_comm(r.json())) == r.json());

    r = invoke({"lamp", "invert", "--comm", j1});
    CHECK(io::decode_lamp_comm(r.json()) == lamp::comm_invert(c1));

    const auto g = random_domain_element(rng, c1, c1.level());
    r = invoke({"lamp", "apply", "--comm", j1, "--elem", io::encode(g).dump()});
    CHECK(io::decode_lamp_element(r.json()) == lamp::comm_apply(c1, g));

    r = invoke({"lamp", "partial-data", "--comm", j1});
    REQUIRE(r.code == 0);
    CHECK(io::encode(io::decode_partial_data(r.json())) == r.json());
    r = invoke({"lamp", "from-partial", "--data", r.out});
    REQUIRE(r.code == 0);
    CHECK(io::decode_lamp_comm(r.json()) == c1);
  }
}

TEST_CASE("lamp embed-gl and quotient-dim") {
  auto r = invoke({"lamp", "embed-gl", "--matrix", "[[0,1],[1,0]]"});
  REQUIRE(r.code == 0);
  const auto swap = r.out;
  r = invoke({"lamp", "apply", "--comm", swap, "--elem", R"({"k":"1","n":0})"});
  CHECK(r.json()["k"] == "t");
  r = invoke({"lamp", "embed-gl", "--matrix", "[[1,1],[1,1]]"});
  CHECK(r.code == 1);

  r = invoke({"lamp", "quotient-dim", "--m", "3"});
  CHECK(r.json()["dim"] == 3);
  r = invoke({"lamp", "quotient-dim", "--level", "1", "--gens", R"(["1+t"])", "--m", "2"});
  CHECK(r.json()["dim"] == 2);
  CHECK(r.json()["index_log2"] == 1);

  ::setenv("COMMLAB_WINDOW", "64", 1);
  r = invoke({"lamp", "quotient-dim", "--level", "1", "--gens", R"(["1+t"])", "--m", "5"});
  ::unsetenv("COMMLAB_WINDOW");
  CHECK(r.json()["dim"] == 5);
}

TEST_CASE("inputs may be files") {
  const auto path = std::filesystem::temp_directory_path() / "commlab_identity_comm.json";
  {
    std::ofstream f(path);
    f << io::encode(lamp::identity_comm()).dump();
  }
  auto r = invoke({"lamp", "apply", "--comm", path.string(), "--elem", R"({"k":"t^2","n":3})"});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(r.json() == Json::parse(R"({"k":"t^2","n":3})"));
}

TEST_CASE("comm-desc commands") {
  const std::string spec = R"({"reduced":"bs","dims":{"N0":1,"N1":1,"dZ":1,"dZ1":1},
    "a":{"h_central":[["1"]],"P":[["2"]],"h_10":[["3"]],"h_1z":[["1/2"]],"red":{"r":"3","q":"1"}},
    "b":{"P":[["5"]],"h_1z":[["7"]],"red":{"r":"1/3","q":"0"}}})";
  auto r = invoke({"comm-desc", "mul", "--spec", spec});
  REQUIRE(r.code == 0);
  const solv::Dims d{1, 1, 1, 1};
  const auto a = io::decode_comm_desc<solv::BSReduced>(Json::parse(spec)["a"], d);
  const auto b = io::decode_comm_desc<solv::BSReduced>(Json::parse(spec)["b"], d);
  CHECK(io::decode_comm_desc<solv::BSReduced>(r.json()["result"], d) == solv::comm_desc_mul(a, b));

  r = invoke({"comm-desc", "inv", "--spec", spec});
  REQUIRE(r.code == 0);
  const auto inv = io::decode_comm_desc<solv::BSReduced>(r.json()["result"], d);
  CHECK(solv::comm_desc_mul(a, inv) == solv::comm_desc_identity<solv::BSReduced>(d));

  r = invoke({"comm-desc", "mul", "--spec", R"({"reduced":"trivial","dims":{"N0":1},"a":{"P":[["0"]]},"b":{}})"});
  CHECK(r.code == 1);
  r = invoke({"comm-desc", "mul", "--spec", R"({"reduced":"trivial","dims":{"N0":2},"a":{"P":[["1"]]},"b":{}})"});
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "DimensionMismatch");
}

TEST_CASE("unipotent and torus JSON round-trips") {
  Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    auto g = random_unitriangular(rng, 4, 6);
    CHECK(io::decode_matq(io::encode(g)) == g);
    auto r = invoke({"unipotent", "root", "--p", "3", "--matrix", io::encode(g).dump()});
    CHECK(unip::matrix_power(io::decode_matq(r.json()["matrix"]), 3) == g);
  }
  const Json spec = Json::parse(R"([{"kind":"Gm"},{"kind":"NormOne","d":"-1"},{"kind":"RestScalars","d":"2"}])");
  CHECK(io::encode(io::decode_torus_spec(spec)) == spec);
  auto r = invoke({"torus-rank", "--spec", spec.dump(), "--primes", "2,5"});
  REQUIRE(r.code == 0);
  CHECK(io::encode(io::decode_torus_spec(r.json()["torus"])) == r.json()["torus"]);
}

TEST_CASE("demos pass and are deterministic") {
  for (const std::string name : {"torus-example", "lamplighter-gl-embed", "bs-bogopolski", "radicability"}) {
    auto r1 = invoke({"--seed", "7", "demo", name});
    auto r2 = invoke({"--seed", "7", "demo", name});
    CHECK(r1.code == 0);
    CHECK(r1.json()["pass"] == true);
    CHECK(r1.out == r2.out);
  }
  auto r = invoke({"demo", "torus-example"});
  std::vector<int> Ns;
  const Json report = r.json();
  for (const auto& row : report["rows"]) Ns.push_back(row["N"].get<int>());
  CHECK(Ns == std::vector<int>{1, 1, 2, 2});
}
