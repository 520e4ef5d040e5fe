#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <set>
#include <sstream>

namespace commlab::cli {

namespace {

using io::Json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);)
    if (part.find_first_not_of(" \t") != std::string::npos) parts.push_back(part);
  return parts;
}

/// "2,1;1,1" -> [[2, 1], [1, 1]]
MatQ parse_inline_matrix(const std::string& text) {
  const auto rows = split(text, ';');
  if (rows.empty()) fail(ErrorCode::ParseError, "empty matrix");
  std::vector<BigRat> entries;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (cols == 0) cols = cells.size();
    if (cells.size() != cols || cols == 0) fail(ErrorCode::ParseError, "matrix rows must have equal length");
    for (const auto& c : cells) entries.push_back(parse_rational(c));
  }
  return MatQ(rows.size(), cols, std::move(entries));
}

std::set<unsigned long> parse_primes(const std::string& text) {
  std::set<unsigned long> S;
  for (const auto& p : split(text, ',')) {
    const BigRat q = parse_rational(p);
    if (q.get_den() != 1 || q < 1) fail(ErrorCode::ParseError, "primes must be positive integers");
    S.insert(q.get_num().get_ui());
  }
  return S;
}

template <class Red>
Json comm_desc_op(const Json& spec, const solv::Dims& d, bool invert) {
  const auto a = io::decode_comm_desc<Red>(spec.at("a"), d);
  if (invert) return io::encode(solv::comm_desc_inv(a));
  if (!spec.contains("b")) fail(ErrorCode::ParseError, "missing field 'b'");
  return io::encode(solv::comm_desc_mul(a, io::decode_comm_desc<Red>(spec.at("b"), d)));
}

Json comm_desc_command(const Json& spec, bool invert) {
  if (!spec.is_object() || !spec.contains("a")) fail(ErrorCode::ParseError, "missing field 'a'");
  const std::string tag = spec.value("reduced", "trivial");
  const auto d = io::decode_dims(spec.value("dims", Json::object()));
  Json result;
  if (tag == "trivial")
    result = comm_desc_op<solv::TrivialReduced>(spec, d, invert);
  else if (tag == "bs")
    result = comm_desc_op<solv::BSReduced>(spec, d, invert);
  else
    fail(ErrorCode::UnknownInstantiation, "unknown reduced-part instantiation '" + tag + "'");
  return {{"reduced", tag}, {"dims", io::encode(d)}, {"result", result}};
}

Json error_json(std::string_view code, const std::string& detail) {
  return {{"error", std::string(code)}, {"detail", detail}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with abstract commensurators", "comm-lab"};
  app.require_subcommand(1);
  bool pretty = false;
  std::uint64_t seed = 0;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--seed", seed, "Seed for sampled demos")->capture_default_str();
  app.fallthrough();

  std::function<Json()> action;
  bool demo_failed = false;

  // torus-rank
  auto* torus_cmd = app.add_subcommand("torus-rank", "S-rank of a torus");
  std::string disc, matrix_text, spec_text, primes;
  auto* disc_opt = torus_cmd->add_option("--disc", disc, "NormOne(d) for squarefree d");
  auto* mat_opt = torus_cmd->add_option("--matrix", matrix_text, "2x2 integer matrix \"a,b;c,d\"");
  auto* spec_opt = torus_cmd->add_option("--spec", spec_text, "JSON list of factors");
  disc_opt->excludes(mat_opt)->excludes(spec_opt);
  mat_opt->excludes(spec_opt);
  torus_cmd->add_option("--primes", primes, "Comma-separated primes in S");
  torus_cmd->callback([&] {
    action = [&] {
      torus::TorusSpec spec;
      if (!disc.empty()) {
        const BigRat d = parse_rational(disc);
        if (d.get_den() != 1) fail(ErrorCode::ParseError, "--disc must be an integer");
        spec = {{torus::norm_one(d.get_num())}};
      } else if (!matrix_text.empty()) {
        spec = torus::torus_from_matrix2(parse_inline_matrix(matrix_text));
      } else if (!spec_text.empty()) {
        spec = io::decode_torus_spec(io::load(spec_text));
      } else {
        fail(ErrorCode::ParseError, "one of --disc, --matrix, --spec is required");
      }
      Json out = {{"torus", io::encode(spec)}};
      out.update(io::encode(torus::s_rank(spec, parse_primes(primes))));
      return out;
    };
  });

  // lamp
  auto* lamp_cmd = app.add_subcommand("lamp", "Lamplighter group and its commensurator");
  lamp_cmd->require_subcommand(1);
  std::string a_text, b_text, comm_text, elem_text, c2_text, data_text, gens_text;
  std::int64_t window = 0, level = 1, m = 1;

  auto* lmul = lamp_cmd->add_subcommand("mul", "Product of two elements");
  lmul->add_option("--a", a_text)->required();
  lmul->add_option("--b", b_text)->required();
  lmul->callback([&] {
    action = [&] {
      return io::encode(lamp::lamp_mul(io::decode_lamp_element(io::load(a_text)), io::decode_lamp_element(io::load(b_text))));
    };
  });

  auto* lapply = lamp_cmd->add_subcommand("apply", "Apply a commensuration to an element");
  lapply->add_option("--comm", comm_text, "JSON, file, 'identity' or 'flip'")->required();
  lapply->add_option("--elem", elem_text)->required();
  lapply->callback([&] {
    action = [&] {
      return io::encode(lamp::comm_apply(io::load_lamp_comm(comm_text), io::decode_lamp_element(io::load(elem_text))));
    };
  });

  auto* lcompose = lamp_cmd->add_subcommand("compose", "c1 o c2 (c2 applied first)");
  lcompose->add_option("--c1", comm_text)->required();
  lcompose->add_option("--c2", c2_text)->required();
  lcompose->callback([&] {
    action = [&] { return io::encode(lamp::comm_compose(io::load_lamp_comm(comm_text), io::load_lamp_comm(c2_text))); };
  });

  auto* linvert = lamp_cmd->add_subcommand("invert", "Inverse commensuration");
  linvert->add_option("--comm", comm_text)->required();
  linvert->callback([&] { action = [&] { return io::encode(lamp::comm_invert(io::load_lamp_comm(comm_text))); }; });

  auto* lpartial = lamp_cmd->add_subcommand("from-partial", "Commensuration from generator images");
  lpartial->add_option("--data", data_text, "{level, domain, images, tm_image}")->required();
  std::int64_t partial_window = 4;
  lpartial->add_option("--window", partial_window, "Relation window")->envname("COMMLAB_WINDOW")->capture_default_str();
  lpartial->callback([&] {
    action = [&] {
      return io::encode(lamp::comm_from_partial(io::decode_partial_data(io::load(data_text)), partial_window));
    };
  });

  auto* ldata = lamp_cmd->add_subcommand("partial-data", "Generator images of a commensuration");
  ldata->add_option("--comm", comm_text)->required();
  ldata->callback([&] { action = [&] { return io::encode(lamp::partial_data_of(io::load_lamp_comm(comm_text))); }; });

  auto* lembed = lamp_cmd->add_subcommand("embed-gl", "Diagonal embedding of GL_n(F_2)");
  lembed->add_option("--matrix", matrix_text, "JSON 0/1 matrix")->required();
  lembed->callback([&] { action = [&] { return io::encode(lamp::diagonal_embed(io::decode_matf2(io::load(matrix_text)))); }; });

  auto* lquot = lamp_cmd->add_subcommand("quotient-dim", "dim K1 / (1 + t^m) K1");
  lquot->add_option("--level", level, "Level of the generators")->capture_default_str();
  lquot->add_option("--gens", gens_text, "JSON list of generators (default: all of K)");
  lquot->add_option("--m", m)->required();
  lquot->add_option("--window", window, "Exponent window (0 = automatic)")->envname("COMMLAB_WINDOW");
  lquot->callback([&] {
    action = [&] {
      lamp::SubmoduleBasis K1 = lamp::whole_module(level);
      if (!gens_text.empty()) {
        std::vector<F2LaurentPoly> gens;
        for (const auto& g : io::load(gens_text)) gens.push_back(parse_laurent(g.get<std::string>()));
        K1 = lamp::submodule_from_generators(level, gens);
      }
      return Json{{"dim", lamp::quotient_dim(K1, m, window)},
                  {"m", m},
                  {"index_log2", lamp::submodule_index_log2(K1)}};
    };
  });

  // unipotent
  auto* unip_cmd = app.add_subcommand("unipotent", "Unitriangular groups over Q");
  unip_cmd->require_subcommand(1);
  std::string aut_text;
  long p = 2;
  auto* ulog = unip_cmd->add_subcommand("log", "Logarithm of a unitriangular matrix");
  ulog->add_option("--matrix", matrix_text)->required();
  ulog->callback([&] { action = [&] { return Json{{"matrix", io::encode(unip::unitri_log(io::decode_matq(io::load(matrix_text))))}}; }; });
  auto* uexp = unip_cmd->add_subcommand("exp", "Exponential of a strictly upper matrix");
  uexp->add_option("--matrix", matrix_text)->required();
  uexp->callback([&] { action = [&] { return Json{{"matrix", io::encode(unip::unitri_exp(io::decode_matq(io::load(matrix_text))))}}; }; });
  auto* uroot = unip_cmd->add_subcommand("root", "Unique p-th root");
  uroot->add_option("--p", p)->required();
  uroot->add_option("--matrix", matrix_text)->required();
  uroot->callback([&] {
    action = [&] { return Json{{"matrix", io::encode(unip::pth_root(io::decode_matq(io::load(matrix_text)), p))}}; };
  });
  auto* uaut = unip_cmd->add_subcommand("apply-aut", "Commensuration induced by a Lie algebra automorphism");
  uaut->add_option("--aut", aut_text, "{n, L}")->required();
  uaut->add_option("--matrix", matrix_text)->required();
  uaut->callback([&] {
    action = [&] {
      const auto a = io::decode_lie_aut(io::load(aut_text));
      return Json{{"matrix", io::encode(unip::comm_from_lie_aut(a, io::decode_matq(io::load(matrix_text))))}};
    };
  });

  // bs
  auto* bs_cmd = app.add_subcommand("bs", "BS(1, n) as affine maps x -> n^a x + b");
  bs_cmd->require_subcommand(1);
  long n = 2;
  std::string r_text = "1", q_text = "0";
  auto* bmul = bs_cmd->add_subcommand("mul", "Product g o h");
  bmul->add_option("--n", n)->required();
  bmul->add_option("--a", a_text, "{a, b}")->required();
  bmul->add_option("--b", b_text, "{a, b}")->required();
  bmul->callback([&] {
    action = [&] {
      return io::encode(solv::bs_mul(io::decode_bs_element(io::load(a_text), n), io::decode_bs_element(io::load(b_text), n)));
    };
  });
  auto* bconj = bs_cmd->add_subcommand("conj", "c o g o c^-1 for c = x -> r x + q");
  bconj->add_option("--n", n)->required();
  bconj->add_option("--r", r_text)->capture_default_str();
  bconj->add_option("--q", q_text)->capture_default_str();
  bconj->add_option("--elem", elem_text, "{a, b}")->required();
  bconj->callback([&] {
    action = [&] {
      const solv::AffineMap c{parse_rational(r_text), parse_rational(q_text)};
      return io::encode(solv::bs_comm_apply(c, io::decode_bs_element(io::load(elem_text), n)));
    };
  });
  auto* bdom = bs_cmd->add_subcommand("domain", "Domain {a in K Z, b in D Z[1/n]} of a commensuration");
  bdom->add_option("--n", n)->required();
  bdom->add_option("--r", r_text)->capture_default_str();
  bdom->add_option("--q", q_text)->capture_default_str();
  bdom->callback([&] {
    action = [&] {
      const auto dom = solv::bs_comm_domain({parse_rational(r_text), parse_rational(q_text)}, n);
      return Json{{"K", dom.K}, {"D", dom.D.get_str()}};
    };
  });

  // comm-desc
  auto* desc_cmd = app.add_subcommand("comm-desc", "Block group law of Comm of a reduced solvable group");
  desc_cmd->require_subcommand(1);
  long N = 0, dim_z = 0;
  std::string tag = "trivial";
  auto* dmul = desc_cmd->add_subcommand("mul", "Product a * b");
  dmul->add_option("--spec", spec_text, "{reduced, dims, a, b}")->required();
  dmul->callback([&] { action = [&] { return comm_desc_command(io::load(spec_text), false); }; });
  auto* dinv = desc_cmd->add_subcommand("inv", "Inverse of a");
  dinv->add_option("--spec", spec_text, "{reduced, dims, a}")->required();
  dinv->callback([&] { action = [&] { return comm_desc_command(io::load(spec_text), true); }; });
  auto* dstruct = desc_cmd->add_subcommand("structure", "Shape of Hom(Q^N, Z) x| Aut");
  dstruct->add_option("--N", N)->required();
  dstruct->add_option("--dim-z", dim_z)->required();
  dstruct->add_option("--tag", tag, "trivial or bs")->capture_default_str();
  dstruct->callback([&] {
    action = [&] {
      const auto s = solv::reduced_comm_structure(N, dim_z, tag);
      return Json{{"tag", s.tag}, {"N", s.N}, {"dim_Z", s.dim_Z}, {"dims", io::encode(s.dims)}, {"description", s.description}};
    };
  });

  // solve-inner
  auto* solve_cmd = app.add_subcommand("solve-inner", "x with (T_i - I) x = v_i");
  std::string ts_text, vs_text;
  solve_cmd->add_option("--ts", ts_text, "JSON list of matrices")->required();
  solve_cmd->add_option("--vs", vs_text, "JSON list of vectors")->required();
  solve_cmd->callback([&] {
    action = [&] {
      const Json ts = io::load(ts_text), vs = io::load(vs_text);
      if (!ts.is_array() || !vs.is_array()) fail(ErrorCode::ParseError, "--ts and --vs must be JSON lists");
      std::vector<MatQ> Ts, Vs;
      for (const auto& t : ts) Ts.push_back(io::decode_matq(t));
      for (const auto& v : vs) Vs.push_back(io::decode_column(v));
      return Json{{"x", io::encode_column(solv::solve_inner_derivation(Ts, Vs))}};
    };
  });

  // demo
  auto* demo_cmd = app.add_subcommand("demo", "Worked examples with pass/fail checks");
  std::string demo_name;
  demo_cmd->add_option("name", demo_name, "torus-example, lamplighter-gl-embed, bs-bogopolski, radicability")->required();
  demo_cmd->callback([&] {
    action = [&] {
      Json report = run_demo(demo_name, seed);
      demo_failed = !report.value("pass", false);
      return report;
    };
  });

  std::vector<const char*> argv{"comm-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("ParseError", e.what()).dump() << "\n";
    return kParseError;
  }

  try {
    const Json result = action();
    out << result.dump(pretty ? 2 : -1) << "\n";
    return demo_failed ? kDomainError : kOk;
  } catch (const Error& e) {
    err << error_json(error_name(e.code()), e.what()).dump() << "\n";
    return e.code() == ErrorCode::ParseError ? kParseError : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << error_json("ParseError", e.what()).dump() << "\n";
    return kParseError;
  }
}

}  // namespace commlab::cli
