#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>

#include "state_spec.hpp"
#include "uhfkron/atoms.hpp"
#include "uhfkron/checks.hpp"
#include "uhfkron/coproduct.hpp"
#include "uhfkron/error.hpp"
#include "uhfkron/expr.hpp"
#include "uhfkron/gns.hpp"

namespace uhfkron::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitConsistency = 4;
constexpr int kExitUsage = 64;

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json signature_json(const Signature& sig) { return Json(std::vector<int>(sig.dims().begin(), sig.dims().end())); }

double compare_tolerance() {
  if (const char* env = std::getenv("UHFKRON_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw Error(ErrorCode::validation, "UHFKRON_TOL must be a positive number, got '" + std::string(env) + "'");
    }
    return tol;
  }
  return kDefaultCompare;
}

std::optional<std::size_t> level_opt(std::size_t level) {
  return level == 0 ? std::nullopt : std::optional<std::size_t>(level);
}

/// A comma list of dims; a single entry is repeated to reach `level`.
Signature signature_for(const std::string& list, std::size_t level) {
  std::vector<int> dims = parse_int_list(list);
  if (dims.size() == 1 && level > 1) dims.resize(level, dims.front());
  if (dims.size() != level) {
    throw Error(ErrorCode::signature_mismatch, "signature '" + list + "' has " + std::to_string(dims.size()) +
                                                   " entries, expected level " + std::to_string(level));
  }
  return Signature(std::move(dims));
}

Json report_json(const CheckReport& r) {
  Json out{{"suite", r.suite}, {"passed", r.passed}, {"failed", r.failed}, {"max_error", r.max_error}};
  out["failures"] = r.failures;
  return out;
}

struct Options {
  std::string state, state2, expr, a, b, t, r, j, k, suite, dims;
  std::size_t level = 0;
  int n = 0, m = 0;
  std::optional<int> j_tail, k_tail;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  double cutoff = kGnsEigenCutoff;
};

Json run_eval(const Options& o) {
  const AlgebraElement x = parse_element(o.expr);
  const ProductState s = parse_state_spec(o.state, level_opt(o.level ? o.level : x.signature().level()));
  return Json{{"value", complex_json(state_evaluate(s, x))}};
}

Json run_coproduct(const Options& o) {
  const AlgebraElement x = parse_element(o.expr);
  const std::size_t level = x.signature().level();
  const AlgebraElement y = coproduct_phi(x, signature_for(o.a, level), signature_for(o.b, level));
  Json terms = Json::array();
  for (const auto& [idx, coeff] : y.terms()) {
    terms.push_back(Json{{"rows", idx.rows}, {"cols", idx.cols}, {"coeff", complex_json(coeff)}});
  }
  return Json{{"signature", signature_json(y.signature())}, {"terms", terms}, {"expr", format_element(y)}};
}

Json run_tensor_state(const Options& o) {
  const AlgebraElement x = parse_element(o.expr);
  const std::size_t level = x.signature().level();
  const ProductState s = parse_state_spec(o.t, level);
  const ProductState r = parse_state_spec(o.r, level);
  if (!o.a.empty() && signature_for(o.a, level) != s.signature()) {
    throw Error(ErrorCode::signature_mismatch, "--a does not match the signature of --T " + s.signature().to_string());
  }
  if (!o.b.empty() && signature_for(o.b, level) != r.signature()) {
    throw Error(ErrorCode::signature_mismatch, "--b does not match the signature of --R " + r.signature().to_string());
  }
  return Json{{"value", complex_json(state_tensor_phi_eval(s, r, x))}};
}

Json run_boxtimes(const Options& o) {
  const ProductState s = parse_state_spec(o.t, level_opt(o.level));
  const ProductState r = parse_state_spec(o.r, level_opt(o.level ? o.level : s.level()));
  const ProductState out = state_boxtimes(s, r);
  Json factors = Json::array();
  for (const auto& f : out.factors()) factors.push_back(matrix_json(f.matrix()));
  return Json{{"signature", signature_json(out.signature())}, {"factors", factors}};
}

Json run_atom_product(const Options& o) {
  const AtomLabel product = atom_label_product(AtomLabel(o.n, parse_int_list(o.j), o.j_tail),
                                               AtomLabel(o.m, parse_int_list(o.k), o.k_tail));
  Json out{{"base", product.base()}, {"label", product.prefix()}};
  if (product.tail()) out["tail"] = *product.tail();
  return out;
}

Json run_gns(const Options& o, double tol) {
  const ProductState s = parse_state_spec(o.state, level_opt(o.level));
  const GnsTriplet g = gns_build(s, o.cutoff);
  std::vector<int> ranks;
  for (const auto& f : g.factors()) ranks.push_back(f.rank);

  CheckReport expectation("expectation");
  const double check_tol = std::max(tol, 1e-10);
  for_each_unit(s.signature(), [&](const Unit& u) {
    AlgebraElement::TermMap term;
    term.emplace(u, Complex(1.0, 0.0));
    const AlgebraElement x = make_trusted(s.signature(), std::move(term));
    const double err = std::abs(g.cyclic().dot(gns_lambda(g, x)) - state_evaluate(s, x));
    expectation.max_error = std::max(expectation.max_error, err);
    expectation.record(err <= check_tol, format_element(x));
  });

  Json commutant = nullptr;
  if (g.space_dim() <= kCommutantGuard) commutant = commutant_dimension(g);

  return Json{{"signature", signature_json(s.signature())},
              {"space_dim", g.space_dim()},
              {"factor_ranks", ranks},
              {"commutant_dim", commutant},
              {"expectation", Json{{"passed", expectation.passed},
                                   {"failed", expectation.failed},
                                   {"max_error", expectation.max_error}}}};
}

CheckReport run_suite(const Options& o, double tol) {
  if (o.level == 0) throw Error(ErrorCode::validation, "--level must be >= 1");
  const std::vector<int> dims = parse_int_list(o.dims);
  auto need = [&](std::size_t count) {
    if (dims.size() != count) {
      throw Error(ErrorCode::validation, "suite '" + o.suite + "' takes " + std::to_string(count) +
                                             " dims, got " + std::to_string(dims.size()));
    }
  };
  auto sig = [&](std::size_t i) { return Signature::constant(dims[i], o.level); };

  if (o.suite == "coassociativity") {
    need(3);
    return check_coassociativity(sig(0), sig(1), sig(2));
  }
  if (o.suite == "compatibility") {
    need(2);
    return check_compatibility(sig(0), sig(1), dims[0], dims[1]);
  }
  if (o.suite == "bijection") {
    need(2);
    return check_bijection(sig(0), sig(1));
  }
  if (o.suite == "star-isomorphism") {
    need(2);
    return check_star_isomorphism(sig(0), sig(1), o.seed, o.samples, tol);
  }
  if (o.suite == "tensor-formula") {
    need(2);
    return check_tensor_formula(sig(0), sig(1), o.seed, tol);
  }
  if (o.suite == "associativity") {
    need(3);
    return check_associativity(sig(0), sig(1), sig(2), o.seed, std::max(tol, 1e-10));
  }
  if (o.suite == "atom-semigroup") {
    need(2);
    return check_atom_semigroup(dims[0], dims[1], o.level);
  }
  if (o.suite == "gns") {
    need(1);
    return check_gns(sig(0), o.seed, std::max(tol, 1e-10));
  }
  if (o.suite == "intertwiner") {
    need(2);
    return check_intertwiner(sig(0), sig(1), o.seed, std::max(tol, 1e-8));
  }
  throw Error(ErrorCode::validation, "unknown suite '" + o.suite + "'");
}

Json run_distance(const Options& o) {
  const ProductState s1 = parse_state_spec(o.state, level_opt(o.level));
  const ProductState s2 = parse_state_spec(o.state2, level_opt(o.level ? o.level : s1.level()));
  return Json{{"distance", state_trace_distance(s1, s2)}};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::resource:
      return kExitResource;
    case ErrorCode::consistency:
      return kExitConsistency;
    default:
      return kExitInvalid;
  }
}

void write_error(std::ostream& out, std::string_view code, const std::string& message) {
  out << Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Kronecker coproducts, product states and GNS data on finite UHF tensor stages", "uhfkron"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate a product state on an element");
  eval->add_option("--state", o.state, "State: diag(...);... or file:PATH")->required();
  eval->add_option("--expr", o.expr, "Element expression")->required();
  eval->add_option("--level", o.level, "Repeat a single-factor state to this level");

  auto* coproduct = app.add_subcommand("coproduct", "Print phi_{a,b}(x) as a term list");
  coproduct->add_option("--a", o.a, "Dims of the first block")->required();
  coproduct->add_option("--b", o.b, "Dims of the second block")->required();
  coproduct->add_option("--expr", o.expr, "Element over a.b")->required();

  auto* tensor = app.add_subcommand("tensor-state", "Evaluate omega_T (x)_phi omega_R on an element");
  tensor->add_option("--a", o.a, "Dims of T (checked)");
  tensor->add_option("--b", o.b, "Dims of R (checked)");
  tensor->add_option("--T", o.t, "First state")->required();
  tensor->add_option("--R", o.r, "Second state")->required();
  tensor->add_option("--expr", o.expr, "Element over a.b")->required();

  auto* boxtimes = app.add_subcommand("boxtimes", "Componentwise Kronecker product of state data");
  boxtimes->add_option("--T", o.t, "First state")->required();
  boxtimes->add_option("--R", o.r, "Second state")->required();
  boxtimes->add_option("--level", o.level, "Repeat single-factor states to this level");

  auto* atom = app.add_subcommand("atom-product", "Label product J.K");
  atom->add_option("--n", o.n, "Base of J")->required();
  atom->add_option("--m", o.m, "Base of K")->required();
  atom->add_option("--J", o.j, "Prefix of J, comma separated")->required();
  atom->add_option("--K", o.k, "Prefix of K, comma separated")->required();
  atom->add_option("--J-tail", o.j_tail, "Constant tail of J");
  atom->add_option("--K-tail", o.k_tail, "Constant tail of K");

  auto* gns = app.add_subcommand("gns", "GNS dimensions, commutant dimension and expectation checks");
  gns->add_option("--state", o.state, "State")->required();
  gns->add_option("--level", o.level, "Repeat a single-factor state to this level");
  gns->add_option("--cutoff", o.cutoff, "Eigenvalue cutoff for the purification rank");

  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"coassociativity", "compatibility", "bijection", "star-isomorphism", "tensor-formula",
                             "associativity", "atom-semigroup", "gns", "intertwiner"}));
  check->add_option("--dims", o.dims, "Constant factor dims, comma separated")->required();
  check->add_option("--level", o.level, "Truncation level")->required();
  check->add_option("--seed", o.seed, "Seed for random suites");
  check->add_option("--samples", o.samples, "Samples for star-isomorphism");

  auto* distance = app.add_subcommand("distance", "Trace distance of level-n densities");
  distance->add_option("--S1", o.state, "First state")->required();
  distance->add_option("--S2", o.state2, "Second state")->required();
  distance->add_option("--level", o.level, "Repeat single-factor states to this level");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(out, "usage_error", e.what());
    return kExitUsage;
  }

  try {
    const double tol = compare_tolerance();
    Json result;
    int code = kExitOk;
    if (eval->parsed()) {
      result = run_eval(o);
    } else if (coproduct->parsed()) {
      result = run_coproduct(o);
    } else if (tensor->parsed()) {
      result = run_tensor_state(o);
    } else if (boxtimes->parsed()) {
      result = run_boxtimes(o);
    } else if (atom->parsed()) {
      result = run_atom_product(o);
    } else if (gns->parsed()) {
      result = run_gns(o, tol);
    } else if (check->parsed()) {
      const CheckReport report = run_suite(o, tol);
      result = report_json(report);
      if (!report.ok()) code = kExitCheckFailed;
    } else if (distance->parsed()) {
      result = run_distance(o);
    }
    out << result.dump() << '\n';
    return code;
  } catch (const Error& e) {
    write_error(out, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    write_error(out, "internal_error", e.what());
    return kExitConsistency;
  }
}

}  // namespace uhfkron::cli
