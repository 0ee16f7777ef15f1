// Command-line front end: constructions, Lagrangian optimization, closed
// forms and certificates. JSON goes to stdout, a one-line summary to stderr.
//
// Exit codes: 0 pass, 1 parse or argument error, 2 check failed,
// 3 sparse-adder generator failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "hyperlag/certify.hpp"
#include "hyperlag/closedform.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/hypercore.hpp"
#include "hyperlag/optimize.hpp"
#include "hyperlag/report_json.hpp"

namespace {

using hyperlag::Json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitGenerator = 3;

/// Everything needed to reproduce a run; embedded in every report.
struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string input;
  std::string out;
  std::string adder;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  int grid = 200;
  int refine_iters = 2000;
  int restarts = 16;
  int threads = 1;
  std::optional<std::int64_t> k;
  std::optional<int> t;
  std::optional<int> n;
  int s = 4;
  double c = 0.1;
  long max_attempts = 1000000;
  bool check_optimize = false;
};

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json to_json(const RunConfig& rc) {
  return Json{{"command", rc.command},
              {"subcommand", rc.subcommand},
              {"input", rc.input},
              {"out", rc.out},
              {"adder", rc.adder},
              {"seed", rc.seed},
              {"tol", opt(rc.tol)},
              {"grid", rc.grid},
              {"refine_iters", rc.refine_iters},
              {"restarts", rc.restarts},
              {"threads", rc.threads},
              {"k", opt(rc.k)},
              {"t", opt(rc.t)},
              {"n", opt(rc.n)},
              {"s", rc.s},
              {"c", rc.c},
              {"max_attempts", rc.max_attempts},
              {"check_optimize", rc.check_optimize}};
}

void emit(const RunConfig& rc, Json body) {
  body["run_config"] = to_json(rc);
  std::cout << body.dump(2) << '\n';
}

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
  return *v;
}

hyperlag::OptimizerConfig optimizer_config(const RunConfig& rc) {
  hyperlag::OptimizerConfig cfg;
  cfg.seed = rc.seed;
  cfg.restarts = rc.restarts;
  cfg.threads = rc.threads;
  cfg.validate();
  return cfg;
}

int cmd_lagrangian(const RunConfig& rc) {
  const auto g = hyperlag::read_hypergraph_file(rc.input);
  const auto result = hyperlag::maximize_lagrangian(g, optimizer_config(rc));
  const double tol = rc.tol.value_or(1e-6);
  Json body{{"result", result}};
  if (!g.empty()) body["stationarity"] = hyperlag::verify_stationarity(g, result.argmax, tol);
  emit(rc, std::move(body));
  std::cerr << "lambda(" << rc.input << ") >= " << result.value << " (n=" << g.order() << ", m=" << g.edge_count()
            << ")\n";
  return kExitPass;
}

int write_construction(const RunConfig& rc, const hyperlag::UniformHypergraph& g,
                       const hyperlag::ConstructionMetadata& meta) {
  Json body{{"edges", g.edge_count()}, {"vertices", g.order()}, {"metadata", meta}};
  if (!rc.out.empty()) {
    hyperlag::write_hypergraph_file(rc.out, g);
    hyperlag::write_json_file(rc.out + ".json", meta);
    body["files"] = {rc.out, rc.out + ".json"};
  }
  emit(rc, std::move(body));
  std::cerr << meta.kind << ": " << g.edge_count() << " edges on " << g.order() << " vertices\n";
  return kExitPass;
}

int cmd_construct(const RunConfig& rc) {
  using namespace hyperlag;
  const std::string& kind = rc.subcommand;
  if (kind == "b2k") {
    const auto k = require(rc.k, "--k");
    const int n = require(rc.n, "--n");
    const auto g = build_b2k(static_cast<int>(k), n);
    return write_construction(rc, g, {"b2k", k, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                      part_blocks({static_cast<int>(std::min<std::int64_t>(2 * k, n)),
                                                   n - static_cast<int>(std::min<std::int64_t>(2 * k, n))})});
  }
  if (kind == "theorem1") {
    const int t = require(rc.t, "--t");
    const auto g = build_theorem1_base(t);
    return write_construction(rc, g, {"theorem1", std::nullopt, t, std::nullopt, std::nullopt, std::nullopt,
                                      part_blocks({2 * t / 5, 2 * t / 5, t / 5})});
  }
  if (kind == "theorem3") {
    const auto k = require(rc.k, "--k");
    const int t = require(rc.t, "--t");
    const auto inst = instantiate_pattern(build_theorem3_pattern(k), t);
    return write_construction(rc, inst.graph,
                              {"theorem3", k, t, std::nullopt, std::nullopt, std::nullopt, inst.blocks});
  }
  if (kind == "sparse") {
    const int t = require(rc.t, "--t");
    const SparseAdderParams params{rc.s, rc.c, t, 3, rc.seed, rc.max_attempts};
    const auto g = generate_sparse_adder(params);
    return write_construction(rc, g, {"sparse", std::nullopt, t, rc.s, rc.c, rc.seed, part_blocks({t})});
  }
  // gstar: --k selects the (2k+1)-part construction, otherwise the three-part one.
  const int t = require(rc.t, "--t");
  const GStar g = rc.k ? build_gstar_theorem3(*rc.k, t, rc.s, rc.c, rc.seed, rc.max_attempts)
                       : build_gstar_theorem1(t, rc.s, rc.c, rc.seed, rc.max_attempts);
  return write_construction(rc, g.graph, g.metadata);
}

int cmd_alpha(const RunConfig& rc) {
  using namespace hyperlag;
  const auto k = require(rc.k, "--k");
  const Surd alpha = alpha_k(k);
  Json body{{"k", k}, {"alpha", alpha}, {"alpha_over_6", alpha / Surd(6)}, {"astar", astar_weight(k)}};
  std::cerr << "alpha_" << k << " = " << alpha << " ~ " << alpha.to_double() << '\n';
  int status = kExitPass;
  if (rc.check_optimize) {
    const double tol = rc.tol.value_or(1e-8);
    const auto numeric = grid_refine_maximize(b2k_objective(k), 2, rc.grid, 20, rc.refine_iters);
    const double gap = std::abs(alpha.to_double() / 6 - numeric.value);
    const bool pass = gap <= tol;
    body["check_optimize"] = {{"numeric_max", numeric.value},
                              {"argmax", numeric.argmax[0]},
                              {"gap", gap},
                              {"tol", tol},
                              {"pass", pass}};
    std::cerr << "|alpha/6 - numeric max| = " << gap << (pass ? " <= " : " > ") << tol << '\n';
    if (!pass) status = kExitFail;
  }
  emit(rc, std::move(body));
  return status;
}

hyperlag::CertificateParameters certificate_parameters(const RunConfig& rc, double default_tol) {
  hyperlag::CertificateParameters p;
  p.s = rc.s;
  p.t = rc.t;
  p.grid_resolution = rc.grid;
  p.refine_iters = rc.refine_iters;
  p.seed = rc.seed;
  p.tol = rc.tol.value_or(default_tol);
  return p;
}

int cmd_certify(const RunConfig& rc) {
  using namespace hyperlag;
  const CertificateReport report = rc.subcommand == "t1"
                                       ? certify_theorem1(certificate_parameters(rc, 1e-9))
                                       : certify_theorem3(require(rc.k, "--k"), certificate_parameters(rc, 1e-8));
  Json body = report;
  if (!rc.out.empty()) write_json_file(rc.out, body);
  emit(rc, std::move(body));
  for (const auto& v : report.cases) {
    std::cerr << (v.pass ? "PASS " : "FAIL ") << report.theorem.name() << ' ' << v.case_name << ": found "
              << v.bound_found << " vs claimed " << v.bound_claimed.to_double() << '\n';
  }
  std::cerr << report.theorem.name() << (report.overall ? " certified" : " NOT certified") << '\n';
  return report.overall ? kExitPass : kExitFail;
}

int cmd_density_gain(const RunConfig& rc) {
  using namespace hyperlag;
  const TheoremId theorem = rc.k ? TheoremId::t3(*rc.k) : TheoremId::t1();
  const int t = require(rc.t, "--t");
  const DensityGainReport report = rc.adder.empty()
                                       ? check_blowup_density_gain(theorem, t, rc.s, rc.c, rc.seed, rc.max_attempts)
                                       : density_gain_with_adder(theorem, t, read_hypergraph_file(rc.adder));
  Json body = report;
  if (!rc.out.empty()) write_json_file(rc.out, body);
  emit(rc, std::move(body));
  std::cerr << theorem.name() << " t=" << t << ": |E(G*)|/t^3 = " << to_fraction_string(report.lower_bound)
            << ", margin " << report.margin.to_double() << (report.pass ? " > 0" : " <= 0") << '\n';
  return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Lagrangians: constructions, optimization, closed forms, certificates"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", rc.seed, "RNG seed")->capture_default_str(); };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", rc.tol, "Tolerance override"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", rc.out, "Output path"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", rc.threads, "Worker cap")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_adder_flags = [&](CLI::App* sub) {
    sub->add_option("--s", rc.s, "Local sparsity bound s")->capture_default_str();
    sub->add_option("--c", rc.c, "Adder density constant c")->capture_default_str();
    sub->add_option("--max-attempts", rc.max_attempts, "Generator attempt budget")->capture_default_str();
  };

  auto* lagrangian = app.add_subcommand("lagrangian", "Maximize the Lagrangian of a hypergraph file");
  lagrangian->add_option("path", rc.input, "Hypergraph file")->required();
  lagrangian->add_option("--restarts", rc.restarts, "Multi-start count")->capture_default_str();
  add_seed(lagrangian);
  add_tol(lagrangian);
  add_threads(lagrangian);

  auto* construct = app.add_subcommand("construct", "Build a construction and write it with a JSON sidecar");
  construct->require_subcommand(1);
  for (const char* kind : {"b2k", "theorem1", "theorem3", "sparse", "gstar"}) {
    auto* sub = construct->add_subcommand(kind);
    sub->add_option("--k", rc.k, "k parameter");
    sub->add_option("--t", rc.t, "Blow-up size t");
    sub->add_option("--n", rc.n, "Vertex count (b2k)");
    add_adder_flags(sub);
    add_seed(sub);
    add_out(sub);
  }

  auto* alpha = app.add_subcommand("alpha", "Closed-form alpha_k");
  alpha->add_option("--k", rc.k, "k >= 1")->required();
  alpha->add_flag("--check-optimize", rc.check_optimize, "Compare with 6 * numeric max of f_b2k");
  alpha->add_option("--grid", rc.grid, "Grid resolution for --check-optimize")->capture_default_str();
  alpha->add_option("--refine-iters", rc.refine_iters, "Refinement iterations")->capture_default_str();
  add_tol(alpha);

  auto* certify = app.add_subcommand("certify", "Run a certificate");
  certify->require_subcommand(1);
  for (const char* which : {"t1", "t3"}) {
    auto* sub = certify->add_subcommand(which);
    sub->add_option("--k", rc.k, "k >= 2 (t3)");
    sub->add_option("--t", rc.t, "Blow-up size, recorded only");
    sub->add_option("--grid", rc.grid, "Simplex lattice resolution")->capture_default_str();
    sub->add_option("--refine-iters", rc.refine_iters, "Refinement iterations per candidate")->capture_default_str();
    sub->add_option("--s", rc.s, "Profile size bound")->capture_default_str();
    add_seed(sub);
    add_tol(sub);
    add_out(sub);
    add_threads(sub);
  }

  auto* gain = app.add_subcommand("density-gain", "Uniform-weight density of G*(t) against the constant");
  gain->add_option("--k", rc.k, "Use the (2k+1)-part construction");
  gain->add_option("--t", rc.t, "Blow-up size t")->required();
  gain->add_option("--adder", rc.adder, "Explicit adder file instead of the generator");
  add_adder_flags(gain);
  add_seed(gain);
  add_out(gain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  rc.command = chosen->get_name();
  if (!chosen->get_subcommands().empty()) rc.subcommand = chosen->get_subcommands().front()->get_name();

  try {
    if (rc.command == "lagrangian") return cmd_lagrangian(rc);
    if (rc.command == "construct") return cmd_construct(rc);
    if (rc.command == "alpha") return cmd_alpha(rc);
    if (rc.command == "certify") return cmd_certify(rc);
    return cmd_density_gain(rc);
  } catch (const hyperlag::GeneratorFailure& e) {
    std::cerr << "generator failure: " << e.what() << '\n';
    return kExitGenerator;
  } catch (const hyperlag::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
