#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphent/error.hpp"
#include "graphent/harness.hpp"
#include "graphent/inequalities.hpp"
#include "graphent/measures.hpp"
#include "graphent/orbits.hpp"

namespace graphent::cli {

namespace {

using Json = nlohmann::ordered_json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

FunctionalSpec spec_from(const EntropyFlags& f) {
  if (f.dist == "linear") {
    if (f.beta) throw UsageError("--beta applies only to --dist exp");
    return FunctionalSpec::linear(f.coeffs);
  }
  if (f.dist == "exp") {
    if (!f.beta) throw UsageError("--dist exp requires --beta");
    return FunctionalSpec::exponential(*f.beta, f.coeffs);
  }
  throw UsageError("--dist must be orbits, linear or exp");
}

}  // namespace

std::string emit_entropy_report(const Graph& g, const EntropyFlags& flags) {
  Json j;
  j["n"] = g.num_vertices();
  j["distribution_kind"] = flags.dist;
  j["alpha"] = flags.alpha ? Json(*flags.alpha) : Json(nullptr);

  std::optional<Distribution> d;
  Json extra;
  std::string extra_key;
  if (flags.dist == "orbits") {
    if (flags.beta || !flags.coeffs.empty()) {
      throw UsageError("--c and --beta apply only to functional distributions");
    }
    const OrbitPartition part = vertex_orbits(g);
    d = partition_distribution(part);
    extra_key = "orbit_sizes";
    extra = part.block_sizes();
  } else {
    FunctionalSpec spec = spec_from(flags);
    spec.coeffs = resolve_coefficients(spec, distance_matrix(g).diameter());
    const FunctionalValues fv = functional_values(g, spec);
    d = distribution_from_values(fv);
    extra_key = "functional_params";
    extra["kind"] = to_string(spec.kind);
    Json coeffs = Json::array();
    for (double c : spec.coeffs) coeffs.push_back(round12(c));
    extra["coefficients"] = std::move(coeffs);
    if (spec.kind == FunctionalKind::kExponential) extra["beta"] = round12(spec.beta);
    const double s = std::exp(fv.total_log());
    extra["S"] = std::isfinite(s) ? Json(round12(s)) : Json(nullptr);
    extra["log2_S"] = round12(fv.total_log() / std::log(2.0));
  }

  const DistributionStats stats = distribution_stats(*d);
  j["shannon"] = round12(shannon_entropy(*d));
  j["renyi"] = flags.alpha ? Json(round12(renyi_entropy(*d, *flags.alpha)))
                           : Json(nullptr);
  j["rho"] = round12(stats.rho);
  j["epsilon"] = round12(stats.epsilon);
  j[extra_key] = std::move(extra);
  return j.dump(2) + "\n";
}

namespace {

struct CheckFlags {
  std::string theorem;
  std::string variant = "literal";
  double alpha = 0.5;
  std::vector<double> probs;
  std::vector<double> probs2;
  std::vector<double> values;
  std::vector<double> values2;
  std::optional<double> psi;
  std::optional<double> phi;
  bool epsilon = false;
  bool corollary = false;
  double c1 = 1.0;
  double c2 = 1.0;
  bool symmetric = false;
  std::string cls;
  std::size_t n = 0;
  std::string log_base = "2";
  bool strict = false;
  EntropyFlags graph_flags;
};

Graph read_graph(std::istream& in) { return parse_edge_list(in); }

// Distribution from --probs, or from the stdin graph via --dist.
Distribution input_distribution(const CheckFlags& f, std::istream& in,
                                const std::string& default_dist) {
  if (!f.probs.empty()) return Distribution(f.probs);
  const Graph g = read_graph(in);
  EntropyFlags ef = f.graph_flags;
  if (ef.dist.empty()) ef.dist = default_dist;
  if (ef.dist == "orbits") return partition_distribution(vertex_orbits(g));
  FunctionalSpec spec = spec_from(ef);
  return distribution_from_values(functional_values(g, spec));
}

FunctionalValues values_or_throw(const std::vector<double>& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return FunctionalValues::from_values(v);
}

BoundReport run_check(const CheckFlags& f, std::istream& in) {
  const TheoremId id = parse_theorem_id(f.theorem);
  const Variant variant = parse_variant(f.variant);
  LogBase base = LogBase::kBinary;
  if (f.log_base == "e") {
    base = LogBase::kNatural;
  } else if (f.log_base != "2") {
    throw UsageError("--log-base must be 2 or e");
  }
  const double alpha = f.alpha;

  switch (id) {
    case TheoremId::kJensenGap:
      return jensen_gap_bound(input_distribution(f, in, "orbits"), alpha);
    case TheoremId::kOrdering:
      return thm1_renyi_shannon_bounds(input_distribution(f, in, "orbits"), alpha,
                                       Variant::kLiteral, false)[0];
    case TheoremId::kThm1:
    case TheoremId::kCor1:
      return thm1_renyi_shannon_bounds(input_distribution(f, in, "linear"), alpha,
                                       variant,
                                       f.epsilon || id == TheoremId::kCor1)[1];
    case TheoremId::kThm2:
      return thm2_partition_bounds(input_distribution(f, in, "orbits"), alpha,
                                   variant)[1];
    case TheoremId::kThm3: {
      const Graph g = read_graph(in);
      EntropyFlags ef = f.graph_flags;
      if (ef.dist == "orbits" || ef.dist.empty()) ef.dist = "linear";
      const FunctionalValues fv = f.values.empty()
                                      ? functional_values(g, spec_from(ef))
                                      : FunctionalValues::from_values(f.values);
      return thm3_partition_vs_functional(g, vertex_orbits(g), fv, alpha);
    }
    case TheoremId::kThm4:
    case TheoremId::kThm4Corollary:
      if (f.corollary || id == TheoremId::kThm4Corollary) {
        return thm4_corollary(values_or_throw(f.values, "--values"),
                              values_or_throw(f.values2, "--values2"), alpha);
      }
      if (!f.psi) throw UsageError("thm4 requires --psi (or --corollary)");
      if (f.probs.empty() || f.probs2.empty()) {
        throw UsageError("thm4 requires --probs and --probs2");
      }
      return thm4_scaled_dominance(Distribution(f.probs), Distribution(f.probs2),
                                   *f.psi, alpha);
    case TheoremId::kThm5:
      if (!f.phi) throw UsageError("thm5 requires --phi");
      if (f.probs.empty() || f.probs2.empty()) {
        throw UsageError("thm5 requires --probs and --probs2");
      }
      return thm5_additive_dominance(Distribution(f.probs), Distribution(f.probs2),
                                     *f.phi, alpha, variant, base);
    case TheoremId::kThm6:
    case TheoremId::kThm6Symmetric: {
      const FunctionalValues f1 = values_or_throw(f.values, "--values");
      const FunctionalValues f2 = values_or_throw(f.values2, "--values2");
      // Only the vertex count of the graph enters the bound.
      const Graph g(f1.size(), std::span<const Edge>{});
      return thm6_convex_combination(g, f1, f2, f.c1, f.c2, alpha, variant,
                                     f.symmetric || id == TheoremId::kThm6Symmetric,
                                     base);
    }
    case TheoremId::kStarShannonExact:
    case TheoremId::kStarRenyiExact:
    case TheoremId::kStarRenyiBound:
    case TheoremId::kStarFunctionalBound:
    case TheoremId::kPathRenyiExact:
    case TheoremId::kPathFunctionalBound: {
      if (f.cls.empty() || f.n == 0) throw UsageError(f.theorem + " requires --class and --n");
      std::optional<FunctionalValues> fv;
      if (!f.values.empty()) fv = FunctionalValues::from_values(f.values);
      const bool needs_values = id == TheoremId::kStarFunctionalBound ||
                                id == TheoremId::kPathFunctionalBound;
      if (needs_values && !fv) throw UsageError(f.theorem + " requires --values");
      for (const BoundReport& r :
           class_closed_forms(parse_graph_class(f.cls), f.n, alpha, fv)) {
        if (r.theorem == id && (!has_variants(id) || r.variant == variant)) return r;
      }
      throw DomainError(f.theorem + " does not apply to class " + f.cls);
    }
    case TheoremId::kConnectedLinear:
    case TheoremId::kConnectedExponential: {
      const Graph g = read_graph(in);
      EntropyFlags ef = f.graph_flags;
      ef.dist = id == TheoremId::kConnectedLinear ? "linear" : "exp";
      return connected_functional_bounds(g, spec_from(ef), alpha, variant);
    }
  }
  throw DomainError("unsupported theorem");
}

void add_functional_flags(CLI::App* cmd, EntropyFlags& f, bool with_dist) {
  if (with_dist) {
    cmd->add_option("--dist", f.dist, "Distribution: orbits, linear or exp")
        ->check(CLI::IsMember({"orbits", "linear", "exp"}));
  }
  cmd->add_option("--c", f.coeffs, "Comma-separated sphere coefficients c_1..c_eta")
      ->delimiter(',');
  cmd->add_option("--beta", f.beta, "Base of the exponential functional");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph entropy measures and information inequality checks", "graphent"};
  app.require_subcommand(1);

  // gen
  std::string gen_class;
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("class", gen_class, "star, path, cycle, wheel, complete or gnp")
      ->required();
  gen->add_option("n", gen_n, "Number of vertices")->required();
  gen->add_option("--p", gen_p, "Edge probability (gnp)");
  gen->add_option("--seed", gen_seed, "Seed (gnp)");

  // compute
  EntropyFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "Entropies of a graph read from stdin");
  compute->add_option("--alpha", compute_flags.alpha, "Renyi order");
  add_functional_flags(compute, compute_flags, true);

  // check
  CheckFlags cf;
  cf.graph_flags.dist.clear();
  auto* check = app.add_subcommand("check", "Evaluate one theorem instance");
  check->add_option("theorem", cf.theorem, "Theorem id")->required();
  check->add_option("--variant", cf.variant, "literal or corrected")
      ->check(CLI::IsMember({"literal", "corrected"}));
  check->add_option("--alpha", cf.alpha, "Renyi order (default 0.5)");
  check->add_option("--probs", cf.probs, "Distribution p1")->delimiter(',');
  check->add_option("--probs2", cf.probs2, "Distribution p2")->delimiter(',');
  check->add_option("--values", cf.values, "Functional values f1")->delimiter(',');
  check->add_option("--values2", cf.values2, "Functional values f2")->delimiter(',');
  check->add_option("--psi", cf.psi, "Scale in p1 <= psi p2");
  check->add_option("--phi", cf.phi, "Offset in p1 <= p2 + phi");
  check->add_flag("--epsilon", cf.epsilon, "Use the epsilon^2 refinement");
  check->add_flag("--corollary", cf.corollary, "thm4 corollary mode (f1 <= f2)");
  check->add_option("--c1", cf.c1, "Weight of f1 (thm6)");
  check->add_option("--c2", cf.c2, "Weight of f2 (thm6)");
  check->add_flag("--symmetric", cf.symmetric, "Averaged thm6 form");
  check->add_option("--class", cf.cls, "star, wheel or path (closed forms)");
  check->add_option("--n", cf.n, "Vertex count (closed forms)");
  check->add_option("--log-base", cf.log_base, "Log base inside thm5/thm6: 2 or e")
      ->check(CLI::IsMember({"2", "e"}));
  check->add_flag("--strict", cf.strict, "Exit 1 if the bound is violated");
  add_functional_flags(check, cf.graph_flags, true);

  // sweep
  std::string sweep_config;
  std::string sweep_format = "json";
  bool sweep_strict = false;
  bool sweep_runtime = false;
  auto* sweep = app.add_subcommand("sweep", "Run a verification sweep");
  sweep->add_option("--config", sweep_config, "Sweep config JSON file")->required();
  sweep->add_option("--format", sweep_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sweep->add_flag("--strict", sweep_strict, "Exit 1 if any cell is violated");
  sweep->add_flag("--runtime", sweep_runtime, "Include runtime in the output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const GraphClass cls = parse_graph_class(gen_class);
      if (cls == GraphClass::kGnp) {
        write_edge_list(generate_connected_gnp(gen_n, gen_p, gen_seed).graph, out);
      } else {
        write_edge_list(generate_graph(cls, gen_n), out);
      }
      return kExitOk;
    }
    if (compute->parsed()) {
      out << emit_entropy_report(read_graph(in), compute_flags);
      return kExitOk;
    }
    if (check->parsed()) {
      const BoundReport r = run_check(cf, in);
      out << bound_report_json(r);
      return cf.strict && r.violated() ? kExitViolation : kExitOk;
    }
    if (sweep->parsed()) {
      std::ifstream file(sweep_config);
      if (!file) throw UsageError("cannot open config file '" + sweep_config + "'");
      std::stringstream text;
      text << file.rdbuf();
      const SweepReport report = run_sweep(sweep_config_from_json(text.str()));
      out << summarize_report(report, parse_report_format(sweep_format), sweep_runtime);
      bool any_violation = false;
      for (const auto& a : report.aggregates) any_violation |= a.violated > 0;
      return sweep_strict && any_violation ? kExitViolation : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graphent::cli
