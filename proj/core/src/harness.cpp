#include "graphent/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "graphent/error.hpp"
#include "graphent/orbits.hpp"
#include "graphent/random.hpp"

namespace graphent {

namespace {

// Stream tags so that different sampling purposes never share a stream.
enum StreamTag : std::uint64_t {
  kTagCorpus = 1,
  kTagCoeffs = 2,
  kTagCoeffsAlt = 3,
  kTagCorollary = 4,
  kTagMix = 5,
};

std::string format_p(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

}  // namespace

bool has_variants(TheoremId id) {
  switch (id) {
    case TheoremId::kThm1:
    case TheoremId::kCor1:
    case TheoremId::kThm2:
    case TheoremId::kThm5:
    case TheoremId::kThm6:
    case TheoremId::kThm6Symmetric:
    case TheoremId::kStarRenyiBound:
    case TheoremId::kConnectedExponential:
      return true;
    default:
      return false;
  }
}

void SweepConfig::validate() const {
  if (n_min < 2) throw ValidationError("n_range lower bound must be >= 2");
  if (n_min > n_max) throw ValidationError("n_range is empty");
  if (n_max > OrbitOptions{}.max_vertices) {
    throw ValidationError("n_range upper bound exceeds the orbit envelope (" +
                          std::to_string(OrbitOptions{}.max_vertices) + ")");
  }
  if (trials_per_cell < 1) throw ValidationError("trials_per_cell must be >= 1");
  for (double p : edge_probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("edge probabilities must lie in [0, 1]");
    }
  }
  for (double a : alpha_grid) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ValidationError("alpha grid values must be positive");
    }
    if (std::abs(a - 1.0) <= kRenyiShannonSwitch) {
      throw ValidationError("alpha grid must exclude 1");
    }
  }
  for (const auto& t : functional_specs) {
    if (!t.use_defaults && (!(t.coeff_lo > 0.0) || !(t.coeff_hi >= t.coeff_lo) ||
                            !std::isfinite(t.coeff_hi))) {
      throw ValidationError("coefficient range must satisfy 0 < lo <= hi");
    }
    if (t.kind == FunctionalKind::kExponential &&
        (!(t.beta > 0.0) || !std::isfinite(t.beta))) {
      throw ValidationError("beta must be positive");
    }
  }
  if (max_redraws < 1) throw ValidationError("max_redraws must be >= 1");
}

const Aggregate* SweepReport::find(TheoremId id, Variant v) const {
  for (const auto& a : aggregates) {
    if (a.theorem == id && a.variant == v) return &a;
  }
  return nullptr;
}

std::vector<CorpusGraph> generate_corpus(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<CorpusGraph> corpus;
  if (cfg.include_battery) {
    constexpr GraphClass kBattery[] = {GraphClass::kStar, GraphClass::kPath,
                                       GraphClass::kCycle, GraphClass::kWheel,
                                       GraphClass::kComplete};
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (GraphClass cls : kBattery) {
        try {
          Graph g = generate_graph(cls, n);
          corpus.push_back({std::string(to_string(cls)) + "_" + std::to_string(n),
                            "battery", cls, std::move(g), 0});
        } catch (const DomainError&) {
          // Class undefined at this n (e.g. a star on 2 vertices).
        }
      }
    }
  }
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (std::size_t pi = 0; pi < cfg.edge_probabilities.size(); ++pi) {
      const double p = cfg.edge_probabilities[pi];
      for (std::size_t t = 0; t < cfg.trials_per_cell; ++t) {
        const std::uint64_t seed = mix_seed(cfg.seed, {kTagCorpus, n, pi, t});
        ConnectedSample s = generate_connected_gnp(n, p, seed, cfg.max_redraws);
        corpus.push_back({"gnp_n" + std::to_string(n) + "_p" + format_p(p) + "_t" +
                              std::to_string(t),
                          "gnp", GraphClass::kGnp, std::move(s.graph), s.redraws});
      }
    }
  }
  return corpus;
}

namespace {

struct Sampled {
  std::string label;
  FunctionalSpec spec;
  FunctionalValues values;
  FunctionalSpec alt_spec;  // second independent draw of the same family
  FunctionalValues alt_values;
  FunctionalValues dominating;  // pointwise >= values
};

std::vector<double> draw_coefficients(const FunctionalTemplate& t, std::size_t eta,
                                      SplitMix64& rng) {
  if (t.use_defaults) return default_coefficients(eta);
  std::vector<double> c(eta);
  for (double& x : c) x = rng.uniform(t.coeff_lo, t.coeff_hi);
  return c;
}

std::string template_label(const FunctionalTemplate& t) {
  if (t.kind == FunctionalKind::kLinear) return "linear";
  return "exp_beta" + format_p(t.beta);
}

FunctionalSpec make_spec(const FunctionalTemplate& t, std::vector<double> c) {
  return t.kind == FunctionalKind::kLinear
             ? FunctionalSpec::linear(std::move(c))
             : FunctionalSpec::exponential(t.beta, std::move(c));
}

Sampled sample_functional(const Graph& g, std::size_t eta,
                          const FunctionalTemplate& t, std::uint64_t seed,
                          std::size_t gi, std::size_t ti) {
  SplitMix64 rng(mix_seed(seed, {kTagCoeffs, gi, ti}));
  SplitMix64 alt_rng(mix_seed(seed, {kTagCoeffsAlt, gi, ti}));
  SplitMix64 dom_rng(mix_seed(seed, {kTagCorollary, gi, ti}));

  std::vector<double> c = draw_coefficients(t, eta, rng);
  std::vector<double> c_alt = draw_coefficients(t, eta, alt_rng);
  if (t.use_defaults) {
    for (double& x : c_alt) x *= alt_rng.uniform(0.5, 2.0);
  }
  // Larger coefficients give larger f unless the base is below 1.
  const bool decreasing = t.kind == FunctionalKind::kExponential && t.beta < 1.0;
  std::vector<double> c_dom = c;
  for (double& x : c_dom) {
    x *= decreasing ? dom_rng.uniform(2.0 / 3.0, 1.0) : dom_rng.uniform(1.0, 1.5);
  }

  FunctionalSpec spec = make_spec(t, c);
  FunctionalSpec alt = make_spec(t, c_alt);
  FunctionalSpec dom = make_spec(t, c_dom);
  FunctionalValues v = functional_values(g, spec);
  FunctionalValues va = functional_values(g, alt);
  FunctionalValues vd = functional_values(g, dom);
  return {template_label(t), std::move(spec), std::move(v), std::move(alt),
          std::move(va), std::move(vd)};
}

std::vector<BoundReport> failed(TheoremId id, Variant variant, double alpha,
                                std::string reason) {
  BoundReport r;
  r.theorem = id;
  r.variant = variant;
  r.alpha = alpha;
  r.precondition_met = false;
  r.note = std::move(reason);
  finalize(r);
  return {r};
}

// Runs one theorem evaluation; exceptions become a not_applicable report.
std::vector<BoundReport> guarded(TheoremId id, Variant variant, double alpha,
                                 const std::function<std::vector<BoundReport>()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return failed(id, variant, alpha, e.what());
  }
}

class CellSink {
 public:
  CellSink(const SweepConfig& cfg, std::string graph_id)
      : cfg_(cfg), graph_id_(std::move(graph_id)) {}

  bool wants(TheoremId id) const {
    if (!cfg_.theorems) return true;
    return std::find(cfg_.theorems->begin(), cfg_.theorems->end(), id) !=
           cfg_.theorems->end();
  }
  bool wants(TheoremId id, Variant v) const {
    if (!wants(id)) return false;
    if (!has_variants(id)) return v == Variant::kLiteral;
    return std::find(cfg_.variants.begin(), cfg_.variants.end(), v) !=
           cfg_.variants.end();
  }
  std::vector<Variant> variants_for(TheoremId id) const {
    std::vector<Variant> out;
    for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
      if (wants(id, v)) out.push_back(v);
    }
    return out;
  }

  void add(const std::string& source, std::vector<BoundReport> reports) {
    for (auto& r : reports) {
      if (!wants(r.theorem, r.variant)) continue;
      cells.push_back({graph_id_, source, std::move(r)});
    }
  }

  std::vector<SweepCell> cells;

 private:
  const SweepConfig& cfg_;
  std::string graph_id_;
};

std::vector<SweepCell> sweep_graph(const SweepConfig& cfg, const CorpusGraph& item,
                                   std::size_t gi) {
  CellSink sink(cfg, item.id);
  const Graph& g = item.graph;
  const std::size_t n = g.num_vertices();

  std::optional<OrbitPartition> part;
  std::optional<Distribution> orbit_dist;
  std::string setup_error;
  std::vector<Sampled> functionals;
  try {
    part = vertex_orbits(g);
    orbit_dist = partition_distribution(*part);
    const DistanceData dist = distance_matrix(g);
    for (std::size_t ti = 0; ti < cfg.functional_specs.size(); ++ti) {
      functionals.push_back(sample_functional(g, dist.diameter(),
                                              cfg.functional_specs[ti], cfg.seed,
                                              gi, ti));
    }
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  for (std::size_t ai = 0; ai < cfg.alpha_grid.size(); ++ai) {
    const double alpha = cfg.alpha_grid[ai];
    if (!setup_error.empty()) {
      for (TheoremId id : kAllTheorems) {
        sink.add("setup", failed(id, Variant::kLiteral, alpha, setup_error));
      }
      continue;
    }

    // Orbit distribution.
    if (sink.wants(TheoremId::kJensenGap)) {
      sink.add("orbits", guarded(TheoremId::kJensenGap, Variant::kLiteral, alpha, [&] {
        return std::vector{jensen_gap_bound(*orbit_dist, alpha)};
      }));
    }
    for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
      // The ordering report rides along with the literal call.
      if (!sink.wants(TheoremId::kThm2, v) &&
          !(v == Variant::kLiteral && sink.wants(TheoremId::kOrdering))) {
        continue;
      }
      auto reports = guarded(TheoremId::kThm2, v, alpha, [&] {
        return thm2_partition_bounds(*orbit_dist, alpha, v);
      });
      if (v == Variant::kCorrected && reports.size() == 2) reports.erase(reports.begin());
      sink.add("orbits", std::move(reports));
    }

    for (std::size_t ti = 0; ti < functionals.size(); ++ti) {
      const Sampled& s = functionals[ti];
      const std::string& src = s.label;
      std::optional<Distribution> d1;
      std::optional<Distribution> d2;
      try {
        d1 = distribution_from_values(s.values);
        d2 = distribution_from_values(s.alt_values);
      } catch (const std::exception& e) {
        sink.add(src, failed(TheoremId::kOrdering, Variant::kLiteral, alpha, e.what()));
        continue;
      }

      if (sink.wants(TheoremId::kJensenGap)) {
        sink.add(src, guarded(TheoremId::kJensenGap, Variant::kLiteral, alpha, [&] {
          return std::vector{jensen_gap_bound(*d1, alpha)};
        }));
      }
      for (bool eps : {false, true}) {
        const TheoremId id = eps ? TheoremId::kCor1 : TheoremId::kThm1;
        for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
          const bool ordering_here = !eps && v == Variant::kLiteral &&
                                     sink.wants(TheoremId::kOrdering);
          if (!sink.wants(id, v) && !ordering_here) continue;
          auto reports = guarded(id, v, alpha, [&] {
            return thm1_renyi_shannon_bounds(*d1, alpha, v, eps);
          });
          if (!ordering_here && reports.size() == 2) reports.erase(reports.begin());
          sink.add(src, std::move(reports));
        }
      }
      if (sink.wants(TheoremId::kThm3)) {
        sink.add(src, guarded(TheoremId::kThm3, Variant::kLiteral, alpha, [&] {
          return std::vector{thm3_partition_vs_functional(g, *part, s.values, alpha)};
        }));
      }
      if (sink.wants(TheoremId::kThm4)) {
        sink.add(src, guarded(TheoremId::kThm4, Variant::kLiteral, alpha, [&] {
          // Smallest psi with p1 <= psi * p2.
          double log_psi = -std::numeric_limits<double>::infinity();
          for (std::size_t v = 0; v < n; ++v) {
            log_psi = std::max(log_psi, std::log((*d1)[v]) - std::log((*d2)[v]));
          }
          return std::vector{thm4_scaled_dominance(*d1, *d2, std::exp(log_psi), alpha)};
        }));
      }
      if (sink.wants(TheoremId::kThm4Corollary)) {
        sink.add(src, guarded(TheoremId::kThm4Corollary, Variant::kLiteral, alpha, [&] {
          return std::vector{thm4_corollary(s.values, s.dominating, alpha)};
        }));
      }
      for (Variant v : sink.variants_for(TheoremId::kThm5)) {
        sink.add(src, guarded(TheoremId::kThm5, v, alpha, [&] {
          double phi = 1e-12;
          for (std::size_t i = 0; i < n; ++i) phi = std::max(phi, (*d1)[i] - (*d2)[i]);
          return std::vector{thm5_additive_dominance(*d1, *d2, phi, alpha, v)};
        }));
      }
      SplitMix64 mix_rng(mix_seed(cfg.seed, {kTagMix, gi, ti, ai}));
      const double c1 = mix_rng.uniform(0.5, 2.0);
      const double c2 = mix_rng.uniform(0.5, 2.0);
      for (bool symmetric : {false, true}) {
        const TheoremId id = symmetric ? TheoremId::kThm6Symmetric : TheoremId::kThm6;
        for (Variant v : sink.variants_for(id)) {
          sink.add(src, guarded(id, v, alpha, [&] {
            return std::vector{thm6_convex_combination(g, s.values, s.alt_values, c1,
                                                       c2, alpha, v, symmetric)};
          }));
        }
      }
      const TheoremId connected_id = s.spec.kind == FunctionalKind::kLinear
                                         ? TheoremId::kConnectedLinear
                                         : TheoremId::kConnectedExponential;
      for (Variant v : sink.variants_for(connected_id)) {
        sink.add(src, guarded(connected_id, v, alpha, [&] {
          return std::vector{connected_functional_bounds(g, s.spec, alpha, v)};
        }));
      }
    }

    const bool closed_form_class =
        item.source == "battery" &&
        (item.cls == GraphClass::kStar || item.cls == GraphClass::kWheel ||
         item.cls == GraphClass::kPath);
    if (closed_form_class) {
      const TheoremId exact_id = item.cls == GraphClass::kPath
                                     ? TheoremId::kPathRenyiExact
                                     : TheoremId::kStarRenyiExact;
      sink.add("orbits", guarded(exact_id, Variant::kLiteral, alpha, [&] {
        return class_closed_forms(*item.cls, n, alpha);
      }));
      const TheoremId fn_id = item.cls == GraphClass::kPath
                                  ? TheoremId::kPathFunctionalBound
                                  : TheoremId::kStarFunctionalBound;
      for (const Sampled& s : functionals) {
        auto reports = guarded(fn_id, Variant::kLiteral, alpha, [&] {
          return class_closed_forms(*item.cls, n, alpha, s.values);
        });
        std::erase_if(reports, [&](const BoundReport& r) { return r.theorem != fn_id; });
        sink.add(s.label, std::move(reports));
      }
    }
  }
  return std::move(sink.cells);
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const std::vector<CorpusGraph> corpus = generate_corpus(cfg);

  // Each graph owns a result slot, so scheduling never changes the order.
  std::vector<std::vector<SweepCell>> per_graph(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t gi = next++; gi < corpus.size(); gi = next++) {
      per_graph[gi] = sweep_graph(cfg, corpus[gi], gi);
    }
  };
  std::size_t threads = cfg.threads != 0 ? cfg.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(corpus.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  SweepReport report;
  report.config = cfg;
  report.corpus_size = corpus.size();
  for (const auto& item : corpus) report.total_redraws += item.redraws;

  struct Accum {
    Aggregate agg;
    double slack_sum = 0.0;
    std::size_t applicable = 0;
    std::size_t exemplars = 0;
  };
  std::vector<Accum> accums;
  for (TheoremId id : kAllTheorems) {
    for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
      Accum a;
      a.agg.theorem = id;
      a.agg.variant = v;
      accums.push_back(a);
    }
  }
  auto slot = [&](const BoundReport& r) -> Accum& {
    const auto pos = std::find(std::begin(kAllTheorems), std::end(kAllTheorems), r.theorem) -
                     std::begin(kAllTheorems);
    return accums[2 * static_cast<std::size_t>(pos) + (r.variant == Variant::kCorrected)];
  };

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    for (SweepCell& cell : per_graph[gi]) {
      const BoundReport& r = cell.report;
      Accum& a = slot(r);
      ++a.agg.checked;
      switch (r.verdict) {
        case Verdict::kHolds: ++a.agg.held; break;
        case Verdict::kViolated: ++a.agg.violated; break;
        case Verdict::kNotApplicable: ++a.agg.not_applicable; break;
      }
      if (r.verdict != Verdict::kNotApplicable) {
        ++a.applicable;
        a.slack_sum += r.slack;
        a.agg.min_slack = std::min(a.agg.min_slack.value_or(r.slack), r.slack);
      }
      if (r.verdict == Verdict::kViolated && a.exemplars < cfg.max_exemplars) {
        ++a.exemplars;
        report.exemplars.push_back(
            {cell.graph_id, cell.source, to_edge_list(corpus[gi].graph), r});
      }
      if (cfg.include_cells) report.cells.push_back(std::move(cell));
    }
    per_graph[gi].clear();
    per_graph[gi].shrink_to_fit();
  }
  for (Accum& a : accums) {
    if (a.agg.checked == 0) continue;
    if (a.applicable > 0) a.agg.mean_slack = a.slack_sum / static_cast<double>(a.applicable);
    report.aggregates.push_back(a.agg);
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace graphent
