#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/inequalities.hpp"
#include "graphent/measures.hpp"

namespace graphent {

// A functional family to sample per corpus graph: c_j drawn uniformly from
// [coeff_lo, coeff_hi], or the default c_j = eta - j + 1 when use_defaults.
struct FunctionalTemplate {
  FunctionalKind kind = FunctionalKind::kLinear;
  double coeff_lo = 0.5;
  double coeff_hi = 2.0;
  bool use_defaults = false;
  double beta = 2.0;  // exponential only
};

inline const std::vector<double> kDefaultAlphaGrid = {0.25, 0.5, 0.75, 0.9,
                                                      1.1,  1.5, 2.0,  3.0};

struct SweepConfig {
  std::uint64_t seed = 42;
  std::size_t n_min = 3;
  std::size_t n_max = 8;
  std::vector<double> edge_probabilities = {0.3, 0.5, 0.8};
  std::size_t trials_per_cell = 4;
  std::vector<double> alpha_grid = kDefaultAlphaGrid;
  std::vector<FunctionalTemplate> functional_specs = {
      {FunctionalKind::kLinear, 0.5, 2.0, false, 1.0},
      {FunctionalKind::kExponential, 0.5, 2.0, false, 0.5},
      {FunctionalKind::kExponential, 0.5, 2.0, false, 2.0},
  };
  std::vector<Variant> variants = {Variant::kLiteral, Variant::kCorrected};
  // nullopt selects every theorem; an empty list selects none.
  std::optional<std::vector<TheoremId>> theorems;
  bool include_battery = true;
  std::size_t max_redraws = 10000;
  // Violation exemplars kept per theorem/variant aggregate.
  std::size_t max_exemplars = 5;
  // When false the report carries aggregates and exemplars only.
  bool include_cells = true;
  // 0 = hardware concurrency. Never changes the report contents.
  std::size_t threads = 0;

  // Throws ValidationError.
  void validate() const;
};

// Throws ValidationError (or ParseError for malformed JSON). Missing keys
// keep their defaults; unknown keys are rejected.
SweepConfig sweep_config_from_json(std::string_view text);
std::string sweep_config_to_json(const SweepConfig& cfg);

struct CorpusGraph {
  std::string id;
  std::string source;  // "battery" or "gnp"
  std::optional<GraphClass> cls;
  Graph graph;
  std::size_t redraws = 0;
};

// Battery (star, path, cycle, wheel, complete for each valid n) followed by
// connected G(n, p) samples. Deterministic in cfg.seed.
std::vector<CorpusGraph> generate_corpus(const SweepConfig& cfg);

struct SweepCell {
  std::string graph_id;
  std::string source;  // which distribution or functional produced the cell
  BoundReport report;
};

struct Aggregate {
  TheoremId theorem = TheoremId::kOrdering;
  Variant variant = Variant::kLiteral;
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  // Over applicable cells only; nullopt when there are none.
  std::optional<double> min_slack;
  std::optional<double> mean_slack;
};

struct Exemplar {
  std::string graph_id;
  std::string source;
  std::string edge_list;
  BoundReport report;
};

struct SweepReport {
  SweepConfig config;
  std::size_t corpus_size = 0;
  std::size_t total_redraws = 0;
  std::vector<SweepCell> cells;
  std::vector<Aggregate> aggregates;
  std::vector<Exemplar> exemplars;
  double runtime_seconds = 0.0;

  const Aggregate* find(TheoremId id, Variant v) const;
};

SweepReport run_sweep(const SweepConfig& cfg);

// True for theorems reported in both literal and corrected form.
bool has_variants(TheoremId id);

enum class ReportFormat { kJson, kCsv, kText };

ReportFormat parse_report_format(std::string_view name);

// JSON omits runtime unless include_runtime; that default is the canonical,
// byte-reproducible form.
std::string summarize_report(const SweepReport& r, ReportFormat format,
                             bool include_runtime = false);

// Single report as a JSON object (used by the CLI's check command).
std::string bound_report_json(const BoundReport& r, int indent = 2);

}  // namespace graphent
