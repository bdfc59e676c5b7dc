#include "graphent/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "graphent/error.hpp"

namespace graphent {

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::kJensenGap, "jensen_gap"},
    {TheoremId::kOrdering, "ordering"},
    {TheoremId::kThm1, "thm1"},
    {TheoremId::kCor1, "cor1"},
    {TheoremId::kThm2, "thm2"},
    {TheoremId::kThm3, "thm3"},
    {TheoremId::kThm4, "thm4"},
    {TheoremId::kThm4Corollary, "thm4_corollary"},
    {TheoremId::kThm5, "thm5"},
    {TheoremId::kThm6, "thm6"},
    {TheoremId::kThm6Symmetric, "thm6_symmetric"},
    {TheoremId::kStarShannonExact, "star_shannon_exact"},
    {TheoremId::kStarRenyiExact, "star_renyi_exact"},
    {TheoremId::kStarRenyiBound, "star_renyi_bound"},
    {TheoremId::kStarFunctionalBound, "star_functional_bound"},
    {TheoremId::kPathRenyiExact, "path_renyi_exact"},
    {TheoremId::kPathFunctionalBound, "path_functional_bound"},
    {TheoremId::kConnectedLinear, "connected_linear"},
    {TheoremId::kConnectedExponential, "connected_exponential"},
};

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a positive real");
  }
  if (std::abs(alpha - 1.0) <= kRenyiShannonSwitch) {
    throw DomainError("alpha = 1 is the Shannon limit; bounds need alpha != 1");
  }
}

void require_same_size(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": size mismatch (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// log2 of sum_i p_i^alpha, in log space.
double log2_power_sum(const Distribution& d, double alpha) {
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double p : d.probabilities()) terms.push_back(alpha * std::log(p));
  return log_sum_exp(terms) / kLn2;
}

double log_add_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

BoundReport make(TheoremId id, Variant variant, double alpha) {
  BoundReport r;
  r.theorem = id;
  r.variant = variant;
  r.alpha = alpha;
  return r;
}

// Relative slack for p1 <= scale * p2 style checks on probabilities.
constexpr double kDominanceTolerance = 1e-12;

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& t : kTheoremNames) {
    if (t.id == id) return t.name;
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& t : kTheoremNames) {
    if (t.name == name) return t.id;
  }
  throw DomainError("unknown theorem '" + std::string(name) + "'");
}

std::string_view to_string(Variant v) {
  return v == Variant::kLiteral ? "literal" : "corrected";
}

Variant parse_variant(std::string_view name) {
  if (name == "literal") return Variant::kLiteral;
  if (name == "corrected") return Variant::kCorrected;
  throw DomainError("unknown variant '" + std::string(name) + "'");
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kUpper: return "upper";
    case Direction::kLower: return "lower";
    case Direction::kTwoSided: return "two_sided";
    case Direction::kExact: return "exact";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

void finalize(BoundReport& r) {
  switch (r.direction) {
    case Direction::kUpper:
      r.slack = r.bound - r.lhs;
      break;
    case Direction::kLower:
      r.slack = r.lhs - r.bound;
      break;
    case Direction::kTwoSided:
      r.slack = std::min(r.bound - r.lhs, r.lhs - r.lower_bound.value_or(r.bound));
      break;
    case Direction::kExact:
      r.slack = -std::abs(r.lhs - r.bound);
      break;
  }
  if (std::isnan(r.slack)) {
    r.slack = 0.0;
    r.precondition_met = false;
    if (r.note.empty()) r.note = "bound is not a finite number";
  } else if (std::isinf(r.slack)) {
    // Keep the sign but stay representable in JSON.
    r.slack = std::copysign(std::numeric_limits<double>::max(), r.slack);
  }
  if (!r.precondition_met) {
    r.verdict = Verdict::kNotApplicable;
    return;
  }
  const double tol =
      r.direction == Direction::kExact ? kExactTolerance : kBoundTolerance;
  r.verdict = r.slack >= -tol ? Verdict::kHolds : Verdict::kViolated;
}

BoundReport jensen_gap_bound(const Distribution& d, double alpha) {
  require_alpha(alpha);
  const double h = shannon_entropy(d);
  const double h_alpha = renyi_entropy(d, alpha);

  // (x_i - x_k)^2 / (x_i x_k) = 4 sinh^2(t/2), t = ln x_i - ln x_k.
  const auto p = d.probabilities();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (i == k) continue;
      const double t = (alpha - 1.0) * (std::log(p[i]) - std::log(p[k]));
      const double s = std::sinh(0.5 * t);
      sum += p[i] * p[k] * 4.0 * s * s;
    }
  }
  const double gap_bound = sum / (2.0 * kLn2 * std::abs(1.0 - alpha));

  BoundReport r = make(TheoremId::kJensenGap, Variant::kLiteral, alpha);
  r.lhs = h_alpha - h;
  if (alpha < 1.0) {
    r.direction = Direction::kUpper;
    r.bound = gap_bound;
  } else {
    r.direction = Direction::kLower;
    r.bound = -gap_bound;
  }
  r.params = {{"H", h}, {"H_alpha", h_alpha}, {"pair_sum", sum},
              {"N", static_cast<double>(d.size())}};
  finalize(r);
  return r;
}

std::vector<BoundReport> thm1_renyi_shannon_bounds(const Distribution& d,
                                                   double alpha, Variant variant,
                                                   bool use_epsilon) {
  require_alpha(alpha);
  const double h = shannon_entropy(d);
  const double h_alpha = renyi_entropy(d, alpha);
  const DistributionStats stats = distribution_stats(d);
  const auto n = static_cast<double>(d.size());

  BoundReport order = make(TheoremId::kOrdering, Variant::kLiteral, alpha);
  order.lhs = h_alpha;
  order.bound = h;
  order.direction = alpha < 1.0 ? Direction::kLower : Direction::kUpper;
  order.params = {{"H", h}, {"N", n}};
  finalize(order);

  // Literal: rho^(a-2) multiplied for a < 1, divided for a > 1 (so the
  // factor is rho^(2-a)). Corrected: rho^|a-2| multiplied in both regimes.
  double exponent = 0.0;
  if (variant == Variant::kCorrected) {
    exponent = std::abs(alpha - 2.0);
  } else {
    exponent = alpha < 1.0 ? alpha - 2.0 : 2.0 - alpha;
  }
  const double rho_factor = std::exp(exponent * std::log(stats.rho));
  // The epsilon^2 multiplier appears only below alpha = 1 as printed.
  const bool apply_epsilon =
      use_epsilon && (variant == Variant::kCorrected || alpha < 1.0);
  const double eps_factor = apply_epsilon ? stats.epsilon * stats.epsilon : 1.0;
  const double penalty = std::abs(1.0 - alpha) * n * (n - 1.0) * eps_factor *
                         rho_factor / (2.0 * kLn2);

  BoundReport refined =
      make(use_epsilon ? TheoremId::kCor1 : TheoremId::kThm1, variant, alpha);
  refined.lhs = h_alpha;
  if (alpha < 1.0) {
    refined.direction = Direction::kUpper;
    refined.bound = h + penalty;
  } else {
    refined.direction = Direction::kLower;
    refined.bound = h - penalty;
  }
  refined.params = {{"H", h},
                    {"N", n},
                    {"rho", stats.rho},
                    {"epsilon", stats.epsilon},
                    {"rho_factor", rho_factor},
                    {"penalty", penalty}};
  finalize(refined);
  return {order, refined};
}

std::vector<BoundReport> thm2_partition_bounds(const Distribution& partition,
                                               double alpha, Variant variant) {
  auto reports = thm1_renyi_shannon_bounds(partition, alpha, variant, false);
  reports[1].theorem = TheoremId::kThm2;
  reports[1].params["k"] = reports[1].params["N"];
  reports[1].params.erase("N");
  return reports;
}

BoundReport thm3_partition_vs_functional(const Graph& g,
                                         const OrbitPartition& part,
                                         const FunctionalValues& fv,
                                         double alpha) {
  require_alpha(alpha);
  const std::size_t n = g.num_vertices();
  require_same_size(part.total(), n, "thm3 partition");
  require_same_size(fv.size(), n, "thm3 functional");
  if (!is_connected(g)) throw DomainError("thm3 requires a connected graph");

  const Distribution d_part = partition_distribution(part);
  const Distribution d_fun = distribution_from_values(fv);
  const double h_part = renyi_entropy(d_part, alpha);
  const double h_fun = renyi_entropy(d_fun, alpha);
  const double log2_ratio =
      (fv.total_log() - std::log(static_cast<double>(n))) / kLn2;

  std::vector<std::size_t> sizes = part.block_sizes();
  std::sort(sizes.begin(), sizes.end());
  std::vector<double> logs(fv.log_values().begin(), fv.log_values().end());
  std::sort(logs.begin(), logs.end());
  bool dominated = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!(std::log(static_cast<double>(sizes[i])) < logs[i])) {
      dominated = false;
      break;
    }
  }

  BoundReport r = make(TheoremId::kThm3, Variant::kLiteral, alpha);
  r.lhs = h_part;
  r.precondition_met = dominated;
  if (alpha < 1.0) {
    r.direction = Direction::kUpper;
    r.bound = h_fun + alpha / (1.0 - alpha) * log2_ratio;
  } else {
    r.direction = Direction::kLower;
    r.bound = h_fun - alpha / (alpha - 1.0) * log2_ratio;
  }
  r.params = {{"H_alpha_f", h_fun},
              {"log2_S", fv.total_log() / kLn2},
              {"X", static_cast<double>(n)},
              {"k", static_cast<double>(part.num_blocks())}};
  if (!dominated) r.note = "block sizes not dominated by functional values";
  finalize(r);
  return r;
}

namespace {

BoundReport scaled_dominance(TheoremId id, const Distribution& d1,
                             const Distribution& d2, double log_psi,
                             double alpha) {
  const double h1 = renyi_entropy(d1, alpha);
  const double h2 = renyi_entropy(d2, alpha);
  const double log2_psi = log_psi / kLn2;

  bool dominated = true;
  for (std::size_t v = 0; v < d1.size(); ++v) {
    if (std::log(d1[v]) > log_psi + std::log(d2[v]) + kDominanceTolerance) {
      dominated = false;
      break;
    }
  }

  BoundReport r = make(id, Variant::kLiteral, alpha);
  r.lhs = h1;
  r.precondition_met = dominated;
  if (alpha < 1.0) {
    r.direction = Direction::kUpper;
    r.bound = h2 + alpha / (1.0 - alpha) * log2_psi;
  } else {
    r.direction = Direction::kLower;
    r.bound = h2 - alpha / (alpha - 1.0) * log2_psi;
  }
  r.params = {{"psi", std::exp(log_psi)}, {"H_alpha_2", h2},
              {"N", static_cast<double>(d1.size())}};
  if (!dominated) r.note = "p1 <= psi * p2 fails for some vertex";
  finalize(r);
  return r;
}

}  // namespace

BoundReport thm4_scaled_dominance(const Distribution& d1,
                                  const Distribution& d2, double psi,
                                  double alpha,
                                  std::optional<FunctionalSums> derive_psi_from) {
  require_alpha(alpha);
  require_same_size(d1.size(), d2.size(), "thm4");
  TheoremId id = TheoremId::kThm4;
  if (derive_psi_from) {
    if (!(derive_psi_from->s1 > 0.0) || !(derive_psi_from->s2 > 0.0)) {
      throw DomainError("functional sums must be positive");
    }
    psi = derive_psi_from->s2 / derive_psi_from->s1;
    id = TheoremId::kThm4Corollary;
  }
  if (!(psi > 0.0) || !std::isfinite(psi)) throw DomainError("psi must be > 0");
  BoundReport r = scaled_dominance(id, d1, d2, std::log(psi), alpha);
  if (derive_psi_from) {
    r.params["S1"] = derive_psi_from->s1;
    r.params["S2"] = derive_psi_from->s2;
  }
  return r;
}

BoundReport thm4_corollary(const FunctionalValues& f1,
                           const FunctionalValues& f2, double alpha) {
  require_alpha(alpha);
  require_same_size(f1.size(), f2.size(), "thm4 corollary");
  const double log_psi = f2.total_log() - f1.total_log();
  BoundReport r = scaled_dominance(TheoremId::kThm4Corollary,
                                   distribution_from_values(f1),
                                   distribution_from_values(f2), log_psi, alpha);
  bool pointwise = true;
  for (std::size_t v = 0; v < f1.size(); ++v) {
    if (f1.log_values()[v] > f2.log_values()[v] + kDominanceTolerance) {
      pointwise = false;
      break;
    }
  }
  // f1 <= f2 is the corollary's hypothesis; it implies p1 <= psi p2.
  r.precondition_met = pointwise;
  r.note = pointwise ? std::string{} : "f1 <= f2 fails for some vertex";
  r.params["log2_S1"] = f1.total_log() / kLn2;
  r.params["log2_S2"] = f2.total_log() / kLn2;
  finalize(r);
  return r;
}

BoundReport thm5_additive_dominance(const Distribution& d1,
                                    const Distribution& d2, double phi,
                                    double alpha, Variant variant,
                                    LogBase base) {
  require_alpha(alpha);
  require_same_size(d1.size(), d2.size(), "thm5");
  if (!(phi > 0.0) || !std::isfinite(phi)) throw DomainError("phi must be > 0");

  // Entropies in the chosen unit; ln_base converts natural logs.
  const double ln_base = base == LogBase::kBinary ? kLn2 : 1.0;
  const double unit = kLn2 / ln_base;
  const double h1 = renyi_entropy(d1, alpha) * unit;
  const double h2 = renyi_entropy(d2, alpha) * unit;
  const double correction = variant == Variant::kCorrected ? 1.0 / ln_base : 1.0;
  const auto n = static_cast<double>(d1.size());
  const double power_sum2 = std::exp(log2_power_sum(d2, alpha) * kLn2);

  bool dominated = true;
  for (std::size_t v = 0; v < d1.size(); ++v) {
    if (d1[v] > d2[v] + phi + kDominanceTolerance) {
      dominated = false;
      break;
    }
  }

  BoundReport r = make(TheoremId::kThm5, variant, alpha);
  r.lhs = h1;
  r.precondition_met = dominated;
  double penalty = 0.0;
  if (alpha < 1.0) {
    const double x = n * std::pow(phi, alpha) / power_sum2;
    penalty = correction * x / (1.0 - alpha);
    r.direction = Direction::kUpper;
    r.bound = h2 + penalty;
  } else {
    const double y = std::pow(n, 1.0 / alpha) * phi / std::pow(power_sum2, 1.0 / alpha);
    penalty = correction * alpha / (alpha - 1.0) * y;
    r.direction = Direction::kLower;
    r.bound = h2 - penalty;
  }
  r.params = {{"phi", phi},
              {"N", n},
              {"power_sum_2", power_sum2},
              {"H_alpha_2", h2},
              {"penalty", penalty},
              {"log_base", base == LogBase::kBinary ? 2.0 : std::numbers::e}};
  if (!dominated) r.note = "p1 <= p2 + phi fails for some vertex";
  finalize(r);
  return r;
}

BoundReport thm6_convex_combination(const Graph& g, const FunctionalValues& f1,
                                    const FunctionalValues& f2, double c1,
                                    double c2, double alpha, Variant variant,
                                    bool symmetric, LogBase base) {
  require_alpha(alpha);
  require_same_size(f1.size(), g.num_vertices(), "thm6 f1");
  require_same_size(f2.size(), g.num_vertices(), "thm6 f2");
  if (!(c1 > 0.0) || !(c2 > 0.0) || !std::isfinite(c1) || !std::isfinite(c2)) {
    throw DomainError("thm6 requires c1 > 0 and c2 > 0");
  }

  const double log_c1s1 = std::log(c1) + f1.total_log();
  const double log_c2s2 = std::log(c2) + f2.total_log();
  const double log_s = log_add_exp(log_c1s1, log_c2s2);
  const double log_a1 = log_c1s1 - log_s;
  const double log_a2 = log_c2s2 - log_s;

  std::vector<double> combined(f1.size());
  for (std::size_t v = 0; v < combined.size(); ++v) {
    combined[v] = log_add_exp(std::log(c1) + f1.log_values()[v],
                              std::log(c2) + f2.log_values()[v]);
  }
  const Distribution d = distribution_from_values(
      FunctionalValues::from_log_values(std::move(combined)));
  const Distribution d1 = distribution_from_values(f1);
  const Distribution d2 = distribution_from_values(f2);

  const double ln_base = base == LogBase::kBinary ? kLn2 : 1.0;
  const double unit = kLn2 / ln_base;
  const double h = renyi_entropy(d, alpha) * unit;
  const double h1 = renyi_entropy(d1, alpha) * unit;
  const double h2 = renyi_entropy(d2, alpha) * unit;
  // Natural logs of the power sums P_t = sum_v p_t(v)^alpha.
  const double log_p1 = log2_power_sum(d1, alpha) * kLn2;
  const double log_p2 = log2_power_sum(d2, alpha) * kLn2;
  const double correction = variant == Variant::kCorrected ? 1.0 / ln_base : 1.0;

  // z = (A2/A1)^a P2/P1 (a < 1); w = (A2/A1) (P2/P1)^(1/a) (a > 1).
  const double log_z = alpha * (log_a2 - log_a1) + (log_p2 - log_p1);
  const double log_w = (log_a2 - log_a1) + (log_p2 - log_p1) / alpha;

  BoundReport r = make(symmetric ? TheoremId::kThm6Symmetric : TheoremId::kThm6,
                       variant, alpha);
  r.lhs = h;
  if (!symmetric) {
    const double log_a1_base = log_a1 / ln_base;
    if (alpha < 1.0) {
      r.direction = Direction::kUpper;
      r.bound = h1 + alpha / (1.0 - alpha) * log_a1_base +
                correction * std::exp(log_z) / (1.0 - alpha);
    } else {
      r.direction = Direction::kLower;
      r.bound = h1 - alpha / (alpha - 1.0) * log_a1_base -
                correction * alpha / (alpha - 1.0) * std::exp(log_w);
    }
  } else {
    const double log_a1a2_base = (log_a1 + log_a2) / ln_base;
    if (alpha < 1.0) {
      r.direction = Direction::kUpper;
      r.bound = 0.5 * (h1 + h2) + alpha / (2.0 * (1.0 - alpha)) * log_a1a2_base +
                correction / (2.0 * (1.0 - alpha)) *
                    (std::exp(log_z) + std::exp(-log_z));
    } else {
      r.direction = Direction::kLower;
      r.bound = 0.5 * (h1 + h2) - alpha / (2.0 * (alpha - 1.0)) * log_a1a2_base -
                correction * alpha / (2.0 * (alpha - 1.0)) *
                    (std::exp(log_w) + std::exp(-log_w));
    }
  }
  r.params = {{"c1", c1},
              {"c2", c2},
              {"A1", std::exp(log_a1)},
              {"A2", std::exp(log_a2)},
              {"log2_S1", f1.total_log() / kLn2},
              {"log2_S2", f2.total_log() / kLn2},
              {"H_alpha_1", h1},
              {"H_alpha_2", h2},
              {"log_base", base == LogBase::kBinary ? 2.0 : std::numbers::e}};
  finalize(r);
  return r;
}

namespace {

std::size_t count_above(const FunctionalValues& fv, double threshold) {
  const double log_t = std::log(threshold);
  return static_cast<std::size_t>(
      std::count_if(fv.log_values().begin(), fv.log_values().end(),
                    [&](double x) { return x > log_t; }));
}

void star_like_reports(GraphClass cls, std::size_t n, double alpha,
                       const OrbitPartition& part,
                       const std::optional<FunctionalValues>& fv,
                       std::vector<BoundReport>& out) {
  const double nd = static_cast<double>(n);
  const std::vector<std::size_t> sizes = part.block_sizes();
  const bool two_orbits =
      sizes.size() == 2 && sizes[0] == 1 && sizes[1] == n - 1;
  const std::string shape_note =
      two_orbits ? std::string{}
                 : std::string(to_string(cls)) + " on " + std::to_string(n) +
                       " vertices does not have orbit sizes {1, n-1}";

  const Distribution d = partition_distribution(part);
  const double h = shannon_entropy(d);
  const double h_alpha = renyi_entropy(d, alpha);
  const double closed_h = std::log2(nd) - (nd - 1.0) / nd * std::log2(nd - 1.0);
  const double log2_one_plus = std::log2(1.0 + std::pow(nd - 1.0, alpha));
  const double closed_h_alpha =
      (log2_one_plus - alpha * std::log2(nd)) / (1.0 - alpha);

  auto base_report = [&](TheoremId id, Variant variant) {
    BoundReport r = make(id, variant, alpha);
    r.precondition_met = two_orbits;
    r.note = shape_note;
    r.params = {{"n", nd}};
    return r;
  };

  BoundReport shannon = base_report(TheoremId::kStarShannonExact, Variant::kLiteral);
  shannon.lhs = h;
  shannon.bound = closed_h;
  shannon.direction = Direction::kExact;
  finalize(shannon);
  out.push_back(shannon);

  BoundReport renyi = base_report(TheoremId::kStarRenyiExact, Variant::kLiteral);
  renyi.lhs = h_alpha;
  renyi.bound = closed_h_alpha;
  renyi.direction = Direction::kExact;
  finalize(renyi);
  out.push_back(renyi);

  // Two orbits: k(k-1)/2 = 1 and rho = n - 1.
  for (Variant variant : {Variant::kLiteral, Variant::kCorrected}) {
    double exponent = variant == Variant::kCorrected
                          ? std::abs(alpha - 2.0)
                          : (alpha < 1.0 ? alpha - 2.0 : 2.0 - alpha);
    const double factor = std::pow(nd - 1.0, exponent);
    BoundReport b = base_report(TheoremId::kStarRenyiBound, variant);
    b.lhs = h_alpha;
    if (alpha < 1.0) {
      b.direction = Direction::kUpper;
      b.bound = closed_h + (1.0 - alpha) * factor / kLn2;
    } else {
      b.direction = Direction::kLower;
      b.bound = closed_h - (alpha - 1.0) * factor / kLn2;
    }
    b.params["rho"] = nd - 1.0;
    finalize(b);
    out.push_back(b);
  }

  if (!fv) return;
  const double h_f = renyi_entropy(distribution_from_values(*fv), alpha);
  const double log2_s = fv->total_log() / kLn2;
  BoundReport f = base_report(TheoremId::kStarFunctionalBound, Variant::kLiteral);
  f.lhs = h_f;
  const bool hypothesis = count_above(*fv, nd - 1.0) >= 1 && count_above(*fv, 1.0) >= 2;
  f.precondition_met = two_orbits && hypothesis;
  if (two_orbits && !hypothesis) {
    f.note = "needs distinct vertices with f > 1 and f > n-1";
  }
  if (alpha < 1.0) {
    f.direction = Direction::kLower;
    f.bound = log2_one_plus / (1.0 - alpha) - alpha / (1.0 - alpha) * log2_s;
  } else {
    f.direction = Direction::kUpper;
    f.bound = log2_one_plus / (1.0 - alpha) + alpha / (alpha - 1.0) * log2_s;
  }
  f.params["log2_S"] = log2_s;
  finalize(f);
  out.push_back(f);
}

void path_reports(std::size_t n, double alpha, const OrbitPartition& part,
                  const std::optional<FunctionalValues>& fv,
                  std::vector<BoundReport>& out) {
  const double nd = static_cast<double>(n);
  const bool even = n % 2 == 0;
  const double h_alpha = renyi_entropy(partition_distribution(part), alpha);

  BoundReport exact = make(TheoremId::kPathRenyiExact, Variant::kLiteral, alpha);
  exact.lhs = h_alpha;
  exact.direction = Direction::kExact;
  if (even) {
    exact.bound = std::log2(nd / 2.0);
  } else {
    // (n-1)/2 pairs plus the center vertex.
    const double pairs = (nd - 1.0) / 2.0;
    exact.bound = std::log2(pairs * std::pow(2.0 / nd, alpha) +
                            std::pow(1.0 / nd, alpha)) /
                  (1.0 - alpha);
    exact.note = "odd n: direct sum over (n-1)/2 pairs and the center";
  }
  exact.params = {{"n", nd}};
  finalize(exact);
  out.push_back(exact);

  if (!fv) return;
  const double h_f = renyi_entropy(distribution_from_values(*fv), alpha);
  const double log2_s = fv->total_log() / kLn2;
  BoundReport f = make(TheoremId::kPathFunctionalBound, Variant::kLiteral, alpha);
  f.lhs = h_f;
  f.params = {{"n", nd}, {"log2_S", log2_s}};
  if (even) {
    f.precondition_met = count_above(*fv, 2.0) >= n / 2;
    if (alpha < 1.0) {
      f.direction = Direction::kLower;
      f.bound = std::log2(nd) / (1.0 - alpha) - alpha / (1.0 - alpha) * log2_s - 1.0;
    } else {
      f.direction = Direction::kUpper;
      f.bound = std::log2(nd) / (1.0 - alpha) + alpha / (alpha - 1.0) * log2_s - 1.0;
    }
  } else {
    f.precondition_met =
        count_above(*fv, 2.0) >= (n - 1) / 2 && count_above(*fv, 1.0) >= (n + 1) / 2;
    const double log2_ratio = log2_s - std::log2(nd);
    if (alpha < 1.0) {
      f.direction = Direction::kLower;
      f.bound = h_alpha - alpha / (1.0 - alpha) * log2_ratio;
    } else {
      f.direction = Direction::kUpper;
      f.bound = h_alpha + alpha / (alpha - 1.0) * log2_ratio;
    }
    f.note = "odd n: bound built from the direct orbit entropy";
  }
  if (!f.precondition_met && f.note.empty()) {
    f.note = "needs f(v) > 2 on at least n/2 vertices";
  }
  finalize(f);
  out.push_back(f);
}

}  // namespace

std::vector<BoundReport> class_closed_forms(
    GraphClass cls, std::size_t n, double alpha,
    const std::optional<FunctionalValues>& fv) {
  require_alpha(alpha);
  if (cls != GraphClass::kStar && cls != GraphClass::kWheel &&
      cls != GraphClass::kPath) {
    throw DomainError("closed forms exist for star, wheel and path only");
  }
  if (cls == GraphClass::kPath && n < 2) {
    throw DomainError("path closed forms require n >= 2");
  }
  const Graph g = generate_graph(cls, n);
  if (fv) require_same_size(fv->size(), n, "class functional");
  const OrbitPartition part = vertex_orbits(g);

  std::vector<BoundReport> out;
  if (cls == GraphClass::kPath) {
    path_reports(n, alpha, part, fv, out);
  } else {
    star_like_reports(cls, n, alpha, part, fv, out);
  }
  return out;
}

BoundReport connected_functional_bounds(const Graph& g,
                                        const FunctionalSpec& spec,
                                        double alpha, Variant variant) {
  require_alpha(alpha);
  const DistanceData dist = distance_matrix(g);
  if (g.num_vertices() == 0 || !dist.connected()) {
    throw DomainError("connected-graph bounds require a connected graph");
  }
  FunctionalSpec resolved = spec;
  resolved.coeffs = resolve_coefficients(spec, dist.diameter());
  const FunctionalValues fv = functional_values(g, resolved);
  const double h = renyi_entropy(distribution_from_values(fv), alpha);

  const double nd = static_cast<double>(g.num_vertices());
  const auto [cmin_it, cmax_it] =
      std::minmax_element(resolved.coeffs.begin(), resolved.coeffs.end());
  const double cmin = *cmin_it;
  const double cmax = *cmax_it;
  const double scale = alpha / std::abs(1.0 - alpha);

  BoundReport r;
  r.alpha = alpha;
  r.variant = variant;
  r.direction = Direction::kTwoSided;
  r.lhs = h;
  double half_width = 0.0;
  if (resolved.kind == FunctionalKind::kLinear) {
    r.theorem = TheoremId::kConnectedLinear;
    half_width = scale * std::log2(cmax / cmin);
    r.params = {{"c_max", cmax}, {"c_min", cmin}, {"n", nd}};
  } else {
    r.theorem = TheoremId::kConnectedExponential;
    const double spread = cmax - cmin;
    double log2_beta = std::log2(resolved.beta);
    if (variant == Variant::kCorrected) {
      log2_beta = std::abs(log2_beta);
    } else if (resolved.beta < 1.0) {
      r.precondition_met = false;
      r.note = "printed form assumes beta >= 1";
    }
    half_width = scale * (nd - 1.0) * spread * log2_beta;
    r.params = {{"c_max", cmax}, {"c_min", cmin}, {"X", spread},
                {"beta", resolved.beta}, {"n", nd}};
  }
  r.bound = std::log2(nd) + half_width;
  r.lower_bound = std::log2(nd) - half_width;
  finalize(r);
  return r;
}

}  // namespace graphent
