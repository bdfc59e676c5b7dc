#include "graphent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphent/error.hpp"

namespace graphent {

Distribution::Distribution(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw ValidationError("distribution needs at least one atom");
  double sum = 0.0;
  for (double x : p_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ValidationError("distribution atoms must be finite and > 0");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("distribution sums to " + std::to_string(sum) +
                          ", expected 1");
  }
}

std::string_view to_string(FunctionalKind kind) {
  return kind == FunctionalKind::kLinear ? "linear" : "exponential";
}

FunctionalSpec FunctionalSpec::linear(std::vector<double> coeffs) {
  return {FunctionalKind::kLinear, std::move(coeffs), 1.0};
}

FunctionalSpec FunctionalSpec::exponential(double beta,
                                           std::vector<double> coeffs) {
  return {FunctionalKind::kExponential, std::move(coeffs), beta};
}

std::vector<double> default_coefficients(std::size_t eta) {
  std::vector<double> c(eta);
  for (std::size_t j = 0; j < eta; ++j) c[j] = static_cast<double>(eta - j);
  return c;
}

std::vector<double> resolve_coefficients(const FunctionalSpec& spec,
                                         std::size_t eta) {
  std::vector<double> c =
      spec.coeffs.empty() ? default_coefficients(eta) : spec.coeffs;
  if (c.size() != eta) {
    throw DomainError("expected " + std::to_string(eta) +
                      " coefficients (one per sphere radius), got " +
                      std::to_string(c.size()));
  }
  for (double x : c) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError("functional coefficients must be positive");
    }
  }
  return c;
}

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

FunctionalValues FunctionalValues::from_values(std::vector<double> values) {
  if (values.empty()) throw ValidationError("functional needs at least one vertex");
  FunctionalValues fv;
  fv.log_values_.reserve(values.size());
  double sum = 0.0;
  for (double x : values) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ValidationError("functional values must be finite and > 0");
    }
    fv.log_values_.push_back(std::log(x));
    sum += x;
  }
  fv.total_log_ = std::isfinite(sum) ? std::log(sum) : log_sum_exp(fv.log_values_);
  fv.values_ = std::move(values);
  return fv;
}

FunctionalValues FunctionalValues::from_log_values(std::vector<double> log_values) {
  if (log_values.empty()) {
    throw ValidationError("functional needs at least one vertex");
  }
  for (double x : log_values) {
    if (!std::isfinite(x)) throw ValidationError("log functional values must be finite");
  }
  FunctionalValues fv;
  fv.total_log_ = log_sum_exp(log_values);
  if (*std::max_element(log_values.begin(), log_values.end()) < kMaxLinearLog) {
    std::vector<double> lin;
    lin.reserve(log_values.size());
    for (double x : log_values) lin.push_back(std::exp(x));
    fv.values_ = std::move(lin);
  }
  fv.log_values_ = std::move(log_values);
  return fv;
}

Distribution partition_distribution(const OrbitPartition& part) {
  if (part.num_blocks() == 0) throw ValidationError("empty partition");
  const auto n = static_cast<double>(part.total());
  std::vector<double> p;
  p.reserve(part.num_blocks());
  for (const auto& block : part.blocks()) {
    p.push_back(static_cast<double>(block.size()) / n);
  }
  return Distribution(std::move(p));
}

namespace {

// Per-vertex weighted sphere sums sum_j c_j |S_j(v)|.
std::vector<double> sphere_exponents(const Graph& g, const FunctionalSpec& spec) {
  if (g.num_vertices() == 0) throw DomainError("functional on an empty graph");
  const DistanceData d = distance_matrix(g);
  if (!d.connected()) {
    throw DomainError("j-sphere functionals require a connected graph");
  }
  const std::vector<double> c = resolve_coefficients(spec, d.diameter());
  std::vector<double> out(g.num_vertices(), 0.0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const SphereProfile prof = j_sphere_profile(g, d, v);
    for (std::size_t j = 0; j < prof.counts.size(); ++j) {
      out[v] += c[j] * static_cast<double>(prof.counts[j]);
    }
  }
  return out;
}

}  // namespace

FunctionalValues linear_functional_values(const Graph& g,
                                          const FunctionalSpec& spec) {
  if (spec.kind != FunctionalKind::kLinear) {
    throw DomainError("expected a linear functional spec");
  }
  if (g.num_vertices() == 1) {
    // No spheres at all: f would be the empty sum, which is not positive.
    throw DomainError("linear j-sphere functional needs at least two vertices");
  }
  std::vector<double> values = sphere_exponents(g, spec);
  return FunctionalValues::from_values(std::move(values));
}

FunctionalValues exponential_functional_values(const Graph& g,
                                               const FunctionalSpec& spec) {
  if (spec.kind != FunctionalKind::kExponential) {
    throw DomainError("expected an exponential functional spec");
  }
  if (!(spec.beta > 0.0) || !std::isfinite(spec.beta)) {
    throw DomainError("exponential functional requires beta > 0");
  }
  std::vector<double> logs = sphere_exponents(g, spec);
  const double ln_beta = std::log(spec.beta);
  for (double& x : logs) x *= ln_beta;
  return FunctionalValues::from_log_values(std::move(logs));
}

FunctionalValues functional_values(const Graph& g, const FunctionalSpec& spec) {
  return spec.kind == FunctionalKind::kLinear
             ? linear_functional_values(g, spec)
             : exponential_functional_values(g, spec);
}

Distribution distribution_from_values(const FunctionalValues& fv) {
  // Shift by the max first so large log values keep full relative precision.
  const auto logs = fv.log_values();
  const double m = *std::max_element(logs.begin(), logs.end());
  std::vector<double> shifted;
  shifted.reserve(logs.size());
  for (double x : logs) shifted.push_back(x - m);
  const double total = log_sum_exp(shifted);
  std::vector<double> p;
  p.reserve(fv.size());
  for (double x : shifted) p.push_back(std::exp(x - total));
  return Distribution(std::move(p));
}

double shannon_entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probabilities()) h -= p * std::log2(p);
  return std::max(h, 0.0);
}

double renyi_entropy(const Distribution& d, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Renyi order alpha must be positive");
  }
  if (std::abs(alpha - 1.0) <= kRenyiShannonSwitch) return shannon_entropy(d);
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double p : d.probabilities()) terms.push_back(alpha * std::log(p));
  const double log2_power_sum = log_sum_exp(terms) / std::numbers::ln2;
  return log2_power_sum / (1.0 - alpha);
}

DistributionStats distribution_stats(const Distribution& d) {
  const auto [lo, hi] = std::minmax_element(d.probabilities().begin(),
                                            d.probabilities().end());
  return {*hi / *lo, *hi - *lo};
}

}  // namespace graphent
