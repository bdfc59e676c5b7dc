#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/orbits.hpp"

namespace graphent {

// Probability vector with strictly positive atoms summing to 1 (within 1e-12).
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws ValidationError on empty input, non-positive atoms or a bad sum.
  explicit Distribution(std::vector<double> p);

  std::span<const double> probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

struct DistributionStats {
  double rho = 1.0;      // max_{i,k} p_i / p_k
  double epsilon = 0.0;  // max_{i,k} p_i - p_k
};

enum class FunctionalKind { kLinear, kExponential };

std::string_view to_string(FunctionalKind kind);

// Coefficients c_1..c_eta for the j-sphere functionals. An empty coefficient
// vector means "use default_coefficients(eta)" at evaluation time.
struct FunctionalSpec {
  FunctionalKind kind = FunctionalKind::kLinear;
  std::vector<double> coeffs;
  double beta = 1.0;  // exponential only

  static FunctionalSpec linear(std::vector<double> coeffs = {});
  static FunctionalSpec exponential(double beta, std::vector<double> coeffs = {});
};

// c_j = eta - j + 1, i.e. (eta, eta-1, ..., 1).
std::vector<double> default_coefficients(std::size_t eta);

// Returns spec.coeffs, or the defaults when empty; validates length and sign.
std::vector<double> resolve_coefficients(const FunctionalSpec& spec,
                                         std::size_t eta);

// Per-vertex functional values f(v) > 0, held in natural-log space so that
// exponential functionals never overflow. Linear-space values are kept when
// every value is representable.
class FunctionalValues {
 public:
  // exp() of anything above this is treated as unsafe for linear rendering.
  static constexpr double kMaxLinearLog = 700.0;

  static FunctionalValues from_values(std::vector<double> values);
  static FunctionalValues from_log_values(std::vector<double> log_values);

  std::size_t size() const noexcept { return log_values_.size(); }
  std::span<const double> log_values() const noexcept { return log_values_; }
  // Linear-space values when safe.
  const std::optional<std::vector<double>>& values() const noexcept {
    return values_;
  }
  // ln S where S = sum_v f(v).
  double total_log() const noexcept { return total_log_; }

 private:
  FunctionalValues() = default;

  std::vector<double> log_values_;
  std::optional<std::vector<double>> values_;
  double total_log_ = 0.0;
};

// p_i = |X_i| / n in block order.
Distribution partition_distribution(const OrbitPartition& part);

// f(v) = sum_j c_j |S_j(v)|. Throws DomainError if g is disconnected or the
// coefficient count differs from the diameter.
FunctionalValues linear_functional_values(const Graph& g,
                                          const FunctionalSpec& spec);
// f(v) = beta^(sum_j c_j |S_j(v)|), computed as exponent * ln(beta).
FunctionalValues exponential_functional_values(const Graph& g,
                                               const FunctionalSpec& spec);
// Dispatches on spec.kind.
FunctionalValues functional_values(const Graph& g, const FunctionalSpec& spec);

// p(v) = f(v) / S via log-sum-exp.
Distribution distribution_from_values(const FunctionalValues& fv);

// Base-2 entropies.
double shannon_entropy(const Distribution& d);
// Switches to shannon_entropy for |alpha - 1| <= 1e-9. alpha <= 0 throws.
double renyi_entropy(const Distribution& d, double alpha);

inline constexpr double kRenyiShannonSwitch = 1e-9;

DistributionStats distribution_stats(const Distribution& d);

// log(sum exp(x_i)) computed stably; -inf for empty input.
double log_sum_exp(std::span<const double> xs);

}  // namespace graphent
