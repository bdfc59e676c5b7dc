#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent::cli {

struct EntropyFlags {
  std::optional<double> alpha;
  std::string dist = "orbits";  // orbits | linear | exp
  std::vector<double> coeffs;   // empty: defaults
  std::optional<double> beta;
};

// JSON {n, distribution_kind, alpha, shannon, renyi, rho, epsilon,
// orbit_sizes?, functional_params?}, numbers rounded to 12 significant
// digits. Throws UsageError for incompatible flags.
std::string emit_entropy_report(const Graph& g, const EntropyFlags& flags);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. args excludes the program name. Graph input for
// compute/check is read from `in` as an edge list.
int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace graphent::cli
