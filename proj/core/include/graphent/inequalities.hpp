#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/measures.hpp"
#include "graphent/orbits.hpp"

namespace graphent {

// Every checkable statement. Stars and wheels share the star_* ids.
enum class TheoremId {
  kJensenGap,            // sound intermediate step of the Renyi/Shannon bound
  kOrdering,             // H_a >= H for a < 1, H_a <= H for a > 1
  kThm1,                 // Renyi vs Shannon, vertex distribution
  kCor1,                 // same with the epsilon^2 factor
  kThm2,                 // Renyi vs Shannon, partition distribution
  kThm3,                 // partition vs functional Renyi entropy
  kThm4,                 // scaled dominance p1 <= psi * p2
  kThm4Corollary,        // f1 <= f2, psi = S2 / S1
  kThm5,                 // additive dominance p1 <= p2 + phi
  kThm6,                 // convex combination c1 f1 + c2 f2
  kThm6Symmetric,        // averaged form of kThm6
  kStarShannonExact,     // H(S_n) closed form
  kStarRenyiExact,       // H_a(S_n) closed form
  kStarRenyiBound,       // H_a(S_n) vs H(S_n)
  kStarFunctionalBound,  // H_{a,f}(S_n) explicit bound
  kPathRenyiExact,       // H_a(P_n) = log2(n/2) (even n)
  kPathFunctionalBound,  // H_{a,f}(P_n) explicit bound
  kConnectedLinear,      // two-sided bound for the linear j-sphere functional
  kConnectedExponential, // two-sided bound for the exponential functional
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kJensenGap,          TheoremId::kOrdering,
    TheoremId::kThm1,               TheoremId::kCor1,
    TheoremId::kThm2,               TheoremId::kThm3,
    TheoremId::kThm4,               TheoremId::kThm4Corollary,
    TheoremId::kThm5,               TheoremId::kThm6,
    TheoremId::kThm6Symmetric,      TheoremId::kStarShannonExact,
    TheoremId::kStarRenyiExact,     TheoremId::kStarRenyiBound,
    TheoremId::kStarFunctionalBound, TheoremId::kPathRenyiExact,
    TheoremId::kPathFunctionalBound, TheoremId::kConnectedLinear,
    TheoremId::kConnectedExponential,
};

std::string_view to_string(TheoremId id);
// Throws DomainError for unknown names.
TheoremId parse_theorem_id(std::string_view name);

// literal: the bound exactly as printed. corrected: the bound with its
// derivation repaired (rho^|a-2| multiplied, 1/ln 2 on log2(1+x) <= x steps,
// |log2 beta|). Statements that need no repair are reported as literal.
enum class Variant { kLiteral, kCorrected };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

// kUpper: lhs <= bound. kLower: lhs >= bound. kTwoSided: lower_bound <= lhs
// <= bound. kExact: lhs == bound (closed-form identities).
enum class Direction { kUpper, kLower, kTwoSided, kExact };

std::string_view to_string(Direction d);

enum class Verdict { kHolds, kViolated, kNotApplicable };

std::string_view to_string(Verdict v);

// Base of the logarithms inside the Thm 5/6 bounds. kNatural evaluates both
// sides in nats, under which the printed forms need no 1/ln 2 repair.
enum class LogBase { kBinary, kNatural };

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kExactTolerance = 1e-12;

// One evaluated theorem instance.
struct BoundReport {
  TheoremId theorem = TheoremId::kOrdering;
  Variant variant = Variant::kLiteral;
  double alpha = 0.0;
  double lhs = 0.0;    // the entropy (or entropy gap) being bounded
  double bound = 0.0;  // upper end for kTwoSided
  std::optional<double> lower_bound;  // kTwoSided only
  Direction direction = Direction::kUpper;
  bool precondition_met = true;
  Verdict verdict = Verdict::kNotApplicable;
  // Signed distance to the bound; negative means the bound is crossed.
  double slack = 0.0;
  std::map<std::string, double> params;
  std::string note;

  bool holds() const noexcept { return verdict == Verdict::kHolds; }
  bool violated() const noexcept { return verdict == Verdict::kViolated; }
};

// Fills verdict and slack from lhs/bound/direction/precondition_met.
void finalize(BoundReport& r);

enum class LemmaId { kL1, kL2, kL3 };

std::string_view to_string(LemmaId id);

struct LemmaCheck {
  LemmaId lemma = LemmaId::kL1;
  std::vector<double> inputs;
  bool satisfied = false;
  // Smallest gap in the checked chain; >= 0 when satisfied.
  double margin = 0.0;
};

// r y^(r-1)(x-y) < x^r - y^r < r x^(r-1)(x-y) for r < 0 or r > 1, reversed
// for 0 < r < 1. Requires x, y > 0, x != y, r not in {0, 1}.
LemmaCheck check_lemma1(double x, double y, double r);
// (sum_i (sum_t v_t[i])^r)^R <= sum_t (sum_i v_t[i]^r)^R, R = 1 for r <= 1,
// else 1/r. Entries must be non-negative, r > 0.
LemmaCheck check_lemma2(const std::vector<std::vector<double>>& vectors, double r);
// 0 <= log2(sum p x) - sum p log2 x <= (1/(2 ln 2)) sum_{k,i} p_k p_i
// (x_i - x_k)^2 / (x_k x_i).
LemmaCheck check_lemma3(const std::vector<double>& p, const std::vector<double>& x);

// `trials` seeded samples of each lemma, in L1, L2, L3 order per trial.
std::vector<LemmaCheck> lemma_checks(std::uint64_t seed, std::size_t trials);

// lhs = H_a - H, checked against the Jensen-gap term
// (1/(2 ln2 |1-a|)) sum_{i,k} p_i p_k (x_i - x_k)^2 / (x_i x_k), x = p^(a-1):
// upper bound for a < 1, lower bound (negated) for a > 1.
BoundReport jensen_gap_bound(const Distribution& d, double alpha);

// Returns {ordering report, refined bound report}. The refined report is
// kCor1 when use_epsilon is set, kThm1 otherwise.
std::vector<BoundReport> thm1_renyi_shannon_bounds(const Distribution& d,
                                                   double alpha, Variant variant,
                                                   bool use_epsilon);
// The same bounds for a partition distribution (size plays the role of k).
std::vector<BoundReport> thm2_partition_bounds(const Distribution& partition,
                                               double alpha, Variant variant);

// Precondition: ascending block sizes are pointwise strictly below the k
// smallest functional values.
BoundReport thm3_partition_vs_functional(const Graph& g,
                                         const OrbitPartition& part,
                                         const FunctionalValues& fv,
                                         double alpha);

// Linear-space functional sums for corollary mode (psi := s2 / s1).
struct FunctionalSums {
  double s1 = 1.0;
  double s2 = 1.0;
};

BoundReport thm4_scaled_dominance(
    const Distribution& d1, const Distribution& d2, double psi, double alpha,
    std::optional<FunctionalSums> derive_psi_from = std::nullopt);
// Corollary mode straight from functional values: precondition f1 <= f2,
// psi = S2 / S1 computed in log space.
BoundReport thm4_corollary(const FunctionalValues& f1,
                           const FunctionalValues& f2, double alpha);

BoundReport thm5_additive_dominance(const Distribution& d1,
                                    const Distribution& d2, double phi,
                                    double alpha, Variant variant,
                                    LogBase base = LogBase::kBinary);

BoundReport thm6_convex_combination(const Graph& g, const FunctionalValues& f1,
                                    const FunctionalValues& f2, double c1,
                                    double c2, double alpha, Variant variant,
                                    bool symmetric,
                                    LogBase base = LogBase::kBinary);

// Closed forms and explicit bounds for stars, wheels (n >= 5) and paths.
// With fv, also the functional bounds for that class.
std::vector<BoundReport> class_closed_forms(
    GraphClass cls, std::size_t n, double alpha,
    const std::optional<FunctionalValues>& fv = std::nullopt);

// Two-sided explicit bound for the linear or exponential j-sphere functional.
BoundReport connected_functional_bounds(const Graph& g,
                                        const FunctionalSpec& spec,
                                        double alpha, Variant variant);

}  // namespace graphent
