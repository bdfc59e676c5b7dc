#include <algorithm>
#include <cmath>
#include <numbers>

#include "graphent/error.hpp"
#include "graphent/inequalities.hpp"
#include "graphent/random.hpp"

namespace graphent {

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kL1: return "L1";
    case LemmaId::kL2: return "L2";
    case LemmaId::kL3: return "L3";
  }
  return "unknown";
}

LemmaCheck check_lemma1(double x, double y, double r) {
  if (!(x > 0.0) || !(y > 0.0) || x == y) {
    throw DomainError("lemma 1 needs distinct positive x and y");
  }
  if (r == 0.0 || r == 1.0 || !std::isfinite(r)) {
    throw DomainError("lemma 1 needs r outside {0, 1}");
  }
  const double lo_side = r * std::pow(y, r - 1.0) * (x - y);
  const double mid = std::pow(x, r) - std::pow(y, r);
  const double hi_side = r * std::pow(x, r - 1.0) * (x - y);
  const bool convex = r < 0.0 || r > 1.0;
  const double lo = convex ? lo_side : hi_side;
  const double hi = convex ? hi_side : lo_side;

  LemmaCheck c;
  c.lemma = LemmaId::kL1;
  c.inputs = {x, y, r};
  c.margin = std::min(mid - lo, hi - mid);
  c.satisfied = lo < mid && mid < hi;
  return c;
}

LemmaCheck check_lemma2(const std::vector<std::vector<double>>& vectors, double r) {
  if (vectors.empty()) throw DomainError("lemma 2 needs at least one vector");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("lemma 2 needs r > 0");
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != len) throw DomainError("lemma 2 vectors differ in length");
    for (double x : v) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("lemma 2 entries must be non-negative");
      }
    }
  }
  const double outer = r <= 1.0 ? 1.0 : 1.0 / r;

  double lhs_inner = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    double column = 0.0;
    for (const auto& v : vectors) column += v[i];
    lhs_inner += std::pow(column, r);
  }
  const double lhs = std::pow(lhs_inner, outer);
  double rhs = 0.0;
  for (const auto& v : vectors) {
    double inner = 0.0;
    for (double x : v) inner += std::pow(x, r);
    rhs += std::pow(inner, outer);
  }

  LemmaCheck c;
  c.lemma = LemmaId::kL2;
  c.inputs.push_back(r);
  for (const auto& v : vectors) c.inputs.insert(c.inputs.end(), v.begin(), v.end());
  c.margin = rhs - lhs;
  c.satisfied = lhs <= rhs + 1e-12 * std::max(1.0, rhs);
  return c;
}

LemmaCheck check_lemma3(const std::vector<double>& p, const std::vector<double>& x) {
  if (p.empty() || p.size() != x.size()) {
    throw DomainError("lemma 3 needs equal-length, non-empty p and x");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0) || !(x[i] > 0.0) || !std::isfinite(x[i])) {
      throw DomainError("lemma 3 needs p >= 0 and x > 0");
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > Distribution::kSumTolerance) {
    throw DomainError("lemma 3 weights must sum to 1");
  }

  double mean = 0.0;
  double mean_log = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mean += p[i] * x[i];
    mean_log += p[i] * std::log2(x[i]);
  }
  const double gap = std::log2(mean) - mean_log;
  double pairs = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double d = x[i] - x[k];
      pairs += p[k] * p[i] * d * d / (x[k] * x[i]);
    }
  }
  const double bound = pairs / (2.0 * std::numbers::ln2);
  const double tol = 1e-12 * std::max(1.0, bound);

  LemmaCheck c;
  c.lemma = LemmaId::kL3;
  c.inputs = p;
  c.inputs.insert(c.inputs.end(), x.begin(), x.end());
  c.margin = std::min(gap, bound - gap);
  c.satisfied = gap >= -tol && gap <= bound + tol;
  return c;
}

namespace {

double sample_r_lemma1(SplitMix64& rng) {
  switch (rng.below(3)) {
    case 0: return rng.uniform(-3.0, -0.05);
    case 1: return rng.uniform(0.05, 0.95);
    default: return rng.uniform(1.05, 4.0);
  }
}

}  // namespace

std::vector<LemmaCheck> lemma_checks(std::uint64_t seed, std::size_t trials) {
  std::vector<LemmaCheck> out;
  out.reserve(3 * trials);
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(mix_seed(seed, {t}));

    // Keep x and y at least 5% apart so the strict chain is resolvable.
    const double x = rng.uniform(0.1, 10.0);
    double y = rng.uniform(0.1, 10.0);
    if (std::abs(x - y) < 0.05 * std::max(x, y)) y = x < 5.0 ? x * 1.5 : x / 1.5;
    out.push_back(check_lemma1(x, y, sample_r_lemma1(rng)));

    const std::size_t m = 2 + rng.below(3);
    const std::size_t len = 1 + rng.below(6);
    std::vector<std::vector<double>> vectors(m, std::vector<double>(len));
    for (auto& v : vectors) {
      for (double& e : v) e = rng.below(5) == 0 ? 0.0 : rng.uniform(0.0, 5.0);
    }
    out.push_back(check_lemma2(vectors, rng.uniform(0.05, 4.0)));

    const std::size_t k = 1 + rng.below(8);
    std::vector<double> p(k);
    std::vector<double> xs(k);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = rng.uniform(0.01, 1.0);
      sum += p[i];
      xs[i] = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
    }
    for (double& w : p) w /= sum;
    out.push_back(check_lemma3(p, xs));
  }
  return out;
}

}  // namespace graphent
