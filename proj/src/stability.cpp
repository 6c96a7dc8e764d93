#include "sylver/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sylver/convert.hpp"
#include "sylver/nodes.hpp"
#include "sylver/reports.hpp"
#include "sylver/symmetric.hpp"
#include "sylver/weighted_sums.hpp"

namespace sylver {

StabilityRecord run_stability_trial(const std::vector<double>& nodes, int d) {
  const int n = static_cast<int>(nodes.size());
  if (n < 2) throw std::invalid_argument("run_stability_trial: need at least two nodes");
  if (d < n - 1) throw std::invalid_argument("run_stability_trial: require d >= n - 1");

  StabilityRecord rec;
  rec.n = n;
  rec.d = d;
  double spread = std::abs(nodes[1] - nodes[0]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) spread = std::min(spread, std::abs(nodes[i] - nodes[j]));
  rec.node_spread = spread;

  const NodeSet<double> fns(nodes);
  const double lhs = weighted_power_sum(fns, d);
  const double rhs = h_fast(d - n + 1, fns.nodes());

  std::vector<Rational> exact_nodes;
  exact_nodes.reserve(nodes.size());
  for (double x : nodes) exact_nodes.push_back(rational_from_double(x));
  const NodeSet<Rational> ens(exact_nodes);
  const double exact = double_from_rational(h_fast(d - n + 1, ens.nodes()));

  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(exact)) {
    rec.overflow = true;
    return rec;
  }
  rec.rel_error_lhs = relative_error_of(lhs, exact);
  rec.rel_error_rhs = relative_error_of(rhs, exact);
  return rec;
}

namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

StabilitySummary summarize_stability(const std::vector<StabilityRecord>& records, double spread) {
  if (records.empty()) throw std::invalid_argument("summarize_stability: no records");
  StabilitySummary s;
  s.n = records.front().n;
  s.d = records.front().d;
  s.spread = spread;
  s.trials = static_cast<int>(records.size());
  std::vector<double> lhs, rhs;
  for (const StabilityRecord& r : records) {
    if (r.overflow) {
      ++s.overflows;
      continue;
    }
    lhs.push_back(r.rel_error_lhs);
    rhs.push_back(r.rel_error_rhs);
  }
  s.median_rel_error_lhs = median_of(lhs);
  s.median_rel_error_rhs = median_of(rhs);
  for (double e : lhs) s.max_rel_error_lhs = std::max(s.max_rel_error_lhs, e);
  for (double e : rhs) s.max_rel_error_rhs = std::max(s.max_rel_error_rhs, e);
  return s;
}

}  // namespace sylver
