#pragma once

#include <vector>

namespace sylver {

/// One float64-vs-exact comparison of the weighted power sum (lhs) and the
/// complete homogeneous value (rhs) on the same node set. The doubles are
/// dyadic rationals, so the exact reference is computable. When any float64
/// quantity is non-finite the record is flagged and the error fields are 0.
struct StabilityRecord {
  int n = 0;
  int d = 0;
  double node_spread = 0.0;     // min pairwise distance of the nodes
  double rel_error_lhs = 0.0;
  double rel_error_rhs = 0.0;
  bool overflow = false;

  friend bool operator==(const StabilityRecord&, const StabilityRecord&) = default;
};

StabilityRecord run_stability_trial(const std::vector<double>& nodes, int d);

/// Aggregate view of one (n, d, spread) cell of a stability sweep. Overflowed
/// trials are counted but excluded from the error statistics.
struct StabilitySummary {
  int n = 0;
  int d = 0;
  double spread = 0.0;          // requested spread, not the measured one
  int trials = 0;
  double median_rel_error_lhs = 0.0;
  double max_rel_error_lhs = 0.0;
  double median_rel_error_rhs = 0.0;
  double max_rel_error_rhs = 0.0;
  int overflows = 0;
};

StabilitySummary summarize_stability(const std::vector<StabilityRecord>& records, double spread);

}  // namespace sylver
