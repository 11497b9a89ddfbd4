#pragma once

#include <span>
#include <vector>

#include "aimsyn/attr_set.hpp"

namespace aimsyn {

struct WeightedQuery {
  AttrSet attrs;
  double weight = 1.0;
};

/// A weighted collection of marginal queries. Duplicate attribute sets are
/// permitted; their weights add in downstream computations.
class Workload {
 public:
  Workload() = default;
  explicit Workload(std::vector<WeightedQuery> queries);

  const std::vector<WeightedQuery>& queries() const { return queries_; }
  size_t size() const { return queries_.size(); }
  bool empty() const { return queries_.empty(); }

 private:
  std::vector<WeightedQuery> queries_;
};

/// W_+ = { r : r subseteq s for some s in W }, excluding the empty set,
/// deduplicated and ordered by (size, lexicographic).
std::vector<AttrSet> downward_closure(const Workload& w);

/// w_r = sum_{s in W} c_s * |r intersect s|.
double workload_weight(const Workload& w, const AttrSet& r);

/// Weights for each candidate, aligned with the input order.
std::vector<double> workload_weights(const Workload& w,
                                     std::span<const AttrSet> candidates);

}  // namespace aimsyn
