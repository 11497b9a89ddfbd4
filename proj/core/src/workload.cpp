#include "aimsyn/workload.hpp"

#include <algorithm>
#include <cmath>

#include "aimsyn/errors.hpp"

namespace aimsyn {

Workload::Workload(std::vector<WeightedQuery> queries)
    : queries_(std::move(queries)) {
  for (const auto& q : queries_) {
    if (q.attrs.empty()) {
      throw ValueError("workload queries must be non-empty attribute sets");
    }
    if (!(q.weight >= 0.0) || !std::isfinite(q.weight)) {
      throw ValueError("workload weights must be non-negative and finite");
    }
  }
}

std::vector<AttrSet> downward_closure(const Workload& w) {
  std::vector<AttrSet> out;
  for (const auto& q : w.queries()) {
    for (auto& s : subsets_of(q.attrs)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const AttrSet& x, const AttrSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double workload_weight(const Workload& w, const AttrSet& r) {
  double weight = 0.0;
  for (const auto& q : w.queries()) {
    weight += q.weight * r.intersect(q.attrs).size();
  }
  return weight;
}

std::vector<double> workload_weights(const Workload& w,
                                     std::span<const AttrSet> candidates) {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (const auto& r : candidates) out.push_back(workload_weight(w, r));
  return out;
}

}  // namespace aimsyn
