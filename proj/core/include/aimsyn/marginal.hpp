#pragma once

#include <span>
#include <vector>

#include "aimsyn/attr_set.hpp"
#include "aimsyn/domain.hpp"

namespace aimsyn {

/// Contingency-table counts over an attribute subset, stored row-major with
/// the last listed attribute varying fastest. Exact marginals hold
/// non-negative integers summing to N; noisy marginals are real-valued.
struct Marginal {
  AttrSet attrs;
  std::vector<double> counts;

  double sum() const;
};

double l1_distance(std::span<const double> a, std::span<const double> b);

/// Row-major strides of the cells of Omega_r (last attribute fastest).
std::vector<size_t> marginal_strides(const AttrSet& r, const Domain& domain);

/// Sum a marginal over r down to a subset `target` of r.
Marginal marginalize_counts(const Marginal& m, const AttrSet& target,
                            const Domain& domain);

}  // namespace aimsyn
