#include "aimsyn/marginal.hpp"

#include <cmath>
#include <cstdlib>

#include "aimsyn/errors.hpp"

namespace aimsyn {

double Marginal::sum() const {
  double s = 0.0;
  for (double c : counts) s += c;
  return s;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValueError("l1_distance: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

std::vector<size_t> marginal_strides(const AttrSet& r, const Domain& domain) {
  const auto& attrs = r.attrs();
  std::vector<size_t> strides(attrs.size());
  size_t s = 1;
  for (size_t i = attrs.size(); i-- > 0;) {
    strides[i] = s;
    s *= static_cast<size_t>(domain.size(attrs[i]));
  }
  return strides;
}

Marginal marginalize_counts(const Marginal& m, const AttrSet& target,
                            const Domain& domain) {
  if (!target.subset_of(m.attrs)) {
    throw ValueError("marginalize_counts: target is not a subset");
  }
  const auto& attrs = m.attrs.attrs();
  std::vector<size_t> tstride(attrs.size(), 0);
  {
    auto strides = marginal_strides(target, domain);
    for (size_t i = 0, j = 0; i < attrs.size(); ++i) {
      if (j < strides.size() && attrs[i] == target[static_cast<int>(j)]) {
        tstride[i] = strides[j++];
      }
    }
  }
  size_t tcells = 1;
  for (int a : target.attrs()) tcells *= static_cast<size_t>(domain.size(a));

  Marginal out{target, std::vector<double>(tcells, 0.0)};
  std::vector<int> coords(attrs.size(), 0);
  size_t tidx = 0;
  for (double v : m.counts) {
    out.counts[tidx] += v;
    for (size_t j = attrs.size(); j-- > 0;) {
      ++coords[j];
      tidx += tstride[j];
      if (coords[j] < domain.size(attrs[j])) break;
      tidx -= tstride[j] * static_cast<size_t>(domain.size(attrs[j]));
      coords[j] = 0;
    }
  }
  return out;
}

}  // namespace aimsyn
