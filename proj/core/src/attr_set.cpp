#include "aimsyn/attr_set.hpp"

#include <algorithm>

#include "aimsyn/errors.hpp"

namespace aimsyn {

AttrSet::AttrSet(std::initializer_list<int> attrs)
    : AttrSet(std::vector<int>(attrs)) {}

AttrSet::AttrSet(std::vector<int> attrs) : attrs_(std::move(attrs)) {
  std::sort(attrs_.begin(), attrs_.end());
  attrs_.erase(std::unique(attrs_.begin(), attrs_.end()), attrs_.end());
  if (!attrs_.empty() && attrs_.front() < 0) {
    throw ValueError("attribute indices must be non-negative");
  }
}

bool AttrSet::contains(int attr) const {
  return std::binary_search(attrs_.begin(), attrs_.end(), attr);
}

bool AttrSet::subset_of(const AttrSet& other) const {
  return std::includes(other.attrs_.begin(), other.attrs_.end(),
                       attrs_.begin(), attrs_.end());
}

AttrSet AttrSet::intersect(const AttrSet& other) const {
  std::vector<int> out;
  std::set_intersection(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                        other.attrs_.end(), std::back_inserter(out));
  AttrSet r;
  r.attrs_ = std::move(out);
  return r;
}

AttrSet AttrSet::unite(const AttrSet& other) const {
  std::vector<int> out;
  std::set_union(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                 other.attrs_.end(), std::back_inserter(out));
  AttrSet r;
  r.attrs_ = std::move(out);
  return r;
}

AttrSet AttrSet::subtract(const AttrSet& other) const {
  std::vector<int> out;
  std::set_difference(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                      other.attrs_.end(), std::back_inserter(out));
  AttrSet r;
  r.attrs_ = std::move(out);
  return r;
}

std::vector<AttrSet> subsets_of(const AttrSet& attrs) {
  const auto& a = attrs.attrs();
  const size_t n = a.size();
  std::vector<AttrSet> out;
  if (n >= 64) throw ValueError("subset enumeration limited to <64 attributes");
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (uint64_t{1} << i)) sub.push_back(a[i]);
    }
    out.push_back(AttrSet(std::move(sub)));
  }
  std::sort(out.begin(), out.end(), [](const AttrSet& x, const AttrSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace aimsyn
