#include "aimsyn/domain.hpp"

#include <cmath>

#include "aimsyn/errors.hpp"

namespace aimsyn {

Domain::Domain(std::vector<std::string> names,
               std::vector<std::vector<std::string>> categories)
    : names_(std::move(names)), categories_(std::move(categories)) {
  if (names_.size() != categories_.size()) {
    throw ValueError("domain: one category list required per attribute");
  }
  sizes_.reserve(categories_.size());
  for (size_t i = 0; i < categories_.size(); ++i) {
    if (categories_[i].empty()) {
      throw ValueError("domain: attribute '" + names_[i] +
                       "' has an empty category list");
    }
    sizes_.push_back(static_cast<int>(categories_[i].size()));
  }
}

int Domain::attr_index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

AttrSet Domain::attr_set(const std::vector<std::string>& names) const {
  std::vector<int> idx;
  idx.reserve(names.size());
  for (const auto& n : names) {
    int i = attr_index(n);
    if (i < 0) throw ValueError("unknown attribute '" + n + "'");
    idx.push_back(i);
  }
  return AttrSet(std::move(idx));
}

AttrSet Domain::all_attrs() const {
  std::vector<int> idx(names_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return AttrSet(std::move(idx));
}

double Domain::log_total_cells() const {
  double s = 0.0;
  for (int n : sizes_) s += std::log(static_cast<double>(n));
  return s;
}

double Domain::cell_count(const AttrSet& r) const {
  double c = 1.0;
  for (int a : r.attrs()) {
    if (a >= num_attrs()) throw ValueError("attribute index out of range");
    c *= static_cast<double>(size(a));
  }
  return c;
}

size_t Domain::cell_count_checked(const AttrSet& r, size_t max_cells) const {
  size_t c = 1;
  for (int a : r.attrs()) {
    if (a >= num_attrs()) throw ValueError("attribute index out of range");
    size_t n = static_cast<size_t>(size(a));
    if (c > max_cells / n) {
      throw MemoryCapError("marginal table over " + std::to_string(r.size()) +
                           " attributes exceeds the cell cap");
    }
    c *= n;
  }
  return c;
}

}  // namespace aimsyn
