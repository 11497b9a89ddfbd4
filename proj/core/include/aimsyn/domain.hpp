#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aimsyn/attr_set.hpp"

namespace aimsyn {

/// Discrete data domain: ordered attributes, each with a finite ordered
/// category list. Immutable after construction.
class Domain {
 public:
  Domain() = default;
  Domain(std::vector<std::string> names,
         std::vector<std::vector<std::string>> categories);

  int num_attrs() const { return static_cast<int>(names_.size()); }
  const std::string& name(int attr) const { return names_[static_cast<size_t>(attr)]; }
  const std::vector<std::string>& names() const { return names_; }
  int size(int attr) const { return sizes_[static_cast<size_t>(attr)]; }
  const std::vector<std::string>& categories(int attr) const {
    return categories_[static_cast<size_t>(attr)];
  }

  /// Index of a named attribute, or -1.
  int attr_index(std::string_view name) const;
  AttrSet attr_set(const std::vector<std::string>& names) const;
  AttrSet all_attrs() const;

  /// log(n) = sum_i log(n_i); the full domain size can overflow integers.
  double log_total_cells() const;

  /// Number of cells of the marginal table over r, as a real (may be huge).
  double cell_count(const AttrSet& r) const;

  /// Same, as an allocatable size; throws MemoryCapError beyond `max_cells`.
  size_t cell_count_checked(const AttrSet& r, size_t max_cells) const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::string>> categories_;
};

}  // namespace aimsyn
