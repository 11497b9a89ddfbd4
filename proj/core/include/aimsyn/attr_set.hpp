#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace aimsyn {

/// A set of attribute indices kept in canonical (strictly increasing) order.
class AttrSet {
 public:
  AttrSet() = default;
  AttrSet(std::initializer_list<int> attrs);
  explicit AttrSet(std::vector<int> attrs);

  const std::vector<int>& attrs() const { return attrs_; }
  int size() const { return static_cast<int>(attrs_.size()); }
  bool empty() const { return attrs_.empty(); }
  int operator[](int i) const { return attrs_[static_cast<size_t>(i)]; }

  bool contains(int attr) const;
  bool subset_of(const AttrSet& other) const;
  AttrSet intersect(const AttrSet& other) const;
  AttrSet unite(const AttrSet& other) const;
  AttrSet subtract(const AttrSet& other) const;

  bool operator==(const AttrSet&) const = default;
  auto operator<=>(const AttrSet&) const = default;

 private:
  std::vector<int> attrs_;
};

/// All non-empty subsets of `attrs`, in (size, lexicographic) order.
std::vector<AttrSet> subsets_of(const AttrSet& attrs);

struct AttrSetHash {
  size_t operator()(const AttrSet& s) const {
    size_t h = 1469598103934665603ull;
    for (int a : s.attrs()) {
      h ^= static_cast<size_t>(a) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace aimsyn
