#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aimsyn/attr_set.hpp"
#include "aimsyn/domain.hpp"
#include "aimsyn/marginal.hpp"

namespace aimsyn {

/// In-memory delimited table: header row plus string cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Multiset of discrete records over a Domain; each cell is a category index.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Domain domain, std::vector<int32_t> values);

  const Domain& domain() const { return domain_; }
  long long num_records() const {
    return domain_.num_attrs() == 0
               ? 0
               : static_cast<long long>(values_.size()) / domain_.num_attrs();
  }
  int32_t value(long long row, int attr) const {
    return values_[static_cast<size_t>(row) * domain_.num_attrs() + attr];
  }
  const std::vector<int32_t>& values() const { return values_; }

 private:
  Domain domain_;
  std::vector<int32_t> values_;
};

/// Map a table of category labels onto a known domain.
Dataset load_dataset(const Table& table, const Domain& domain);

Marginal compute_marginal(const Dataset& dataset, const AttrSet& r);

/// Per-column preprocessing instruction. Empty categories / missing bounds
/// mean "derive from the active domain" (documented as the non-private mode).
struct ColumnSpec {
  enum class Kind { Categorical, Numerical };
  Kind kind = Kind::Categorical;
  std::vector<std::string> categories;  // categorical only; empty = derive
  std::optional<double> min, max;       // numerical only; unset = derive
};

inline constexpr int kNumericBins = 32;

struct DiscretizeResult {
  Dataset dataset;
  Domain domain;
  std::vector<long long> clamped_per_attr;  // out-of-range numeric cells
  long long clamped_total = 0;
};

/// Turn a raw mixed-type table into a discrete dataset: numerical columns are
/// mapped to 32 equal-width bins over [min, max]; categorical columns use the
/// given (or observed) label set. Out-of-range numeric values clamp to the
/// nearest bin and are tallied in the result.
DiscretizeResult discretize(
    const Table& raw,
    const std::vector<std::pair<std::string, ColumnSpec>>& spec);

}  // namespace aimsyn
