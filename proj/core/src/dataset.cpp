#include "aimsyn/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "aimsyn/errors.hpp"

namespace aimsyn {

Dataset::Dataset(Domain domain, std::vector<int32_t> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const int d = domain_.num_attrs();
  if (d == 0) {
    if (!values_.empty()) throw ValueError("dataset: values without attributes");
    return;
  }
  if (values_.size() % static_cast<size_t>(d) != 0) {
    throw ValueError("dataset: value buffer is not a whole number of records");
  }
  const long long n = static_cast<long long>(values_.size()) / d;
  for (long long row = 0; row < n; ++row) {
    for (int a = 0; a < d; ++a) {
      int32_t v = values_[static_cast<size_t>(row) * d + a];
      if (v < 0 || v >= domain_.size(a)) {
        throw ValueError("dataset: record " + std::to_string(row) +
                         " has out-of-domain index for attribute '" +
                         domain_.name(a) + "'");
      }
    }
  }
}

Dataset load_dataset(const Table& table, const Domain& domain) {
  const int d = domain.num_attrs();
  // Map header columns onto domain attributes by name.
  std::vector<int> col_of_attr(static_cast<size_t>(d), -1);
  for (int a = 0; a < d; ++a) {
    for (size_t c = 0; c < table.header.size(); ++c) {
      if (table.header[c] == domain.name(a)) {
        col_of_attr[static_cast<size_t>(a)] = static_cast<int>(c);
        break;
      }
    }
    if (col_of_attr[static_cast<size_t>(a)] < 0) {
      throw ParseError("missing column '" + domain.name(a) + "' in table");
    }
  }

  std::vector<std::unordered_map<std::string, int32_t>> lookup(
      static_cast<size_t>(d));
  for (int a = 0; a < d; ++a) {
    const auto& cats = domain.categories(a);
    for (size_t i = 0; i < cats.size(); ++i) {
      lookup[static_cast<size_t>(a)].emplace(cats[i], static_cast<int32_t>(i));
    }
  }

  std::vector<int32_t> values;
  values.reserve(table.rows.size() * static_cast<size_t>(d));
  for (size_t row = 0; row < table.rows.size(); ++row) {
    const auto& cells = table.rows[row];
    for (int a = 0; a < d; ++a) {
      size_t c = static_cast<size_t>(col_of_attr[static_cast<size_t>(a)]);
      if (c >= cells.size()) {
        throw ParseError("row " + std::to_string(row + 1) +
                         " is missing a value for column '" + domain.name(a) +
                         "'");
      }
      auto it = lookup[static_cast<size_t>(a)].find(cells[c]);
      if (it == lookup[static_cast<size_t>(a)].end()) {
        throw UnknownCategoryError("unknown category '" + cells[c] +
                                   "' for attribute '" + domain.name(a) +
                                   "' at row " + std::to_string(row + 1));
      }
      values.push_back(it->second);
    }
  }
  return Dataset(domain, std::move(values));
}

Marginal compute_marginal(const Dataset& dataset, const AttrSet& r) {
  const Domain& domain = dataset.domain();
  for (int a : r.attrs()) {
    if (a >= domain.num_attrs()) {
      throw ValueError("compute_marginal: attribute index out of range");
    }
  }
  size_t cells = domain.cell_count_checked(r, size_t{1} << 34);
  Marginal out{r, std::vector<double>(cells, 0.0)};
  auto strides = marginal_strides(r, domain);
  const auto& attrs = r.attrs();
  const long long n = dataset.num_records();
  for (long long row = 0; row < n; ++row) {
    size_t idx = 0;
    for (size_t j = 0; j < attrs.size(); ++j) {
      idx += strides[j] * static_cast<size_t>(dataset.value(row, attrs[j]));
    }
    out.counts[idx] += 1.0;
  }
  return out;
}

namespace {

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t')) --e;
  if (b == e) return false;
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

int bin_index(double v, double min, double max, long long& clamped) {
  double scaled = (v - min) * kNumericBins / (max - min);
  int bin = static_cast<int>(std::floor(scaled));
  if (bin < 0) {
    ++clamped;
    return 0;
  }
  if (bin > kNumericBins - 1) {
    // Values equal to max land in the last bin without a warning.
    if (v > max) ++clamped;
    return kNumericBins - 1;
  }
  return bin;
}

std::string bin_label(int bin, double min, double max) {
  double w = (max - min) / kNumericBins;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "[%.6g,%.6g%c", min + bin * w,
                bin == kNumericBins - 1 ? max : min + (bin + 1) * w,
                bin == kNumericBins - 1 ? ']' : ')');
  return buf;
}

}  // namespace

DiscretizeResult discretize(
    const Table& raw, const std::vector<std::pair<std::string, ColumnSpec>>& spec) {
  std::vector<int> col_of(spec.size(), -1);
  for (size_t i = 0; i < spec.size(); ++i) {
    for (size_t c = 0; c < raw.header.size(); ++c) {
      if (raw.header[c] == spec[i].first) {
        col_of[i] = static_cast<int>(c);
        break;
      }
    }
    if (col_of[i] < 0) {
      throw ParseError("missing column '" + spec[i].first + "' in table");
    }
  }

  auto cell = [&](size_t row, size_t i) -> const std::string& {
    static const std::string empty;
    size_t c = static_cast<size_t>(col_of[i]);
    return c < raw.rows[row].size() ? raw.rows[row][c] : empty;
  };

  // Resolve each column's category list or numeric range, deriving missing
  // pieces from the active domain.
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> categories;
  std::vector<ColumnSpec> resolved(spec.size());
  for (size_t i = 0; i < spec.size(); ++i) {
    ColumnSpec cs = spec[i].second;
    if (cs.kind == ColumnSpec::Kind::Categorical) {
      if (cs.categories.empty()) {
        std::vector<std::string> observed;
        for (size_t row = 0; row < raw.rows.size(); ++row) {
          observed.push_back(cell(row, i));
        }
        std::sort(observed.begin(), observed.end());
        observed.erase(std::unique(observed.begin(), observed.end()),
                       observed.end());
        if (observed.empty()) observed.push_back("");
        cs.categories = std::move(observed);
      }
      categories.push_back(cs.categories);
    } else {
      if (!cs.min || !cs.max) {
        double lo = 0, hi = 0;
        bool seen = false;
        for (size_t row = 0; row < raw.rows.size(); ++row) {
          double v;
          if (!parse_double(cell(row, i), v)) {
            throw ParseError("non-numeric value '" + cell(row, i) +
                             "' in numerical column '" + spec[i].first + "'");
          }
          lo = seen ? std::min(lo, v) : v;
          hi = seen ? std::max(hi, v) : v;
          seen = true;
        }
        if (!seen) throw ParseError("cannot derive range of empty column '" +
                                    spec[i].first + "'");
        if (!cs.min) cs.min = lo;
        if (!cs.max) cs.max = hi;
      }
      if (!(*cs.min < *cs.max)) {
        throw ValueError("numerical column '" + spec[i].first +
                         "' requires min < max");
      }
      std::vector<std::string> labels;
      labels.reserve(kNumericBins);
      for (int b = 0; b < kNumericBins; ++b) {
        labels.push_back(bin_label(b, *cs.min, *cs.max));
      }
      categories.push_back(std::move(labels));
    }
    names.push_back(spec[i].first);
    resolved[i] = std::move(cs);
  }

  Domain domain(std::move(names), std::move(categories));

  DiscretizeResult result;
  result.clamped_per_attr.assign(spec.size(), 0);
  std::vector<int32_t> values;
  values.reserve(raw.rows.size() * spec.size());
  for (size_t row = 0; row < raw.rows.size(); ++row) {
    for (size_t i = 0; i < spec.size(); ++i) {
      const ColumnSpec& cs = resolved[i];
      if (cs.kind == ColumnSpec::Kind::Categorical) {
        const auto& cats = domain.categories(static_cast<int>(i));
        auto it = std::find(cats.begin(), cats.end(), cell(row, i));
        if (it == cats.end()) {
          throw UnknownCategoryError("unknown category '" + cell(row, i) +
                                     "' for attribute '" + spec[i].first +
                                     "' at row " + std::to_string(row + 1));
        }
        values.push_back(static_cast<int32_t>(it - cats.begin()));
      } else {
        double v;
        if (!parse_double(cell(row, i), v)) {
          throw ParseError("non-numeric value '" + cell(row, i) +
                           "' in numerical column '" + spec[i].first +
                           "' at row " + std::to_string(row + 1));
        }
        values.push_back(
            bin_index(v, *cs.min, *cs.max, result.clamped_per_attr[i]));
      }
    }
  }
  for (long long c : result.clamped_per_attr) result.clamped_total += c;
  result.domain = domain;
  result.dataset = Dataset(std::move(domain), std::move(values));
  return result;
}

}  // namespace aimsyn
