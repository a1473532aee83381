// Copyright 2026 The TreeNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Typed tabular data: schema declarations, a column-major dataset, CSV
// input/output, attribute domains, normal fits, and train/test splitting.

#ifndef TREENOISE_DATASET_H_
#define TREENOISE_DATASET_H_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treenoise/error.h"
#include "treenoise/rng.h"

namespace treenoise {

enum class AttributeKind { kNumeric, kCategorical };
enum class AttributeRole { kFeature, kClass, kIgnored };

struct AttributeDescriptor {
  std::string name;
  AttributeKind kind = AttributeKind::kNumeric;
  AttributeRole role = AttributeRole::kFeature;

  bool is_numeric() const { return kind == AttributeKind::kNumeric; }
  bool is_categorical() const { return kind == AttributeKind::kCategorical; }

  friend bool operator==(const AttributeDescriptor&,
                         const AttributeDescriptor&) = default;
};

inline AttributeDescriptor NumericFeature(std::string name) {
  return {std::move(name), AttributeKind::kNumeric, AttributeRole::kFeature};
}
inline AttributeDescriptor CategoricalFeature(std::string name) {
  return {std::move(name), AttributeKind::kCategorical,
          AttributeRole::kFeature};
}
inline AttributeDescriptor ClassAttribute(std::string name) {
  return {std::move(name), AttributeKind::kCategorical, AttributeRole::kClass};
}
inline AttributeDescriptor IgnoredAttribute(std::string name) {
  return {std::move(name), AttributeKind::kNumeric, AttributeRole::kIgnored};
}

// Checks name uniqueness and the single-class rule. A numeric class column
// is accepted only when `allow_numeric_class` is set; the loader then turns
// it into labels with a PercentileClassRule.
inline void ValidateSchema(std::span<const AttributeDescriptor> schema,
                           bool allow_numeric_class = false) {
  std::set<std::string_view> names;
  int num_class = 0;
  for (const AttributeDescriptor& attr : schema) {
    if (attr.name.empty()) throw ConfigError("schema: empty attribute name");
    if (!names.insert(attr.name).second) {
      throw ConfigError("schema: duplicate attribute name '" + attr.name +
                        "'");
    }
    if (attr.role == AttributeRole::kClass) {
      ++num_class;
      if (attr.is_numeric() && !allow_numeric_class) {
        throw ConfigError("schema: class attribute '" + attr.name +
                          "' must be categorical");
      }
    }
  }
  if (num_class != 1) {
    throw ConfigError("schema: expected exactly one class attribute, found " +
                      std::to_string(num_class));
  }
}

// Domain [low, low + width] of a numeric attribute. `integral` marks
// attributes whose observed values are all integers; wrapping then works on
// the integer lattice of width + 1 points.
struct DomainRange {
  double low = 0.0;
  double width = 0.0;
  bool integral = false;

  double high() const { return low + width; }
  // low + width can round below the observed maximum it was derived from,
  // so the offset form is accepted too.
  bool Contains(double v) const {
    return v >= low && (v <= high() || v - low <= width);
  }
};

struct NormalFit {
  double mean = 0.0;
  double stddev = 0.0;
};

enum class StddevConvention { kPopulation, kSample };

namespace internal {

inline std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

inline std::optional<double> ParseDouble(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// 12 significant digits: drops the last-bit noise of sums such as
// 70 + (-4.26) while staying far below any meaningful data precision.
inline std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) return std::to_string(v);
  std::string out(buf, ptr);
  if (out == "-0") out = "0";
  return out;
}

inline bool IsMissingToken(std::string_view s) { return s.empty() || s == "?"; }

}  // namespace internal

// Column-major table. Numeric columns hold doubles; categorical columns hold
// codes into a per-column label dictionary (first-appearance order).
class Dataset {
 public:
  Dataset() = default;

  // Builds a dataset from text cells, one inner vector per row with one cell
  // per entry of `schema`. Ignored columns are dropped. `first_row_number` is
  // only used in error messages (1-based line number of rows[0]). A numeric
  // class column must be discretized before the dataset is used.
  static Dataset FromTextRows(std::span<const AttributeDescriptor> schema,
                              const std::vector<std::vector<std::string>>& rows,
                              std::size_t first_row_number = 1,
                              bool allow_numeric_class = false) {
    ValidateSchema(schema, allow_numeric_class);
    if (rows.empty()) throw DataError("empty body: dataset has no rows");
    Dataset ds;
    std::vector<std::size_t> source_index;
    for (std::size_t c = 0; c < schema.size(); ++c) {
      if (schema[c].role == AttributeRole::kIgnored) continue;
      ds.columns_.push_back(Column{schema[c], {}, {}, {}});
      source_index.push_back(c);
    }
    ds.num_rows_ = rows.size();
    for (Column& col : ds.columns_) {
      if (col.attribute.is_numeric()) {
        col.values.reserve(rows.size());
      } else {
        col.codes.reserve(rows.size());
      }
    }
    std::vector<std::unordered_map<std::string, std::int32_t>> dictionaries(
        ds.columns_.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t row_number = first_row_number + r;
      if (rows[r].size() != schema.size()) {
        throw DataError("row " + std::to_string(row_number) + ": expected " +
                        std::to_string(schema.size()) + " cells, found " +
                        std::to_string(rows[r].size()));
      }
      for (std::size_t c = 0; c < ds.columns_.size(); ++c) {
        Column& col = ds.columns_[c];
        const std::string_view cell = internal::Trim(rows[r][source_index[c]]);
        if (internal::IsMissingToken(cell)) {
          throw DataError("row " + std::to_string(row_number) + ", column '" +
                          col.attribute.name + "': missing value");
        }
        if (col.attribute.is_numeric()) {
          const std::optional<double> v = internal::ParseDouble(cell);
          if (!v) {
            throw DataError("row " + std::to_string(row_number) +
                            ", column '" + col.attribute.name +
                            "': cannot parse '" + std::string(cell) +
                            "' as a number");
          }
          col.values.push_back(*v);
        } else {
          auto [it, inserted] = dictionaries[c].try_emplace(
              std::string(cell), static_cast<std::int32_t>(col.labels.size()));
          if (inserted) col.labels.emplace_back(cell);
          col.codes.push_back(it->second);
        }
      }
    }
    ds.Reindex();
    return ds;
  }

  std::size_t num_rows() const { return num_rows_; }
  std::size_t num_columns() const { return columns_.size(); }

  const AttributeDescriptor& attribute(std::size_t col) const {
    return columns_.at(col).attribute;
  }
  std::vector<AttributeDescriptor> schema() const {
    std::vector<AttributeDescriptor> out;
    for (const Column& c : columns_) out.push_back(c.attribute);
    return out;
  }

  std::size_t class_index() const { return class_index_; }
  const std::string& class_name() const { return attribute(class_index_).name; }

  std::optional<std::size_t> FindColumn(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t ColumnIndex(std::string_view name) const {
    const std::optional<std::size_t> c = FindColumn(name);
    if (!c) throw DataError("unknown attribute '" + std::string(name) + "'");
    return *c;
  }

  // Indices of feature (non-class) columns in schema order.
  std::vector<std::size_t> FeatureColumns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c != class_index_) out.push_back(c);
    }
    return out;
  }

  double numeric(std::size_t col, std::size_t row) const {
    return columns_[col].values[row];
  }
  std::span<const double> numeric_column(std::size_t col) const {
    return columns_.at(col).values;
  }
  std::int32_t code(std::size_t col, std::size_t row) const {
    return columns_[col].codes[row];
  }
  std::span<const std::int32_t> code_column(std::size_t col) const {
    return columns_.at(col).codes;
  }
  const std::string& label(std::size_t col, std::size_t row) const {
    const Column& c = columns_[col];
    return c.labels[static_cast<std::size_t>(c.codes[row])];
  }
  const std::vector<std::string>& labels(std::size_t col) const {
    return columns_.at(col).labels;
  }

  // Cell as text, as it would be written to CSV.
  std::string CellText(std::size_t col, std::size_t row) const {
    return columns_[col].attribute.is_numeric()
               ? internal::FormatNumber(numeric(col, row))
               : label(col, row);
  }

  void SetNumeric(std::size_t col, std::size_t row, double v) {
    columns_.at(col).values.at(row) = v;
  }
  void SetCode(std::size_t col, std::size_t row, std::int32_t code) {
    Column& c = columns_.at(col);
    if (code < 0 || static_cast<std::size_t>(code) >= c.labels.size()) {
      throw InternalError("label code out of range");
    }
    c.codes.at(row) = code;
  }
  // Interns `label` if needed. Not safe to call concurrently.
  void SetLabel(std::size_t col, std::size_t row, const std::string& label) {
    SetCode(col, row, Intern(col, label));
  }
  std::int32_t Intern(std::size_t col, const std::string& label) {
    Column& c = columns_.at(col);
    const auto it = std::find(c.labels.begin(), c.labels.end(), label);
    if (it != c.labels.end()) {
      return static_cast<std::int32_t>(it - c.labels.begin());
    }
    c.labels.push_back(label);
    return static_cast<std::int32_t>(c.labels.size() - 1);
  }

  // Rows in the given order; label dictionaries are shared with the source.
  Dataset Subset(std::span<const std::size_t> rows) const {
    if (rows.empty()) throw DataError("subset would be empty");
    Dataset out;
    out.columns_.reserve(columns_.size());
    for (const Column& c : columns_) {
      Column nc{c.attribute, {}, {}, c.labels};
      if (c.attribute.is_numeric()) {
        nc.values.reserve(rows.size());
        for (std::size_t r : rows) nc.values.push_back(c.values.at(r));
      } else {
        nc.codes.reserve(rows.size());
        for (std::size_t r : rows) nc.codes.push_back(c.codes.at(r));
      }
      out.columns_.push_back(std::move(nc));
    }
    out.num_rows_ = rows.size();
    out.Reindex();
    return out;
  }

  // Replaces a numeric column by a two-label categorical column: values above
  // the given percentile (linear interpolation between order statistics) get
  // `high_label`, the rest `low_label`. The column's role is kept.
  void DiscretizeByPercentile(std::size_t col, double percentile,
                              const std::string& low_label,
                              const std::string& high_label) {
    Column& c = columns_.at(col);
    if (!c.attribute.is_numeric()) {
      throw ConfigError("percentile rule needs numeric column '" +
                        c.attribute.name + "'");
    }
    if (!(percentile > 0.0 && percentile < 100.0)) {
      throw ConfigError("percentile must be in (0, 100)");
    }
    const double cut = Percentile(c.values, percentile);
    c.labels = {low_label, high_label};
    c.codes.clear();
    for (double v : c.values) c.codes.push_back(v > cut ? 1 : 0);
    c.values.clear();
    c.attribute.kind = AttributeKind::kCategorical;
  }

  static double Percentile(std::vector<double> values, double percentile) {
    std::sort(values.begin(), values.end());
    const double pos = percentile / 100.0 * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  }

  void WriteCsv(std::ostream& out) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c) out << ',';
      out << columns_[c].attribute.name;
    }
    out << '\n';
    for (std::size_t r = 0; r < num_rows_; ++r) {
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out << ',';
        out << CellText(c, r);
      }
      out << '\n';
    }
  }

  std::string ToCsv() const {
    std::ostringstream os;
    WriteCsv(os);
    return os.str();
  }

  // Cell-wise equality by value and label text.
  friend bool operator==(const Dataset& a, const Dataset& b) {
    if (a.num_rows_ != b.num_rows_ || a.columns_.size() != b.columns_.size()) {
      return false;
    }
    for (std::size_t c = 0; c < a.columns_.size(); ++c) {
      if (a.columns_[c].attribute != b.columns_[c].attribute) return false;
      for (std::size_t r = 0; r < a.num_rows_; ++r) {
        if (a.columns_[c].attribute.is_numeric()
                ? a.numeric(c, r) != b.numeric(c, r)
                : a.label(c, r) != b.label(c, r)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  struct Column {
    AttributeDescriptor attribute;
    std::vector<double> values;
    std::vector<std::int32_t> codes;
    std::vector<std::string> labels;
  };

  void Reindex() {
    index_.clear();
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      index_[columns_[c].attribute.name] = c;
      if (columns_[c].attribute.role == AttributeRole::kClass) class_index_ = c;
    }
  }

  std::vector<Column> columns_;
  std::size_t num_rows_ = 0;
  std::size_t class_index_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

// Turns a numeric class column into a two-valued label column. Used for
// Boston Housing, whose class is "top 20%" vs "bottom 80%" of house value.
struct PercentileClassRule {
  double percentile = 80.0;
  std::string low_label = "bottom80";
  std::string high_label = "top20";
};

struct CsvOptions {
  bool has_header = true;
  std::optional<PercentileClassRule> class_rule;
};

// Strict comma-separated reader: no quoted separators, no missing values.
inline Dataset ParseCsv(std::istream& in, std::span<const AttributeDescriptor> schema,
                        const CsvOptions& options = {}) {
  const bool numeric_class = options.class_rule.has_value();
  ValidateSchema(schema, numeric_class);
  if (numeric_class) {
    for (const AttributeDescriptor& attr : schema) {
      if (attr.role == AttributeRole::kClass && !attr.is_numeric()) {
        throw ConfigError("percentile class rule requires a numeric class column");
      }
    }
  }

  const auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  std::string line;
  std::size_t line_number = 0;
  if (options.has_header) {
    bool found = false;
    while (!found && std::getline(in, line)) {
      ++line_number;
      found = !internal::Trim(line).empty();
    }
    if (!found) throw DataError("empty file: no header row");
    const std::vector<std::string> header = split(line);
    bool match = header.size() == schema.size();
    for (std::size_t i = 0; match && i < header.size(); ++i) {
      match = internal::Trim(header[i]) == schema[i].name;
    }
    if (!match) {
      throw DataError("header mismatch: file has '" +
                      std::string(internal::Trim(line)) + "'");
    }
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t first_data_line = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (internal::Trim(line).empty()) continue;
    if (rows.empty()) first_data_line = line_number;
    rows.push_back(split(line));
  }
  if (rows.empty()) throw DataError("empty body: no data rows");

  Dataset ds = Dataset::FromTextRows(schema, rows, first_data_line, numeric_class);
  if (numeric_class) {
    ds.DiscretizeByPercentile(ds.class_index(), options.class_rule->percentile,
                              options.class_rule->low_label,
                              options.class_rule->high_label);
  }
  return ds;
}

inline Dataset LoadCsv(const std::string& path,
                       std::span<const AttributeDescriptor> schema,
                       const CsvOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file '" + path + "'");
  return ParseCsv(in, schema, options);
}

// Observed [min, max] of every numeric feature, replaced by `overrides`
// (attribute -> {low, high}) where given.
inline std::map<std::string, DomainRange> ComputeDomains(
    const Dataset& ds,
    const std::map<std::string, std::pair<double, double>>& overrides = {}) {
  std::map<std::string, DomainRange> out;
  for (std::size_t c : ds.FeatureColumns()) {
    const AttributeDescriptor& attr = ds.attribute(c);
    if (!attr.is_numeric()) continue;
    const std::span<const double> values = ds.numeric_column(c);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const bool integral = std::all_of(values.begin(), values.end(), [](double v) {
      return v == std::floor(v);
    });
    DomainRange range{*lo, *hi - *lo, integral};
    if (const auto it = overrides.find(attr.name); it != overrides.end()) {
      const auto [low, high] = it->second;
      if (!(high >= low)) {
        throw ConfigError("domain override for '" + attr.name +
                          "' has high < low");
      }
      range = DomainRange{low, high - low,
                          integral && low == std::floor(low) &&
                              high == std::floor(high)};
    }
    out.emplace(attr.name, range);
  }
  for (const auto& [name, unused] : overrides) {
    if (!out.contains(name)) {
      throw ConfigError("domain override names unknown numeric attribute '" +
                        name + "'");
    }
  }
  return out;
}

inline NormalFit FitNormal(const Dataset& ds, std::string_view attribute,
                           StddevConvention convention = StddevConvention::kPopulation) {
  const std::optional<std::size_t> col = ds.FindColumn(attribute);
  if (!col) throw ConfigError("unknown attribute '" + std::string(attribute) + "'");
  if (!ds.attribute(*col).is_numeric()) {
    throw ConfigError("attribute '" + std::string(attribute) +
                      "' is categorical; a normal fit needs a numeric attribute");
  }
  const std::span<const double> values = ds.numeric_column(*col);
  const auto n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double denom = n;
  if (convention == StddevConvention::kSample) denom = n - 1.0;
  const double stddev = denom > 0.0 ? std::sqrt(ss / denom) : 0.0;
  return {mean, stddev};
}

inline std::map<std::string, NormalFit> FitNormals(
    const Dataset& ds, StddevConvention convention = StddevConvention::kPopulation) {
  std::map<std::string, NormalFit> out;
  for (std::size_t c : ds.FeatureColumns()) {
    if (ds.attribute(c).is_numeric()) {
      out.emplace(ds.attribute(c).name, FitNormal(ds, ds.attribute(c).name, convention));
    }
  }
  return out;
}

struct TrainTestSplit {
  Dataset train;
  Dataset test;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  // False when some class had a single record and the split fell back to an
  // unstratified draw.
  bool stratified = true;
};

// Deterministic stratified split. The test partition gets round(n * f)
// records, apportioned across classes by largest remainder; rows keep their
// original relative order within each partition.
inline TrainTestSplit SplitTrainTest(const Dataset& ds, double test_fraction,
                                     std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test fraction must be in (0, 1)");
  }
  const std::size_t n = ds.num_rows();
  if (n < 2) throw DataError("need at least 2 records to split");
  const auto total_test = static_cast<std::size_t>(std::clamp<double>(
      std::round(static_cast<double>(n) * test_fraction), 1.0,
      static_cast<double>(n - 1)));

  const std::size_t cls = ds.class_index();
  std::map<std::int32_t, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < n; ++r) groups[ds.code(cls, r)].push_back(r);
  const bool stratified =
      std::all_of(groups.begin(), groups.end(),
                  [](const auto& g) { return g.second.size() >= 2; });
  if (!stratified) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    groups = {{0, std::move(all)}};
  }

  // Largest-remainder apportionment of total_test across groups.
  std::vector<std::size_t> quota;
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  std::size_t g = 0;
  for (const auto& [code, rows] : groups) {
    const double ideal = static_cast<double>(rows.size()) *
                         static_cast<double>(total_test) / static_cast<double>(n);
    const auto q = static_cast<std::size_t>(std::floor(ideal));
    quota.push_back(q);
    assigned += q;
    remainders.emplace_back(ideal - static_cast<double>(q), g++);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < total_test; ++i, ++assigned) {
    ++quota[remainders[i % remainders.size()].second];
  }

  std::vector<bool> in_test(n, false);
  g = 0;
  for (auto& [code, rows] : groups) {
    KeyedStream rng(seed, {static_cast<std::uint64_t>(RngStage::kSplit),
                           static_cast<std::uint64_t>(code)});
    for (std::size_t i = rows.size(); i > 1; --i) {
      std::swap(rows[i - 1], rows[rng.NextBelow(i)]);
    }
    for (std::size_t i = 0; i < quota[g] && i < rows.size(); ++i) {
      in_test[rows[i]] = true;
    }
    ++g;
  }

  TrainTestSplit out;
  out.stratified = stratified;
  for (std::size_t r = 0; r < n; ++r) {
    (in_test[r] ? out.test_rows : out.train_rows).push_back(r);
  }
  out.train = ds.Subset(out.train_rows);
  out.test = ds.Subset(out.test_rows);
  return out;
}

// The 14-record Liver sample used throughout the worked example.
inline Dataset EmbeddedLiverSample() {
  static const std::vector<AttributeDescriptor> kSchema = {
      CategoricalFeature("LiverSize"), NumericFeature("PatientsWeight"),
      CategoricalFeature("EatsPizza"), ClassAttribute("DiagnosticClass")};
  static const std::vector<std::vector<std::string>> kRows = {
      {"NORMAL", "70", "YES", "CLASS1"},   {"NORMAL", "90", "YES", "CLASS2"},
      {"NORMAL", "85", "NO", "CLASS2"},    {"NORMAL", "95", "NO", "CLASS2"},
      {"NORMAL", "70", "NO", "CLASS1"},    {"ENLARGED", "90", "YES", "CLASS1"},
      {"ENLARGED", "78", "NO", "CLASS1"},  {"ENLARGED", "65", "YES", "CLASS1"},
      {"ENLARGED", "75", "NO", "CLASS1"},  {"SHRINKED", "80", "YES", "CLASS2"},
      {"SHRINKED", "70", "YES", "CLASS2"}, {"SHRINKED", "80", "NO", "CLASS1"},
      {"SHRINKED", "80", "NO", "CLASS1"},  {"SHRINKED", "96", "NO", "CLASS1"},
  };
  return Dataset::FromTextRows(kSchema, kRows);
}

// Plausible body-weight domain for the Liver sample. The observed range
// [65, 96] is too tight for a -4.26 shift: 65 - 4.26 would wrap.
inline std::map<std::string, std::pair<double, double>> LiverSampleDomainOverrides() {
  return {{"PatientsWeight", {1.0, 200.0}}};
}

}  // namespace treenoise

#endif  // TREENOISE_DATASET_H_
