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

// Shared fixtures for the unit and acceptance suites.

#ifndef TREENOISE_TESTS_TEST_UTIL_H_
#define TREENOISE_TESTS_TEST_UTIL_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "treenoise/treenoise.h"

namespace treenoise::testing {

// PatientsWeight after the -4.26 shift of the Liver walkthrough, in
// fixture row order.
inline constexpr std::array<double, 14> kReferencePerturbedWeights = {
    65.74, 85.74, 80.74, 90.74, 65.74, 85.74, 73.74,
    60.74, 70.74, 75.74, 65.74, 75.74, 75.74, 91.74};

inline std::string TestDataPath(const std::string& name) {
  return std::string(TREENOISE_TEST_DATA_DIR) + "/" + name;
}

inline std::string ConfigPath(const std::string& name) {
  return std::string(TREENOISE_CONFIG_DIR) + "/" + name;
}

// Unique scratch file under the system temp directory, removed on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& suffix = ".tmp") {
    static std::atomic<int> counter{0};
    path_ = (std::filesystem::temp_directory_path() /
             ("treenoise_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + suffix))
                .string();
  }
  TempFile(const std::string& contents, const std::string& suffix) : TempFile(suffix) {
    Write(contents);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  void Write(const std::string& contents) const {
    std::ofstream out(path_, std::ios::binary);
    out << contents;
  }
  std::string Read() const {
    std::ifstream in(path_, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command, capturing stdout (stderr is discarded).
inline CommandResult RunCommand(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string Cli() { return TREENOISE_CLI_PATH; }

inline std::vector<AttributeDescriptor> LiverSchema() {
  return {CategoricalFeature("LiverSize"), NumericFeature("PatientsWeight"),
          CategoricalFeature("EatsPizza"), ClassAttribute("DiagnosticClass")};
}

inline std::vector<AttributeDescriptor> CarSchema() {
  return {CategoricalFeature("buying"),   CategoricalFeature("maint"),
          CategoricalFeature("doors"),    CategoricalFeature("persons"),
          CategoricalFeature("lug_boot"), CategoricalFeature("safety"),
          ClassAttribute("class")};
}

// Car-structured stand-in: the full 4*4*4*3*3*3 = 1728 Cartesian product of
// the Car Evaluation attribute values, labelled by a hand-written
// hierarchical rule (price and technical scores, like the original concept
// hierarchy, but not the original rule tables).
inline Dataset SyntheticCarLike() {
  const std::vector<std::string> price = {"vhigh", "high", "med", "low"};
  const std::vector<std::string> doors = {"2", "3", "4", "5more"};
  const std::vector<std::string> persons = {"2", "4", "more"};
  const std::vector<std::string> lug = {"small", "med", "big"};
  const std::vector<std::string> safety = {"low", "med", "high"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t d = 0; d < 4; ++d)
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t s = 0; s < 3; ++s) {
              std::string cls;
              const auto price_score = static_cast<int>(b + m);  // 0..6
              const int comfort = static_cast<int>(l) + (d > 0 ? 1 : 0) +
                                  (p == 2 && d > 0 ? 1 : 0);  // 0..4
              const int tech = static_cast<int>(s) + (comfort >= 2 ? 1 : 0) +
                               (comfort >= 4 ? 1 : 0);  // 1..4 when s > 0
              const int total = price_score + tech;
              if (p == 0 || s == 0 || price_score <= 1 || total <= 4) {
                cls = "unacc";
              } else if (total <= 7) {
                cls = "acc";
              } else if (total == 8) {
                cls = "good";
              } else {
                cls = "vgood";
              }
              rows.push_back({price[b], price[m], doors[d], persons[p], lug[l],
                              safety[s], cls});
            }
  return Dataset::FromTextRows(CarSchema(), rows);
}

// The real Car Evaluation file, when supplied: $TREENOISE_CAR_CSV, or
// tests/data/car.data (the UCI file, no header row).
inline std::optional<std::string> CarEvaluationPath() {
  if (const char* env = std::getenv("TREENOISE_CAR_CSV"); env && *env) {
    if (std::filesystem::exists(env)) return std::string(env);
  }
  const std::string bundled = TestDataPath("car.data");
  if (std::filesystem::exists(bundled)) return bundled;
  return std::nullopt;
}

inline std::vector<AttributeDescriptor> BostonSchema() {
  std::vector<AttributeDescriptor> schema;
  for (const char* name : {"CRIM", "ZN", "INDUS", "CHAS", "NOX", "RM", "AGE", "DIS", "RAD",
                           "TAX", "PTRATIO", "B", "LSTAT", "MEDV"}) {
    schema.push_back(NumericFeature(name));
  }
  schema[3].role = AttributeRole::kIgnored;   // CHAS
  schema[11].role = AttributeRole::kIgnored;  // B
  schema[13].role = AttributeRole::kClass;    // MEDV, discretized at load
  return schema;
}

inline Dataset LoadBoston() {
  CsvOptions options;
  options.class_rule = PercentileClassRule{};
  return LoadCsv(TestDataPath("boston_housing.csv"), BostonSchema(), options);
}

// Domain overrides wide enough that no perturbed value wraps.
inline DomainOverrides WideDomains(const Dataset& ds) {
  DomainOverrides out;
  for (std::size_t c : ds.FeatureColumns()) {
    if (ds.attribute(c).is_numeric()) out[ds.attribute(c).name] = {-1e9, 1e9};
  }
  return out;
}

// n records with three numeric features drawn from fixed distributions and a
// class that depends on the first two.
inline Dataset SyntheticNumeric(std::size_t n, std::uint64_t seed) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    KeyedStream rng(seed, {0xabcdULL, i});
    const double x1 = 50.0 + 10.0 * rng.NextGaussian();
    const double x2 = 20.0 + 5.0 * rng.NextGaussian();
    const double x3 = 100.0 * rng.NextUniform();
    const std::string cls = (x1 + 2.0 * x2 > 90.0) ? "hi" : "lo";
    rows.push_back({internal::FormatNumber(x1), internal::FormatNumber(x2),
                    internal::FormatNumber(x3), cls});
  }
  return Dataset::FromTextRows(std::vector<AttributeDescriptor>{NumericFeature("x1"),
                                                                NumericFeature("x2"),
                                                                NumericFeature("x3"),
                                                                ClassAttribute("class")},
                               rows);
}

}  // namespace treenoise::testing

#endif  // TREENOISE_TESTS_TEST_UTIL_H_
