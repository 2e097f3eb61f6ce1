#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "legch/front.hpp"
#include "legch/laurent.hpp"
#include "legch/linearized.hpp"
#include "json.hpp"

namespace legch {

using Json = nlohmann::ordered_json;

struct KnotRecord {
  std::string label;
  std::string front;  // front file text
  int expected_tb = 0;
  int expected_r = 0;
  std::vector<LaurentPoly> expected_reduced;
  // Reduced polynomial -> augmentation count, when known.
  std::map<LaurentPoly, int> expected_multiplicity;
  std::optional<int> expected_aug_count;
  std::string citation;
};

// Built-in regression records, in report order.
const std::vector<KnotRecord>& builtin_records();

struct RecordResult {
  std::string label;
  bool passed = false;
  int tb = 0;
  int r = 0;
  std::size_t aug_count = 0;
  std::map<LaurentPoly, int> multiplicity;
  std::vector<std::string> mismatches;
  std::string error;  // set when the pipeline threw
};

RecordResult check_record(const KnotRecord& record, std::size_t cap = kDefaultSearchCap);

// Consistency checks on one front. Returns a description of every failure.
std::vector<std::string> property_failures(const FrontDiagram& front,
                                           std::size_t cap = kDefaultSearchCap);

// Random single-component plat on at most 2 * max_pairs strands with at most
// max_crossings crossings. With interior_cusps, some left cusps are moved
// after crossings.
FrontDiagram random_front(std::mt19937_64& rng, int max_pairs, int max_crossings,
                          bool interior_cusps = false);

struct PropertySummary {
  std::size_t fronts = 0;
  std::vector<std::string> failures;
};

// property_failures over the built-in fronts plus `random_count` random plats
// drawn from a fixed seed.
PropertySummary run_property_suite(std::size_t random_count, std::uint64_t seed,
                                   std::size_t cap = kDefaultSearchCap);

// Rows of the optional fronts directory: NAME.front checked against the
// expected-values entry NAME.
struct TableCheck {
  std::string name;
  bool passed = false;
  bool unverified = false;
  std::string detail;
};

std::vector<TableCheck> check_fronts_directory(const std::filesystem::path& dir,
                                               const Json& expected,
                                               std::size_t cap = kDefaultSearchCap);

struct SelftestReport {
  std::vector<RecordResult> records;
  PropertySummary properties;
  std::vector<TableCheck> table;
  bool passed() const;
  std::string text() const;
  Json json() const;
};

struct SelftestOptions {
  std::size_t cap = kDefaultSearchCap;
  std::size_t random_fronts = 200;
  std::uint64_t seed = 20011;
  std::optional<std::filesystem::path> fronts_dir;
  std::optional<std::filesystem::path> expected_file;
};

SelftestReport selftest(const SelftestOptions& options = {});

// {"-1": 1, "0": 4, "1": 2}
Json poly_to_json(const LaurentPoly& p);
// Throws Error(Syntax) on malformed input.
LaurentPoly poly_from_json(const Json& j);

enum class ReportFormat { Text, Json };

// Invariants, generators, differential, augmentation count and polynomials.
Json report_json(const FrontDiagram& front, std::size_t cap = kDefaultSearchCap);
std::string report(const FrontDiagram& front, ReportFormat format,
                   std::size_t cap = kDefaultSearchCap);

}  // namespace legch
