#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "npd/common.hpp"

namespace npd {

struct CheckResult {
  std::string check_name;
  std::map<std::string, std::string> params;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool skipped = false;        // size guard tripped; not a failure
  std::int64_t runtime_ms = 0;
  std::uint64_t seed = 0;
};

struct SuiteConfig {
  std::optional<int> max_n;
  std::vector<int> qs;       // empty: suite default
  std::uint64_t seed = 42;
  std::optional<int> n;      // single-target overrides (sl suites)
  std::optional<int> s;
  std::optional<int> t;
  bool measure_time = false; // when false runtime_ms is emitted as 0
};

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& config);

std::string to_json_line(const CheckResult& r);
std::string to_tsv_line(const CheckResult& r);

}  // namespace npd
