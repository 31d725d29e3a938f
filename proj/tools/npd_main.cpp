#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npd/suites.hpp"

namespace {

int run_verify(const std::string& suite, npd::SuiteConfig& config,
               const std::string& format, const std::string& out_path) {
  std::vector<npd::CheckResult> results;
  try {
    results = npd::run_suite(suite, config);
  } catch (const npd::UnknownSuite& e) {
    std::cerr << e.what() << "\nregistered suites:\n";
    for (const std::string& name : npd::suite_names())
      std::cerr << "  " << name << "\n";
    return 2;
  }

  std::ostringstream body;
  for (const npd::CheckResult& r : results)
    body << (format == "tsv" ? npd::to_tsv_line(r) : npd::to_json_line(r))
         << "\n";

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
    out << body.str();
  }

  bool all_pass = true;
  for (const npd::CheckResult& r : results)
    if (!r.pass) all_pass = false;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal-subset product verification toolkit"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;
  npd::SuiteConfig config;
  int max_n = -1, n = -1, s = -1, t = -1;
  std::vector<int> qs;

  verify->add_option("suite_pos", suite, "suite name (or 'all')");
  verify->add_option("--suite", suite, "suite name (or 'all')");
  verify->add_option("--max-n", max_n, "cap the degree/rank sweep");
  verify->add_option("--q", qs, "field sizes (comma separated)")
      ->delimiter(',');
  verify->add_option("--seed", config.seed, "root seed for randomized checks");
  verify->add_option("--n", n, "single dimension/degree target");
  verify->add_option("--s", s, "fix-dim of the first stratum");
  verify->add_option("--t", t, "fix-dim of the second stratum");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  verify->add_option("--out", out_path, "write results to a file");
  verify->add_flag("--timings", config.measure_time,
                   "emit real runtimes (off by default for reproducibility)");

  CLI11_PARSE(app, argc, argv);

  if (max_n >= 0) config.max_n = max_n;
  if (n >= 0) config.n = n;
  if (s >= 0) config.s = s;
  if (t >= 0) config.t = t;
  config.qs = qs;

  return run_verify(suite, config, format, out_path);
}
