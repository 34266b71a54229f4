#pragma once

#include <iosfwd>
#include <string>

#include "dbubble/oracle.hpp"

namespace dbubble {

struct CliOptions {
  std::string outDir;    // --out: directory for generated files
  std::string render;    // --render: "ascii" or "svg"
  long long nodeBudget = kDefaultNodeBudget;
  bool noCache = false;  // --no-cache
  std::string cachePath; // empty = $DBUBBLE_CACHE or ./dbubble_cache.csv
};

// Command bodies take the output stream so tests can capture them. They
// throw std::invalid_argument on bad input; run_cli maps that to exit 1 and
// std::logic_error (a broken internal invariant) to exit 2.
int cmd_show(long long n, long long m, const CliOptions& opt, std::ostream& out);
int cmd_sweep(long long nMax, long long mMax, const CliOptions& opt,
              std::ostream& out);
int cmd_certify(double n, const CliOptions& opt, std::ostream& out);
int cmd_curves(double n, int samples, const CliOptions& opt, std::ostream& out);
int cmd_oracle(long long n, long long m, const CliOptions& opt, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dbubble
