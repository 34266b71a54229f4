#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dbubble/cache.hpp"
#include "dbubble/oracle.hpp"

namespace dbubble {

struct SweepRow {
  long long n = 0, m = 0;
  double rhoCont = 0;
  long long ceil = 0;
  long long constructed = 0;          // rhoDB of the constructive layout
  std::optional<long long> oracleValue;
  bool exact = false;                 // oracle value is exhaustive
  std::optional<int> gap;             // best known minus ceil when in {0,1,2}
};

struct SweepOptions {
  bool withOracle = true;
  long long nodeBudget = kDefaultNodeBudget;
  bool parallel = true;
  ResultCache* cache = nullptr;  // read before computing, updated after
};

// One row per pair with m <= min(n, mMax), n <= nMax, sorted by (n, m).
// Cells are independent; the parallel path distributes them across threads
// and the serial path is the reference both must agree with.
std::vector<SweepRow> sweep_cells(long long nMax, long long mMax,
                                  const SweepOptions& options);
std::vector<SweepRow> sweep_cells_serial(long long nMax, long long mMax,
                                         const SweepOptions& options);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Standalone vector image, one square per cell, colored by gap class.
std::string heatmap_svg(const std::vector<SweepRow>& rows);

}  // namespace dbubble
