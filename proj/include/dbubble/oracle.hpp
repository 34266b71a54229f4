#pragma once

#include <cstdint>
#include <optional>

#include "dbubble/polyomino.hpp"

namespace dbubble {

// Exhaustive search is practical up to this combined volume; past it the
// family search is the documented oracle.
inline constexpr long long kExactLimit = 14;
inline constexpr long long kDefaultNodeBudget = 100'000'000;

struct OracleResult {
  long long n = 0, m = 0;
  long long value = 0;       // minimum rho_DB found
  LatticeConfig config;      // canonical witness achieving value
  bool exact = false;        // true = exhaustive, false = upper bound
  long long nodesExplored = 0;
};

struct GapResult {
  std::optional<int> gap;    // bestKnown - ceil, when it lands in {0,1,2}
  bool certifiedExact = false;
  long long bestKnown = 0;
  long long ceilCont = 0;
};

// True minimum over all valid configurations, by canonical enumeration of A
// with branch-and-bound, then connected B sets touching it. Separated optima
// are covered by a closed-form seed, so only touching pairs are enumerated.
// When the node budget runs out the best value so far returns with
// exact = false. Arguments may come in either order.
OracleResult exact_min(long long n, long long m,
                       long long nodeBudget = kDefaultNodeBudget);

// Minimum over the frozen two-rectangle family: nested corner layouts,
// side-attached layouts at every vertical offset, and side-by-side columns
// with a wall notch, each trimmed to exact volume. Always an upper bound.
OracleResult family_min(long long n, long long m);

GapResult gap(long long n, long long m,
              long long nodeBudget = kDefaultNodeBudget);

// Enumeration self-checks: fixed polyominoes with k cells, and the subset
// whose complement is connected.
long long count_fixed_polyominoes(int k);
long long count_hole_free_fixed_polyominoes(int k);

}  // namespace dbubble
