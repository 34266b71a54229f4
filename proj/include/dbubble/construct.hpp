#pragma once

#include <optional>
#include <string>

#include "dbubble/polyomino.hpp"

namespace dbubble {

enum class Provenance { Lem2_5, Lem2_7, Thm3_1, CorHigh };
const char* provenance_name(Provenance p);

struct RectDims {
  long long w = 1;
  long long h = 1;
};

// Result of the integer triple search: A = x-by-z and B = y-by-z rectangles
// sharing the z side, objective 3z + 2(x+y).
struct EqualTriple {
  long long x = 0, y = 0, z = 0;
  long long objective = 0;
};

struct Construction {
  LatticeConfig config;
  long long rhoDB = 0;
  long long bound = 0;  // ceil(rho_cont(n, m)) + slack
  int slack = 0;
  Provenance provenance = Provenance::Lem2_5;
  // True when (n, m) lies in the range where rhoDB <= bound is proven:
  // all ratios <= 1/2; equal volumes with n > 6000; otherwise n > 8000.
  bool guaranteeApplies = false;
  std::optional<EqualTriple> triple;  // present for Thm3_1 / CorHigh
};

// Near-square rectangle of area >= V with 2(w+h) <= 4*sqrt(V) + 2.
// With s = floor(sqrt(V)): V = s*s gives s x s; V <= s*s+s widens one side;
// larger V rounds both sides up.
RectDims round_square(long long V);

enum class TrimSide { Left, Right };

// Removes cells column by column from the outermost unprotected column on the
// given side, bottom up within a column, until exactly `target` remain.
// Perimeter never increases. Throws if protected cells block the target.
std::vector<Cell> trim_to_volume(std::vector<Cell> shape, long long target,
                                 const std::vector<Cell>& protectedCells = {},
                                 TrimSide side = TrimSide::Left);

// Small-ratio layout (m/n <= alpha0): outer near-square of area n+m with B a
// near-square tucked in its top-right corner, both trimmed to exact volume.
Construction construct_low_alpha(long long n, long long m);

// Mid-ratio layout (alpha0 < m/n <= 1/2): near-square A with a half-width
// rectangle B flush against its right side, dimensions picked by the parity
// of floor(sqrt(2m)) and the fractional part of sqrt(2m).
Construction construct_mid_alpha(long long n, long long m);

// Minimizes 3z + 2(x+y) over integer triples with xz >= V and yz >= V.
// Returns the minimum if it is within ceil(2*sqrt(12V)) + budgetSlack.
// V may be a half-integer (it is (n+m)/2 upstream).
std::optional<EqualTriple> equal_triple_search(double V, int budgetSlack);

// Builds the side-by-side two-rectangle configuration from the triple and
// trims both bubbles to ceil(V) cells. none when no triple meets the budget.
std::optional<Construction> construct_equal(double V, int budgetSlack);

// High-ratio layout (1/2 < m/n < 1): equal-volume stage for (n+m)/2, then the
// dividing wall moves to column ceil(n/z); a corner notch hands B its missing
// cells (at most z-1 of them, adding at most 1 to the perimeter).
Construction construct_high_alpha(long long n, long long m);

// Dispatch on m/n using exact integer predicates. Always returns a valid
// configuration with exact volumes; guaranteeApplies records whether the
// ceiling+2 bound is proven for this pair.
Construction construct(long long n, long long m);

// Config text format preceded by a '#' provenance header line.
std::string to_text_with_provenance(const Construction& c);

}  // namespace dbubble
