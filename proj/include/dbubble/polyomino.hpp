#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbubble {

// Unit cell [x, x+1] x [y, y+1] on the grid.
struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;  // (x, y) order
};

// Two labelled bubbles. Valid when A and B are disjoint, nonempty, and each
// is edge-connected with no holes; A and B need not touch.
struct LatticeConfig {
  std::vector<Cell> cellsA;
  std::vector<Cell> cellsB;
};

struct Violation {
  std::string invariant;  // which admissibility condition failed
  Cell witness;
};

struct PerimeterReport {
  long long rhoA = 0;    // unit edges with exactly one incident cell in A
  long long rhoB = 0;
  long long shared = 0;  // edges between an A cell and a B cell
  long long rhoDB = 0;   // rhoA + rhoB - shared: shared walls counted once
};

// Empty result means the config is admissible. Violations carry a witness
// cell; they are data, not errors.
std::vector<Violation> validate(const LatticeConfig& config);

// Throws std::invalid_argument on an inadmissible config.
PerimeterReport db_perimeter(const LatticeConfig& config);

// Lexicographically least representative under translation, the 8 grid
// symmetries, and (when |A| = |B|) swapping the labels. Idempotent.
LatticeConfig canonical_form(const LatticeConfig& config);

// 'A' / 'B' / '.' grid, top row first, one trailing newline.
std::string render_ascii(const LatticeConfig& config);

// Standalone SVG with one rect per cell.
std::string render_svg(const LatticeConfig& config);

// Text format: line 1 "n m", then one line per cell, "A x y" before "B x y",
// each set in ascending (x, y) order. Bit-exact: LF endings, single spaces.
// from_text ignores lines starting with '#'.
std::string to_text(const LatticeConfig& config);
LatticeConfig from_text(const std::string& text);

// Perimeter of a single cell set (edges with exactly one incident cell).
long long cell_set_perimeter(const std::vector<Cell>& cells);

// Edge-connected and hole-free, the per-bubble admissibility test.
bool is_valid_bubble(const std::vector<Cell>& cells);

}  // namespace dbubble
