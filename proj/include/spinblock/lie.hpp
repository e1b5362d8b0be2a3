#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spinblock/abacus.hpp"
#include "spinblock/crystal.hpp"
#include "spinblock/partition.hpp"

namespace spinblock {

// Cartan data of the rank-t twisted affine algebra attached to the modulus:
// integer Cartan matrix C, its symmetrization B, and the coefficient
// vectors of the null combination delta and the central combination c.
struct CartanData {
  int t = 1;
  std::vector<std::vector<int>> C;
  std::vector<std::vector<int>> B;
  std::vector<int> delta; // coefficients of alpha_0..alpha_t
  std::vector<int> c;

  auto operator<=>(const CartanData&) const = default;
};

CartanData cartan_data(int p);

// Signed bead counts n_i = +-l_i, the lattice coordinates of a core.
struct CoordVector {
  std::vector<int> n;

  int t() const { return static_cast<int>(n.size()); }
  auto operator<=>(const CoordVector&) const = default;
};

CoordVector coords_from_tuple(const CoreTuple& c);
// n > 0 puts beads on the low runner, n < 0 on the high one, n = 0 is the
// empty pair (0, 1).
CoreTuple tuple_from_coords(const CoordVector& v, int p);

// gamma_t of the corresponding core: sum of n_i (n_i - 1) / 2.
long long level(const CoordVector& v);

// Simple-root reflections in coordinates: index 0 sends n_1 to 1 - n_1,
// middle indices swap n_i and n_{i+1}, index t negates n_t.  These match
// the runner-swap involutions through coords_from_tuple.
CoordVector weyl_reflect(int index, const CoordVector& v);

// Levels over the box lo..hi in every coordinate, row-major with the last
// coordinate fastest.
struct LevelTable {
  int p = 3;
  int t = 1;
  int lo = 0;
  int hi = 0;
  std::vector<long long> values;

  int side() const { return hi - lo + 1; }
  long long at(const CoordVector& v) const;
  // For t == 2: entry with n_1 = lo + row, n_2 = lo + col.
  long long at2(int row, int col) const;
};

LevelTable level_table(int p, int lo, int hi, long long budget);

// Content of any partition in the block: content of the core plus weight
// many copies of the bar content (2,...,2,1).
Content block_weight_vector(const BlockLabel& b);

std::string to_string(const CoordVector& v);

} // namespace spinblock
