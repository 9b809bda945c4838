#pragma once

#include <vector>

#include "wbr/numeric.hpp"
#include "wbr/partition.hpp"

namespace wbr {

// Standard Young tableau: bijective filling by 1..degree with strictly
// increasing rows and columns. entries[r][c] is 0-based in both indices.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> entries;

  int at(int row, int col) const { return entries[row - 1][col - 1]; }  // 1-based
  Box box_of(int value) const;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

// All standard tableaux of the given shape, sorted by last-letter order:
// compare the boxes of n, then n-1, ... (row first, then column).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Littlewood-Richardson coefficient c^lam_{mu nu}: the number of LR skew
// tableaux of shape lam/mu and weight nu (semistandard, reverse reading
// word a lattice word). Returns 0 when |mu| + |nu| != |lam| or mu is not
// contained in lam.
long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace wbr
