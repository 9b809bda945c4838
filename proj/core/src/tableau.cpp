#include "wbr/tableau.hpp"

#include <algorithm>

namespace wbr {

Box StandardTableau::box_of(int value) const {
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (std::size_t c = 0; c < entries[r].size(); ++c)
      if (entries[r][c] == value)
        return {static_cast<int>(r + 1), static_cast<int>(c + 1)};
  throw DomainError("value not in tableau");
}

namespace {

// Build tableaux by placing n, n-1, ... into removable corners of the
// shrinking shape; trying corners top row first makes the output sorted
// by last-letter order.
void tableaux_rec(const Partition& shape, int next,
                  std::vector<std::vector<int>>& grid,
                  std::vector<StandardTableau>& out, const Partition& full) {
  if (next == 0) {
    out.push_back({full, grid});
    return;
  }
  for (const Box& b : removable_boxes(shape)) {
    grid[b.row - 1][b.col - 1] = next;
    tableaux_rec(shape.with_box_removed(b), next - 1, grid, out, full);
    grid[b.row - 1][b.col - 1] = 0;
  }
}

struct LrState {
  const Partition* lam;
  const Partition* mu;
  const Partition* nu;
  // boxes of lam/mu in reverse reading order: rows top to bottom, within a
  // row right to left
  std::vector<Box> order;
  std::vector<std::vector<int>> grid;  // letter at (row-1, col-1), 0 = empty
  std::vector<long> count;             // letters used so far
};

void lr_rec(LrState& st, std::size_t k, long& total) {
  if (k == st.order.size()) {
    ++total;
    return;
  }
  const Box b = st.order[k];
  for (int t = 1; t <= static_cast<int>(st.nu->rows()); ++t) {
    if (st.count[t] >= st.nu->part(t)) continue;
    // lattice word: every prefix of the reverse reading word has at least
    // as many (t-1)s as ts
    if (t > 1 && st.count[t] + 1 > st.count[t - 1]) continue;
    // rows weakly increase left to right (right neighbor placed earlier)
    if (b.col < st.lam->part(b.row) && t > st.grid[b.row - 1][b.col]) continue;
    // columns strictly increase; a box of mu above imposes no constraint
    if (b.row > 1 && b.col > st.mu->part(b.row - 1) &&
        t <= st.grid[b.row - 2][b.col - 1])
      continue;
    st.grid[b.row - 1][b.col - 1] = t;
    st.count[t] += 1;
    lr_rec(st, k + 1, total);
    st.count[t] -= 1;
    st.grid[b.row - 1][b.col - 1] = 0;
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<std::vector<int>> grid;
  for (std::size_t r = 1; r <= shape.rows(); ++r)
    grid.emplace_back(shape.part(r), 0);
  std::vector<StandardTableau> out;
  tableaux_rec(shape, static_cast<int>(shape.degree()), grid, out, shape);
  return out;
}

long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (mu.degree() + nu.degree() != lam.degree()) return 0;
  if (!mu.subpartition_of(lam)) return 0;
  if (nu.degree() == 0) return 1;

  LrState st;
  st.lam = &lam;
  st.mu = &mu;
  st.nu = &nu;
  for (int r = 1; r <= static_cast<int>(lam.rows()); ++r) {
    st.grid.emplace_back(lam.part(r), 0);
    for (int c = lam.part(r); c > mu.part(r); --c) st.order.push_back({r, c});
  }
  st.count.assign(nu.rows() + 1, 0);

  long total = 0;
  lr_rec(st, 0, total);
  return total;
}

}  // namespace wbr
