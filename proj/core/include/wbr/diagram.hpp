#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wbr/numeric.hpp"

namespace wbr {

// Basis diagram of the walled Brauer algebra B_{r,s}: a perfect matching on
// 2(r+s) nodes (r+s northern, r+s southern) such that every northern or
// southern arc crosses the wall between positions r and r+1, and no
// propagating line does.
//
// Node encoding: 0..n-1 are the northern nodes left to right (n = r+s),
// n..2n-1 the southern nodes. A node's row position is node % n; it lies
// left of the wall when position < r.
class WalledDiagram {
 public:
  WalledDiagram(int r, int s, std::vector<int> match);

  static WalledDiagram identity(int r, int s);
  // E_{i,j}: arcs {i,j} north and south, all other strands vertical.
  // 1-based, requires i <= r < j.
  static WalledDiagram elementary(int r, int s, int i, int j);
  // Diagram of a wall-preserving permutation: northern node at position k
  // (0-based) joins the southern node at position perm[k].
  static WalledDiagram from_permutation(int r, int s, const std::vector<int>& perm);

  int r() const { return r_; }
  int s() const { return s_; }
  int n() const { return r_ + s_; }
  int partner(int node) const { return match_[node]; }
  bool is_north(int node) const { return node < n(); }
  int position(int node) const { return node % n(); }
  bool left_of_wall(int node) const { return position(node) < r_; }

  // Sorted edge list, each edge (u,v) with u < v.
  std::vector<std::pair<int, int>> edges() const;

  WalledDiagram involution() const;

  // (a, b): propagating lines left and right of the wall.
  std::pair<int, int> propagating_vector() const;
  // Largest i with the diagram in the ideal J_i: r - a.
  int ideal_layer() const;

  friend auto operator<=>(const WalledDiagram&, const WalledDiagram&) = default;

  std::string str() const;

 private:
  int r_, s_;
  std::vector<int> match_;
};

struct MultiplyResult {
  long loops;
  WalledDiagram diagram;
};

// Concatenate a over b, trace composite paths, count closed loops t; the
// algebra product is delta^t times the reduced diagram.
MultiplyResult multiply(const WalledDiagram& a, const WalledDiagram& b);

// All (r+s)! walled diagrams. Guarded by a size bound (default 8).
std::vector<WalledDiagram> enumerate_basis(int r, int s, int bound = 8);

// Partial one-row (r,s,t) diagram: t disjoint cross-wall arcs on a single
// row of r+s nodes. Arcs are 1-based (i,j) with i <= r < j, sorted by i.
struct PartialOneRow {
  int r = 0, s = 0, t = 0;
  std::vector<std::pair<int, int>> arcs;
  friend auto operator<=>(const PartialOneRow&, const PartialOneRow&) = default;
  std::string str() const;
};

// The set V_{r,s,t}, sorted lexicographically by arc sets.
// |V_{r,s,t}| = C(r,t) C(s,t) t!.
std::vector<PartialOneRow> enumerate_one_row(int r, int s, int t);
Int one_row_count(int r, int s, int t);

// The fixed southern configuration of e_{r,s,t}: nested arcs
// (r-k, r+1+k) for k = 0..t-1.
PartialOneRow nested_one_row(int r, int s, int t);

// Position permutation between propagating nodes: sigma[i] = j means the
// i-th northern propagating node (in row order) joins the j-th southern
// propagating node. Wall preservation forces a block structure
// Sigma_{r-t} x Sigma_{s-t}.
struct OneRowFactorization {
  PartialOneRow north;
  PartialOneRow south;
  std::vector<int> sigma;
};

OneRowFactorization factor_one_row(const WalledDiagram& d);
WalledDiagram from_one_row(const PartialOneRow& north, const PartialOneRow& south,
                           const std::vector<int>& sigma);

enum class Side { L, R };

// Psi_L / Psi_R: insert a propagating line immediately left (right) of the
// wall; algebra inclusion B_{r-1,s} -> B_{r,s} (resp. B_{r,s-1} -> B_{r,s}).
WalledDiagram embed_psi(const WalledDiagram& d, Side side);

// Insert two propagating lines at the wall: B_{r-1,s-1} -> B_{r,s}; the
// diagram extension D -> D' underlying the isomorphism onto e B e.
WalledDiagram extend_at_wall(const WalledDiagram& d);

}  // namespace wbr

template <>
struct std::hash<wbr::WalledDiagram> {
  std::size_t operator()(const wbr::WalledDiagram& d) const noexcept {
    std::size_t h = 14695981039346656037ull ^ (static_cast<std::size_t>(d.r()) << 32);
    for (int i = 0; i < 2 * d.n(); ++i)
      h = (h ^ static_cast<std::size_t>(d.partner(i))) * 1099511628211ull;
    return h;
  }
};
