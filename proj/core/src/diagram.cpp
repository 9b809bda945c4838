#include "wbr/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace wbr {

namespace {

bool valid_edge(int r, int n, int u, int v) {
  bool un = u < n, vn = v < n;
  int pu = u % n, pv = v % n;
  bool ul = pu < r, vl = pv < r;
  if (un == vn) return ul != vl;  // arc: must cross the wall
  return ul == vl;                // propagating line: must not
}

}  // namespace

WalledDiagram::WalledDiagram(int r, int s, std::vector<int> match)
    : r_(r), s_(s), match_(std::move(match)) {
  if (r < 0 || s < 0) throw DomainError("negative ambient");
  const int m = 2 * (r + s);
  if (static_cast<int>(match_.size()) != m)
    throw DomainError("matching has wrong size");
  for (int u = 0; u < m; ++u) {
    int v = match_[u];
    if (v < 0 || v >= m || v == u || match_[v] != u)
      throw DomainError("not a perfect matching");
    if (!valid_edge(r_, n(), u, v)) throw DomainError("edge violates the wall");
  }
}

WalledDiagram WalledDiagram::identity(int r, int s) {
  const int n = r + s;
  std::vector<int> match(2 * n);
  for (int i = 0; i < n; ++i) {
    match[i] = n + i;
    match[n + i] = i;
  }
  return WalledDiagram(r, s, std::move(match));
}

WalledDiagram WalledDiagram::elementary(int r, int s, int i, int j) {
  if (!(1 <= i && i <= r && r < j && j <= r + s))
    throw DomainError("E_{i,j} requires i <= r < j");
  const int n = r + s;
  std::vector<int> match(2 * n);
  for (int k = 0; k < n; ++k) {
    match[k] = n + k;
    match[n + k] = k;
  }
  match[i - 1] = j - 1;
  match[j - 1] = i - 1;
  match[n + i - 1] = n + j - 1;
  match[n + j - 1] = n + i - 1;
  return WalledDiagram(r, s, std::move(match));
}

WalledDiagram WalledDiagram::from_permutation(int r, int s,
                                              const std::vector<int>& perm) {
  const int n = r + s;
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
  std::vector<int> match(2 * n, -1);
  for (int k = 0; k < n; ++k) {
    match[k] = n + perm[k];
    match[n + perm[k]] = k;
  }
  return WalledDiagram(r, s, std::move(match));
}

std::vector<std::pair<int, int>> WalledDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < 2 * n(); ++u)
    if (match_[u] > u) out.emplace_back(u, match_[u]);
  std::sort(out.begin(), out.end());
  return out;
}

WalledDiagram WalledDiagram::involution() const {
  const int m = n();
  std::vector<int> match(2 * m);
  auto flip = [m](int u) { return u < m ? u + m : u - m; };
  for (int u = 0; u < 2 * m; ++u) match[flip(u)] = flip(match_[u]);
  return WalledDiagram(r_, s_, std::move(match));
}

std::pair<int, int> WalledDiagram::propagating_vector() const {
  int a = 0, b = 0;
  for (int u = 0; u < n(); ++u) {
    if (match_[u] >= n()) (left_of_wall(u) ? a : b) += 1;
  }
  return {a, b};
}

int WalledDiagram::ideal_layer() const { return r_ - propagating_vector().first; }

std::string WalledDiagram::str() const {
  std::string out = "B(" + std::to_string(r_) + "," + std::to_string(s_) + ")[";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) out += " ";
    first = false;
    auto tag = [this](int w) {
      return (is_north(w) ? "N" : "S") + std::to_string(position(w) + 1);
    };
    out += tag(u) + "-" + tag(v);
  }
  return out + "]";
}

MultiplyResult multiply(const WalledDiagram& a, const WalledDiagram& b) {
  if (a.r() != b.r() || a.s() != b.s())
    throw DomainError("ambient mismatch in diagram product");
  const int n = a.n();

  // Middle row: a's southern node i is identified with b's northern node i.
  // Product node ids: 0..n-1 = a's northern row, n..2n-1 = b's southern row.
  std::vector<int> match(2 * n, -1);
  std::vector<bool> mid_seen(n, false);

  auto trace_from_boundary = [&](int start) {
    bool in_a = start < n;
    int node = start;  // node id within its own diagram's numbering
    while (true) {
      int p = in_a ? a.partner(node) : b.partner(node);
      if (in_a && p < n) return p;    // reached a's northern row
      if (!in_a && p >= n) return p;  // reached b's southern row
      int mid = in_a ? p - n : p;
      mid_seen[mid] = true;
      in_a = !in_a;
      node = in_a ? n + mid : mid;
    }
  };

  for (int f = 0; f < 2 * n; ++f) {
    if (match[f] != -1) continue;
    int g = trace_from_boundary(f);
    match[f] = g;
    match[g] = f;
  }

  // Closed loops: cycles of middle nodes not on any boundary path.
  long loops = 0;
  for (int i = 0; i < n; ++i) {
    if (mid_seen[i]) continue;
    ++loops;
    int m = i;
    bool use_a = true;
    do {
      int p = use_a ? a.partner(n + m) : b.partner(m);
      m = use_a ? p - n : p;
      mid_seen[m] = true;
      use_a = !use_a;
    } while (m != i);
  }

  return {loops, WalledDiagram(a.r(), a.s(), std::move(match))};
}

namespace {

void enumerate_rec(int r, int n, std::vector<int>& match,
                   std::vector<WalledDiagram>& out) {
  int u = 0;
  const int m = 2 * n;
  while (u < m && match[u] != -1) ++u;
  if (u == m) {
    out.emplace_back(r, n - r, match);
    return;
  }
  for (int v = u + 1; v < m; ++v) {
    if (match[v] != -1 || !valid_edge(r, n, u, v)) continue;
    match[u] = v;
    match[v] = u;
    enumerate_rec(r, n, match, out);
    match[u] = -1;
    match[v] = -1;
  }
}

}  // namespace

std::vector<WalledDiagram> enumerate_basis(int r, int s, int bound) {
  if (r < 0 || s < 0) throw DomainError("negative ambient");
  if (r + s > bound) throw DomainError("basis enumeration bound exceeded");
  std::vector<int> match(2 * (r + s), -1);
  std::vector<WalledDiagram> out;
  enumerate_rec(r, r + s, match, out);
  return out;
}

std::string PartialOneRow::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(arcs[k].first) + "-" + std::to_string(arcs[k].second);
  }
  return out + "}";
}

Int one_row_count(int r, int s, int t) {
  return binomial(r, t) * binomial(s, t) * factorial(t);
}

namespace {

void one_row_rec(int r, int s, int t, std::vector<int>& left, int next_left,
                 std::vector<PartialOneRow>& out) {
  if (static_cast<int>(left.size()) == t) {
    // all bijections from chosen left nodes to t-subsets of the right nodes
    std::vector<int> rights(s);
    std::iota(rights.begin(), rights.end(), r + 1);
    std::vector<bool> used(s, false);
    std::vector<std::pair<int, int>> arcs(t);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == t) {
        PartialOneRow row{r, s, t, arcs};
        out.push_back(std::move(row));
        return;
      }
      for (int j = 0; j < s; ++j) {
        if (used[j]) continue;
        used[j] = true;
        arcs[k] = {left[k], rights[j]};
        self(self, k + 1);
        used[j] = false;
      }
    };
    rec(rec, 0);
    return;
  }
  for (int i = next_left; i <= r; ++i) {
    left.push_back(i);
    one_row_rec(r, s, t, left, i + 1, out);
    left.pop_back();
  }
}

}  // namespace

std::vector<PartialOneRow> enumerate_one_row(int r, int s, int t) {
  if (t < 0 || t > std::min(r, s)) throw DomainError("invalid arc count");
  std::vector<PartialOneRow> out;
  std::vector<int> left;
  one_row_rec(r, s, t, left, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

PartialOneRow nested_one_row(int r, int s, int t) {
  if (t < 0 || t > std::min(r, s)) throw DomainError("invalid arc count");
  std::vector<std::pair<int, int>> arcs;
  for (int k = t - 1; k >= 0; --k) arcs.emplace_back(r - k, r + 1 + k);
  return {r, s, t, std::move(arcs)};
}

OneRowFactorization factor_one_row(const WalledDiagram& d) {
  const int n = d.n(), r = d.r();
  PartialOneRow north{r, d.s(), 0, {}}, south{r, d.s(), 0, {}};
  std::vector<int> nprop, sprop;
  for (int u = 0; u < n; ++u) {
    int v = d.partner(u);
    if (v < n) {
      if (v > u) north.arcs.emplace_back(std::min(u, v) + 1, std::max(u, v) + 1);
    } else {
      nprop.push_back(u);
    }
  }
  for (int u = n; u < 2 * n; ++u) {
    int v = d.partner(u);
    if (v >= n) {
      if (v > u)
        south.arcs.emplace_back(std::min(u, v) - n + 1, std::max(u, v) - n + 1);
    } else {
      sprop.push_back(u);
    }
  }
  std::sort(north.arcs.begin(), north.arcs.end());
  std::sort(south.arcs.begin(), south.arcs.end());
  north.t = static_cast<int>(north.arcs.size());
  south.t = static_cast<int>(south.arcs.size());

  std::vector<int> sigma(nprop.size());
  for (std::size_t i = 0; i < nprop.size(); ++i) {
    int target = d.partner(nprop[i]);
    auto it = std::lower_bound(sprop.begin(), sprop.end(), target);
    sigma[i] = static_cast<int>(it - sprop.begin());
  }
  return {std::move(north), std::move(south), std::move(sigma)};
}

WalledDiagram from_one_row(const PartialOneRow& north, const PartialOneRow& south,
                           const std::vector<int>& sigma) {
  if (north.r != south.r || north.s != south.s || north.t != south.t)
    throw DomainError("one-row halves have mismatched shape");
  const int r = north.r, n = north.r + north.s;
  std::vector<int> match(2 * n, -1);
  for (auto [i, j] : north.arcs) {
    match[i - 1] = j - 1;
    match[j - 1] = i - 1;
  }
  for (auto [i, j] : south.arcs) {
    match[n + i - 1] = n + j - 1;
    match[n + j - 1] = n + i - 1;
  }
  std::vector<int> nprop, sprop;
  for (int u = 0; u < n; ++u)
    if (match[u] == -1) nprop.push_back(u);
  for (int u = n; u < 2 * n; ++u)
    if (match[u] == -1) sprop.push_back(u);
  if (sigma.size() != nprop.size())
    throw DomainError("permutation size mismatch in one-row assembly");
  for (std::size_t i = 0; i < nprop.size(); ++i) {
    int t = sprop[sigma[i]];
    if (match[t] != -1) throw DomainError("invalid one-row permutation");
    match[nprop[i]] = t;
    match[t] = nprop[i];
  }
  return WalledDiagram(r, north.s, std::move(match));
}

WalledDiagram embed_psi(const WalledDiagram& d, Side side) {
  const int r0 = d.r(), s0 = d.s(), n0 = d.n();
  const int r1 = side == Side::L ? r0 + 1 : r0;
  const int s1 = side == Side::L ? s0 : s0 + 1;
  const int n1 = n0 + 1;
  // position of the inserted line, 0-based in the new ambient
  const int ins = side == Side::L ? r1 - 1 : r1;
  auto remap = [&](int u) {
    bool nrth = u < n0;
    int pos = u % n0;
    int npos = pos + (pos >= ins ? 1 : 0);
    return nrth ? npos : n1 + npos;
  };
  std::vector<int> match(2 * n1, -1);
  for (int u = 0; u < 2 * n0; ++u) match[remap(u)] = remap(d.partner(u));
  match[ins] = n1 + ins;
  match[n1 + ins] = ins;
  return WalledDiagram(r1, s1, std::move(match));
}

WalledDiagram extend_at_wall(const WalledDiagram& d) {
  const int r0 = d.r(), s0 = d.s(), n0 = d.n();
  const int r1 = r0 + 1, s1 = s0 + 1, n1 = n0 + 2;
  auto remap = [&](int u) {
    bool nrth = u < n0;
    int pos = u % n0;
    int npos = pos + (pos >= r0 ? 2 : 0);
    return nrth ? npos : n1 + npos;
  };
  std::vector<int> match(2 * n1, -1);
  for (int u = 0; u < 2 * n0; ++u) match[remap(u)] = remap(d.partner(u));
  for (int ins : {r1 - 1, r1}) {
    match[ins] = n1 + ins;
    match[n1 + ins] = ins;
  }
  return WalledDiagram(r1, s1, std::move(match));
}

}  // namespace wbr
