#include "wbr/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wbr/rings.hpp"

namespace wbr {

namespace {

// A tabloid is an ordered set partition of {1..n} with row sizes given by
// the shape; canonical form keeps each row sorted.
using Tabloid = std::vector<std::vector<int>>;

Tabloid canonical(Tabloid t) {
  for (auto& row : t) std::sort(row.begin(), row.end());
  return t;
}

void enumerate_tabloids_rec(const std::vector<int>& sizes, std::size_t row,
                            std::vector<int>& pool, Tabloid& acc,
                            std::vector<Tabloid>& out) {
  if (row == sizes.size()) {
    out.push_back(acc);
    return;
  }
  // choose sizes[row] elements of pool, ascending
  std::vector<int> chosen;
  auto choose = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == sizes[row]) {
      std::vector<int> rest;
      for (int x : pool)
        if (!std::binary_search(chosen.begin(), chosen.end(), x)) rest.push_back(x);
      acc.push_back(chosen);
      std::vector<int> saved = pool;
      pool = rest;
      enumerate_tabloids_rec(sizes, row + 1, pool, acc, out);
      pool = saved;
      acc.pop_back();
      return;
    }
    for (std::size_t k = start; k < pool.size(); ++k) {
      chosen.push_back(pool[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0);
}

std::vector<Tabloid> enumerate_tabloids(const Partition& shape) {
  std::vector<int> sizes(shape.parts().begin(), shape.parts().end());
  std::vector<int> pool(shape.degree());
  std::iota(pool.begin(), pool.end(), 1);
  Tabloid acc;
  std::vector<Tabloid> out;
  enumerate_tabloids_rec(sizes, 0, pool, acc, out);
  std::sort(out.begin(), out.end());  // lexicographic by row-set sequences
  return out;
}

Tabloid apply_perm(const std::vector<int>& perm, const Tabloid& t) {
  Tabloid out = t;
  for (auto& row : out)
    for (int& x : row) x = perm[x - 1] + 1;
  return canonical(out);
}

// Column stabilizer of a tableau, as explicit permutations with signs.
void column_group(const StandardTableau& tab,
                  std::vector<std::pair<std::vector<int>, int>>& out) {
  const int n = static_cast<int>(tab.shape.degree());
  Partition conj = tab.shape.conjugate();
  std::vector<std::vector<int>> columns;
  for (std::size_t c = 1; c <= conj.rows(); ++c) {
    std::vector<int> col;
    for (int r = 1; r <= conj.part(c); ++r) col.push_back(tab.at(r, static_cast<int>(c)));
    columns.push_back(col);
  }
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  out.push_back({id, 1});
  for (const auto& col : columns) {
    std::vector<int> perm(col.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> next;
    do {
      // sign of perm
      int sign = 1;
      std::vector<bool> seen(perm.size(), false);
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
          seen[j] = true;
          j = perm[j];
          ++len;
        }
        if (len % 2 == 0) sign = -sign;
      }
      for (const auto& [base, bsign] : out) {
        std::vector<int> combined = base;
        for (std::size_t i = 0; i < col.size(); ++i)
          combined[col[i] - 1] = base[col[perm[i]] - 1];
        next.push_back({std::move(combined), bsign * sign});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation walks all orderings but we started at identity, so
    // collect the identity pass plus the rest
    out = std::move(next);
  }
}

}  // namespace

std::vector<int> adjacent_word(const std::vector<int>& perm) {
  std::vector<int> v = perm;
  std::vector<int> word;
  // bubble sort; each swap of positions (i, i+1) appends generator i
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i));
        dirty = true;
      }
    }
  }
  // sorting multiplied perm on the right by each swap; reverse to recover it
  std::reverse(word.begin(), word.end());
  return word;
}

Mat<Int> SpechtRep::perm_matrix(const std::vector<int>& perm) const {
  IntRing z;
  Mat<Int> acc = identity_mat(z, static_cast<std::size_t>(dim()));
  // perm = s_{w_0} ... s_{w_k} from adjacent_word; a left action multiplies
  // the generator matrices in the same order
  for (int i : adjacent_word(perm)) acc = mat_mul(z, acc, gens[i]);
  return acc;
}

SpechtRep build_specht(const Partition& shape, int degree_bound) {
  if (shape.degree() > degree_bound)
    throw DomainError("Specht construction bound exceeded");
  const int n = static_cast<int>(shape.degree());

  SpechtRep rep;
  rep.shape = shape;
  rep.basis = standard_tableaux(shape);
  const std::size_t f = rep.basis.size();

  std::vector<Tabloid> tabloids = enumerate_tabloids(shape);
  std::map<Tabloid, std::size_t> index;
  for (std::size_t i = 0; i < tabloids.size(); ++i) index[tabloids[i]] = i;
  const std::size_t m = tabloids.size();

  // polytabloid coordinates in the tabloid basis
  Mat<Int> E(m, f, Int(0));
  for (std::size_t j = 0; j < f; ++j) {
    std::vector<std::pair<std::vector<int>, int>> group;
    column_group(rep.basis[j], group);
    Tabloid base;
    for (const auto& row : rep.basis[j].entries) base.push_back(row);
    base = canonical(base);
    for (const auto& [perm, sign] : group)
      E(index.at(apply_perm(perm, base)), j) += sign;
  }

  // each generator: permute the polytabloid vectors, solve back
  RationalField q(0);
  Mat<Rat> Eq(m, f);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < f; ++j) Eq(i, j) = Rat(E(i, j));

  for (int g = 0; g + 1 < n; ++g) {
    std::vector<int> sg(n);
    std::iota(sg.begin(), sg.end(), 0);
    std::swap(sg[g], sg[g + 1]);
    Mat<Rat> rhs(m, f, Rat(0));
    for (std::size_t j = 0; j < f; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        if (E(i, j) == 0) continue;
        rhs(index.at(apply_perm(sg, tabloids[i])), j) += Rat(E(i, j));
      }
    auto sol = solve_full_column_rank(q, Eq, rhs);
    if (!sol) throw DomainError("polytabloid image left the Specht span");
    Mat<Int> gm(f, f);
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = 0; b < f; ++b) {
        if (!is_integer((*sol)(a, b)))
          throw DomainError("non-integral straightening coefficient");
        gm(a, b) = (*sol)(a, b).get_num();
      }
    rep.gens.push_back(std::move(gm));
  }

  rep.form = Mat<Int>(f, f, Int(0));
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b) {
      Int acc = 0;
      for (std::size_t i = 0; i < m; ++i) acc += E(i, a) * E(i, b);
      rep.form(a, b) = acc;
    }
  return rep;
}

Mat<Int> kronecker(const Mat<Int>& a, const Mat<Int>& b) {
  Mat<Int> out(a.rows() * b.rows(), a.cols() * b.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Mat<Int> ProductRep::perm_matrix(const std::vector<int>& perm) const {
  const int r = offset;
  const int n = letters();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
  std::vector<int> pl(r), pr(n - r);
  for (int i = 0; i < n; ++i) {
    if ((i < r) != (perm[i] < r))
      throw DomainError("permutation crosses the wall");
    if (i < r)
      pl[i] = perm[i];
    else
      pr[i - r] = perm[i] - r;
  }
  return kronecker(left.perm_matrix(pl), right.perm_matrix(pr));
}

Mat<Int> ProductRep::form() const { return kronecker(left.form, right.form); }

ProductRep build_product_rep(const Partition& l, const Partition& r, int degree_bound) {
  return ProductRep{build_specht(l, degree_bound), build_specht(r, degree_bound),
                    static_cast<int>(l.degree())};
}

}  // namespace wbr
