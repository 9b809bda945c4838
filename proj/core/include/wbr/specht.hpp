#pragma once

#include <vector>

#include "wbr/matrix.hpp"
#include "wbr/numeric.hpp"
#include "wbr/partition.hpp"
#include "wbr/tableau.hpp"

namespace wbr {

// Explicit integral matrices for the Specht module S^shape: the standard
// polytabloids realized inside the tabloid permutation module, generator
// matrices obtained by exact linear solve, and the restriction of the
// natural tabloid pairing as an invariant bilinear form.
//
// Matrices have integer entries, so a prime-field specialization is
// entry-wise reduction.
struct SpechtRep {
  Partition shape;
  std::vector<StandardTableau> basis;  // last-letter order
  std::vector<Mat<Int>> gens;          // adjacent transpositions s_1..s_{n-1}
  Mat<Int> form;                       // symmetric, Sigma_n-invariant

  long dim() const { return static_cast<long>(basis.size()); }

  // Matrix of an arbitrary permutation (0-based images on letters 0..n-1),
  // as a word in the generator matrices.
  Mat<Int> perm_matrix(const std::vector<int>& perm) const;
};

SpechtRep build_specht(const Partition& shape, int degree_bound = 7);

// Outer tensor product S^{left} x S^{right} for Sigma_r x Sigma_s; the
// right factor acts on letters r+1..r+s.
struct ProductRep {
  SpechtRep left;
  SpechtRep right;
  int offset;  // = r

  long dim() const { return left.dim() * right.dim(); }
  int letters() const {
    return offset + static_cast<int>(right.shape.degree());
  }

  // Matrix of a wall-preserving permutation of the letters 0..r+s-1
  // (0-based images). Wall-crossing permutations are rejected.
  Mat<Int> perm_matrix(const std::vector<int>& perm) const;
  // Invariant form: Kronecker product of the two factor forms.
  Mat<Int> form() const;
};

ProductRep build_product_rep(const Partition& left, const Partition& right,
                             int degree_bound = 7);

Mat<Int> kronecker(const Mat<Int>& a, const Mat<Int>& b);

// Word in adjacent transpositions multiplying to the permutation
// (0-based images); entries are 0-based generator indices i (swapping
// letters i and i+1).
std::vector<int> adjacent_word(const std::vector<int>& perm);

}  // namespace wbr
