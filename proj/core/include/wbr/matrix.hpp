#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wbr/numeric.hpp"

namespace wbr {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

template <class R>
Mat<typename R::Elem> identity_mat(const R& ring, std::size_t n) {
  Mat<typename R::Elem> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class R>
Mat<typename R::Elem> mat_mul(const R& ring, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  Mat<typename R::Elem> out(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <class R>
Mat<typename R::Elem> mat_add(const R& ring, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix dimension mismatch");
  Mat<typename R::Elem> out(a.rows(), a.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  return out;
}

template <class R>
Mat<typename R::Elem> mat_scale(const R& ring, const typename R::Elem& c,
                                const Mat<typename R::Elem>& a) {
  Mat<typename R::Elem> out(a.rows(), a.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.mul(c, a(i, j));
  return out;
}

template <class R>
Mat<typename R::Elem> mat_transpose(const R& ring, const Mat<typename R::Elem>& a) {
  Mat<typename R::Elem> out(a.cols(), a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class R>
bool mat_eq(const R& ring, const Mat<typename R::Elem>& a, const Mat<typename R::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.eq(a(i, j), b(i, j))) return false;
  return true;
}

// Fraction-free (Bareiss) determinant over any integral domain.
template <class R>
typename R::Elem det_bareiss(const R& ring, Mat<typename R::Elem> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ring.one();
  bool negate = false;
  typename R::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring.is_zero(m(piv, k))) ++piv;
    if (piv == n) return ring.zero();
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        typename R::Elem num =
            ring.sub(ring.mul(m(k, k), m(i, j)), ring.mul(m(i, k), m(k, j)));
        m(i, j) = ring.exact_div(num, prev);
      }
      m(i, k) = ring.zero();
    }
    prev = m(k, k);
  }
  typename R::Elem det = m(n - 1, n - 1);
  return negate ? ring.neg(det) : det;
}

// Fraction-free rank, with full (row and column) pivot search. Valid over
// any integral domain.
template <class R>
std::size_t rank_bareiss(const R& ring, Mat<typename R::Elem> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  typename R::Elem prev = ring.one();
  while (r < rows && r < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows && pi == rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (!ring.is_zero(m(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    if (pi != r) m.swap_rows(pi, r);
    if (pj != r) m.swap_cols(pj, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        typename R::Elem num =
            ring.sub(ring.mul(m(r, r), m(i, j)), ring.mul(m(i, r), m(r, j)));
        m(i, j) = ring.exact_div(num, prev);
      }
      m(i, r) = ring.zero();
    }
    prev = m(r, r);
    ++r;
  }
  return r;
}

// Gaussian elimination rank over a field.
template <class F>
std::size_t rank_gauss(const F& field, Mat<typename F::Elem> m) {
  static_assert(F::is_field);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && field.is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) m.swap_rows(piv, r);
    typename F::Elem inv = field.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      typename F::Elem f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
    }
    ++r;
  }
  return r;
}

template <class R>
std::size_t mat_rank(const R& ring, const Mat<typename R::Elem>& m) {
  if constexpr (R::is_field)
    return rank_gauss(ring, m);
  else
    return rank_bareiss(ring, m);
}

// Solve A X = B over a field for A with full column rank; returns nullopt
// if the system is inconsistent, throws if columns are dependent.
template <class F>
std::optional<Mat<typename F::Elem>> solve_full_column_rank(const F& field,
                                                            Mat<typename F::Elem> a,
                                                            Mat<typename F::Elem> b) {
  static_assert(F::is_field);
  if (a.rows() != b.rows()) throw DomainError("matrix dimension mismatch");
  const std::size_t rows = a.rows(), cols = a.cols(), k = b.cols();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < rows && field.is_zero(a(piv, c))) ++piv;
    if (piv == rows) throw DomainError("matrix does not have full column rank");
    if (piv != r) {
      a.swap_rows(piv, r);
      b.swap_rows(piv, r);
    }
    typename F::Elem inv = field.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = field.mul(a(r, j), inv);
    for (std::size_t j = 0; j < k; ++j) b(r, j) = field.mul(b(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(a(i, c))) continue;
      typename F::Elem f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
      for (std::size_t j = 0; j < k; ++j)
        b(i, j) = field.sub(b(i, j), field.mul(f, b(r, j)));
    }
    pivot_row[c] = r;
    ++r;
  }
  // rows beyond the rank must have vanished on the right-hand side
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!field.is_zero(b(i, j))) return std::nullopt;
  Mat<typename F::Elem> x(cols, k, field.zero());
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t j = 0; j < k; ++j) x(c, j) = b(pivot_row[c], j);
  return x;
}

}  // namespace wbr
