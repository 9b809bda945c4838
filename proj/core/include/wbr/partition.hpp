#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wbr/numeric.hpp"

namespace wbr {

// Box of a Young diagram, indexed from 1 in both coordinates.
// content(Box) = col - row in the partition-native convention.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline long content(const Box& b) { return b.col - b.row; }

// Integer partition: weakly decreasing sequence of positive parts.
// The empty partition is a first-class value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition single_row(int n);

  long degree() const { return degree_; }
  std::size_t rows() const { return parts_.size(); }
  // 1-based row length; rows beyond the last have length 0
  int part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains_box(const Box& b) const {
    return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
  }
  std::vector<Box> boxes() const;
  Partition with_box_added(const Box& b) const;
  Partition with_box_removed(const Box& b) const;
  Partition conjugate() const;
  bool subpartition_of(const Partition& other) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string str() const;

 private:
  std::vector<int> parts_;
  long degree_ = 0;
};

// Intersection of Young diagrams (row-wise minimum).
Partition intersect(const Partition& a, const Partition& b);

std::vector<Box> removable_boxes(const Partition& p);
std::vector<Box> addable_boxes(const Partition& p);

// Number of boxes of content congruent to i (mod modulus when modulus > 0,
// exact when modulus = 0).
long content_count(const Partition& p, long i, long modulus = 0);

// Sum of contents of all boxes.
long content_sum(const Partition& p);

// Dominance order; requires equal degree.
bool dominates(const Partition& p, const Partition& q);

// Count of standard Young tableaux, by the hook length formula.
Int specht_dim(const Partition& p);

// p-regularity: no part value repeated >= prime times (always true for prime = 0).
bool p_regular(const Partition& p, long prime);

// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

// All subpartitions of p (Young diagrams contained in p's).
std::vector<Partition> subpartitions(const Partition& p);

struct Bipartition {
  Partition left;
  Partition right;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
  std::string str() const { return "(" + left.str() + "," + right.str() + ")"; }
};

inline bool contained_in(const Bipartition& a, const Bipartition& b) {
  return a.left.subpartition_of(b.left) && a.right.subpartition_of(b.right);
}

inline Bipartition intersect(const Bipartition& a, const Bipartition& b) {
  return {intersect(a.left, b.left), intersect(a.right, b.right)};
}

}  // namespace wbr

template <>
struct std::hash<wbr::Partition> {
  std::size_t operator()(const wbr::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
