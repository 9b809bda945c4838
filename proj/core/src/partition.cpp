#include "wbr/partition.hpp"

#include <algorithm>
#include <numeric>

namespace wbr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::single_row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (std::size_t i = 1; i <= rows(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({static_cast<int>(i), j});
  return out;
}

Partition Partition::with_box_added(const Box& b) const {
  std::vector<int> v = parts_;
  if (b.row == static_cast<int>(rows()) + 1) {
    if (b.col != 1) throw DomainError("box not addable");
    v.push_back(1);
  } else {
    if (b.row < 1 || b.row > static_cast<int>(rows()) || b.col != part(b.row) + 1)
      throw DomainError("box not addable");
    v[b.row - 1] += 1;
  }
  return Partition(std::move(v));
}

Partition Partition::with_box_removed(const Box& b) const {
  if (b.row < 1 || b.row > static_cast<int>(rows()) || b.col != part(b.row))
    throw DomainError("box not removable");
  std::vector<int> v = parts_;
  v[b.row - 1] -= 1;
  return Partition(std::move(v));
}

Partition Partition::conjugate() const {
  if (empty()) return Partition();
  std::vector<int> v(static_cast<std::size_t>(parts_[0]), 0);
  for (int col = 1; col <= parts_[0]; ++col)
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] >= col) v[col - 1] += 1;
  return Partition(std::move(v));
}

bool Partition::subpartition_of(const Partition& other) const {
  if (rows() > other.rows()) return false;
  for (std::size_t i = 1; i <= rows(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> v;
  for (std::size_t i = 1; i <= std::min(a.rows(), b.rows()); ++i)
    v.push_back(std::min(a.part(i), b.part(i)));
  return Partition(std::move(v));
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (std::size_t i = 1; i <= p.rows(); ++i) {
    if (p.part(i) > p.part(i + 1))
      out.push_back({static_cast<int>(i), p.part(i)});
  }
  return out;
}

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (std::size_t i = 1; i <= p.rows() + 1; ++i) {
    int prev = (i == 1) ? -1 : p.part(i - 1);
    if (i == 1 || p.part(i) < prev)
      out.push_back({static_cast<int>(i), p.part(i) + 1});
  }
  return out;
}

long content_count(const Partition& p, long i, long modulus) {
  if (modulus != 0 && !is_prime(modulus))
    throw DomainError("modulus must be 0 or prime");
  long count = 0;
  for (std::size_t r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c) {
      long cont = c - static_cast<long>(r);
      if (modulus == 0 ? cont == i : mod_pos(cont - i, modulus) == 0) ++count;
    }
  return count;
}

long content_sum(const Partition& p) {
  long sum = 0;
  for (std::size_t r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c) sum += c - static_cast<long>(r);
  return sum;
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree())
    throw DomainError("dominance compares partitions of equal degree");
  long sp = 0, sq = 0;
  for (std::size_t i = 1; i <= std::max(p.rows(), q.rows()); ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sq > sp) return false;
  }
  return true;
}

Int specht_dim(const Partition& p) {
  if (p.empty()) return 1;
  Partition conj = p.conjugate();
  Int hooks = 1;
  for (std::size_t r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c) {
      long arm = p.part(r) - c;
      long leg = conj.part(static_cast<std::size_t>(c)) - static_cast<long>(r);
      hooks *= Int(arm + leg + 1);
    }
  return factorial(static_cast<unsigned long>(p.degree())) / hooks;
}

bool p_regular(const Partition& p, long prime) {
  if (prime == 0) return true;
  long run = 1;
  for (std::size_t i = 2; i <= p.rows(); ++i) {
    run = (p.part(i) == p.part(i - 1)) ? run + 1 : 1;
    if (run >= prime) return false;
  }
  return p.rows() == 0 || run < prime;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    acc.push_back(k);
    partitions_rec(n - k, k, acc, out);
    acc.pop_back();
  }
}

void subpartitions_rec(const Partition& p, std::size_t row, int max_len,
                       std::vector<int>& acc, std::vector<Partition>& out) {
  if (row > p.rows()) {
    out.push_back(Partition(acc));
    return;
  }
  int bound = std::min(max_len, p.part(row));
  for (int k = bound; k >= 0; --k) {
    if (k == 0) {
      out.push_back(Partition(acc));
      return;  // remaining rows forced to 0
    }
    acc.push_back(k);
    subpartitions_rec(p, row + 1, k, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> acc;
  if (p.empty()) {
    out.push_back(Partition());
    return out;
  }
  subpartitions_rec(p, 1, p.part(1), acc, out);
  return out;
}

}  // namespace wbr
