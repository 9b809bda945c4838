#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "wbr/numeric.hpp"

namespace wbr {

// Dense integer polynomial in the single indeterminate delta.
// Coefficients are stored in ascending degree order with no trailing zeros.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit PolyZ(long constant) : PolyZ(Int(constant)) {}
  explicit PolyZ(std::vector<Int> ascending) : c_(std::move(ascending)) {
    normalize();
  }

  static PolyZ delta() { return PolyZ(std::vector<Int>{Int(0), Int(1)}); }

  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  const Int& leading() const { return c_.back(); }

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return PolyZ(std::move(out));
  }
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return PolyZ(std::move(out));
  }
  friend PolyZ operator-(const PolyZ& a) { return PolyZ(Int(0)) - a; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(out));
  }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

  // Exact division; throws if the quotient does not exist in Z[delta].
  static PolyZ exact_div(const PolyZ& num, const PolyZ& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    if (num.is_zero()) return PolyZ();
    std::vector<Int> rem = num.c_;
    long dn = num.degree(), dd = den.degree();
    if (dn < dd) throw DomainError("inexact polynomial division");
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (long k = dn - dd; k >= 0; --k) {
      Int top = rem[k + dd];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), den.leading().get_mpz_t()))
        throw DomainError("inexact polynomial division");
      Int q = top / den.leading();
      quot[k] = q;
      for (long j = 0; j <= dd; ++j) rem[k + j] -= q * den.c_[j];
    }
    for (const Int& r : rem)
      if (r != 0) throw DomainError("inexact polynomial division");
    return PolyZ(std::move(quot));
  }

  template <class T>
  T eval(const T& x) const {
    T acc = T(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }

  Rat eval_rat(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "d") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Int a = c_[i];
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (i == 0) {
        out += a.get_str();
        continue;
      }
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace wbr
