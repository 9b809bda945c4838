#pragma once

#include <string>
#include <variant>

#include "wbr/numeric.hpp"
#include "wbr/poly.hpp"

namespace wbr {

// A computation runs in exactly one coefficient context: the polynomial
// ring Z[delta], the rationals with delta specialized, or a prime field
// with delta specialized. Mixing contexts is rejected at API boundaries.

struct SymbolicRing {
  using Elem = PolyZ;
  static constexpr bool is_field = false;
  static const char* name() { return "symbolic"; }

  Elem zero() const { return PolyZ(); }
  Elem one() const { return PolyZ(1); }
  Elem from_int(const Int& n) const { return PolyZ(n); }
  Elem delta_value() const { return PolyZ::delta(); }
  Elem delta_pow(long t) const {
    Elem out = one();
    for (long i = 0; i < t; ++i) out = out * delta_value();
    return out;
  }
  bool delta_is_zero() const { return false; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem exact_div(const Elem& a, const Elem& b) const { return PolyZ::exact_div(a, b); }
  std::string str(const Elem& a) const { return a.str(); }
};

// Plain integers, for matrix work outside any delta context.
struct IntRing {
  using Elem = Int;
  static constexpr bool is_field = false;
  static const char* name() { return "integer"; }

  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_int(const Int& n) const { return n; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem exact_div(const Elem& a, const Elem& b) const {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw DomainError("inexact integer division");
    return a / b;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
};

struct RationalField {
  using Elem = Rat;
  static constexpr bool is_field = true;
  static const char* name() { return "rational"; }

  Rat delta;
  explicit RationalField(Rat d) : delta(std::move(d)) { delta.canonicalize(); }
  explicit RationalField(long d) : delta(d) {}

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem delta_value() const { return delta; }
  Elem delta_pow(long t) const {
    Elem out(1);
    for (long i = 0; i < t; ++i) out *= delta;
    return out;
  }
  bool delta_is_zero() const { return delta == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("division by zero");
    return Rat(1) / a;
  }
  Elem exact_div(const Elem& a, const Elem& b) const { return a / b; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

struct PrimeField {
  using Elem = long;  // representative in [0, p)
  static constexpr bool is_field = true;
  static const char* name() { return "prime"; }

  long p;
  long delta;
  PrimeField(long p_, long delta_) : p(p_), delta(mod_pos(delta_, p_)) {
    if (!is_prime(p_)) throw DomainError("characteristic must be prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(const Int& n) const {
    Int m = n % p;
    long v = static_cast<long>(m.get_si());
    return mod_pos(v, p);
  }
  Elem delta_value() const { return delta; }
  Elem delta_pow(long t) const {
    Elem out = one();
    for (long i = 0; i < t; ++i) out = mul(out, delta);
    return out;
  }
  bool delta_is_zero() const { return delta == 0; }

  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return mod_pos(a - b, p); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return mod_pos(-a, p); }
  bool is_zero(Elem a) const { return a % p == 0; }
  bool eq(Elem a, Elem b) const { return mod_pos(a - b, p) == 0; }
  Elem inv(Elem a) const {
    a = mod_pos(a, p);
    if (a == 0) throw DomainError("division by zero in prime field");
    // extended Euclid
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      long q = r / new_r;
      long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return mod_pos(t, p);
  }
  Elem exact_div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string str(Elem a) const { return std::to_string(mod_pos(a, p)); }
};

// Parameter-level description of delta, as accepted on API boundaries:
// an exact rational (integer or not) or the symbolic indeterminate.
struct DeltaDesc {
  enum class Kind { Integer, Rational, Symbolic };
  Kind kind = Kind::Integer;
  Rat value = Rat(0);

  static DeltaDesc integer(long v) { return {Kind::Integer, Rat(v)}; }
  static DeltaDesc rational(Rat v) {
    v.canonicalize();
    return {is_integer(v) ? Kind::Integer : Kind::Rational, v};
  }
  static DeltaDesc symbolic() { return {Kind::Symbolic, Rat(0)}; }

  bool is_symbolic() const { return kind == Kind::Symbolic; }
  bool is_int() const { return kind == Kind::Integer; }
  long as_long() const {
    if (!is_int()) throw DomainError("delta is not an integer");
    return static_cast<long>(value.get_num().get_si());
  }
  std::string str() const { return is_symbolic() ? "symbolic" : value.get_str(); }
};

// Parse "5", "-3", "1/2" or "symbolic".
inline DeltaDesc parse_delta(const std::string& s) {
  if (s == "symbolic") return DeltaDesc::symbolic();
  try {
    Rat q(s);
    q.canonicalize();
    return DeltaDesc::rational(q);
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse delta value: " + s);
  }
}

// Run f with the ring determined by (delta, p). f must be callable with
// each of the three ring types and return a common type.
template <class F>
auto with_ring(const DeltaDesc& delta, long p, F&& f) {
  if (p != 0) {
    if (!is_prime(p)) throw DomainError("characteristic must be 0 or prime");
    if (delta.is_symbolic()) throw DomainError("symbolic delta in a prime field context");
    const Rat& q = delta.value;
    PrimeField fp(p, 0);
    long num = fp.from_int(q.get_num());
    long den = fp.from_int(q.get_den());
    return f(PrimeField(p, fp.mul(num, fp.inv(den))));
  }
  if (delta.is_symbolic()) return f(SymbolicRing{});
  return f(RationalField(delta.value));
}

}  // namespace wbr
