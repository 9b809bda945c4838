#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wbr {

// Exact arithmetic backbone. All computations in this library are exact:
// arbitrary-precision integers and rationals via GMP, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when an operation is asked for outside its mathematical domain
// (mismatched ambients, undefined idempotents, unsupported parameter regimes).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_prime(long p) {
  if (p < 2) return false;
  Int n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Floor-positive remainder: result in [0, m).
inline long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace wbr
