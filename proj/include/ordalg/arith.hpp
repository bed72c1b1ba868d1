#ifndef ORDALG_ARITH_HPP_
#define ORDALG_ARITH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordalg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Malformed user input: bad structure constants, non-integral data, etc.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define ORDALG_CHECK(cond, msg)                                        \
  do {                                                                 \
    if (!(cond)) throw ::ordalg::InternalError(std::string(msg) +      \
                                               " (" #cond ")");        \
  } while (0)

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Floor division for mpz (rounds toward -inf).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtGcd {
  Int g, s, t;
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

/// Prime factorization by trial division; intended for small orders only.
std::vector<std::pair<Int, unsigned>> factor_small(Int n);

/// Euler's phi for small positive arguments.
std::uint64_t euler_phi(std::uint64_t n);

/// True if n is p^k for some k >= 0.
bool is_power_of(const Int& n, const Int& p);

/// Largest divisor of n coprime to p.
Int prime_to_part(const Int& n, const Int& p);

/// Common denominator (lcm of denominators) of a rational vector.
Int common_denominator(const RatVector& v);

RatVector to_rat(const IntVector& v);

/// Throws DomainError unless every entry is an integer.
IntVector to_int(const RatVector& v);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

/// Parses "12", "-3", "5/7". Throws InputError on malformed text.
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

}  // namespace ordalg

#endif  // ORDALG_ARITH_HPP_
