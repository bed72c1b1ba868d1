#ifndef ORDALG_FACTOR_HPP_
#define ORDALG_FACTOR_HPP_

#include <cstdint>
#include <vector>

#include "ordalg/poly.hpp"

namespace ordalg {

struct FactorEntry {
  RatPoly factor;  // monic irreducible over Q
  unsigned multiplicity;
};

/// f = unit * prod factor^multiplicity, factors sorted by (degree, coefficients).
struct Factorization {
  Rat unit;
  std::vector<FactorEntry> factors;
  RatPoly expand() const;
};

/// Factorization over Q: Yun squarefree decomposition, then Zassenhaus
/// (Berlekamp mod the smallest good prime, Hensel lifting past the Mignotte
/// bound, subset recombination).  Throws DomainError for f = 0.
Factorization factor_q(const RatPoly& f);

bool is_irreducible_q(const RatPoly& f);

/// d-th cyclotomic polynomial (d >= 1).
RatPoly cyclotomic(std::uint64_t d);

namespace detail {

/// Irreducible factors of a monic squarefree integer polynomial.
std::vector<IntVector> zassenhaus(const IntVector& f);

/// Monic irreducible factors of a squarefree monic polynomial mod a small
/// prime p (Berlekamp, deterministic splitting).  Coefficients in [0, p).
std::vector<std::vector<std::int64_t>> berlekamp(const std::vector<std::int64_t>& f,
                                                 std::int64_t p);

}  // namespace detail

}  // namespace ordalg

#endif  // ORDALG_FACTOR_HPP_
