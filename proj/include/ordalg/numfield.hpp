#ifndef ORDALG_NUMFIELD_HPP_
#define ORDALG_NUMFIELD_HPP_

#include <vector>

#include "ordalg/poly.hpp"

namespace ordalg {

/// K = Q[a]/(m(a)) for a monic irreducible m.  Elements are coordinate
/// vectors of length deg m in the power basis 1, a, ..., a^{d-1}.
class NumberField {
 public:
  using Elem = RatVector;

  /// Throws DomainError unless m is monic, nonconstant and irreducible.
  explicit NumberField(RatPoly min_poly);

  int degree() const { return min_poly_.degree(); }
  const RatPoly& min_poly() const { return min_poly_; }

  Elem zero() const { return Elem(degree()); }
  Elem one() const { return from_rat(Rat(1)); }
  Elem gen() const;
  Elem from_rat(const Rat& c) const;
  /// Reduction of a polynomial in the generator.
  Elem from_poly(const RatPoly& p) const;
  RatPoly to_poly(const Elem& x) const { return RatPoly(x); }

  bool is_zero(const Elem& x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  /// Throws DomainError on zero.
  Elem inv(const Elem& x) const;
  /// x^e, e may be negative for x != 0.
  Elem pow(const Elem& x, long e) const;

  /// Matrix of y -> x*y on coordinates.
  RatMatrix mult_matrix(const Elem& x) const;
  Rat norm(const Elem& x) const;
  RatPoly minpoly(const Elem& x) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.min_poly_ == b.min_poly_;
  }

 private:
  RatPoly min_poly_;
};

/// Polynomial over a number field, coefficients lowest degree first, no
/// trailing zeros.  All operations take the field explicitly.
struct NFPoly {
  std::vector<NumberField::Elem> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
};

/// Image of a rational polynomial in K[X].
NFPoly nf_poly_from_rat(const NumberField& k, const RatPoly& f);
NumberField::Elem nf_eval(const NumberField& k, const NFPoly& f,
                          const NumberField::Elem& x);
NFPoly nf_mul(const NumberField& k, const NFPoly& a, const NFPoly& b);
std::pair<NFPoly, NFPoly> nf_divmod(const NumberField& k, const NFPoly& a,
                                    const NFPoly& b);
/// Monic gcd.
NFPoly nf_gcd(const NumberField& k, const NFPoly& a, const NFPoly& b);
NFPoly nf_derivative(const NumberField& k, const NFPoly& f);

/// N_{K(X)/Q(X)}(f) = Res_a(m(a), f(X, a)), a rational polynomial of degree
/// deg(f) * [K:Q] when f is monic.
RatPoly nf_norm(const NumberField& k, const NFPoly& f);

/// All zeros of f in K, sorted by coordinates.  Trager: shift f(X - s a)
/// until its norm is squarefree, factor the norm over Q, and read roots off
/// the linear gcds with the degree-[K:Q] norm factors.
std::vector<NumberField::Elem> roots_in_field(const NumberField& k, const NFPoly& f);

}  // namespace ordalg

#endif  // ORDALG_NUMFIELD_HPP_
