#ifndef ORDALG_POLY_HPP_
#define ORDALG_POLY_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/matrix.hpp"

namespace ordalg {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(RatVector coeffs);
  /// Integer coefficients, lowest degree first: {-1, 0, 1} is X^2 - 1.
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, std::size_t k);
  static RatPoly x() { return monomial(Rat(1), 1); }
  static RatPoly from_ints(const IntVector& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const RatVector& coeffs() const { return c_; }
  /// Coefficient of X^i (zero past the degree).
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const;

  RatPoly monic() const;
  RatPoly derivative() const;
  Rat eval(const Rat& x) const;
  /// f(g(X)).
  RatPoly compose(const RatPoly& g) const;

  /// True if every coefficient is an integer.
  bool is_integral() const;
  IntVector int_coeffs() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);
  friend RatPoly operator/(const RatPoly& a, const RatPoly& b);  // exact quotient part
  friend RatPoly operator%(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  /// Total order: degree first, then coefficients from the constant term up.
  friend bool operator<(const RatPoly& a, const RatPoly& b);

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  RatVector c_;
};

struct PolyDivMod {
  RatPoly quotient;
  RatPoly remainder;
};

PolyDivMod divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// g = s*a + t*b with g the monic gcd.
struct PolyExtGcd {
  RatPoly g, s, t;
};
PolyExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

RatPoly pow(const RatPoly& f, unsigned e);

/// Resultant over Q by the Euclidean remainder sequence.
Rat resultant(const RatPoly& f, const RatPoly& g);

/// Discriminant of a nonconstant polynomial.
Rat discriminant(const RatPoly& f);

/// Monic product of the distinct irreducible factors of f.
RatPoly squarefree_part(const RatPoly& f);

/// Yun's decomposition of a monic f: f = prod a_i^i with a_i squarefree,
/// pairwise coprime.  Entries with a_i = 1 are omitted.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

/// Minimal monic p with p(L) v = 0 (Krylov sequence of v under L).
RatPoly minpoly_of_operator(const RatMatrix& l, const RatVector& v);

}  // namespace ordalg

#endif  // ORDALG_POLY_HPP_
