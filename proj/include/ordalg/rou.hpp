#ifndef ORDALG_ROU_HPP_
#define ORDALG_ROU_HPP_

#include <memory>
#include <vector>

#include "ordalg/finite_ring.hpp"
#include "ordalg/order.hpp"

namespace ordalg {

/// ff = {x in C : xC in A_sep} with the finite rings C/ff and A_sep/ff, and the
/// ideals I = sum (zeta - 1)(C/ff) and I' = I cap A_sep/ff.  C/ff is presented
/// on the HNF basis of C, A_sep/ff on the HNF basis of A_sep.
struct ConductorData {
  Lattice c;   // B-coordinates
  Lattice ff;  // B-coordinates
  std::shared_ptr<const FiniteRing> c_mod_ff;
  std::shared_ptr<const FiniteRing> a_mod_ff;
  IntMatrix a_to_c;  // A_sep-coordinates -> C-coordinates
  RingIdeal i;
  RingIdeal i_prime;

  /// C-coordinates of an element of C given in B-coordinates.
  IntVector to_c(const IntVector& x) const;
};

/// `m` are the generators of mu(C)_p in B-coordinates.
ConductorData conductor(const Tower& t, const Lattice& c, const std::vector<IntVector>& m);

/// One run of the descent from mu(C)_p to mu(A)_p.
struct Descent {
  Int p;
  MuCp mu_c;
  ConductorData cond;
  UnipotentPresentation one_plus_i;
  UnipotentPresentation one_plus_i_prime;
  Lattice ker_psi;                   // in Z^M
  std::vector<IntVector> generators; // mu(A)_p generators, A-coordinates
};

Descent mu_a_p_descent(const Tower& t, const Int& p, bool naive_lift = false);

/// Raw union over the primes of #mu(B) of the mu(A)_p generators, in
/// A-coordinates.
std::vector<IntVector> mu_a_generators(const Tower& t, bool naive_lift = false);
std::vector<IntVector> mu_a_generators(const Order& a, bool naive_lift = false);

/// Efficient presentation of mu(A) on the generators above, in A-coordinates.
EffPresentation<IntVector> mu_a_presentation(const Tower& t, bool naive_lift = false);

/// Decides whether zeta lies in <T> inside mu(E).  NotInGroup means zeta is
/// not in mu(E).  Throws DomainError if some element of T is not in mu(E).
MembershipResult mu_e_subgroup_dlog(const QAlgebra& e, const std::vector<RatVector>& t,
                                    const RatVector& zeta);

}  // namespace ordalg

#endif  // ORDALG_ROU_HPP_
