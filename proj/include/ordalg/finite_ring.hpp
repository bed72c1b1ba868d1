#ifndef ORDALG_FINITE_RING_HPP_
#define ORDALG_FINITE_RING_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "ordalg/abgroup.hpp"

namespace ordalg {

/// Finite commutative ring Z^g / L with generator products given as integer
/// combinations of the g generators.  Elements are canonical representatives
/// (Lattice::reduce), so equality is vector equality.
class FiniteRing {
 public:
  FiniteRing() = default;

  /// `table[(i*g + j)*g + k]` is the k-th coefficient of e_i * e_j.  Throws
  /// InputError if L is not full rank, the products are not well defined
  /// modulo L, or the ring is not commutative, associative and unital with
  /// identity `one`.
  static FiniteRing create(Lattice relations, std::vector<Int> table, IntVector one);

  /// Z/n.
  static FiniteRing integers_mod(const Int& n);
  /// (Z/n)[X]/(f) for monic f (lowest degree first).
  static FiniteRing poly_quotient(const Int& n, const IntVector& f);

  std::size_t generators() const { return g_; }
  const Lattice& relations() const { return rel_; }
  Int size() const { return rel_.covolume(); }

  IntVector reduce(const IntVector& x) const { return rel_.reduce(x); }
  IntVector zero() const { return IntVector(g_); }
  const IntVector& one() const { return one_; }
  IntVector basis_element(std::size_t i) const;
  bool is_zero(const IntVector& x) const { return reduce(x) == zero(); }

  IntVector add(const IntVector& x, const IntVector& y) const;
  IntVector sub(const IntVector& x, const IntVector& y) const;
  IntVector neg(const IntVector& x) const;
  IntVector scale(const Int& c, const IntVector& x) const;
  IntVector mul(const IntVector& x, const IntVector& y) const;
  IntVector pow(const IntVector& x, Int e) const;

  /// All elements, in lexicographic order of the canonical box.
  std::vector<IntVector> elements() const;

 private:
  std::size_t g_ = 0;
  Lattice rel_;
  std::vector<Int> table_;
  IntVector one_;
};

/// An ideal, stored as its preimage in Z^g (a lattice containing L).
struct RingIdeal {
  Lattice lattice;

  bool contains(const IntVector& x) const { return lattice.contains(x); }
  friend bool operator==(const RingIdeal& a, const RingIdeal& b) { return a.lattice == b.lattice; }
};

RingIdeal ideal_generated(const FiniteRing& r, const std::vector<IntVector>& gens);
RingIdeal zero_ideal(const FiniteRing& r);
RingIdeal ideal_product(const FiniteRing& r, const RingIdeal& a, const RingIdeal& b);
bool is_zero_ideal(const FiniteRing& r, const RingIdeal& a);
/// #(I / 0).
Int ideal_size(const FiniteRing& r, const RingIdeal& a);

/// Additive group I1/I2 with cyclic generators from the Smith form.  Throws
/// DomainError unless I2 is contained in I1.  The dlog returns nullopt off I1.
EffPresentation<IntVector> quotient_presentation(const FiniteRing& r, const RingIdeal& i1,
                                                 const RingIdeal& i2);

/// Level i of the filtration I ⊃ I^2 ⊃ I^4 ⊃ ...
struct FiltrationLevel {
  RingIdeal ideal;  // I^{2^i}
  RingIdeal next;   // I^{2^{i+1}}
  EffPresentation<IntVector> additive;  // ideal / next
  const std::vector<IntVector>& b() const { return additive.generators; }
};

/// Nonzero levels only.  Throws DomainError if the powers stabilize at a
/// nonzero ideal.
std::vector<FiltrationLevel> filtration_generators(const FiniteRing& r, const RingIdeal& i);

/// m over the concatenated level generators with 1 + x = prod (1 + b)^{m_b},
/// starting at level `from`.  Throws DomainError if x is not in that level.
IntVector unipotent_dlog(const FiniteRing& r, const std::vector<FiltrationLevel>& filt,
                         const IntVector& x, std::size_t from = 0);

/// Kernel generators of Z^B -> 1 + I (columns).
IntMatrix unipotent_relations(const FiniteRing& r, const std::vector<FiltrationLevel>& filt);

/// Units of a finite ring under multiplication.
struct FiniteRingUnits {
  using Elem = IntVector;
  std::shared_ptr<const FiniteRing> ring;

  Elem identity() const { return ring->one(); }
  Elem multiply(const Elem& a, const Elem& b) const { return ring->mul(a, b); }
  /// Throws DomainError for non-units.
  Elem inverse(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return ring->reduce(a) == ring->reduce(b); }
};

struct UnipotentPresentation {
  std::vector<FiltrationLevel> filtration;
  EffPresentation<IntVector> presentation;  // generators 1 + b
};

UnipotentPresentation unipotent_presentation(std::shared_ptr<const FiniteRing> r,
                                             const RingIdeal& i);

}  // namespace ordalg

#endif  // ORDALG_FINITE_RING_HPP_
