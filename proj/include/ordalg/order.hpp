#ifndef ORDALG_ORDER_HPP_
#define ORDALG_ORDER_HPP_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ordalg/abgroup.hpp"
#include "ordalg/qalgebra.hpp"

namespace ordalg {

/// Commutative ring with additive group Z^n and integer structure constants.
class Order {
 public:
  Order() = default;

  /// `table[(i*n + j)*n + k]` = a_ijk.  Validates like QAlgebra::from_table
  /// and additionally requires the identity to have integer coordinates.
  static Order from_table(std::size_t n, std::vector<Int> table);
  /// Z[X]/(f) in the basis 1, X, ..., X^{n-1}; f monic, lowest degree first.
  static Order from_poly(const IntVector& f);

  std::size_t rank() const { return n_; }
  const std::vector<Int>& table() const { return table_; }
  const Int& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }
  const IntVector& one() const { return one_; }
  IntVector mul(const IntVector& x, const IntVector& y) const;
  IntMatrix mult_matrix(const IntVector& x) const;
  QAlgebra algebra() const;

 private:
  std::size_t n_ = 0;
  std::vector<Int> table_;
  IntVector one_;
};

/// Multiplicative group of units of an order (used on roots of unity).
struct OrderUnits {
  using Elem = IntVector;
  std::shared_ptr<const Order> order;

  Elem identity() const { return order->one(); }
  Elem multiply(const Elem& a, const Elem& b) const { return order->mul(a, b); }
  /// Throws DomainError for non-units.
  Elem inverse(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

/// Vertices are components of Spec(E); weights[m][n] = n(D, m, n).
struct WeightedGraph {
  std::size_t vertices = 0;
  std::vector<std::vector<Int>> weights;  // symmetric, diagonal unused (0)

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // m < n, weight > 1
  /// Connected components, each sorted, ordered by their smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
};

/// Roots of unity of one residue order B_m = A_sep / (m cap A_sep).
struct ResidueMu {
  NumberField::Elem theta;  // generator, field coordinates
  Int order;
  std::vector<std::pair<Int, unsigned>> factorization;
  std::map<Int, NumberField::Elem> theta_p;  // p -> generator of the p-part
  std::map<Int, Int> order_p;                // p -> its order p^k
};

/// A, A_sep, and B = prod_m B_m, with B-coordinates: coordinates in the
/// block-diagonal basis of B built from HNF bases of the residue orders.
/// In B-coordinates B is Z^d and every order between A_sep and B is a full
/// rank lattice.
struct Tower {
  Order a;
  QAlgebra e;
  SpecDecomposition dec;
  MuData mu_e;

  Lattice a_sep;               // in A-coordinates, rank d
  std::vector<RatMatrix> b_blocks;  // basis of B_m in field coordinates
  std::vector<RatMatrix> b_blocks_inv;
  RatMatrix b_basis;           // d x d, product coordinates of the B basis
  RatMatrix b_basis_inv;
  Lattice a_sep_b;             // A_sep in B-coordinates
  IntMatrix a_sep_to_b;        // columns: A_sep HNF basis vectors in B-coords
  std::shared_ptr<const Order> b;  // B with structure constants in B-coords
  Int index_b_a_sep;
  std::vector<ResidueMu> residue;  // per component
  std::vector<Int> primes;         // primes dividing #mu(B), ascending

  std::size_t d() const { return b_basis.cols(); }
  std::size_t components() const { return dec.size(); }
  /// Row range of component m in B-coordinates.
  std::size_t block_begin(std::size_t m) const { return dec.offsets[m]; }
  std::size_t block_size(std::size_t m) const { return dec.degree(m); }

  RatVector b_to_product(const IntVector& x) const { return b_basis * to_rat(x); }
  RatVector b_to_e(const IntVector& x) const { return dec.lift(b_to_product(x)); }
  /// nullopt if the element is not in A (non-integral A-coordinates).
  std::optional<IntVector> b_to_a(const IntVector& x) const;
  /// B-coordinates of an element of E_sep; nullopt if it is not in B.
  std::optional<IntVector> e_to_b(const RatVector& x) const;
  /// B_m-coordinates of a field element of component m (nullopt if not in B_m).
  std::optional<IntVector> field_to_block(std::size_t m, const NumberField::Elem& x) const;
  NumberField::Elem block_to_field(std::size_t m, const IntVector& x) const;
  /// Element of B with the given per-component field values.
  IntVector b_from_fields(const std::vector<NumberField::Elem>& values) const;
};

Tower build_tower(const Order& a);

/// A_sep with its embeddings: basis in A-coordinates and in E_sep.
struct SeparablePart {
  Order order;          // A_sep in the HNF basis
  IntMatrix in_a;       // n x d, basis in A-coordinates
  RatMatrix in_e_sep;   // d x d, basis in the sep_basis of E
};
SeparablePart separable_part(const Tower& t);

/// Gamma(D) for a full-rank lattice D between A_sep and B (B-coordinates).
/// Weights are HNF determinants, cross-checked against SNF products.
WeightedGraph lattice_graph(const Tower& t, const Lattice& d);
/// Gamma(A_sep).
WeightedGraph order_graph(const Tower& t);
/// Gamma(D) of a standalone order; DomainError unless D_Q is separable.
WeightedGraph order_graph(const Order& d);

/// Primitive idempotents in A-coordinates, one per component of Gamma(A_sep).
std::vector<IntVector> primitive_idempotents(const Tower& t);
std::vector<IntVector> primitive_idempotents(const Order& a);

/// Monic divisors g of f (f monic squarefree, integer) with R(g, f/g) = +-1,
/// by enumerating products of irreducible factors.
std::vector<RatPoly> idempotent_divisor_oracle(const IntVector& f);

/// mu(B) = prod_m <theta_m> in B-coordinates.
EffPresentation<IntVector> mu_b_presentation(const Tower& t);
/// mu(B)_p = prod_m <theta_{m,p}> (components with trivial p-part keep a
/// generator of order 1).
EffPresentation<IntVector> mu_b_p_presentation(const Tower& t, const Int& p);

/// C = A_sep[1/p] cap B = tB + A_sep, t the prime-to-p part of (B : A_sep).
Lattice build_c(const Tower& t, const Int& p);
/// Gamma(C) from the weights of Gamma(A_sep): edge iff weight is not a power of p.
WeightedGraph graph_c(const WeightedGraph& gamma_a_sep, const Int& p);

struct MuCp {
  Lattice c;
  std::vector<std::vector<std::size_t>> components;  // of Gamma(C)
  std::vector<IntVector> generators;                 // zeta_W, B-coordinates
  std::vector<Int> orders;
  EffPresentation<IntVector> presentation;
};

/// mu(C)_p: one cyclic generator per component of Gamma(C), built along a
/// breadth-first chain from the vertex with the smallest residue p-group.
/// `naive_lift` selects the reference pair enumeration; otherwise p-th roots
/// are lifted one level at a time.
MuCp mu_c_p_presentation(const Tower& t, const Int& p, bool naive_lift = false);

}  // namespace ordalg

#endif  // ORDALG_ORDER_HPP_
