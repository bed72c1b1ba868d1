#ifndef ORDALG_QALGEBRA_HPP_
#define ORDALG_QALGEBRA_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "ordalg/abgroup.hpp"
#include "ordalg/numfield.hpp"

namespace ordalg {

/// Finite-dimensional commutative Q-algebra with basis e_0..e_{n-1} and
/// e_i e_j = sum_k a_ijk e_k.  Elements are coordinate vectors.
class QAlgebra {
 public:
  QAlgebra() = default;

  /// `table[(i*n + j)*n + k]` = a_ijk.  Throws InputError naming the first
  /// violating (i, j, k) if the constants are not commutative or associative,
  /// or if there is no identity.
  static QAlgebra from_table(std::size_t n, std::vector<Rat> table);

  std::size_t dim() const { return n_; }
  const Rat& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }
  const RatVector& one() const { return one_; }
  RatVector basis_vector(std::size_t i) const;

  RatVector mul(const RatVector& x, const RatVector& y) const;
  RatVector add(const RatVector& x, const RatVector& y) const;
  RatVector sub(const RatVector& x, const RatVector& y) const;
  RatVector scale(const Rat& c, const RatVector& x) const;
  RatVector pow(const RatVector& x, unsigned long e) const;
  /// nullopt for non-units.
  std::optional<RatVector> inverse(const RatVector& x) const;
  /// p(x) by Horner.
  RatVector eval(const RatPoly& p, const RatVector& x) const;

  /// Matrix of y -> x*y.
  RatMatrix mult_matrix(const RatVector& x) const;
  Rat trace(const RatVector& x) const;
  RatPoly minpoly(const RatVector& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<Rat> table_;
  RatVector one_;
};

/// One factor E/m of E_sep, with the projection E -> E/m on coordinates.
struct FieldComponent {
  NumberField field;
  RatMatrix projection;  // [E/m : Q] x dim E
};

/// E = E_sep + sqrt(0) and E_sep = prod E/m.  "Product coordinates" are the
/// concatenated field coordinates of the components in order.
struct SpecDecomposition {
  std::vector<FieldComponent> components;
  std::vector<std::size_t> offsets;  // start of each component in product coords
  RatMatrix sep_basis;               // n x d
  RatMatrix nil_basis;               // n x (n - d)
  RatMatrix to_product;              // d x n, stacked projections
  RatMatrix section;                 // n x d, inverse of to_product on E_sep
  RatMatrix pi1, pi2;                // n x n

  std::size_t sep_dim() const { return sep_basis.cols(); }
  std::size_t size() const { return components.size(); }
  std::size_t degree(std::size_t m) const { return components[m].field.degree(); }
  bool is_separable(const RatVector& x) const;
  RatVector project(std::size_t m, const RatVector& x) const;
  /// Element of E_sep with the given product coordinates.
  RatVector lift(const RatVector& product) const { return section * product; }
};

SpecDecomposition decompose(const QAlgebra& e);

/// The unit group of E restricted to roots of unity, as a group object.
struct AlgebraUnits {
  using Elem = RatVector;
  std::shared_ptr<const QAlgebra> alg;

  Elem identity() const { return alg->one(); }
  Elem multiply(const Elem& a, const Elem& b) const { return alg->mul(a, b); }
  Elem inverse(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

enum class MuFailure { None, NotSeparable, NotRootOfUnity };

struct MuDlogResult {
  std::optional<IntVector> exponents;
  MuFailure failure = MuFailure::None;
  std::size_t component = 0;  // first offending component for NotRootOfUnity
};

/// mu(E) = prod <eta_m>, eta_m mapping to zeta_m in E/m and 1 elsewhere.
struct MuData {
  std::vector<NumberField::Elem> zeta;  // generator of mu(E/m), field coords
  std::vector<Int> order;               // its order k(m)
  EffPresentation<RatVector> presentation;
};

MuData mu_presentation(const QAlgebra& e, const SpecDecomposition& dec);
MuDlogResult mu_dlog(const QAlgebra& e, const SpecDecomposition& dec, const MuData& mu,
                     const RatVector& gamma);

/// Maximal-order root of unity in K (cyclotomic search over d with phi(d) |
/// [K:Q], d <= 2 [K:Q]^2) and its order.
std::pair<NumberField::Elem, Int> field_mu_generator(const NumberField& k);

}  // namespace ordalg

#endif  // ORDALG_QALGEBRA_HPP_
