#ifndef ORDALG_LINALG_HPP_
#define ORDALG_LINALG_HPP_

#include <optional>
#include <vector>

#include "ordalg/matrix.hpp"

namespace ordalg {

/// Column Hermite normal form: h = m * u with u unimodular.
///
/// The nonzero columns of h come first and form a lower echelon matrix: column
/// j has its pivot in row pivot_rows[j], the pivot is positive, the pivot rows
/// strictly increase with j, and every entry to the left of a pivot (in the
/// pivot's row) lies in [0, pivot).  The trailing cols - rank columns of h are
/// zero, and the matching columns of u span the integer kernel of m.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

HnfResult hnf(const IntMatrix& m);

/// Smith normal form d = u * m * v, d diagonal with d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  /// Diagonal entries d_0, d_1, ... up to min(rows, cols).
  IntVector diagonal() const;
};

SnfResult snf(const IntMatrix& m);

/// Determinant by fraction-free elimination (Bareiss).
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

/// A subgroup of Z^n, stored by its column-HNF basis (unique representative).
class Lattice {
 public:
  Lattice() = default;
  /// Lattice generated by the columns of `gens` (any generating set).
  static Lattice generated_by(const IntMatrix& gens);
  static Lattice from_vectors(std::size_t ambient_dim,
                              const std::vector<IntVector>& gens);
  static Lattice full(std::size_t n);
  static Lattice zero(std::size_t n);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  bool is_full_rank() const { return rank() == ambient_dim(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  /// Integer coordinates of v in the HNF basis, or nullopt if v is not in the
  /// lattice (back-substitution along pivot rows).
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;

  /// Reduces v modulo a full-rank lattice into the canonical box
  /// 0 <= v_i < h_ii (requires is_full_rank()).
  IntVector reduce(const IntVector& v) const;

  /// |det| of the basis; the group order of Z^n / L for full-rank L.
  Int covolume() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x in Z^cols : m x = 0}; saturated by construction.
Lattice kernel_int(const IntMatrix& m);

/// Lattice generated by the columns of m.
Lattice image_int(const IntMatrix& m);

/// (sup : sub) for sub contained in sup of equal rank. Throws DomainError if
/// sub is not contained in sup or the ranks differ.
Int index(const Lattice& sub, const Lattice& sup);

Lattice sum_lattices(const Lattice& a, const Lattice& b);

/// Intersection via the kernel of [A | -B].
Lattice intersect_lattices(const Lattice& a, const Lattice& b);

/// {x in Z^n : m x in target} for an integer matrix m (rows = target dim).
Lattice preimage(const IntMatrix& m, const Lattice& target);

/// Lattice spanned by the first `k` coordinates of each basis vector.
Lattice project_prefix(const Lattice& l, std::size_t k);

/// Solves m x = v over Q; nullopt when inconsistent.  Returns one solution.
std::optional<RatVector> solve_rat(const RatMatrix& m, const RatVector& v);

/// Basis (as columns) of the rational null space of m.
RatMatrix kernel_rat(const RatMatrix& m);

std::size_t rank_rat(const RatMatrix& m);

/// Inverse of a square rational matrix; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Nonzero invariant factors of Z^rows / (column span of m) are the SNF
/// diagonal entries; zero entries and missing rows give free Z summands.
/// Returns the torsion invariant factors greater than one, ascending.
IntVector invariant_factors(const IntMatrix& relations);

}  // namespace ordalg

#endif  // ORDALG_LINALG_HPP_
