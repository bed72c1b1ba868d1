#ifndef ORDALG_ABGROUP_HPP_
#define ORDALG_ABGROUP_HPP_

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/linalg.hpp"

namespace ordalg {

/// A finite abelian group written multiplicatively.
template <class G>
concept AbelianGroup = requires(const G& g, const typename G::Elem& a) {
  { g.identity() } -> std::convertible_to<typename G::Elem>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::Elem>;
  { g.inverse(a) } -> std::convertible_to<typename G::Elem>;
  { g.equal(a, a) } -> std::convertible_to<bool>;
};

/// Generators S (as group elements), relation vectors in Z^S (the columns of
/// `relations`, which has |S| rows) generating the kernel of Z^S -> G, and a
/// discrete logarithm returning some x with prod s^x_s = gamma, or nullopt if
/// gamma is not in G.
template <class Elem>
struct EffPresentation {
  using DlogFn = std::function<std::optional<IntVector>(const Elem&)>;

  std::vector<Elem> generators;
  IntMatrix relations;
  DlogFn dlog;

  std::size_t size() const { return generators.size(); }
  /// Torsion invariant factors of Z^S / <relations>, ascending (1s dropped).
  IntVector invariant_factors() const {
    if (generators.empty()) return {};
    IntMatrix rel = relations;
    if (rel.rows() != generators.size()) rel = IntMatrix(generators.size(), 0);
    return ordalg::invariant_factors(rel);
  }
  /// #G when the relations have full rank.
  Int order() const {
    if (generators.empty()) return 1;
    Lattice l = Lattice::generated_by(relations);
    if (!l.is_full_rank()) throw DomainError("presented group is infinite");
    return l.covolume();
  }
};

template <AbelianGroup G>
typename G::Elem group_power(const G& g, const typename G::Elem& x, Int e) {
  typename G::Elem base = x;
  if (e < 0) {
    base = g.inverse(x);
    e = -e;
  }
  typename G::Elem r = g.identity();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = g.multiply(r, base);
    e >>= 1;
    if (e > 0) base = g.multiply(base, base);
  }
  return r;
}

/// prod gens_i^exps_i.
template <AbelianGroup G>
typename G::Elem group_evaluate(const G& g, const std::vector<typename G::Elem>& gens,
                                const IntVector& exps) {
  ORDALG_CHECK(gens.size() == exps.size(), "exponent vector length");
  typename G::Elem r = g.identity();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (exps[i] != 0) r = g.multiply(r, group_power(g, gens[i], exps[i]));
  return r;
}

namespace detail {

/// Matrix h with g_T = g_S o h: column t is dlog(t).  Throws DomainError if
/// some t is not in G.
template <class Elem>
IntMatrix dlog_matrix(const EffPresentation<Elem>& pres, const std::vector<Elem>& t) {
  std::vector<IntVector> cols;
  cols.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto x = pres.dlog(t[i]);
    if (!x) throw DomainError("element " + std::to_string(i) + " is not in the group");
    cols.push_back(std::move(*x));
  }
  return IntMatrix::from_columns(pres.size(), cols);
}

}  // namespace detail

/// Generators (the lattice basis) of ker(g_T : Z^T -> G): the projection to
/// Z^T of the kernel of [h | -rho].
template <AbelianGroup G>
Lattice subgroup_relations(const G& g, const EffPresentation<typename G::Elem>& pres,
                           const std::vector<typename G::Elem>& t) {
  const std::size_t nt = t.size();
  if (nt == 0) return Lattice::zero(0);
  IntMatrix h = detail::dlog_matrix(pres, t);
  IntMatrix rho = pres.relations;
  if (rho.rows() != pres.size()) rho = IntMatrix(pres.size(), 0);
  IntMatrix block = IntMatrix::hconcat(h, Int(-1) * rho);
  Lattice k = kernel_int(block);
  Lattice u = project_prefix(k, nt);
  for (std::size_t j = 0; j < u.rank(); ++j)
    ORDALG_CHECK(g.equal(group_evaluate(g, t, u.basis().column(j)), g.identity()),
                 "relation does not evaluate to the identity");
  return u;
}

enum class Membership { Member, NotInGroup, NotInSubgroup };

struct MembershipResult {
  Membership status;
  IntVector exponents;  // valid for Member
};

/// Decides gamma in <T> and returns exponents over T when it is.  Relations of
/// T + {gamma} are computed; gamma lies in <T> exactly when their gamma
/// components generate Z, and a Bezout combination of those relations yields
/// the exponents.
template <AbelianGroup G>
MembershipResult membership_dlog(const G& g, const EffPresentation<typename G::Elem>& pres,
                                 const std::vector<typename G::Elem>& t,
                                 const typename G::Elem& gamma) {
  if (!pres.dlog(gamma)) return {Membership::NotInGroup, {}};
  const std::size_t nt = t.size();
  std::vector<typename G::Elem> tg = t;
  tg.push_back(gamma);
  Lattice u = subgroup_relations(g, pres, tg);
  IntVector combo(nt + 1);
  Int gc = 0;
  for (std::size_t j = 0; j < u.rank(); ++j) {
    IntVector col = u.basis().column(j);
    const Int& c = col[nt];
    if (c == 0) continue;
    ExtGcd e = ext_gcd(gc, c);
    for (std::size_t i = 0; i <= nt; ++i) combo[i] = e.s * combo[i] + e.t * col[i];
    gc = e.g;
  }
  if (gc != 1) return {Membership::NotInSubgroup, {}};
  // combo has gamma component 1, so gamma = prod t^{-combo_t}
  IntVector x(nt);
  for (std::size_t i = 0; i < nt; ++i) x[i] = -combo[i];
  ORDALG_CHECK(g.equal(group_evaluate(g, t, x), gamma), "membership exponents do not verify");
  return {Membership::Member, x};
}

/// Efficient presentation <T | U_T> of the subgroup generated by T.
template <AbelianGroup G>
EffPresentation<typename G::Elem> subgroup_presentation(
    const G& g, const EffPresentation<typename G::Elem>& pres,
    const std::vector<typename G::Elem>& t) {
  EffPresentation<typename G::Elem> out;
  out.generators = t;
  out.relations = t.empty() ? IntMatrix(0, 0) : subgroup_relations(g, pres, t).basis();
  out.dlog = [g, pres, t](const typename G::Elem& x) -> std::optional<IntVector> {
    auto r = membership_dlog(g, pres, t, x);
    if (r.status != Membership::Member) return std::nullopt;
    return r.exponents;
  };
  return out;
}

/// {x in Z^T : g_T(x) in <T'>}.
template <AbelianGroup G>
Lattice kernel_mod_subgroup(const G& g, const EffPresentation<typename G::Elem>& pres,
                            const std::vector<typename G::Elem>& t,
                            const std::vector<typename G::Elem>& t_prime) {
  if (t.empty()) return Lattice::zero(0);
  std::vector<typename G::Elem> all = t;
  all.insert(all.end(), t_prime.begin(), t_prime.end());
  return project_prefix(subgroup_relations(g, pres, all), t.size());
}

}  // namespace ordalg

#endif  // ORDALG_ABGROUP_HPP_
