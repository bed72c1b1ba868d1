#include "ordalg/rou.hpp"

namespace ordalg {

namespace {

std::vector<Int> ring_table(const Order& b, const IntMatrix& basis, const Lattice& lattice) {
  const std::size_t n = basis.cols();
  std::vector<Int> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = lattice.coordinates(b.mul(basis.column(i), basis.column(j)));
      ORDALG_CHECK(c.has_value(), "lattice is closed under products");
      for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = (*c)[k];
    }
  return table;
}

IntMatrix coordinates_of(const Lattice& l, const IntMatrix& vectors) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    auto c = l.coordinates(vectors.column(j));
    ORDALG_CHECK(c.has_value(), "vector lies in the lattice");
    cols.push_back(std::move(*c));
  }
  return IntMatrix::from_columns(l.rank(), cols);
}

}  // namespace

IntVector ConductorData::to_c(const IntVector& x) const {
  auto v = c.coordinates(x);
  if (!v) throw DomainError("element is not in C");
  return *v;
}

ConductorData conductor(const Tower& t, const Lattice& c, const std::vector<IntVector>& m) {
  ConductorData out;
  out.c = c;
  const Order& b = *t.b;
  const IntMatrix& ha = t.a_sep_b.basis();
  const IntMatrix& hc = c.basis();
  const std::size_t d = t.d();

  // x in A_sep lies in ff iff x c_j in A_sep for every basis vector c_j of C
  Lattice k = Lattice::full(d);
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix mj = b.mult_matrix(hc.column(j)) * ha;
    k = intersect_lattices(k, preimage(mj, t.a_sep_b));
  }
  out.ff = Lattice::generated_by(ha * k.basis());
  ORDALG_CHECK(out.ff.is_full_rank(), "ff has finite index");
  ORDALG_CHECK(t.a_sep_b.contains(out.ff), "ff lies in A_sep");

  IntVector one_c = out.to_c(b.one());
  out.c_mod_ff = std::make_shared<const FiniteRing>(FiniteRing::create(
      Lattice::generated_by(coordinates_of(c, out.ff.basis())), ring_table(b, hc, c), one_c));
  auto one_a = t.a_sep_b.coordinates(b.one());
  ORDALG_CHECK(one_a.has_value(), "1 lies in A_sep");
  out.a_mod_ff = std::make_shared<const FiniteRing>(
      FiniteRing::create(Lattice::generated_by(coordinates_of(t.a_sep_b, out.ff.basis())),
                         ring_table(b, ha, t.a_sep_b), *one_a));
  out.a_to_c = coordinates_of(c, ha);

  std::vector<IntVector> zm;
  for (const auto& z : m) zm.push_back(out.c_mod_ff->sub(out.to_c(z), out.c_mod_ff->one()));
  out.i = ideal_generated(*out.c_mod_ff, zm);
  out.i_prime = {preimage(out.a_to_c, out.i.lattice)};
  return out;
}

Descent mu_a_p_descent(const Tower& t, const Int& p, bool naive_lift) {
  Descent out;
  out.p = p;
  out.mu_c = mu_c_p_presentation(t, p, naive_lift);
  out.cond = conductor(t, out.mu_c.c, out.mu_c.generators);
  const auto& cond = out.cond;
  ORDALG_CHECK(is_power_of(cond.c_mod_ff->size(), p), "C/ff has p-power order");

  out.one_plus_i = unipotent_presentation(cond.c_mod_ff, cond.i);
  out.one_plus_i_prime = unipotent_presentation(cond.a_mod_ff, cond.i_prime);

  FiniteRingUnits units{cond.c_mod_ff};
  std::vector<IntVector> tm;
  for (const auto& z : out.mu_c.generators) tm.push_back(cond.c_mod_ff->reduce(cond.to_c(z)));
  std::vector<IntVector> tp;
  for (const auto& g : out.one_plus_i_prime.presentation.generators)
    tp.push_back(cond.c_mod_ff->reduce(cond.a_to_c * g));
  out.ker_psi = kernel_mod_subgroup(units, out.one_plus_i.presentation, tm, tp);

  OrderUnits b_units{t.b};
  for (std::size_t j = 0; j < out.ker_psi.rank(); ++j) {
    IntVector g = group_evaluate(b_units, out.mu_c.generators, out.ker_psi.basis().column(j));
    auto a = t.b_to_a(g);
    ORDALG_CHECK(a.has_value(), "mu(A)_p generator lies in A");
    out.generators.push_back(std::move(*a));
  }
  return out;
}

std::vector<IntVector> mu_a_generators(const Tower& t, bool naive_lift) {
  std::vector<IntVector> out;
  for (const Int& p : t.primes) {
    Descent d = mu_a_p_descent(t, p, naive_lift);
    out.insert(out.end(), d.generators.begin(), d.generators.end());
  }
  return out;
}

std::vector<IntVector> mu_a_generators(const Order& a, bool naive_lift) {
  return mu_a_generators(build_tower(a), naive_lift);
}

EffPresentation<IntVector> mu_a_presentation(const Tower& t, bool naive_lift) {
  std::vector<IntVector> gens_a = mu_a_generators(t, naive_lift);
  std::vector<IntVector> gens_b;
  for (const auto& g : gens_a) {
    auto b = t.e_to_b(to_rat(g));
    ORDALG_CHECK(b.has_value(), "A lies in B");
    gens_b.push_back(std::move(*b));
  }
  OrderUnits units{t.b};
  auto sub = subgroup_presentation(units, mu_b_presentation(t), gens_b);

  EffPresentation<IntVector> out;
  out.generators = gens_a;
  out.relations = sub.relations;
  auto tower = std::make_shared<const Tower>(t);
  auto sub_dlog = sub.dlog;
  out.dlog = [tower, sub_dlog](const IntVector& x) -> std::optional<IntVector> {
    if (x.size() != tower->a.rank()) return std::nullopt;
    auto b = tower->e_to_b(to_rat(x));
    if (!b) return std::nullopt;
    return sub_dlog(*b);
  };
  return out;
}

MembershipResult mu_e_subgroup_dlog(const QAlgebra& e, const std::vector<RatVector>& t,
                                    const RatVector& zeta) {
  SpecDecomposition dec = decompose(e);
  MuData mu = mu_presentation(e, dec);
  AlgebraUnits units{std::make_shared<const QAlgebra>(e)};
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!mu.presentation.dlog(t[i]))
      throw DomainError("element " + std::to_string(i) + " of T is not a root of unity");
  return membership_dlog(units, mu.presentation, t, zeta);
}

}  // namespace ordalg
