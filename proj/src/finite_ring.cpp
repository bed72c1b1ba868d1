#include "ordalg/finite_ring.hpp"

#include "ordalg/order.hpp"

namespace ordalg {

namespace {

IntVector raw_mul(std::size_t g, const std::vector<Int>& table, const IntVector& x,
                  const IntVector& y) {
  IntVector r(g);
  for (std::size_t i = 0; i < g; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g; ++j) {
      if (y[j] == 0) continue;
      Int c = x[i] * y[j];
      for (std::size_t k = 0; k < g; ++k) r[k] += c * table[(i * g + j) * g + k];
    }
  }
  return r;
}

}  // namespace

FiniteRing FiniteRing::create(Lattice relations, std::vector<Int> table, IntVector one) {
  const std::size_t g = relations.ambient_dim();
  if (!relations.is_full_rank()) throw InputError("additive group of a finite ring must be finite");
  if (table.size() != g * g * g || one.size() != g) throw InputError("finite ring table has the wrong size");
  FiniteRing r;
  r.g_ = g;
  r.rel_ = std::move(relations);
  r.table_ = std::move(table);
  r.one_ = r.rel_.reduce(one);
  std::vector<IntVector> e;
  for (std::size_t i = 0; i < g; ++i) e.push_back(r.basis_element(i));
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t j = 0; j < g; ++j)
      if (!r.rel_.contains(raw_mul(g, r.table_, r.rel_.basis().column(c), e[j])))
        throw InputError("multiplication is not well defined modulo the relations");
  for (std::size_t i = 0; i < g; ++i) {
    if (r.mul(r.one_, e[i]) != r.reduce(e[i])) throw InputError("no identity element");
    for (std::size_t j = 0; j < g; ++j) {
      if (r.mul(e[i], e[j]) != r.mul(e[j], e[i]))
        throw InputError("not commutative at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      for (std::size_t k = 0; k < g; ++k)
        if (r.mul(r.mul(e[i], e[j]), e[k]) != r.mul(e[i], r.mul(e[j], e[k])))
          throw InputError("not associative at (" + std::to_string(i) + ", " + std::to_string(j) +
                           ", " + std::to_string(k) + ")");
    }
  }
  return r;
}

FiniteRing FiniteRing::integers_mod(const Int& n) {
  if (n < 1) throw InputError("modulus must be positive");
  return create(Lattice::from_vectors(1, {IntVector{n}}), {Int(1)}, IntVector{1});
}

FiniteRing FiniteRing::poly_quotient(const Int& n, const IntVector& f) {
  if (n < 1) throw InputError("modulus must be positive");
  Order o = Order::from_poly(f);
  const std::size_t d = o.rank();
  return create(Lattice::generated_by(n * IntMatrix::identity(d)), o.table(), o.one());
}

IntVector FiniteRing::basis_element(std::size_t i) const {
  IntVector v(g_);
  v[i] = 1;
  return reduce(v);
}

IntVector FiniteRing::add(const IntVector& x, const IntVector& y) const {
  IntVector r(g_);
  for (std::size_t i = 0; i < g_; ++i) r[i] = x[i] + y[i];
  return reduce(r);
}

IntVector FiniteRing::sub(const IntVector& x, const IntVector& y) const {
  IntVector r(g_);
  for (std::size_t i = 0; i < g_; ++i) r[i] = x[i] - y[i];
  return reduce(r);
}

IntVector FiniteRing::neg(const IntVector& x) const { return sub(zero(), x); }

IntVector FiniteRing::scale(const Int& c, const IntVector& x) const {
  IntVector r(g_);
  for (std::size_t i = 0; i < g_; ++i) r[i] = c * x[i];
  return reduce(r);
}

IntVector FiniteRing::mul(const IntVector& x, const IntVector& y) const {
  return reduce(raw_mul(g_, table_, x, y));
}

IntVector FiniteRing::pow(const IntVector& x, Int e) const {
  if (e < 0) throw DomainError("negative exponent in a finite ring");
  IntVector base = reduce(x), r = one_;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return r;
}

std::vector<IntVector> FiniteRing::elements() const {
  std::vector<IntVector> out;
  IntVector v(g_);
  const IntMatrix& h = rel_.basis();
  for (;;) {
    out.push_back(v);
    std::size_t i = g_;
    while (i > 0) {
      --i;
      if (++v[i] < h(i, i)) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (g_ == 0) return out;
  }
}

// ---------------------------------------------------------------------------
// Ideals

RingIdeal zero_ideal(const FiniteRing& r) { return {r.relations()}; }

RingIdeal ideal_generated(const FiniteRing& r, const std::vector<IntVector>& gens) {
  std::vector<IntVector> all;
  for (std::size_t c = 0; c < r.relations().rank(); ++c) all.push_back(r.relations().basis().column(c));
  for (const auto& s : gens)
    for (std::size_t j = 0; j < r.generators(); ++j) all.push_back(r.mul(s, r.basis_element(j)));
  return {Lattice::from_vectors(r.generators(), all)};
}

RingIdeal ideal_product(const FiniteRing& r, const RingIdeal& a, const RingIdeal& b) {
  std::vector<IntVector> all;
  for (std::size_t c = 0; c < r.relations().rank(); ++c) all.push_back(r.relations().basis().column(c));
  const IntMatrix& ha = a.lattice.basis();
  const IntMatrix& hb = b.lattice.basis();
  for (std::size_t i = 0; i < ha.cols(); ++i)
    for (std::size_t j = 0; j < hb.cols(); ++j) all.push_back(r.mul(ha.column(i), hb.column(j)));
  return {Lattice::from_vectors(r.generators(), all)};
}

bool is_zero_ideal(const FiniteRing& r, const RingIdeal& a) { return a.lattice == r.relations(); }

Int ideal_size(const FiniteRing& r, const RingIdeal& a) { return index(r.relations(), a.lattice); }

EffPresentation<IntVector> quotient_presentation(const FiniteRing& r, const RingIdeal& i1,
                                                 const RingIdeal& i2) {
  if (!i1.lattice.contains(i2.lattice)) throw DomainError("I2 is not contained in I1");
  const std::size_t g = r.generators();
  const IntMatrix& h1 = i1.lattice.basis();
  const IntMatrix& h2 = i2.lattice.basis();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < g; ++j) cols.push_back(*i1.lattice.coordinates(h2.column(j)));
  SnfResult s = snf(IntMatrix::from_columns(g, cols));
  IntMatrix u_inv = to_int(inverse(to_rat(s.u)));
  IntMatrix new_basis = h1 * u_inv;
  IntVector diag = s.diagonal();

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g; ++i)
    if (diag[i] != 1) kept.push_back(i);
  EffPresentation<IntVector> pres;
  pres.relations = IntMatrix(kept.size(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    pres.generators.push_back(r.reduce(new_basis.column(kept[k])));
    pres.relations(k, k) = diag[kept[k]];
  }
  Lattice l1 = i1.lattice;
  IntMatrix u = s.u;
  pres.dlog = [l1, u, diag, kept](const IntVector& x) -> std::optional<IntVector> {
    auto c = l1.coordinates(x);
    if (!c) return std::nullopt;
    IntVector cu = u * *c;
    IntVector out(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) out[k] = mod_pos(cu[kept[k]], diag[kept[k]]);
    return out;
  };
  return pres;
}

// ---------------------------------------------------------------------------
// 1 + I

FiniteRingUnits::Elem FiniteRingUnits::inverse(const Elem& a) const {
  // a^k = 1 first happens at the order of a; a^{k-1} is the inverse
  IntVector prev = ring->one();
  IntVector cur = ring->reduce(a);
  const Int bound = ring->size();
  for (Int k = 1; k <= bound; ++k) {
    if (cur == ring->one()) return prev;
    prev = cur;
    cur = ring->mul(cur, a);
  }
  throw DomainError("element is not a unit");
}

std::vector<FiltrationLevel> filtration_generators(const FiniteRing& r, const RingIdeal& i) {
  std::vector<FiltrationLevel> out;
  RingIdeal cur = i;
  while (!is_zero_ideal(r, cur)) {
    RingIdeal next = ideal_product(r, cur, cur);
    if (next == cur) throw DomainError("ideal is not nilpotent");
    out.push_back({cur, next, quotient_presentation(r, cur, next)});
    cur = next;
  }
  return out;
}

namespace {

std::size_t total_generators(const std::vector<FiltrationLevel>& filt, std::size_t from = 0) {
  std::size_t n = 0;
  for (std::size_t i = from; i < filt.size(); ++i) n += filt[i].b().size();
  return n;
}

}  // namespace

IntVector unipotent_dlog(const FiniteRing& r, const std::vector<FiltrationLevel>& filt,
                         const IntVector& x, std::size_t from) {
  auto shared = std::make_shared<const FiniteRing>(r);
  FiniteRingUnits units{shared};
  IntVector out(total_generators(filt));
  std::size_t offset = total_generators(filt) - total_generators(filt, from);
  IntVector xi = r.reduce(x);
  if (from < filt.size() && !filt[from].ideal.contains(xi))
    throw DomainError("element is not in the ideal");
  for (std::size_t i = from; i < filt.size() && !r.is_zero(xi); ++i) {
    const auto& level = filt[i];
    auto m = level.additive.dlog(xi);
    ORDALG_CHECK(m.has_value(), "x_i lies in I^{2^i}");
    IntVector unit = r.add(r.one(), xi);
    for (std::size_t k = 0; k < m->size(); ++k) {
      out[offset + k] = (*m)[k];
      IntVector inv = units.inverse(r.add(r.one(), level.b()[k]));
      unit = r.mul(unit, r.pow(inv, (*m)[k]));
    }
    xi = r.sub(unit, r.one());
    ORDALG_CHECK(level.next.contains(xi), "x_{i+1} lies in I^{2^{i+1}}");
    offset += m->size();
  }
  if (!r.is_zero(xi)) throw DomainError("element is not in the ideal");
  return out;
}

IntMatrix unipotent_relations(const FiniteRing& r, const std::vector<FiltrationLevel>& filt) {
  auto shared = std::make_shared<const FiniteRing>(r);
  FiniteRingUnits units{shared};
  const std::size_t n = total_generators(filt);
  std::vector<IntVector> rels;
  for (std::size_t j = filt.size(); j-- > 0;) {
    const auto& level = filt[j];
    const std::size_t offset = n - total_generators(filt, j);
    const IntMatrix& add_rel = level.additive.relations;
    for (std::size_t c = 0; c < add_rel.cols(); ++c) {
      IntVector nb = add_rel.column(c);
      IntVector prod = r.one();
      for (std::size_t k = 0; k < nb.size(); ++k)
        prod = r.mul(prod, group_power(units, r.add(r.one(), level.b()[k]), nb[k]));
      IntVector m = unipotent_dlog(r, filt, r.sub(prod, r.one()), j + 1);
      IntVector rel(n);
      for (std::size_t k = 0; k < nb.size(); ++k) rel[offset + k] = nb[k];
      for (std::size_t k = offset + nb.size(); k < n; ++k) rel[k] = -m[k];
      rels.push_back(std::move(rel));
    }
  }
  std::vector<IntVector> gens;
  for (const auto& level : filt)
    for (const auto& b : level.b()) gens.push_back(r.add(r.one(), b));
  for (const auto& rel : rels)
    ORDALG_CHECK(group_evaluate(units, gens, rel) == r.one(), "unipotent relation evaluates to 1");
  return IntMatrix::from_columns(n, rels);
}

UnipotentPresentation unipotent_presentation(std::shared_ptr<const FiniteRing> r,
                                             const RingIdeal& i) {
  UnipotentPresentation out;
  out.filtration = filtration_generators(*r, i);
  for (const auto& level : out.filtration)
    for (const auto& b : level.b()) out.presentation.generators.push_back(r->add(r->one(), b));
  const std::size_t n = out.presentation.generators.size();
  out.presentation.relations = n == 0 ? IntMatrix(0, 0) : unipotent_relations(*r, out.filtration);
  auto filt = out.filtration;
  RingIdeal ideal = i;
  out.presentation.dlog = [r, filt, ideal](const IntVector& y) -> std::optional<IntVector> {
    if (y.size() != r->generators()) return std::nullopt;
    IntVector x = r->sub(y, r->one());
    if (!ideal.contains(x)) return std::nullopt;
    return unipotent_dlog(*r, filt, x);
  };
  return out;
}

}  // namespace ordalg
