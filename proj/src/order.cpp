#include "ordalg/order.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ordalg/factor.hpp"
#include "ordalg/linalg.hpp"

namespace ordalg {

// ---------------------------------------------------------------------------
// Order

Order Order::from_table(std::size_t n, std::vector<Int> table) {
  std::vector<Rat> rt(table.begin(), table.end());
  QAlgebra alg = QAlgebra::from_table(n, std::move(rt));
  Order o;
  o.n_ = n;
  o.table_ = std::move(table);
  for (const auto& c : alg.one())
    if (!is_integral(c)) throw InputError("identity element is not integral");
  o.one_ = to_int(alg.one());
  return o;
}

Order Order::from_poly(const IntVector& f) {
  if (f.size() < 2) throw InputError("polynomial must have degree at least 1");
  if (f.back() != 1) throw InputError("polynomial must be monic");
  const std::size_t n = f.size() - 1;
  // powers[k] = X^k mod f for k < 2n - 1
  std::vector<IntVector> powers;
  IntVector cur(n);
  cur[0] = 1;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    powers.push_back(cur);
    Int top = cur[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1] - top * f[i];
    cur[0] = -top * f[0];
  }
  std::vector<Int> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = powers[i + j][k];
  return from_table(n, std::move(table));
}

IntVector Order::mul(const IntVector& x, const IntVector& y) const {
  IntVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Int c = x[i] * y[j];
      const Int* row = &table_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k)
        if (row[k] != 0) r[k] += c * row[k];
    }
  }
  return r;
}

IntMatrix Order::mult_matrix(const IntVector& x) const {
  IntMatrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    IntVector e(n_);
    e[j] = 1;
    m.set_column(j, mul(x, e));
  }
  return m;
}

QAlgebra Order::algebra() const {
  return QAlgebra::from_table(n_, std::vector<Rat>(table_.begin(), table_.end()));
}

OrderUnits::Elem OrderUnits::inverse(const Elem& a) const {
  auto inv = solve_rat(to_rat(order->mult_matrix(a)), to_rat(order->one()));
  if (!inv) throw DomainError("element is not a unit");
  for (const auto& c : *inv)
    if (!is_integral(c)) throw DomainError("element is not a unit");
  return to_int(*inv);
}

// ---------------------------------------------------------------------------
// Graphs

std::vector<std::pair<std::size_t, std::size_t>> WeightedGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m = 0; m < vertices; ++m)
    for (std::size_t n = m + 1; n < vertices; ++n)
      if (weights[m][n] > 1) out.emplace_back(m, n);
  return out;
}

std::vector<std::vector<std::size_t>> WeightedGraph::components() const {
  std::vector<int> label(vertices, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < vertices; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    label[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (std::size_t w = 0; w < vertices; ++w)
        if (w != v && label[w] < 0 && weights[v][w] > 1) {
          label[w] = label[s];
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tower

namespace {

std::optional<IntVector> integral(const RatVector& v) {
  for (const auto& c : v)
    if (!is_integral(c)) return std::nullopt;
  return to_int(v);
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.rows();
  RatMatrix m(d, d);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

// First power of zeta lying in the residue order, exponents 1, 2, 3, ...
ResidueMu residue_mu(const Tower& t, std::size_t m) {
  const NumberField& k = t.dec.components[m].field;
  const NumberField::Elem& zeta = t.mu_e.zeta[m];
  const Int& ord = t.mu_e.order[m];
  ResidueMu r;
  NumberField::Elem z = zeta;
  for (Int j = 1; j <= ord; ++j) {
    if (t.field_to_block(m, z)) {
      r.theta = z;
      r.order = ord / gcd(j, ord);
      break;
    }
    z = k.mul(z, zeta);
  }
  ORDALG_CHECK(r.order > 0, "1 always lies in the residue order");
  r.factorization = factor_small(r.order);
  for (const auto& [p, e] : r.factorization) {
    Int pe = pow_int(p, e);
    r.theta_p[p] = k.pow(r.theta, Int(r.order / pe).get_si());
    r.order_p[p] = pe;
  }
  return r;
}

}  // namespace

std::optional<IntVector> Tower::b_to_a(const IntVector& x) const { return integral(b_to_e(x)); }

std::optional<IntVector> Tower::e_to_b(const RatVector& x) const {
  if (!dec.is_separable(x)) return std::nullopt;
  return integral(b_basis_inv * (dec.to_product * x));
}

std::optional<IntVector> Tower::field_to_block(std::size_t m, const NumberField::Elem& x) const {
  return integral(b_blocks_inv[m] * x);
}

NumberField::Elem Tower::block_to_field(std::size_t m, const IntVector& x) const {
  return b_blocks[m] * to_rat(x);
}

IntVector Tower::b_from_fields(const std::vector<NumberField::Elem>& values) const {
  IntVector out;
  for (std::size_t m = 0; m < values.size(); ++m) {
    auto c = field_to_block(m, values[m]);
    if (!c) throw DomainError("field value is not in the residue order");
    out.insert(out.end(), c->begin(), c->end());
  }
  return out;
}

Tower build_tower(const Order& a) {
  Tower t;
  t.a = a;
  t.e = a.algebra();
  t.dec = decompose(t.e);
  t.mu_e = mu_presentation(t.e, t.dec);
  const std::size_t d = t.dec.sep_dim();

  t.a_sep = kernel_int(clear_denominators(t.dec.pi2).second);
  ORDALG_CHECK(t.a_sep.rank() == d, "A_sep must have rank dim E_sep");
  RatMatrix a_sep_prod = t.dec.to_product * to_rat(t.a_sep.basis());

  for (std::size_t m = 0; m < t.dec.size(); ++m) {
    RatMatrix rows = a_sep_prod.row_block(t.dec.offsets[m], t.dec.offsets[m] + t.dec.degree(m));
    auto [den, ints] = clear_denominators(rows);
    Lattice img = image_int(ints);
    ORDALG_CHECK(img.is_full_rank(), "residue order must have full rank");
    RatMatrix basis = to_rat(img.basis());
    basis = Rat(1, 1) / Rat(den) * basis;
    t.b_blocks.push_back(basis);
    t.b_blocks_inv.push_back(inverse(basis));
  }
  t.b_basis = block_diagonal(t.b_blocks);
  t.b_basis_inv = block_diagonal(t.b_blocks_inv);
  t.a_sep_to_b = to_int(t.b_basis_inv * a_sep_prod);
  t.a_sep_b = Lattice::generated_by(t.a_sep_to_b);
  t.index_b_a_sep = t.a_sep_b.covolume();

  // B as an order: products of block basis vectors inside each field.
  std::vector<Int> table(d * d * d);
  for (std::size_t m = 0; m < t.dec.size(); ++m) {
    const NumberField& k = t.dec.components[m].field;
    const std::size_t off = t.dec.offsets[m], deg = t.dec.degree(m);
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < deg; ++j) {
        auto prod = k.mul(t.b_blocks[m].column(i), t.b_blocks[m].column(j));
        auto c = t.field_to_block(m, prod);
        ORDALG_CHECK(c.has_value(), "residue order must be closed under products");
        for (std::size_t l = 0; l < deg; ++l) table[((off + i) * d + off + j) * d + off + l] = (*c)[l];
      }
  }
  t.b = std::make_shared<const Order>(Order::from_table(d, std::move(table)));

  std::set<Int> primes;
  for (std::size_t m = 0; m < t.dec.size(); ++m) {
    t.residue.push_back(residue_mu(t, m));
    for (const auto& [p, e] : t.residue.back().factorization) primes.insert(p);
  }
  t.primes.assign(primes.begin(), primes.end());
  return t;
}

SeparablePart separable_part(const Tower& t) {
  SeparablePart s;
  s.in_a = t.a_sep.basis();
  const std::size_t d = s.in_a.cols();
  std::vector<Int> table(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = t.a_sep.coordinates(t.a.mul(s.in_a.column(i), s.in_a.column(j)));
      ORDALG_CHECK(c.has_value(), "A_sep must be closed under products");
      for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = (*c)[k];
    }
  s.order = Order::from_table(d, std::move(table));
  s.in_e_sep = RatMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = solve_rat(t.dec.sep_basis, to_rat(s.in_a.column(j)));
    ORDALG_CHECK(c.has_value(), "A_sep lies in E_sep");
    s.in_e_sep.set_column(j, *c);
  }
  return s;
}

WeightedGraph lattice_graph(const Tower& t, const Lattice& dl) {
  const std::size_t c = t.components();
  const IntMatrix& h = dl.basis();
  ORDALG_CHECK(dl.is_full_rank() && h.rows() == t.d(), "order lattice must be full rank");
  // m cap D in D-coordinates: vectors whose block-m rows vanish
  std::vector<Lattice> ideals;
  for (std::size_t m = 0; m < c; ++m)
    ideals.push_back(kernel_int(h.row_block(t.block_begin(m), t.block_begin(m) + t.block_size(m))));
  WeightedGraph g;
  g.vertices = c;
  g.weights.assign(c, std::vector<Int>(c, Int(0)));
  for (std::size_t m = 0; m < c; ++m)
    for (std::size_t n = m + 1; n < c; ++n) {
      Lattice s = sum_lattices(ideals[m], ideals[n]);
      ORDALG_CHECK(s.is_full_rank(), "(m cap D) + (n cap D) has finite index");
      Int w = s.covolume();
      IntMatrix gens = IntMatrix::hconcat(ideals[m].basis(), ideals[n].basis());
      Int snf_prod = 1;
      for (const auto& x : snf(gens).diagonal()) snf_prod *= x;
      ORDALG_CHECK(snf_prod == w, "HNF and SNF weights disagree");
      g.weights[m][n] = g.weights[n][m] = w;
    }
  return g;
}

WeightedGraph order_graph(const Tower& t) { return lattice_graph(t, t.a_sep_b); }

WeightedGraph order_graph(const Order& d) {
  Tower t = build_tower(d);
  if (t.dec.nil_basis.cols() != 0) throw DomainError("order does not lie in a separable algebra");
  return order_graph(t);
}

std::vector<IntVector> primitive_idempotents(const Tower& t) {
  std::vector<IntVector> out;
  for (const auto& w : order_graph(t).components()) {
    RatVector prod(t.d());
    for (std::size_t m : w) prod[t.dec.offsets[m]] = 1;
    auto e = integral(t.dec.lift(prod));
    ORDALG_CHECK(e.has_value(), "idempotent of a graph component lies in A");
    out.push_back(std::move(*e));
  }
  return out;
}

std::vector<IntVector> primitive_idempotents(const Order& a) {
  return primitive_idempotents(build_tower(a));
}

std::vector<RatPoly> idempotent_divisor_oracle(const IntVector& f) {
  RatPoly fp = RatPoly::from_ints(f);
  if (fp.degree() < 1 || fp.leading() != 1) throw DomainError("oracle needs a monic polynomial");
  auto fac = factor_q(fp);
  for (const auto& e : fac.factors)
    if (e.multiplicity != 1) throw DomainError("oracle needs a squarefree polynomial");
  const std::size_t k = fac.factors.size();
  std::vector<RatPoly> out;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    RatPoly g{1};
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) g = g * fac.factors[i].factor;
    RatPoly h = fp / g;
    Rat r = resultant(g, h);
    if (r == 1 || r == -1) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// mu(B), mu(B)_p

namespace {

struct CyclicProductData {
  std::vector<NumberField> fields;
  std::vector<RatMatrix> blocks;
  std::vector<std::size_t> offsets;
  std::vector<NumberField::Elem> gens;
  std::vector<Int> orders;
};

EffPresentation<IntVector> cyclic_product_presentation(const Tower& t,
                                                       std::vector<NumberField::Elem> gens,
                                                       std::vector<Int> orders) {
  const std::size_t c = t.components();
  EffPresentation<IntVector> pres;
  pres.relations = IntMatrix(c, c);
  for (std::size_t m = 0; m < c; ++m) {
    std::vector<NumberField::Elem> values;
    for (std::size_t i = 0; i < c; ++i)
      values.push_back(i == m ? gens[m] : t.dec.components[i].field.one());
    pres.generators.push_back(t.b_from_fields(values));
    pres.relations(m, m) = orders[m];
  }
  auto data = std::make_shared<CyclicProductData>();
  for (const auto& comp : t.dec.components) data->fields.push_back(comp.field);
  data->blocks = t.b_blocks;
  data->offsets = t.dec.offsets;
  data->gens = std::move(gens);
  data->orders = std::move(orders);
  const std::size_t d = t.d();
  pres.dlog = [data, d](const IntVector& x) -> std::optional<IntVector> {
    if (x.size() != d) return std::nullopt;
    const std::size_t c = data->fields.size();
    IntVector exps(c);
    for (std::size_t m = 0; m < c; ++m) {
      const NumberField& k = data->fields[m];
      const std::size_t off = data->offsets[m];
      IntVector blk(x.begin() + off, x.begin() + off + k.degree());
      NumberField::Elem y = data->blocks[m] * to_rat(blk);
      NumberField::Elem cur = k.one();
      bool found = false;
      for (Int a = 0; a < data->orders[m]; ++a) {
        if (cur == y) {
          exps[m] = a;
          found = true;
          break;
        }
        cur = k.mul(cur, data->gens[m]);
      }
      if (!found) return std::nullopt;
    }
    return exps;
  };
  return pres;
}

}  // namespace

EffPresentation<IntVector> mu_b_presentation(const Tower& t) {
  std::vector<NumberField::Elem> gens;
  std::vector<Int> orders;
  for (const auto& r : t.residue) {
    gens.push_back(r.theta);
    orders.push_back(r.order);
  }
  return cyclic_product_presentation(t, gens, orders);
}

EffPresentation<IntVector> mu_b_p_presentation(const Tower& t, const Int& p) {
  std::vector<NumberField::Elem> gens;
  std::vector<Int> orders;
  for (std::size_t m = 0; m < t.components(); ++m) {
    const auto& r = t.residue[m];
    if (auto it = r.theta_p.find(p); it != r.theta_p.end()) {
      gens.push_back(it->second);
      orders.push_back(r.order_p.at(p));
    } else {
      gens.push_back(t.dec.components[m].field.one());
      orders.push_back(1);
    }
  }
  return cyclic_product_presentation(t, gens, orders);
}

// ---------------------------------------------------------------------------
// C and mu(C)_p

Lattice build_c(const Tower& t, const Int& p) {
  Int tp = prime_to_part(t.index_b_a_sep, p);
  IntMatrix gens = IntMatrix::hconcat(tp * IntMatrix::identity(t.d()), t.a_sep_to_b);
  Lattice c = image_int(gens);
  ORDALG_CHECK(c.contains(t.a_sep_b), "A_sep is contained in C");
  ORDALG_CHECK(is_power_of(index(t.a_sep_b, c), p), "(C : A_sep) is a power of p");
  ORDALG_CHECK(prime_to_part(c.covolume(), p) == c.covolume(), "(B : C) is prime to p");
  return c;
}

WeightedGraph graph_c(const WeightedGraph& gamma_a_sep, const Int& p) {
  WeightedGraph g = gamma_a_sep;
  for (std::size_t m = 0; m < g.vertices; ++m)
    for (std::size_t n = 0; n < g.vertices; ++n)
      if (m != n) g.weights[m][n] = prime_to_part(gamma_a_sep.weights[m][n], p);
  return g;
}

namespace {

Int multiplicative_order(const Int& a, const Int& n) {
  // order of a in Z/n (additive): n / gcd(a, n)
  if (n == 1) return 1;
  return n / gcd(mod_pos(a, n), n);
}

// Breadth-first order of w from its first vertex, neighbours ascending.
std::vector<std::size_t> bfs_order(const WeightedGraph& g, const std::vector<std::size_t>& w,
                                   std::size_t start) {
  std::vector<std::size_t> order{start};
  std::set<std::size_t> seen{start};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t v : w)
      if (!seen.count(v) && g.weights[order[i]][v] > 1) {
        seen.insert(v);
        order.push_back(v);
      }
  ORDALG_CHECK(order.size() == w.size(), "graph component must be connected");
  return order;
}

struct ChainState {
  const Tower& t;
  const Int& p;
  const Lattice& c;
  std::vector<std::size_t> chain;  // W_{i-1} in chain order
  std::map<std::size_t, Int> exps; // generator = (theta_{m,p}^{exps[m]})_m
  Int order = 1;

  NumberField::Elem theta(std::size_t m, const Int& e) const {
    const auto& r = t.residue[m];
    auto it = r.theta_p.find(p);
    const NumberField& k = t.dec.components[m].field;
    if (it == r.theta_p.end()) return k.one();
    return k.pow(it->second, Int(mod_pos(e, r.order_p.at(p))).get_si());
  }
  Int residue_order(std::size_t m) const {
    auto it = t.residue[m].order_p.find(p);
    return it == t.residue[m].order_p.end() ? Int(1) : it->second;
  }

  // Is (g^a, theta_{m_i}^b) in C_{W_i}?  Rows are taken in chain order.
  bool member(const Lattice& cw, std::size_t mi, const Int& a, const Int& b) const {
    IntVector v;
    for (std::size_t m : chain) {
      auto blk = t.field_to_block(m, theta(m, exps.at(m) * a));
      v.insert(v.end(), blk->begin(), blk->end());
    }
    auto blk = t.field_to_block(mi, theta(mi, b));
    v.insert(v.end(), blk->begin(), blk->end());
    return cw.contains(v);
  }

  Lattice projected(std::size_t mi) const {
    std::vector<std::size_t> rows;
    for (std::size_t m : chain)
      for (std::size_t r = 0; r < t.block_size(m); ++r) rows.push_back(t.block_begin(m) + r);
    for (std::size_t r = 0; r < t.block_size(mi); ++r) rows.push_back(t.block_begin(mi) + r);
    IntMatrix sel(rows.size(), c.rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < c.rank(); ++j) sel(i, j) = c.basis()(rows[i], j);
    return image_int(sel);
  }

  void accept(std::size_t mi, const Int& a, const Int& b, const Int& new_order) {
    for (std::size_t m : chain) exps[m] = exps[m] * a;
    exps[mi] = b;
    chain.push_back(mi);
    order = new_order;
  }

  void extend_naive(std::size_t mi) {
    Lattice cw = projected(mi);
    const Int q = residue_order(mi);
    Int best_a = 0, best_b = 0, best_order = 1, count = 0;
    for (Int a = 0; a < order; ++a)
      for (Int b = 0; b < q; ++b) {
        if (!member(cw, mi, a, b)) continue;
        ++count;
        Int o = lcm(multiplicative_order(a, order), multiplicative_order(b, q));
        if (o > best_order) {
          best_order = o;
          best_a = a;
          best_b = b;
        }
      }
    ORDALG_CHECK(count == best_order, "mu(C_W)_p must be cyclic");
    accept(mi, best_a, best_b, best_order);
  }

  void extend_fast(std::size_t mi) {
    const Int q = residue_order(mi);
    if (order == 1 || q == 1) {
      accept(mi, 0, 0, 1);
      return;
    }
    Lattice cw = projected(mi);
    std::optional<std::pair<Int, Int>> cur;
    const Int a1 = order / p;
    for (Int k = 1; k < p && !cur; ++k)
      if (member(cw, mi, a1, k * (q / p))) cur = std::make_pair(a1, k * (q / p));
    if (!cur) {
      accept(mi, 0, 0, 1);
      return;
    }
    Int level = p;
    const Int cap = std::min(order, q);
    while (level < cap) {
      std::optional<std::pair<Int, Int>> next;
      // p-th roots: p x = a (mod order), p y = b (mod q)
      for (Int i = 0; i < p && !next; ++i)
        for (Int j = 0; j < p && !next; ++j) {
          Int x = cur->first / p + i * (order / p);
          Int y = cur->second / p + j * (q / p);
          if (member(cw, mi, x, y)) next = std::make_pair(x, y);
        }
      if (!next) break;
      cur = next;
      level *= p;
    }
    accept(mi, cur->first, cur->second, level);
  }
};

}  // namespace

MuCp mu_c_p_presentation(const Tower& t, const Int& p, bool naive_lift) {
  MuCp out;
  out.c = build_c(t, p);
  WeightedGraph gamma = graph_c(order_graph(t), p);
  out.components = gamma.components();
  const std::size_t c = t.components();

  for (const auto& w : out.components) {
    ChainState st{t, p, out.c, {}, {}, 1};
    std::size_t m1 = w.front();
    for (std::size_t m : w)
      if (st.residue_order(m) < st.residue_order(m1)) m1 = m;
    st.chain = {m1};
    st.exps[m1] = 1;
    st.order = st.residue_order(m1);
    auto bfs = bfs_order(gamma, w, m1);
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      if (naive_lift)
        st.extend_naive(bfs[i]);
      else
        st.extend_fast(bfs[i]);
    }
    std::vector<NumberField::Elem> values;
    for (std::size_t m = 0; m < c; ++m)
      values.push_back(st.exps.count(m) ? st.theta(m, st.exps[m]) : t.dec.components[m].field.one());
    IntVector gen = t.b_from_fields(values);
    ORDALG_CHECK(out.c.contains(gen), "zeta_W lies in C");
    out.generators.push_back(std::move(gen));
    out.orders.push_back(st.order);
  }

  const std::size_t k = out.generators.size();
  out.presentation.generators = out.generators;
  out.presentation.relations = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) out.presentation.relations(i, i) = out.orders[i];
  OrderUnits group{t.b};
  auto mu_bp = mu_b_p_presentation(t, p);
  auto gens = out.generators;
  out.presentation.dlog = [group, mu_bp, gens](const IntVector& x) -> std::optional<IntVector> {
    auto r = membership_dlog(group, mu_bp, gens, x);
    if (r.status != Membership::Member) return std::nullopt;
    return r.exponents;
  };
  return out;
}

}  // namespace ordalg
