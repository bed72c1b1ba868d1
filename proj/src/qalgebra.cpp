#include "ordalg/qalgebra.hpp"

#include <algorithm>
#include <numeric>

#include "ordalg/factor.hpp"
#include "ordalg/linalg.hpp"

namespace ordalg {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

bool is_zero_vec(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

}  // namespace

QAlgebra QAlgebra::from_table(std::size_t n, std::vector<Rat> table) {
  if (n == 0) throw InputError("algebra of dimension zero");
  if (table.size() != n * n * n)
    throw InputError("structure constant table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(n * n * n));
  QAlgebra a;
  a.n_ = n;
  a.table_ = std::move(table);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != a.constant(j, i, k))
          throw InputError("structure constants not commutative at " + triple(i, j, k));

  // (e_i e_j) e_k = e_i (e_j e_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rat lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += a.constant(i, j, m) * a.constant(m, k, l);
            rhs += a.constant(j, k, m) * a.constant(i, m, l);
          }
          if (lhs != rhs)
            throw InputError("structure constants not associative at " + triple(i, j, k));
        }
      }

  // sum_i u_i a_ijk = delta_jk
  RatMatrix sys(n * n, n);
  RatVector rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = a.constant(i, j, k);
      rhs[j * n + k] = j == k ? 1 : 0;
    }
  auto u = solve_rat(sys, rhs);
  if (!u) throw InputError("structure constants have no identity element");
  a.one_ = *u;
  return a;
}

RatVector QAlgebra::basis_vector(std::size_t i) const {
  RatVector v(n_);
  v[i] = 1;
  return v;
}

RatVector QAlgebra::mul(const RatVector& x, const RatVector& y) const {
  RatVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      const Rat* row = &table_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k)
        if (row[k] != 0) r[k] += c * row[k];
    }
  }
  return r;
}

RatVector QAlgebra::add(const RatVector& x, const RatVector& y) const {
  RatVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = x[i] + y[i];
  return r;
}

RatVector QAlgebra::sub(const RatVector& x, const RatVector& y) const {
  RatVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = x[i] - y[i];
  return r;
}

RatVector QAlgebra::scale(const Rat& c, const RatVector& x) const {
  RatVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = c * x[i];
  return r;
}

RatVector QAlgebra::pow(const RatVector& x, unsigned long e) const {
  RatVector r = one_, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::optional<RatVector> QAlgebra::inverse(const RatVector& x) const {
  return solve_rat(mult_matrix(x), one_);
}

RatVector QAlgebra::eval(const RatPoly& p, const RatVector& x) const {
  RatVector r(n_);
  for (int i = p.degree(); i >= 0; --i) r = add(mul(r, x), scale(p.coeff(i), one_));
  return r;
}

RatMatrix QAlgebra::mult_matrix(const RatVector& x) const {
  RatMatrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    RatVector col = mul(x, basis_vector(j));
    for (std::size_t i = 0; i < n_; ++i) m(i, j) = col[i];
  }
  return m;
}

Rat QAlgebra::trace(const RatVector& x) const {
  RatMatrix m = mult_matrix(x);
  Rat t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += m(i, i);
  return t;
}

RatPoly QAlgebra::minpoly(const RatVector& x) const {
  return minpoly_of_operator(mult_matrix(x), one_);
}

bool SpecDecomposition::is_separable(const RatVector& x) const {
  return is_zero_vec(pi2 * x);
}

RatVector SpecDecomposition::project(std::size_t m, const RatVector& x) const {
  return components[m].projection * x;
}

namespace {

// Coordinates of X^i mod h for i < d, as a deg(h) x d matrix.
RatMatrix reduction_matrix(const RatPoly& h, std::size_t d) {
  const std::size_t k = h.degree();
  RatMatrix r(k, d);
  for (std::size_t i = 0; i < d; ++i) {
    RatPoly rem = RatPoly::monomial(Rat(1), i) % h;
    for (std::size_t j = 0; j < k; ++j) r(j, i) = rem.coeff(j);
  }
  return r;
}

bool is_scalar(const QAlgebra& e, const RatVector& x) {
  const RatVector& one = e.one();
  std::size_t p = 0;
  while (one[p] == 0) ++p;
  Rat c = x[p] / one[p];
  for (std::size_t i = 0; i < e.dim(); ++i)
    if (x[i] != c * one[i]) return false;
  return true;
}

// Rewrites a component so its field is defined by the minimal polynomial of a
// small generator: the image of a basis vector when possible.
FieldComponent rebase(const QAlgebra& e, const NumberField& k_old, const RatMatrix& proj) {
  const std::size_t n = e.dim();
  const int k = k_old.degree();
  std::vector<RatVector> candidates;
  for (std::size_t j = 0; j < n; ++j) candidates.push_back(e.basis_vector(j));
  if (k > 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        candidates.push_back(e.add(e.basis_vector(i), e.basis_vector(j)));
        candidates.push_back(e.sub(e.basis_vector(i), e.basis_vector(j)));
      }
  }
  std::optional<NumberField::Elem> beta;
  if (k == 1) {
    for (const auto& c : candidates)
      if (!is_scalar(e, c)) {
        beta = proj * c;
        break;
      }
    if (!beta) beta = proj * candidates[0];
  } else {
    for (const auto& c : candidates) {
      NumberField::Elem b = proj * c;
      if (k_old.minpoly(b).degree() == k) {
        beta = b;
        break;
      }
    }
    if (!beta) beta = k_old.gen();
  }
  RatPoly f = k_old.minpoly(*beta);
  RatMatrix change(k, k);
  NumberField::Elem pw = k_old.one();
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) change(i, j) = pw[i];
    pw = k_old.mul(pw, *beta);
  }
  return FieldComponent{NumberField(f), inverse(change) * proj};
}

bool component_less(const FieldComponent& a, const FieldComponent& b) {
  if (a.field.degree() != b.field.degree()) return a.field.degree() < b.field.degree();
  if (a.field.min_poly() != b.field.min_poly()) return a.field.min_poly() < b.field.min_poly();
  return a.projection.data() < b.projection.data();
}

}  // namespace

SpecDecomposition decompose(const QAlgebra& e) {
  const std::size_t n = e.dim();
  SpecDecomposition dec;

  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      gram(i, j) = gram(j, i) = e.trace(e.mul(e.basis_vector(i), e.basis_vector(j)));
  dec.nil_basis = kernel_rat(gram);
  const std::size_t d = n - dec.nil_basis.cols();

  // Primitive element of E / sqrt(0): first t with deg sqfree(minpoly) = d.
  RatVector alpha;
  RatPoly g;
  for (long t = 0;; ++t) {
    alpha.assign(n, Rat(0));
    Rat pw = 1;
    for (std::size_t i = 0; i < n; ++i) {
      alpha[i] = pw;
      pw *= t;
    }
    g = squarefree_part(e.minpoly(alpha));
    if (static_cast<std::size_t>(g.degree()) == d) break;
  }
  // Newton iteration towards the separable root of g above alpha.
  RatPoly gd = g.derivative();
  while (true) {
    RatVector v = e.eval(g, alpha);
    if (is_zero_vec(v)) break;
    auto inv = e.inverse(e.eval(gd, alpha));
    ORDALG_CHECK(inv.has_value(), "g'(alpha) must be a unit");
    alpha = e.sub(alpha, e.mul(v, *inv));
  }

  dec.sep_basis = RatMatrix(n, d);
  RatVector pw = e.one();
  for (std::size_t j = 0; j < d; ++j) {
    dec.sep_basis.set_column(j, pw);
    pw = e.mul(pw, alpha);
  }
  RatMatrix full = RatMatrix::hconcat(dec.sep_basis, dec.nil_basis);
  RatMatrix full_inv = inverse(full);
  RatMatrix power_coords = full_inv.row_block(0, d);
  dec.pi1 = dec.sep_basis * power_coords;
  dec.pi2 = dec.nil_basis * full_inv.row_block(d, n);

  for (const auto& entry : factor_q(g).factors) {
    const RatPoly& h = entry.factor;
    NumberField k_old(h);
    RatMatrix proj = reduction_matrix(h, d) * power_coords;
    dec.components.push_back(rebase(e, k_old, proj));
  }
  std::sort(dec.components.begin(), dec.components.end(), component_less);

  std::size_t off = 0;
  dec.to_product = RatMatrix(0, n);
  for (const auto& c : dec.components) {
    dec.offsets.push_back(off);
    off += c.field.degree();
    dec.to_product = RatMatrix::vconcat(dec.to_product, c.projection);
  }
  ORDALG_CHECK(off == d, "component degrees must sum to dim E_sep");
  dec.section = dec.sep_basis * inverse(dec.to_product * dec.sep_basis);
  return dec;
}

AlgebraUnits::Elem AlgebraUnits::inverse(const Elem& a) const {
  auto inv = alg->inverse(a);
  if (!inv) throw DomainError("element is not a unit");
  return *inv;
}

namespace {

// Residue degrees of K at a few unramified primes.  If zeta_d lies in K then
// d | p^f - 1 for every residue degree f at p (p not dividing d).
struct LocalDegrees {
  std::vector<std::pair<std::int64_t, std::vector<int>>> primes;

  explicit LocalDegrees(const RatPoly& min_poly) {
    // D^n m(y/D) is monic integral and defines the same field
    const int n = min_poly.degree();
    Int den = 1;
    for (const auto& c : min_poly.coeffs()) den = lcm(den, Int(c.get_den()));
    std::vector<Rat> g(n + 1);
    Int scale = 1;
    for (int i = n; i >= 0; --i) {
      g[i] = min_poly.coeff(i) * scale;
      scale *= den;
    }
    RatPoly gp(g);
    Int disc = discriminant(gp).get_num();
    for (std::int64_t p = 3; p < 400 && primes.size() < 12; p += 2) {
      if (!is_prime(Int(p)) || disc % p == 0) continue;
      std::vector<std::int64_t> f(n + 1);
      for (int i = 0; i <= n; ++i) f[i] = mod_pos(gp.coeff(i).get_num(), p).get_si();
      std::vector<int> degs;
      for (const auto& fac : detail::berlekamp(f, p)) degs.push_back(static_cast<int>(fac.size()) - 1);
      primes.emplace_back(p, std::move(degs));
    }
  }

  bool may_contain(std::uint64_t d) const {
    for (const auto& [p, degs] : primes) {
      if (d % p == 0) continue;
      for (int f : degs)
        if ((pow_int(Int(p), f) - 1) % d != 0) return false;
    }
    return true;
  }
};

}  // namespace

std::pair<NumberField::Elem, Int> field_mu_generator(const NumberField& k) {
  const std::uint64_t deg = k.degree();
  NumberField::Elem best = k.one();
  Int best_order = 1;
  LocalDegrees sieve(k.min_poly());
  for (std::uint64_t d = 1; d <= 2 * deg * deg; ++d) {
    if (deg % euler_phi(d) != 0 || !sieve.may_contain(d)) continue;
    auto roots = roots_in_field(k, nf_poly_from_rat(k, cyclotomic(d)));
    if (roots.empty()) continue;
    best = roots.front();
    best_order = static_cast<unsigned long>(d);
  }
  return {best, best_order};
}

MuData mu_presentation(const QAlgebra& e, const SpecDecomposition& dec) {
  MuData mu;
  const std::size_t c = dec.size();
  auto shared = std::make_shared<const QAlgebra>(e);
  mu.presentation.relations = IntMatrix(c, c);
  for (std::size_t m = 0; m < c; ++m) {
    const NumberField& k = dec.components[m].field;
    auto [zeta, order] = field_mu_generator(k);
    RatVector prod(dec.sep_dim());
    for (std::size_t i = 0; i < c; ++i) prod[dec.offsets[i]] = 1;
    for (int i = 0; i < k.degree(); ++i) prod[dec.offsets[m] + i] = zeta[i];
    mu.presentation.generators.push_back(dec.lift(prod));
    mu.presentation.relations(m, m) = order;
    mu.zeta.push_back(std::move(zeta));
    mu.order.push_back(order);
  }
  auto dec_ptr = std::make_shared<const SpecDecomposition>(dec);
  auto zetas = mu.zeta;
  auto orders = mu.order;
  mu.presentation.dlog = [shared, dec_ptr, zetas, orders](const RatVector& x) {
    MuData tmp;
    tmp.zeta = zetas;
    tmp.order = orders;
    return mu_dlog(*shared, *dec_ptr, tmp, x).exponents;
  };
  return mu;
}

MuDlogResult mu_dlog(const QAlgebra& e, const SpecDecomposition& dec, const MuData& mu,
                     const RatVector& gamma) {
  MuDlogResult res;
  if (gamma.size() != e.dim() || !dec.is_separable(gamma)) {
    res.failure = MuFailure::NotSeparable;
    return res;
  }
  IntVector exps(dec.size());
  for (std::size_t m = 0; m < dec.size(); ++m) {
    const NumberField& k = dec.components[m].field;
    NumberField::Elem y = dec.project(m, gamma);
    NumberField::Elem cur = k.one();
    bool found = false;
    for (Int a = 0; a < mu.order[m]; ++a) {
      if (cur == y) {
        exps[m] = a;
        found = true;
        break;
      }
      cur = k.mul(cur, mu.zeta[m]);
    }
    if (!found) {
      res.failure = MuFailure::NotRootOfUnity;
      res.component = m;
      return res;
    }
  }
  res.exponents = std::move(exps);
  return res;
}

}  // namespace ordalg
