#include "ordalg/numfield.hpp"

#include <algorithm>

#include "ordalg/factor.hpp"
#include "ordalg/linalg.hpp"

namespace ordalg {

using Elem = NumberField::Elem;

NumberField::NumberField(RatPoly min_poly) : min_poly_(std::move(min_poly)) {
  if (min_poly_.degree() < 1 || min_poly_.leading() != 1)
    throw DomainError("number field modulus must be monic and nonconstant: " +
                      min_poly_.to_string());
  if (!is_irreducible_q(min_poly_))
    throw DomainError("number field modulus is reducible: " + min_poly_.to_string());
}

Elem NumberField::gen() const { return from_poly(RatPoly::x()); }

Elem NumberField::from_rat(const Rat& c) const {
  Elem e(degree());
  e[0] = c;
  return e;
}

Elem NumberField::from_poly(const RatPoly& p) const {
  RatPoly r = p % min_poly_;
  Elem e(degree());
  for (int i = 0; i <= r.degree(); ++i) e[i] = r.coeff(i);
  return e;
}

bool NumberField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; });
}

Elem NumberField::add(const Elem& x, const Elem& y) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = x[i] + y[i];
  return r;
}

Elem NumberField::sub(const Elem& x, const Elem& y) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = x[i] - y[i];
  return r;
}

Elem NumberField::neg(const Elem& x) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = -x[i];
  return r;
}

Elem NumberField::mul(const Elem& x, const Elem& y) const {
  return from_poly(to_poly(x) * to_poly(y));
}

Elem NumberField::inv(const Elem& x) const {
  if (is_zero(x)) throw DomainError("inverse of zero in number field");
  auto e = ext_gcd(to_poly(x), min_poly_);
  ORDALG_CHECK(e.g.degree() == 0, "number field element shares a factor with modulus");
  return from_poly(e.s);
}

Elem NumberField::pow(const Elem& x, long e) const {
  Elem base = e < 0 ? inv(x) : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Elem r = one();
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

RatMatrix NumberField::mult_matrix(const Elem& x) const {
  const int d = degree();
  RatMatrix m(d, d);
  Elem basis_vec = one();
  Elem a = gen();
  for (int j = 0; j < d; ++j) {
    Elem col = mul(x, basis_vec);
    for (int i = 0; i < d; ++i) m(i, j) = col[i];
    basis_vec = mul(basis_vec, a);
  }
  return m;
}

Rat NumberField::norm(const Elem& x) const { return resultant(min_poly_, to_poly(x)); }

RatPoly NumberField::minpoly(const Elem& x) const {
  return minpoly_of_operator(mult_matrix(x), one());
}

namespace {

void trim(const NumberField& k, NFPoly& f) {
  while (!f.coeffs.empty() && k.is_zero(f.coeffs.back())) f.coeffs.pop_back();
}

NFPoly make_monic(const NumberField& k, NFPoly f) {
  if (f.is_zero()) return f;
  Elem inv = k.inv(f.coeffs.back());
  for (auto& c : f.coeffs) c = k.mul(c, inv);
  return f;
}

NFPoly nf_sub(const NumberField& k, const NFPoly& a, const NFPoly& b) {
  NFPoly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = k.sub(r.coeffs[i], b.coeffs[i]);
  trim(k, r);
  return r;
}

// Interpolating polynomial through (x_i, y_i) with x_i = 0, 1, ..., N.
RatPoly interpolate(const RatVector& ys) {
  const std::size_t n = ys.size();
  RatVector dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(j));
  RatPoly r;
  for (std::size_t i = n; i-- > 0;) r = r * RatPoly{-static_cast<long>(i), 1} + RatPoly::constant(dd[i]);
  return r;
}

}  // namespace

NFPoly nf_poly_from_rat(const NumberField& k, const RatPoly& f) {
  NFPoly r;
  for (const auto& c : f.coeffs()) r.coeffs.push_back(k.from_rat(c));
  return r;
}

Elem nf_eval(const NumberField& k, const NFPoly& f, const Elem& x) {
  Elem r = k.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) r = k.add(k.mul(r, x), f.coeffs[i]);
  return r;
}

NFPoly nf_mul(const NumberField& k, const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  NFPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = k.add(r.coeffs[i + j], k.mul(a.coeffs[i], b.coeffs[j]));
  trim(k, r);
  return r;
}

std::pair<NFPoly, NFPoly> nf_divmod(const NumberField& k, const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {NFPoly{}, a};
  std::vector<Elem> r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  NFPoly q;
  q.coeffs.assign(r.size() - db, k.zero());
  Elem inv = k.inv(b.coeffs.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (k.is_zero(r[i])) continue;
    Elem f = k.mul(r[i], inv);
    q.coeffs[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(f, b.coeffs[j]));
  }
  r.resize(db);
  NFPoly rem{r};
  trim(k, rem);
  trim(k, q);
  return {q, rem};
}

NFPoly nf_gcd(const NumberField& k, const NFPoly& a, const NFPoly& b) {
  NFPoly x = a, y = b;
  while (!y.is_zero()) {
    NFPoly r = nf_divmod(k, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(k, x);
}

NFPoly nf_derivative(const NumberField& k, const NFPoly& f) {
  NFPoly d;
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
    Elem c = f.coeffs[i];
    for (auto& x : c) x *= static_cast<long>(i);
    d.coeffs.push_back(c);
  }
  trim(k, d);
  return d;
}

RatPoly nf_norm(const NumberField& k, const NFPoly& f) {
  if (f.is_zero()) return RatPoly();
  const std::size_t n = static_cast<std::size_t>(f.degree()) * k.degree();
  RatVector ys(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ys[i] = k.norm(nf_eval(k, f, k.from_rat(Rat(static_cast<long>(i)))));
  return interpolate(ys);
}

std::vector<Elem> roots_in_field(const NumberField& k, const NFPoly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (f.degree() < 1) return {};
  NFPoly g = make_monic(k, f);
  NFPoly gd = nf_derivative(k, g);
  g = make_monic(k, nf_divmod(k, g, nf_gcd(k, g, gd)).first);

  std::vector<Elem> roots;
  if (g.degree() == 1) {
    roots.push_back(k.neg(g.coeffs[0]));
    return roots;
  }
  const Elem a = k.gen();
  for (long step = 0;; ++step) {
    // s = 0, 1, -1, 2, -2, ...
    long s = step % 2 ? (step + 1) / 2 : -(step / 2);
    Elem sa = k.mul(k.from_rat(Rat(s)), a);
    NFPoly lin{{k.neg(sa), k.one()}};  // X - s a
    NFPoly gs;
    for (std::size_t i = g.coeffs.size(); i-- > 0;) {
      gs = nf_mul(k, gs, lin);
      if (gs.coeffs.empty()) gs.coeffs.push_back(k.zero());
      gs.coeffs[0] = k.add(gs.coeffs[0], g.coeffs[i]);
      trim(k, gs);
    }
    RatPoly norm = nf_norm(k, gs);
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    for (const auto& entry : factor_q(norm).factors) {
      if (entry.factor.degree() != k.degree()) continue;
      NFPoly q = nf_gcd(k, gs, nf_poly_from_rat(k, entry.factor));
      if (q.degree() != 1) continue;
      // gs(rho) = 0 with rho = -q_0, and g(rho - s a) = 0
      roots.push_back(k.sub(k.neg(q.coeffs[0]), sa));
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  ORDALG_CHECK(static_cast<int>(roots.size()) <= g.degree(), "more roots than the degree");
  for (const auto& r : roots)
    ORDALG_CHECK(k.is_zero(nf_eval(k, f, r)), "reported root does not vanish");
  return roots;
}

}  // namespace ordalg
