#include "ordalg/poly.hpp"

#include <algorithm>

#include "ordalg/linalg.hpp"

namespace ordalg {

RatPoly::RatPoly(RatVector coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(RatVector{c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t k) {
  RatVector v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(const IntVector& coeffs) { return RatPoly(to_rat(coeffs)); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return inv * (*this);
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  RatVector d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

RatPoly RatPoly::compose(const RatPoly& g) const {
  RatPoly r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
  return r;
}

bool RatPoly::is_integral() const {
  for (const auto& c : c_)
    if (!ordalg::is_integral(c)) return false;
  return true;
}

IntVector RatPoly::int_coeffs() const { return to_int(c_); }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatVector c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
  RatVector c = a.c_;
  for (auto& x : c) x = -x;
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  RatVector c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  RatVector c = a.c_;
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).quotient; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).remainder; }

bool operator<(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) {
      s += mag.get_str();
      if (i > 0) s += "*";
    }
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

PolyDivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  RatVector r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  RatVector q(r.size() - db);
  Rat inv = 1 / b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rat f = r[i] * inv;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

RatPoly pow(const RatPoly& f, unsigned e) {
  RatPoly r = RatPoly::constant(1), b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rat resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  RatPoly a = f, b = g;
  Rat acc = 1;
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rat r = 1;
      for (int i = 0; i < m; ++i) r *= b.leading();
      return acc * r;
    }
    if (m == 0) {
      Rat r = 1;
      for (int i = 0; i < n; ++i) r *= a.leading();
      return acc * r;
    }
    RatPoly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

Rat discriminant(const RatPoly& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant of a constant polynomial");
  Rat r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (f.degree() == 0) return RatPoly::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  RatPoly a = f.monic();
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = (a / c).monic();
  RatPoly y = (b / c);
  unsigned i = 1;
  while (w.degree() > 0) {
    RatPoly z = y - w.derivative();
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = (w / g).monic();
    y = z / g;
    ++i;
  }
  return out;
}

RatPoly minpoly_of_operator(const RatMatrix& l, const RatVector& v) {
  // Krylov vectors v, Lv, L^2 v, ... until the first linear dependency.
  std::vector<RatVector> krylov{v};
  while (true) {
    RatVector next = l * krylov.back();
    RatMatrix k = RatMatrix::from_columns(v.size(), krylov);
    auto sol = solve_rat(k, next);
    if (sol) {
      RatVector c(krylov.size() + 1);
      for (std::size_t i = 0; i < krylov.size(); ++i) c[i] = -(*sol)[i];
      c[krylov.size()] = 1;
      return RatPoly(std::move(c));
    }
    krylov.push_back(std::move(next));
  }
}

}  // namespace ordalg
