#include "ordalg/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace ordalg {

namespace {

using ModPoly = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p a small prime.

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw InternalError("inv_mod: not invertible");
  return mod(t, p);
}

ModPoly sub(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = mod(c[i] - b[i], p);
  trim(c);
  return c;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (b.empty()) throw InternalError("mod-p division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly r = a;
  const std::size_t db = b.size() - 1;
  ModPoly q(r.size() - db);
  std::int64_t inv = inv_mod(b.back(), p);
  for (std::size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    std::int64_t f = r[i] * inv % p;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - f * b[j], p);
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw InternalError("bezout: inputs not coprime");
  std::int64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly derivative(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  trim(d);
  return d;
}

ModPoly powmod(ModPoly base, Int e, const ModPoly& m, std::int64_t p) {
  ModPoly r{1};
  base = divmod(base, m, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base, p), m, p).second;
    e >>= 1;
    if (e > 0) base = divmod(mul(base, base, p), m, p).second;
  }
  return r;
}

ModPoly reduce_mod_p(const IntVector& f, std::int64_t p) {
  ModPoly r(f.size());
  Int pp = p;
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_pos(f[i], pp).get_si();
  trim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials over Z (monic), with arithmetic mod M where needed.

IntVector int_mul(const IntVector& a, const IntVector& b) {
  if (a.empty() || b.empty()) return {};
  IntVector c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntVector reduce_mod(const IntVector& a, const Int& m) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  return r;
}

IntVector symmetric_mod(const IntVector& a, const Int& m) {
  IntVector r(a.size());
  Int half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = mod_pos(a[i], m);
    if (r[i] > half) r[i] -= m;
  }
  return r;
}

IntVector from_mod(const ModPoly& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
  return r;
}

// Exact division of integer polynomials with monic divisor; nullopt if the
// remainder is nonzero.
std::optional<IntVector> int_exact_div(const IntVector& a, const IntVector& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntVector r = a;
  const std::size_t db = b.size() - 1;
  IntVector q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    Int f = r[i];
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return q;
}

// Lifts f = g*h (mod p) to mod p^k, with g, h monic and coprime mod p.
std::pair<IntVector, IntVector> lift_two(const IntVector& f, const ModPoly& g,
                                         const ModPoly& h, std::int64_t p,
                                         const Int& pk) {
  auto [s, t] = bezout(g, h, p);
  IntVector big_g = from_mod(g), big_h = from_mod(h);
  Int m = p;
  while (m < pk) {
    IntVector prod = int_mul(big_g, big_h);
    IntVector diff(std::max(f.size(), prod.size()));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    diff = reduce_mod(diff, pk);
    ModPoly e(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      Int q = diff[i] / m;  // exact
      e[i] = mod_pos(q, Int(p)).get_si();
    }
    trim(e);
    // dg*h + dh*g = e (mod p), deg dg < deg g
    ModPoly dg = divmod(mul(e, t, p), g, p).second;
    ModPoly dh = divmod(sub(e, mul(dg, h, p), p), g, p).first;
    for (std::size_t i = 0; i < dg.size(); ++i) big_g[i] += m * static_cast<long>(dg[i]);
    if (big_h.size() < dh.size()) big_h.resize(dh.size());
    for (std::size_t i = 0; i < dh.size(); ++i) big_h[i] += m * static_cast<long>(dh[i]);
    m *= p;
    big_g = reduce_mod(big_g, pk);
    big_h = reduce_mod(big_h, pk);
  }
  return {big_g, big_h};
}

std::vector<IntVector> hensel_lift(const IntVector& f, const std::vector<ModPoly>& facs,
                                   std::int64_t p, const Int& pk) {
  if (facs.size() == 1) return {reduce_mod(f, pk)};
  ModPoly rest{1};
  for (std::size_t i = 1; i < facs.size(); ++i) rest = mul(rest, facs[i], p);
  auto [g, h] = lift_two(f, facs[0], rest, p, pk);
  std::vector<ModPoly> tail(facs.begin() + 1, facs.end());
  std::vector<IntVector> out{g};
  for (auto& x : hensel_lift(h, tail, p, pk)) out.push_back(std::move(x));
  return out;
}

Int isqrt_ceil(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

}  // namespace

namespace detail {

std::vector<ModPoly> berlekamp(const ModPoly& f_in, std::int64_t p) {
  ModPoly f = make_monic(f_in, p);
  const int n = deg(f);
  if (n <= 1) return {f};
  // Column i of Q - I holds x^{ip} mod f minus x^i.
  ModPoly xp = powmod({0, 1}, Int(p), f, p);
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  ModPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < cur.size(); ++r) a[r][i] = cur[r];
    a[i][i] = mod(a[i][i] - 1, p);
    cur = divmod(mul(cur, xp, p), f, p).second;
  }
  // Null space of a over F_p.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  std::vector<int> where(n, -1);
  for (int c = 0; c < n && row < n; ++c) {
    int s = row;
    while (s < n && a[s][c] == 0) ++s;
    if (s == n) continue;
    std::swap(a[s], a[row]);
    std::int64_t inv = inv_mod(a[row][c], p);
    for (int j = 0; j < n; ++j) a[row][j] = a[row][j] * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      std::int64_t fct = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = mod(a[i][j] - fct * a[row][j], p);
    }
    where[c] = row++;
  }
  std::vector<ModPoly> kernel;
  for (int free_c = 0; free_c < n; ++free_c) {
    if (where[free_c] != -1) continue;
    ModPoly v(n, 0);
    v[free_c] = 1;
    for (int c = 0; c < n; ++c)
      if (where[c] != -1) v[c] = mod(-a[where[c]][free_c], p);
    trim(v);
    kernel.push_back(v);
  }
  const std::size_t r = kernel.size();
  std::vector<ModPoly> factors{f};
  for (const auto& v : kernel) {
    if (factors.size() == r) break;
    if (deg(v) <= 0) continue;
    std::vector<ModPoly> next;
    for (const auto& u : factors) {
      if (deg(u) <= 1) {
        next.push_back(u);
        continue;
      }
      ModPoly rem = u;
      for (std::int64_t s = 0; s < p && deg(rem) > 1; ++s) {
        ModPoly vs = v;
        vs[0] = mod(vs[0] - s, p);
        trim(vs);
        ModPoly g = gcd(rem, vs, p);
        if (deg(g) > 0 && deg(g) < deg(rem)) {
          next.push_back(g);
          rem = divmod(rem, g, p).first;
          rem = make_monic(rem, p);
        }
      }
      next.push_back(rem);
    }
    factors = std::move(next);
  }
  if (factors.size() != r) throw InternalError("berlekamp: incomplete split");
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<IntVector> zassenhaus(const IntVector& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::int64_t p = 2;
  for (;; ++p) {
    if (!is_prime(Int(p))) continue;
    ModPoly fp = reduce_mod_p(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) break;
  }
  std::vector<ModPoly> facs = berlekamp(reduce_mod_p(f, p), p);
  if (facs.size() == 1) return {f};

  // Mignotte: every factor's coefficients are bounded by 2^n * ||f||_2.
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int bound = pow_int(Int(2), n) * isqrt_ceil(norm2);
  Int pk = p;
  while (pk <= 2 * bound) pk *= p;
  std::vector<IntVector> lifted = hensel_lift(f, facs, p, pk);

  std::vector<IntVector> result;
  IntVector rem = f;
  std::vector<IntVector> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntVector g{Int(1)};
      for (auto i : idx) g = reduce_mod(int_mul(g, pool[i]), pk);
      g = symmetric_mod(g, pk);
      bool plausible = rem[0] == 0 || (g[0] != 0 && rem[0] % g[0] == 0);
      if (plausible) {
        if (auto q = int_exact_div(rem, g)) {
          result.push_back(g);
          rem = *q;
          std::vector<IntVector> kept;
          for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
            if (j < s && idx[j] == i) {
              ++j;
              continue;
            }
            kept.push_back(pool[i]);
          }
          pool = std::move(kept);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rem.size() > 1) result.push_back(rem);
  return result;
}

}  // namespace detail

RatPoly Factorization::expand() const {
  RatPoly r = RatPoly::constant(unit);
  for (const auto& e : factors) r = r * pow(e.factor, e.multiplicity);
  return r;
}

Factorization factor_q(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("factor_q: zero polynomial");
  Factorization out{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    // Make the monic squarefree part integral: D^n a(y/D).
    Int d = common_denominator(part.coeffs());
    const int n = part.degree();
    IntVector scaled(n + 1);
    Int dp = 1;
    for (int i = n; i >= 0; --i) {
      Rat c = part.coeff(i) * dp;
      scaled[i] = c.get_num();
      dp *= d;
    }
    for (const auto& g : detail::zassenhaus(scaled)) {
      // back-substitute y = D x and renormalise to monic
      RatVector c(g.size());
      Int pw = 1;
      for (std::size_t i = 0; i < g.size(); ++i) {
        c[i] = g[i] * pw;
        pw *= d;
      }
      out.factors.push_back({RatPoly(std::move(c)).monic(), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorEntry& a, const FactorEntry& b) { return a.factor < b.factor; });
  return out;
}

bool is_irreducible_q(const RatPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_q(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

RatPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw DomainError("cyclotomic: index must be positive");
  static std::map<std::uint64_t, RatPoly> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  RatPoly r = RatPoly::monomial(Rat(1), d) - RatPoly::constant(1);
  for (std::uint64_t e = 1; e < d; ++e)
    if (d % e == 0) r = r / cyclotomic(e);
  cache.emplace(d, r);
  return r;
}

}  // namespace ordalg
