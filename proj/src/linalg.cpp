#include "ordalg/linalg.hpp"

#include <algorithm>

namespace ordalg {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        throw DomainError("expected integral matrix, found " + to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::pair<Int, IntMatrix> clear_denominators(const RatMatrix& m) {
  Int d = 1;
  for (const auto& x : m.data()) d = lcm(d, x.get_den());
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat s = m(i, j) * d;
      r(i, j) = s.get_num();
    }
  return {d, r};
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Hermite normal form

HnfResult hnf(const IntMatrix& m) {
  HnfResult r{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  const std::size_t cols = m.cols();
  std::size_t k = 0;
  Int q;
  for (std::size_t i = 0; i < m.rows() && k < cols; ++i) {
    // Euclid across columns k..cols-1 of row i, always pivoting on the
    // smallest nonzero entry.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = k; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        if (best == cols || abs_int(h(i, j)) < abs_int(h(i, best))) best = j;
      }
      if (best == cols) break;
      h.swap_columns(k, best);
      u.swap_columns(k, best);
      bool clean = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
        if (q != 0) {
          Int nq = -q;
          h.add_column_multiple(j, k, nq);
          u.add_column_multiple(j, k, nq);
        }
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      h.negate_column(k);
      u.negate_column(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      q = floor_div(h(i, j), h(i, k));
      if (q != 0) {
        Int nq = -q;
        h.add_column_multiple(j, k, nq);
        u.add_column_multiple(j, k, nq);
      }
    }
    r.pivot_rows.push_back(i);
    ++k;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SnfResult::diagonal() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    out.push_back(d(i, i));
  return out;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = r.d;
  const std::size_t rows = m.rows(), cols = m.cols();
  Int q;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pick the smallest nonzero entry of the trailing block as pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 &&
            (pi == rows || abs_int(d(i, j)) < abs_int(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    d.swap_rows(t, pi);
    r.u.swap_rows(t, pi);
    d.swap_columns(t, pj);
    r.v.swap_columns(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        Int nq = -q;
        d.add_row_multiple(i, t, nq);
        r.u.add_row_multiple(i, t, nq);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        Int nq = -q;
        d.add_column_multiple(j, t, nq);
        r.v.add_column_multiple(j, t, nq);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs_int(d(i, t)) < abs_int(d(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs_int(d(t, j)) < abs_int(d(bi, bj))) {
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        r.u.swap_rows(t, bi);
        d.swap_columns(t, bj);
        r.v.swap_columns(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, Int(1));
      r.u.add_row_multiple(t, bad, Int(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      r.u.negate_row(t);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Determinants

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InternalError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InternalError("det of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = m.rows();
  Rat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t s = k;
    while (s < n && a(s, k) == 0) ++s;
    if (s == n) return 0;
    if (s != k) {
      a.swap_rows(k, s);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, Rat(-f));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Lattices

Lattice Lattice::generated_by(const IntMatrix& gens) {
  HnfResult r = hnf(gens);
  Lattice l;
  l.basis_ = r.h.column_block(0, r.rank());
  l.pivots_ = r.pivot_rows;
  return l;
}

Lattice Lattice::from_vectors(std::size_t ambient_dim,
                              const std::vector<IntVector>& gens) {
  return generated_by(IntMatrix::from_columns(ambient_dim, gens));
}

Lattice Lattice::full(std::size_t n) {
  return generated_by(IntMatrix::identity(n));
}

Lattice Lattice::zero(std::size_t n) { return generated_by(IntMatrix(n, 0)); }

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_dim()) throw InternalError("lattice dimension mismatch");
  IntVector resid = v;
  IntVector c(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::size_t p = pivots_[j];
    if (resid[p] == 0) continue;
    if (resid[p] % basis_(p, j) != 0) return std::nullopt;
    c[j] = resid[p] / basis_(p, j);
    for (std::size_t i = p; i < ambient_dim(); ++i) resid[i] -= c[j] * basis_(i, j);
  }
  for (const auto& x : resid)
    if (x != 0) return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

IntVector Lattice::reduce(const IntVector& v) const {
  if (!is_full_rank()) throw InternalError("reduce requires a full-rank lattice");
  IntVector r = v;
  for (std::size_t j = 0; j < rank(); ++j) {
    Int q = floor_div(r[j], basis_(j, j));
    if (q == 0) continue;
    for (std::size_t i = j; i < ambient_dim(); ++i) r[i] -= q * basis_(i, j);
  }
  return r;
}

Int Lattice::covolume() const {
  if (!is_full_rank()) throw DomainError("covolume of a lattice that is not full rank");
  Int d = 1;
  for (std::size_t j = 0; j < rank(); ++j) d *= basis_(j, j);
  return d;
}

Lattice kernel_int(const IntMatrix& m) {
  HnfResult r = hnf(m);
  return Lattice::generated_by(r.u.column_block(r.rank(), m.cols()));
}

Lattice image_int(const IntMatrix& m) { return Lattice::generated_by(m); }

Int index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim())
    throw DomainError("index: lattices live in different spaces");
  if (sub.rank() != sup.rank()) throw DomainError("index: ranks differ");
  IntMatrix change(sup.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto c = sup.coordinates(sub.basis().column(j));
    if (!c) throw DomainError("index: sublattice is not contained in superlattice");
    change.set_column(j, *c);
  }
  return abs_int(det(change));
}

Lattice sum_lattices(const Lattice& a, const Lattice& b) {
  return Lattice::generated_by(IntMatrix::hconcat(a.basis(), b.basis()));
}

Lattice intersect_lattices(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DomainError("intersect: lattices live in different spaces");
  IntMatrix stacked = IntMatrix::hconcat(a.basis(), Int(-1) * b.basis());
  Lattice k = kernel_int(stacked);
  IntMatrix xs = k.basis().row_block(0, a.rank());
  return Lattice::generated_by(a.basis() * xs);
}

Lattice preimage(const IntMatrix& m, const Lattice& target) {
  if (m.rows() != target.ambient_dim())
    throw InternalError("preimage: shape mismatch");
  IntMatrix stacked = IntMatrix::hconcat(m, Int(-1) * target.basis());
  Lattice k = kernel_int(stacked);
  return Lattice::generated_by(k.basis().row_block(0, m.cols()));
}

Lattice project_prefix(const Lattice& l, std::size_t k) {
  return Lattice::generated_by(l.basis().row_block(0, k));
}

// ---------------------------------------------------------------------------
// Rational linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t s = r;
    while (s < a.rows() && a(s, c) == 0) ++s;
    if (s == a.rows()) continue;
    a.swap_rows(r, s);
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = -a(i, c);
      a.add_row_multiple(i, r, f);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve_rat(const RatMatrix& m, const RatVector& v) {
  if (v.size() != m.rows()) throw InternalError("solve_rat: shape mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

RatMatrix kernel_rat(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, f);
    basis.push_back(std::move(x));
  }
  return RatMatrix::from_columns(m.cols(), basis);
}

std::size_t rank_rat(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = RatMatrix::hconcat(m, RatMatrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw DomainError("inverse of singular matrix");
  return aug.column_block(n, 2 * n);
}

IntVector invariant_factors(const IntMatrix& relations) {
  SnfResult s = snf(relations);
  IntVector out;
  for (const auto& x : s.diagonal())
    if (x > 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordalg
