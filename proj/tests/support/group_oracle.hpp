// Brute-force helpers for finite abelian groups Z^k / L (test support).
#ifndef ORDALG_TESTS_GROUP_ORACLE_HPP_
#define ORDALG_TESTS_GROUP_ORACLE_HPP_

#include <deque>
#include <map>
#include <random>

#include "ordalg/abgroup.hpp"

namespace oracle {

using namespace ordalg;

/// Z^k / L for a full-rank L, elements kept in the canonical box.
struct QuotientGroup {
  using Elem = IntVector;
  Lattice rel;

  std::size_t rank() const { return rel.ambient_dim(); }
  Elem identity() const { return Elem(rank()); }
  Elem reduce(const Elem& x) const { return rel.reduce(x); }
  Elem multiply(const Elem& a, const Elem& b) const {
    Elem c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = a[i] + b[i];
    return reduce(c);
  }
  Elem inverse(const Elem& a) const {
    Elem c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = -a[i];
    return reduce(c);
  }
  bool equal(const Elem& a, const Elem& b) const { return reduce(a) == reduce(b); }
};

inline QuotientGroup random_group(std::mt19937& rng, long max_order) {
  std::uniform_int_distribution<int> kdist(1, 3);
  const int k = kdist(rng);
  while (true) {
    IntMatrix m(k, k);
    long order = 1;
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> d(1, 24);
      m(i, i) = d(rng);
      order *= m(i, i).get_si();
      for (int j = 0; j < i; ++j) m(i, j) = std::uniform_int_distribution<int>(-5, 5)(rng);
    }
    if (order > max_order || order < 2) continue;
    // scramble the basis by a unimodular column operation
    for (int j = 1; j < k; ++j) m.add_column_multiple(j, 0, Int(std::uniform_int_distribution<int>(-3, 3)(rng)));
    return QuotientGroup{Lattice::generated_by(m)};
  }
}

inline IntVector random_element(std::mt19937& rng, const QuotientGroup& g) {
  IntVector v(g.rank());
  for (auto& x : v) x = std::uniform_int_distribution<int>(-40, 40)(rng);
  return g.reduce(v);
}

/// BFS over the Cayley graph of <T>: element -> exponent word over T.
inline std::map<IntVector, IntVector> enumerate_subgroup(const QuotientGroup& g,
                                                         const std::vector<IntVector>& t) {
  std::map<IntVector, IntVector> words;
  std::deque<IntVector> queue;
  words[g.identity()] = IntVector(t.size());
  queue.push_back(g.identity());
  while (!queue.empty()) {
    IntVector h = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < t.size(); ++i) {
      IntVector n = g.multiply(h, t[i]);
      if (words.count(n)) continue;
      IntVector w = words[h];
      w[i] += 1;
      words[n] = w;
      queue.push_back(n);
    }
  }
  return words;
}

/// ker(Z^T -> G) from Schreier generators w(h) + e_t - w(h t).
inline Lattice schreier_kernel(const QuotientGroup& g, const std::vector<IntVector>& t) {
  if (t.empty()) return Lattice::zero(0);
  auto words = enumerate_subgroup(g, t);
  std::vector<IntVector> gens;
  for (const auto& [h, w] : words) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      IntVector v = w;
      v[i] += 1;
      const IntVector& w2 = words.at(g.multiply(h, t[i]));
      for (std::size_t j = 0; j < t.size(); ++j) v[j] -= w2[j];
      bool zero = true;
      for (const auto& c : v) zero = zero && c == 0;
      if (!zero) gens.push_back(v);
    }
  }
  return Lattice::from_vectors(t.size(), gens);
}

/// Presentation on the standard generators plus `extra` elements.  Relations
/// come from the Schreier oracle; dlog returns coordinates on the standard part.
inline EffPresentation<IntVector> presentation(const QuotientGroup& g,
                                               const std::vector<IntVector>& extra) {
  EffPresentation<IntVector> p;
  const std::size_t k = g.rank();
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k);
    e[i] = 1;
    p.generators.push_back(g.reduce(e));
  }
  for (const auto& x : extra) p.generators.push_back(x);
  p.relations = schreier_kernel(g, p.generators).basis();
  const std::size_t s = p.generators.size();
  p.dlog = [k, s](const IntVector& x) -> std::optional<IntVector> {
    if (x.size() != k) return std::nullopt;
    IntVector v(s);
    for (std::size_t i = 0; i < k; ++i) v[i] = x[i];
    return v;
  };
  return p;
}

}  // namespace oracle

#endif  // ORDALG_TESTS_GROUP_ORACLE_HPP_
