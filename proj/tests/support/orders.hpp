#ifndef ORDALG_TESTS_SUPPORT_ORDERS_HPP_
#define ORDALG_TESTS_SUPPORT_ORDERS_HPP_

#include <vector>

#include "ordalg/linalg.hpp"
#include "ordalg/order.hpp"

namespace oracle {

using namespace ordalg;

/// Componentwise product of orders.
inline Order product_order(const std::vector<Order>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  std::vector<Int> table(n * n * n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    const std::size_t r = p.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          table[((off + i) * n + off + j) * n + off + k] = p.constant(i, j, k);
    off += r;
  }
  return Order::from_table(n, std::move(table));
}

/// Smallest subring of `big` containing 1 and the given vectors (which must
/// span a full-rank lattice after closure).
inline Lattice ring_closure(const Order& big, std::vector<IntVector> gens) {
  gens.push_back(big.one());
  Lattice l = Lattice::from_vectors(big.rank(), gens);
  for (;;) {
    std::vector<IntVector> all;
    const IntMatrix& b = l.basis();
    for (std::size_t i = 0; i < b.cols(); ++i) {
      all.push_back(b.column(i));
      for (std::size_t j = i; j < b.cols(); ++j) all.push_back(big.mul(b.column(i), b.column(j)));
    }
    Lattice next = Lattice::from_vectors(big.rank(), all);
    if (next == l) return l;
    l = next;
  }
}

/// Structure constants of a multiplicatively closed full-rank sublattice in
/// its HNF basis.
inline Order suborder(const Order& big, const Lattice& l) {
  const IntMatrix& b = l.basis();
  const std::size_t n = b.cols();
  std::vector<Int> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = l.coordinates(big.mul(b.column(i), b.column(j)));
      if (!c) throw InternalError("sublattice is not closed under products");
      for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = (*c)[k];
    }
  return Order::from_table(n, std::move(table));
}

/// {(a_1..a_n) in Z^n : all a_i congruent mod 2}.
inline Order congruence_order(std::size_t n) {
  Order zn = product_order(std::vector<Order>(n, Order::from_poly({0, 1})));
  std::vector<IntVector> gens;
  for (std::size_t i = 1; i < n; ++i) {
    IntVector v(n);
    v[i] = 2;
    gens.push_back(v);
  }
  return suborder(zn, ring_closure(zn, gens));
}

}  // namespace oracle

#endif  // ORDALG_TESTS_SUPPORT_ORDERS_HPP_
