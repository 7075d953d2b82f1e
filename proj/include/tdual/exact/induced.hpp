#pragma once

#include "tdual/exact/homology.hpp"

namespace tdual::exact {

/// Matrix of the map on homology induced by a chain-level map, in the
/// generator coordinates of `src` and `dst`.
inline IntMatrix induced_map(const HomologyGroup& src, const HomologyGroup& dst, const IntMatrix& chain_map) {
  IntMatrix m(dst.generators().size(), src.generators().size());
  for (std::size_t j = 0; j < src.generators().size(); ++j) {
    const IntVector c = dst.class_of(chain_map * src.generators()[j]);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

namespace detail {

// Columns spanning the relations of a group given by generator orders.
inline IntMatrix relation_columns(const std::vector<Integer>& orders) {
  std::size_t t = 0;
  for (const auto& o : orders)
    if (o != 0) ++t;
  IntMatrix r(orders.size(), t);
  std::size_t c = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) r(i, c++) = orders[i];
  return r;
}

}  // namespace detail

/// True iff A --f--> B --g--> C is exact at B, where each group is given by
/// the orders of its generators (0 = free) and f, g are coordinate matrices.
inline bool is_exact_at(const IntMatrix& f, const std::vector<Integer>& b_orders, const IntMatrix& g,
                        const std::vector<Integer>& c_orders) {
  const std::size_t nb = b_orders.size();
  const IntMatrix rb = detail::relation_columns(b_orders);
  const IntMatrix rc = detail::relation_columns(c_orders);
  // g∘f = 0 in C.
  if (f.cols() > 0 && g.rows() > 0) {
    const IntMatrix gf = g * f;
    for (std::size_t j = 0; j < gf.cols(); ++j)
      if (!solve_integer(rc.cols() ? rc : IntMatrix(gf.rows(), 0), gf.column(j))) return false;
  }
  if (nb == 0) return true;
  // Lattice {x : g x ∈ relations of C}, projected to B coordinates.
  IntMatrix kernel;
  if (g.rows() == 0) {
    kernel = IntMatrix::identity(nb);
  } else {
    const IntMatrix big = rc.cols() ? hconcat(g, rc) : g;
    const SmithResult s = smith_normal_form(big);
    kernel = s.right.col_block(s.rank, big.cols()).row_block(0, nb);
  }
  IntMatrix span = f.cols() ? f : IntMatrix(nb, 0);
  if (rb.cols()) span = span.cols() ? hconcat(span, rb) : rb;
  for (std::size_t j = 0; j < kernel.cols(); ++j)
    if (!solve_integer(span, kernel.column(j))) return false;
  return true;
}

}  // namespace tdual::exact
