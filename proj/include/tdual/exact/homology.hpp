#pragma once

#include <vector>

#include "tdual/exact/abelian_group.hpp"

namespace tdual::exact {

/// ker(d_out) / im(d_in) with explicit generators and a coordinate map.
///
/// Generators are ordered as in the normal form: torsion summands first (in
/// invariant-factor order) followed by the free summands.
class HomologyGroup {
 public:
  const FGAbelianGroup& group() const noexcept { return group_; }
  /// Cycle representatives, one per cyclic summand.
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  /// Order of each generator (0 for free ones).
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  std::size_t chain_dimension() const noexcept { return ambient_; }

  /// Coordinates of a cycle in the generator basis; torsion coordinates are
  /// reduced into [0, d).  Boundaries map to zero.
  IntVector class_of(const IntVector& cycle) const {
    if (cycle.size() != ambient_) throw Error(ErrorCode::InvalidComplex, "class_of: wrong cochain length");
    const IntVector kc = kernel_coords_ * cycle;
    const IntVector y = quotient_left_ * kc;
    IntVector out;
    out.reserve(kept_.size());
    for (std::size_t idx = 0; idx < kept_.size(); ++idx) {
      const Integer& ord = orders_[idx];
      const Integer& v = y[kept_[idx]];
      out.push_back(ord == 0 ? v : mod_floor(v, ord));
    }
    return out;
  }

  bool is_boundary(const IntVector& cycle) const { return is_zero(class_of(cycle)); }

  /// Cycle representing the given coordinates.
  IntVector representative(const IntVector& coords) const {
    IntVector z(ambient_);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) z = add(z, scale(generators_[i], coords[i]));
    return z;
  }

  /// Checks δ_out z = 0.
  bool is_cycle(const IntVector& z) const { return is_zero(d_out_ * z); }

  friend HomologyGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

 private:
  FGAbelianGroup group_;
  std::vector<IntVector> generators_;
  std::vector<Integer> orders_;
  std::vector<std::size_t> kept_;
  IntMatrix kernel_coords_;  // (n - r) × n, rows r.. of V for d_out
  IntMatrix quotient_left_;  // left transform of the relation SNF
  IntMatrix d_out_;
  std::size_t ambient_ = 0;
};

/// Homology at the middle term of C_in --d_in--> C --d_out--> C_out.
/// Both matrices act on column vectors; d_in is dim C × dim C_in and d_out is
/// dim C_out × dim C.
inline HomologyGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  const std::size_t n = d_out.cols();
  if (d_in.rows() != n) throw Error(ErrorCode::InvalidComplex, "homology_at: incompatible dimensions");
  if (!(d_out * d_in).is_zero()) throw Error(ErrorCode::CompositionNotZero, "d_out * d_in != 0");

  HomologyGroup h;
  h.ambient_ = n;
  h.d_out_ = d_out;

  // Kernel of d_out: trailing columns of the right transform.
  IntMatrix kernel_basis;
  if (d_out.rows() == 0 || n == 0) {
    kernel_basis = IntMatrix::identity(n);
    h.kernel_coords_ = IntMatrix::identity(n);
  } else {
    const SmithResult s = smith_normal_form(d_out);
    kernel_basis = s.right.col_block(s.rank, n);
    h.kernel_coords_ = s.V.row_block(s.rank, n);
  }
  const std::size_t k = kernel_basis.cols();

  // Boundaries in kernel coordinates, then the cokernel.
  const IntMatrix rel = h.kernel_coords_ * d_in;
  IntMatrix quotient_u;
  std::vector<Integer> diag(k, Integer(0));
  if (rel.cols() == 0 || k == 0) {
    quotient_u = IntMatrix::identity(k);
    h.quotient_left_ = IntMatrix::identity(k);
  } else {
    SmithResult s = smith_normal_form(rel);
    for (std::size_t i = 0; i < s.rank; ++i) diag[i] = s.D(i, i);
    quotient_u = std::move(s.U);
    h.quotient_left_ = std::move(s.left);
  }

  std::vector<Integer> orders;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (diag[i] == 1) continue;
    h.kept_.push_back(i);
    h.orders_.push_back(diag[i]);
    h.generators_.push_back(kernel_basis * quotient_u.column(i));
    if (diag[i] == 0)
      ++free_rank;
    else
      orders.push_back(diag[i]);
  }
  h.group_ = FGAbelianGroup::from_cyclic(free_rank, orders);
  return h;
}

/// Group-only homology of the complex reduced mod m (m ≥ 2).
inline FGAbelianGroup homology_mod(const IntMatrix& d_in, const IntMatrix& d_out, const Integer& m) {
  const std::size_t n = d_out.cols();
  if (d_in.rows() != n) throw Error(ErrorCode::InvalidComplex, "homology_mod: incompatible dimensions");
  if (n == 0) return {};
  // Z = {x : d_out x ≡ 0 mod m}: project ker [d_out | m I] onto the first n coordinates.
  IntMatrix z_span;
  if (d_out.rows() == 0) {
    z_span = IntMatrix::identity(n);
  } else {
    IntMatrix mi(d_out.rows(), d_out.rows());
    for (std::size_t i = 0; i < d_out.rows(); ++i) mi(i, i) = m;
    const IntMatrix big = hconcat(d_out, mi);
    const SmithResult s = smith_normal_form(big);
    z_span = s.right.col_block(s.rank, big.cols()).row_block(0, n);
  }
  // Basis of Z from the column span.
  const SmithResult zs = smith_normal_form(z_span);
  IntMatrix z_basis(n, zs.rank);
  for (std::size_t i = 0; i < zs.rank; ++i)
    for (std::size_t r = 0; r < n; ++r) z_basis(r, i) = zs.U(r, i) * zs.D(i, i);
  // B = im d_in + mℤ^n, expressed in the Z basis.
  IntMatrix b_span = d_in;
  IntMatrix mi(n, n);
  for (std::size_t i = 0; i < n; ++i) mi(i, i) = m;
  b_span = b_span.cols() == 0 ? mi : hconcat(b_span, mi);
  IntMatrix rel(zs.rank, b_span.cols());
  for (std::size_t c = 0; c < b_span.cols(); ++c) {
    auto sol = solve_integer(z_basis, b_span.column(c));
    if (!sol) throw Error(ErrorCode::InternalObstruction, "boundary not contained in cycles mod m");
    for (std::size_t r = 0; r < zs.rank; ++r) rel(r, c) = (*sol)[r];
  }
  PresentedGroup p;
  p.ambient_rank = zs.rank;
  p.relations = rel;
  return normal_form(p);
}

/// Dimension of homology over ℚ.
inline std::size_t rational_betti(const IntMatrix& d_in, const IntMatrix& d_out) {
  return d_out.cols() - rank(d_out) - rank(d_in);
}

}  // namespace tdual::exact
