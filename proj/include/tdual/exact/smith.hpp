#pragma once

#include <optional>

#include "tdual/exact/int_matrix.hpp"

namespace tdual::exact {

/// Smith decomposition A = U·D·V.  `left`·A·`right` = D also holds, with
/// left = U⁻¹ and right = V⁻¹.
struct SmithResult {
  IntMatrix U, D, V;
  IntMatrix left, right;
  std::size_t rank = 0;

  /// Diagonal entries d_0 .. d_{min(m,n)-1}.
  IntVector diagonal() const {
    IntVector d(std::min(D.rows(), D.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
    return d;
  }
};

namespace detail {

// Applies every elementary operation to A and to whichever transforms are tracked.
class SmithWorkspace {
 public:
  SmithWorkspace(const IntMatrix& a, bool track)
      : a_(a), track_(track) {
    if (track_) {
      left_ = IntMatrix::identity(a.rows());
      u_ = IntMatrix::identity(a.rows());
      right_ = IntMatrix::identity(a.cols());
      v_ = IntMatrix::identity(a.cols());
    }
  }

  IntMatrix& a() { return a_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_rows(i, j);
    if (track_) {
      left_.swap_rows(i, j);
      u_.swap_cols(i, j);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (track_) {
      right_.swap_cols(i, j);
      v_.swap_rows(i, j);
    }
  }
  // row_dst += q row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    a_.add_row_multiple(dst, src, q);
    if (track_) {
      left_.add_row_multiple(dst, src, q);
      u_.add_col_multiple(src, dst, -q);
    }
  }
  // col_dst += q col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    a_.add_col_multiple(dst, src, q);
    if (track_) {
      right_.add_col_multiple(dst, src, q);
      v_.add_row_multiple(src, dst, -q);
    }
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    if (track_) {
      left_.negate_row(i);
      u_.negate_col(i);
    }
  }

  SmithResult finish(std::size_t rank) {
    SmithResult r;
    r.D = std::move(a_);
    r.U = std::move(u_);
    r.V = std::move(v_);
    r.left = std::move(left_);
    r.right = std::move(right_);
    r.rank = rank;
    return r;
  }

 private:
  IntMatrix a_;
  bool track_;
  IntMatrix left_, u_, right_, v_;
};

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace detail

/// Smith normal form with deterministic pivoting: the nonzero entry of minimal
/// absolute value in the active submatrix, ties broken by lowest (row, col).
/// With `track_transforms == false` only D and rank are filled in.
inline SmithResult smith_normal_form(const IntMatrix& input, bool track_transforms = true) {
  detail::SmithWorkspace ws(input, track_transforms);
  IntMatrix& a = ws.a();
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t t = 0;

  auto select_pivot = [&](std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Integer v = detail::abs_value(a(i, j));
        if (!found || v < best) {
          best = std::move(v);
          pr = i;
          pc = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  };

  for (; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!select_pivot(pr, pc)) break;
    for (;;) {
      ws.swap_rows(t, pr);
      ws.swap_cols(t, pc);
      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        ws.add_row(i, t, -q);
        if (a(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        ws.add_col(j, t, -q);
        if (a(t, j) != 0) remainder = true;
      }
      if (remainder) {
        select_pivot(pr, pc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the remaining block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            ws.add_row(t, i, Integer(1));
            fixed = false;
            break;
          }
      if (fixed) break;
      pr = t;
      pc = t;
    }
    if (a(t, t) < 0) ws.negate_row(t);
  }
  return ws.finish(t);
}

/// Some integer x with A·x = b, or nullopt when b is not in the integer image
/// of A.  Free parameters of the diagonalized system are set to zero.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidComplex, "solve_integer: dimension mismatch");
  if (a.cols() == 0) {
    if (is_zero(b)) return IntVector{};
    return std::nullopt;
  }
  const SmithResult s = smith_normal_form(a);
  const IntVector lb = s.left * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < lb.size(); ++i) {
    if (i < s.rank) {
      const Integer& d = s.D(i, i);
      if (lb[i] % d != 0) return std::nullopt;
      y[i] = lb[i] / d;
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * y;
}

/// Rank over ℚ.
inline std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return smith_normal_form(a, false).rank;
}

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::InvalidComplex, "determinant of non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace tdual::exact
