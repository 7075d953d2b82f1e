#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tdual/exact/smith.hpp"

namespace tdual::exact {

/// Finitely generated abelian group ℤ^r ⊕ ℤ_{d1} ⊕ … ⊕ ℤ_{dk} in
/// invariant-factor form (each d_i ≥ 2, d_i | d_{i+1}).  Equality of values
/// is isomorphism of groups.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Builds the canonical form from an arbitrary list of cyclic orders;
  /// 0 means a free summand and 1 is dropped.
  static FGAbelianGroup from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    std::size_t extra_free = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      rel(i, i) = orders[i];
      if (orders[i] == 0) ++extra_free;
    }
    FGAbelianGroup g;
    if (!orders.empty()) {
      const auto s = smith_normal_form(rel, false);
      for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1) g.torsion_.push_back(s.D(i, i));
    }
    g.free_rank_ = free_rank + extra_free;
    return g;
  }

  static FGAbelianGroup free(std::size_t rank) { return from_cyclic(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order) { return from_cyclic(0, {order}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }

  /// Order of the torsion subgroup.
  Integer torsion_order() const {
    Integer o = 1;
    for (const auto& d : torsion_) o *= d;
    return o;
  }

  /// Invariant factors plus zeros for free summands: the diagonal of a canonical relation matrix.
  std::vector<Integer> cyclic_orders() const {
    std::vector<Integer> o = torsion_;
    o.insert(o.end(), free_rank_, Integer(0));
    return o;
  }

  /// Direct sum.
  friend FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<Integer> orders = a.torsion_;
    orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
    return from_cyclic(a.free_rank_ + b.free_rank_, orders);
  }

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

  /// Plain-text rendering, e.g. "Z^2 + Z_2 + Z_4" or "0".
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
      os << "Z";
      if (free_rank_ > 1) os << '^' << free_rank_;
      first = false;
    }
    for (const auto& d : torsion_) {
      os << (first ? "" : " + ") << "Z_" << d;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g) { return os << g.to_string(); }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Cokernel presentation ℤ^n / (column span of `relations`).
struct PresentedGroup {
  std::size_t ambient_rank = 0;
  IntMatrix relations;  // ambient_rank × (#relations)
  std::vector<std::string> generator_labels;

  /// Builds a presentation from relations given as rows (one relation per row),
  /// the natural way to write ⟨a, b | 2a = 0, …⟩.
  static PresentedGroup from_relation_rows(std::size_t n, const IntMatrix& rows,
                                           std::vector<std::string> labels = {}) {
    if (!rows.empty() && rows.cols() != n) throw Error(ErrorCode::InvalidComplex, "relation width mismatch");
    PresentedGroup p;
    p.ambient_rank = n;
    p.relations = rows.rows() == 0 ? IntMatrix(n, 0) : rows.transpose();
    p.generator_labels = std::move(labels);
    return p;
  }
};

/// Invariant-factor form of the cokernel of the relation matrix.
inline FGAbelianGroup normal_form(const PresentedGroup& g) {
  if (g.relations.rows() != g.ambient_rank && !(g.relations.cols() == 0))
    throw Error(ErrorCode::InvalidComplex, "relation matrix rows must equal ambient rank");
  if (g.relations.cols() == 0 || g.ambient_rank == 0) return FGAbelianGroup::free(g.ambient_rank);
  const auto s = smith_normal_form(g.relations, false);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < s.rank; ++i) orders.push_back(s.D(i, i));
  return FGAbelianGroup::from_cyclic(g.ambient_rank - s.rank, orders);
}

/// Canonical presentation of a normal-form group (diagonal relations).
inline PresentedGroup canonical_presentation(const FGAbelianGroup& g) {
  const auto orders = g.cyclic_orders();
  PresentedGroup p;
  p.ambient_rank = orders.size();
  p.relations = IntMatrix(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) p.relations(i, i) = orders[i];
  return p;
}

}  // namespace tdual::exact
