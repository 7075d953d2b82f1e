#pragma once

#include <string>
#include <vector>

#include "tdual/duality/tdual.hpp"

namespace tdual::duality {

/// W = H^*(M; ℚ_ζ) ⊕ H^{*-1}(M; ℚ_{ζξ}) with
/// D(α, β) = ([H₃]⌣α + [e]⌣β, [F̂]⌣α - [H₃]⌣β), where ζ is trivial or ξ.
/// Classes are the free generators of integral cohomology, so D is an
/// integer matrix in that basis.  This is the formal model: Massey products
/// are ignored.
class SmallTwistedComplex {
 public:
  struct BasisElement {
    int slot;            // 0 for α, 1 for β
    std::size_t degree;  // degree on the base
    std::size_t index;   // position among the free generators of that degree
    int parity;          // total degree mod 2
  };

  SmallTwistedComplex(const FluxPair& p, bool twist_by_xi) : pair_(p), twist_(twist_by_xi) {
    const auto& m = p.base();
    detail::require_low_dimension(m);
    const LocalSystem trivial = LocalSystem::trivial(m);
    systems_[0] = twist_ ? p.xi() : trivial;
    systems_[1] = twist_ ? trivial : p.xi();
    for (int slot = 0; slot < 2; ++slot) {
      groups_[slot] = simplicial::cohomology_with_generators(m, systems_[slot]);
      for (std::size_t k = 0; k < groups_[slot].size(); ++k) {
        const auto& orders = groups_[slot][k].orders();
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < orders.size(); ++i)
          if (orders[i] == 0) free.push_back(i);
        free_[slot].push_back(free);
        for (std::size_t i = 0; i < free.size(); ++i)
          basis_.push_back({slot, k, i, static_cast<int>((k + static_cast<std::size_t>(slot)) % 2)});
      }
    }
    build();
  }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const IntMatrix& differential() const { return d_; }
  const FluxPair& pair() const { return pair_; }
  bool twisted() const { return twist_; }
  static constexpr const char* label() { return "formal model"; }

  /// Position of a basis element, or npos.
  std::size_t position(int slot, std::size_t degree, std::size_t index) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].slot == slot && basis_[i].degree == degree && basis_[i].index == index) return i;
    return npos;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// (dim even, dim odd) of H(W, D) over ℚ.  D is odd, so both lose rank D.
  std::pair<std::size_t, std::size_t> dimensions() const {
    std::size_t even = 0, odd = 0;
    for (const auto& b : basis_) (b.parity == 0 ? even : odd)++;
    const std::size_t r = exact::rank(d_);
    return {even - r, odd - r};
  }

 private:
  IntVector representative(int slot, std::size_t k, std::size_t i) const {
    return groups_[slot][k].generators()[free_[slot][k][i]];
  }

  // Adds the rational class of cocycle z (slot, degree k) into column c.
  void accumulate(int slot, std::size_t k, const IntVector& z, std::size_t c, int sign) {
    if (k >= groups_[slot].size()) return;
    const IntVector coords = groups_[slot][k].class_of(z);
    for (std::size_t i = 0; i < free_[slot][k].size(); ++i) {
      const Integer& v = coords[free_[slot][k][i]];
      if (v != 0) d_(position(slot, k, i), c) += sign * v;
    }
  }

  void build() {
    const auto& m = pair_.base();
    const std::size_t top = static_cast<std::size_t>(m.dimension());
    d_ = IntMatrix(basis_.size(), basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
      const auto& b = basis_[c];
      const IntVector x = representative(b.slot, b.degree, b.index);
      const LocalSystem& l = systems_[b.slot];
      if (b.degree + 3 <= top)
        accumulate(b.slot, b.degree + 3, simplicial::cup(m, pair_.H3, 3, x, b.degree, l), c, b.slot == 0 ? 1 : -1);
      if (b.degree + 2 <= top) {
        const IntVector& w = b.slot == 0 ? pair_.Fhat : pair_.euler();
        accumulate(1 - b.slot, b.degree + 2, simplicial::cup(m, w, 2, x, b.degree, l), c, 1);
      }
    }
    if (!(d_ * d_).is_zero()) throw Error(ErrorCode::InternalObstruction, "small model differential does not square to zero");
  }

  FluxPair pair_;
  bool twist_;
  LocalSystem systems_[2];
  std::vector<exact::HomologyGroup> groups_[2];
  std::vector<std::vector<std::size_t>> free_[2];
  std::vector<BasisElement> basis_;
  IntMatrix d_;
};

inline std::pair<std::size_t, std::size_t> small_twisted_cohomology(const FluxPair& p, bool twist_by_xi) {
  return SmallTwistedComplex(p, twist_by_xi).dimensions();
}

/// T: W_E → W_{Ê,ξ}, T(α, β) = (β, -α), together with the identities it must satisfy.
struct HoriReport {
  IntMatrix T;      // W_E → W_{Ê,ξ}
  IntMatrix T_hat;  // W_{Ê,ξ} → W_E, same formula
  IntMatrix D, D_hat;
  bool chain_map = false;    // T·D = -D̂·T
  bool inverse = false;      // T̂·T = -1
  bool parity_shift = false; // T exchanges even and odd
};

namespace detail {

// (α, β) ↦ (β, -α) between two small models whose slots carry swapped systems.
inline IntMatrix hori_matrix(const SmallTwistedComplex& from, const SmallTwistedComplex& to) {
  IntMatrix t(to.basis().size(), from.basis().size());
  for (std::size_t c = 0; c < from.basis().size(); ++c) {
    const auto& b = from.basis()[c];
    const std::size_t r = to.position(1 - b.slot, b.degree, b.index);
    if (r == SmallTwistedComplex::npos) throw Error(ErrorCode::InternalObstruction, "hori: basis mismatch");
    t(r, c) = b.slot == 1 ? 1 : -1;
  }
  return t;
}

}  // namespace detail

inline HoriReport hori_small(const FluxPair& p, const FluxPair& dual) {
  const SmallTwistedComplex w(p, false);
  const SmallTwistedComplex w_hat(dual, true);
  HoriReport r;
  r.D = w.differential();
  r.D_hat = w_hat.differential();
  r.T = detail::hori_matrix(w, w_hat);
  r.T_hat = detail::hori_matrix(w_hat, w);
  r.chain_map = r.T * r.D == -(r.D_hat * r.T);
  r.inverse = r.T_hat * r.T == -IntMatrix::identity(w.basis().size());
  r.parity_shift = true;
  for (std::size_t c = 0; c < w.basis().size(); ++c)
    for (std::size_t row = 0; row < w_hat.basis().size(); ++row)
      if (r.T(row, c) != 0 && w_hat.basis()[row].parity == w.basis()[c].parity) r.parity_shift = false;
  return r;
}

inline HoriReport hori_small(const FluxPair& p) { return hori_small(p, construct_tdual(p).dual); }

}  // namespace tdual::duality
