#pragma once

#include "tdual/simplicial/cohomology.hpp"

namespace tdual::bundle {

using exact::CochainComplex;
using exact::Coefficients;
using exact::FGAbelianGroup;
using exact::Integer;
using exact::IntMatrix;
using exact::IntVector;
using simplicial::DeltaComplex;
using simplicial::LocalSystem;

/// Circle bundle over `base`: orientation class ξ and a ℤ_ξ Euler 2-cocycle.
struct BundleDescriptor {
  DeltaComplex base;
  LocalSystem xi;
  IntVector euler;

  BundleDescriptor() = default;
  BundleDescriptor(DeltaComplex b, LocalSystem x, IntVector e) : base(std::move(b)), xi(std::move(x)), euler(std::move(e)) {
    validate();
  }

  void validate() const {
    if (xi.edge_count() != base.count(1)) throw Error(ErrorCode::InvalidDescriptor, "xi lives on a different base");
    if (euler.size() != base.count(2)) throw Error(ErrorCode::InvalidDescriptor, "euler cochain has the wrong length");
    if (base.count(3) > 0 && !exact::is_zero(simplicial::coboundary(base, xi, 2) * euler))
      throw Error(ErrorCode::InvalidDescriptor, "euler cochain is not a twisted cocycle");
  }

  std::size_t base_dimension() const { return static_cast<std::size_t>(std::max(base.dimension(), 0)); }

  friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;
};

/// Cone model of C^*(E, π*ζ): C^k = C^k(M, ζ) ⊕ C^{k-1}(M, ζξ) with
/// δ(α, β) = (δα + (-1)^k e⌣β, δβ).
class TotalComplex {
 public:
  TotalComplex(const BundleDescriptor& b, const LocalSystem& zeta) : bundle_(b), zeta_(zeta), zeta_xi_(zeta * b.xi) {
    if (zeta.edge_count() != b.base.count(1)) throw Error(ErrorCode::BaseMismatch, "coefficient system on another base");
    const std::size_t top = b.base_dimension() + 1;
    for (std::size_t k = 0; k <= top; ++k) complex_.dims.push_back(base_count(k) + fiber_count(k));
    for (std::size_t k = 0; k < top; ++k) complex_.d.push_back(build(k));
  }

  const CochainComplex& complex() const { return complex_; }
  const BundleDescriptor& bundle() const { return bundle_; }
  const LocalSystem& zeta() const { return zeta_; }
  const LocalSystem& zeta_xi() const { return zeta_xi_; }
  std::size_t dimension() const { return complex_.top(); }

  std::size_t base_count(std::size_t k) const { return bundle_.base.count(k); }
  std::size_t fiber_count(std::size_t k) const { return k == 0 ? 0 : bundle_.base.count(k - 1); }

  IntVector join(const IntVector& alpha, const IntVector& beta) const {
    IntVector x = alpha;
    x.insert(x.end(), beta.begin(), beta.end());
    return x;
  }
  IntVector alpha(const IntVector& x, std::size_t k) const {
    return IntVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(base_count(k)));
  }
  IntVector beta(const IntVector& x, std::size_t k) const {
    return IntVector(x.begin() + static_cast<std::ptrdiff_t>(base_count(k)), x.end());
  }

  IntVector differential(const IntVector& x, std::size_t k) const {
    return k < complex_.d.size() ? complex_.d[k] * x : IntVector{};
  }

  /// π*: a ↦ (a, 0).
  IntVector pullback(const IntVector& a, std::size_t k) const { return join(a, IntVector(fiber_count(k))); }

  /// π_*: (α, β) ↦ β, a (k-1)-cochain over ζξ.
  IntVector pushforward(const IntVector& x, std::size_t k) const { return beta(x, k); }

  IntMatrix pullback_matrix(std::size_t k) const {
    IntMatrix m(complex_.dims[k], base_count(k));
    for (std::size_t i = 0; i < base_count(k); ++i) m(i, i) = 1;
    return m;
  }
  IntMatrix pushforward_matrix(std::size_t k) const {
    IntMatrix m(fiber_count(k), complex_.dims[k]);
    for (std::size_t i = 0; i < fiber_count(k); ++i) m(i, base_count(k) + i) = 1;
    return m;
  }

  /// a·(α, β) = (a⌣α, (-1)^p a⌣β) for a base p-cochain a over L_a; the result
  /// lives in the model with coefficients L_a ζ.  Satisfies π_*(a·x) = (-1)^p a⌣π_*x.
  IntVector left_multiply(const IntVector& a, std::size_t p, const IntVector& x, std::size_t k) const {
    const auto& m = bundle_.base;
    IntVector first = simplicial::cup(m, a, p, alpha(x, k), k, zeta_);
    IntVector second = k == 0 ? IntVector(fiber_count(k + p)) : simplicial::cup(m, a, p, beta(x, k), k - 1, zeta_xi_);
    if (p % 2 == 1) second = exact::scale(second, -1);
    return join(first, second);
  }

  /// (α, β)·c = (α⌣c, (-1)^q β⌣c) for a base q-cochain c over L_c; a chain-level
  /// Leibniz product with values in the model with coefficients ζ L_c.
  IntVector right_multiply(const IntVector& x, std::size_t k, const IntVector& c, std::size_t q,
                           const LocalSystem& lc) const {
    const auto& m = bundle_.base;
    IntVector first = simplicial::cup(m, alpha(x, k), k, c, q, lc);
    IntVector second = k == 0 ? IntVector(fiber_count(k + q)) : simplicial::cup(m, beta(x, k), k - 1, c, q, lc);
    if (q % 2 == 1) second = exact::scale(second, -1);
    return join(first, second);
  }

 private:
  IntMatrix build(std::size_t k) const {
    const auto& m = bundle_.base;
    IntMatrix d(complex_.dims[k + 1], complex_.dims[k]);
    if (base_count(k + 1) > 0 && base_count(k) > 0) d.set_block(0, 0, simplicial::coboundary(m, zeta_, k));
    if (k >= 1) {
      if (base_count(k) > 0 && base_count(k - 1) > 0)
        d.set_block(base_count(k + 1), base_count(k), simplicial::coboundary(m, zeta_xi_, k - 1));
      if (base_count(k + 1) > 0 && base_count(k - 1) > 0) {
        IntMatrix ec = simplicial::cup_left_matrix(m, bundle_.euler, 2, k - 1, zeta_xi_);
        if (k % 2 == 1) ec = -ec;
        d.set_block(0, base_count(k), ec);
      }
    }
    return d;
  }

  BundleDescriptor bundle_;
  LocalSystem zeta_, zeta_xi_;
  CochainComplex complex_;
};

inline std::vector<FGAbelianGroup> total_cohomology(const BundleDescriptor& b, const LocalSystem& zeta,
                                                    const Coefficients& r = Coefficients::integers()) {
  return exact::cohomology_groups(TotalComplex(b, zeta).complex(), r);
}

inline std::vector<FGAbelianGroup> total_homology(const BundleDescriptor& b, const LocalSystem& zeta,
                                                  const Coefficients& r = Coefficients::integers()) {
  return exact::homology_groups(TotalComplex(b, zeta).complex(), r);
}

/// Orientation system of the total space, as a system on the base: w₁(M)·ξ.
inline LocalSystem total_orientation(const BundleDescriptor& b, const LocalSystem& base_orientation) {
  return base_orientation * b.xi;
}

/// x ↦ x + π*(α ⌣ π_*x) for a total k-cocycle x and a ξ-twisted 1-cocycle α.
inline IntVector gauge_action(const TotalComplex& e, const IntVector& x, std::size_t k, const IntVector& alpha) {
  const auto& m = e.bundle().base;
  if (!exact::is_zero(e.differential(x, k))) throw Error(ErrorCode::NotACocycle, "gauge_action: x is not closed");
  if (!exact::is_zero(simplicial::coboundary(m, e.bundle().xi, 1) * alpha))
    throw Error(ErrorCode::NotACocycle, "gauge_action: alpha is not closed");
  if (k == 0) return x;
  const IntVector shift = simplicial::cup(m, alpha, 1, e.pushforward(x, k), k - 1, e.zeta_xi());
  return exact::add(x, e.pullback(shift, k));
}

/// c'(σ) = t(v₀(σ))·c(σ): moves a cochain between gauge-equivalent systems.
inline IntVector regauge(const DeltaComplex& x, const IntVector& c, std::size_t k, const std::vector<int>& t) {
  IntVector out = c;
  for (std::size_t s = 0; s < out.size(); ++s)
    if (t[x.vertices(k, s)[0]] < 0) out[s] = -out[s];
  return out;
}

/// [ξ₁] = [ξ₂] and [e₁] = ±[e₂].
inline bool same_bundle(const BundleDescriptor& a, const BundleDescriptor& b) {
  if (!(a.base == b.base)) throw Error(ErrorCode::BaseMismatch, "same_bundle: different base complexes");
  const auto t = simplicial::gauge_between(a.base, b.xi, a.xi);
  if (!t) return false;
  if (a.base.count(2) == 0) return true;
  const IntVector e2 = regauge(a.base, b.euler, 2, *t);
  const auto h2 = exact::cohomology_at(simplicial::cochain_complex(a.base, a.xi), 2);
  return h2.is_boundary(exact::sub(a.euler, e2)) || h2.is_boundary(exact::add(a.euler, e2));
}

}  // namespace tdual::bundle
