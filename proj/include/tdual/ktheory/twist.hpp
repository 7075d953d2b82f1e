#pragma once

#include "tdual/duality/flux_pair.hpp"

namespace tdual::ktheory {

using bundle::BundleDescriptor;
using bundle::TotalComplex;
using exact::Integer;
using exact::IntVector;
using simplicial::DeltaComplex;
using simplicial::LocalSystem;

/// Graded twist (w, h) on the total space of a circle bundle.  w is stored as
/// a sign system on the base and acts on E through π*; h is a ℤ 3-cocycle of
/// the untwisted cone model.
struct TwistClass {
  BundleDescriptor bundle;
  LocalSystem w;
  IntVector h;

  TwistClass() = default;
  TwistClass(BundleDescriptor b, LocalSystem w_, IntVector h_) : bundle(std::move(b)), w(std::move(w_)), h(std::move(h_)) {
    validate();
  }

  /// (0, h) or (π*ξ, h) from a flux pair.
  static TwistClass from_pair(const duality::FluxPair& p, bool xi_twist) {
    const auto& m = p.base();
    return TwistClass(p.bundle, xi_twist ? p.xi() : LocalSystem::trivial(m), p.flux());
  }

  TotalComplex untwisted() const { return TotalComplex(bundle, LocalSystem::trivial(bundle.base)); }
  TotalComplex coefficients() const { return TotalComplex(bundle, w); }

  void validate() const {
    if (w.edge_count() != bundle.base.count(1)) throw Error(ErrorCode::SpaceMismatch, "w lives on another base");
    const TotalComplex tc = untwisted();
    if (tc.dimension() < 3) {
      if (!h.empty()) throw Error(ErrorCode::InvalidDescriptor, "h must be empty below dimension 3");
      return;
    }
    if (h.size() != tc.complex().dims[3]) throw Error(ErrorCode::InvalidDescriptor, "h has the wrong length");
    if (!exact::is_zero(tc.differential(h, 3))) throw Error(ErrorCode::NotACocycle, "h is not closed");
  }
};

namespace detail {

/// π*β(a⌣b) for sign systems a, b on the base, as a total 3-cochain.
inline IntVector bockstein_of_product(const TwistClass& t, const LocalSystem& a, const LocalSystem& b) {
  const auto& m = t.bundle.base;
  const TotalComplex tc = t.untwisted();
  if (tc.dimension() < 3) return {};
  if (m.count(2) == 0) return IntVector(tc.complex().dims[3]);
  const auto za = a.as_z2(), zb = b.as_z2();
  const IntVector ia(za.begin(), za.end()), ib(zb.begin(), zb.end());
  IntVector sq = simplicial::cup(m, ia, 1, ib, 1, LocalSystem::trivial(m));
  for (auto& v : sq) v = exact::mod_floor(v, 2);
  return tc.pullback(simplicial::bockstein(m, sq, 2), 3);
}

inline void same_space(const TwistClass& a, const TwistClass& b) {
  if (!(a.bundle == b.bundle)) throw Error(ErrorCode::SpaceMismatch, "twists live on different spaces");
}

}  // namespace detail

/// (v, V)(w, W) = (v + w, V + W + β(v⌣w)).
inline TwistClass twist_product(const TwistClass& a, const TwistClass& b) {
  detail::same_space(a, b);
  IntVector h = exact::add(exact::add(a.h, b.h), detail::bockstein_of_product(a, a.w, b.w));
  return TwistClass(a.bundle, a.w * b.w, std::move(h));
}

/// (v, V)⁻¹ = (v, -V - β(v⌣v)).
inline TwistClass inverse(const TwistClass& t) {
  IntVector h = exact::sub(exact::scale(t.h, -1), detail::bockstein_of_product(t, t.w, t.w));
  return TwistClass(t.bundle, t.w, std::move(h));
}

inline TwistClass identity_twist(const BundleDescriptor& b) {
  const TotalComplex tc(b, LocalSystem::trivial(b.base));
  return TwistClass(b, LocalSystem::trivial(b.base), tc.dimension() < 3 ? IntVector{} : IntVector(tc.complex().dims[3]));
}

/// Equality of twist classes: [w] agree and h differs by a coboundary.
inline bool equivalent(const TwistClass& a, const TwistClass& b) {
  detail::same_space(a, b);
  if (!simplicial::same_class(a.bundle.base, a.w, b.w)) return false;
  const TotalComplex tc = a.untwisted();
  if (tc.dimension() < 3) return true;
  return exact::cohomology_at(tc.complex(), 3).is_boundary(exact::sub(a.h, b.h));
}

}  // namespace tdual::ktheory
