#pragma once

#include "tdual/bundle/circle_bundle.hpp"

namespace tdual::duality {

using bundle::BundleDescriptor;
using bundle::TotalComplex;
using exact::Integer;
using exact::IntMatrix;
using exact::IntVector;
using simplicial::DeltaComplex;
using simplicial::LocalSystem;

/// A pair (E, h) with h = (H₃, F̂): H₃ a ℤ 3-cochain and F̂ a ℤ_ξ 2-cochain
/// on the base, i.e. the cocycle (H₃, F̂) in degree 3 of the cone model.
struct FluxPair {
  BundleDescriptor bundle;
  IntVector H3;
  IntVector Fhat;

  FluxPair() = default;
  FluxPair(BundleDescriptor b, IntVector h3, IntVector fhat) : bundle(std::move(b)), H3(std::move(h3)), Fhat(std::move(fhat)) {
    validate();
  }

  const DeltaComplex& base() const { return bundle.base; }
  const LocalSystem& xi() const { return bundle.xi; }
  const IntVector& euler() const { return bundle.euler; }

  /// The flux as a total 3-cochain.
  IntVector flux() const { return TotalComplex(bundle, LocalSystem::trivial(bundle.base)).join(H3, Fhat); }

  void validate() const {
    const auto& m = bundle.base;
    if (H3.size() != m.count(3) || Fhat.size() != m.count(2))
      throw Error(ErrorCode::InvalidDescriptor, "flux components have the wrong length");
    const TotalComplex tc(bundle, LocalSystem::trivial(m));
    if (!exact::is_zero(tc.differential(flux(), 3))) throw Error(ErrorCode::NotACocycle, "flux is not closed");
  }
};

/// Reversing the fibre orientation negates the Euler cocycle and the fibre
/// component of the flux.
inline FluxPair fiber_flip(const FluxPair& p) {
  FluxPair q;
  q.bundle = BundleDescriptor(p.bundle.base, p.bundle.xi, exact::scale(p.bundle.euler, -1));
  q.H3 = p.H3;
  q.Fhat = exact::scale(p.Fhat, -1);
  return q;
}

}  // namespace tdual::duality
