#pragma once

#include "tdual/duality/flux_pair.hpp"
#include "tdual/catalog/spaces.hpp"

namespace tdual::catalog {

using bundle::BundleDescriptor;
using exact::Integer;
using exact::IntVector;

/// Generator of a cyclic cohomology group, or nothing when the group is zero.
inline std::optional<std::pair<IntVector, Integer>> cyclic_generator(const exact::HomologyGroup& h) {
  if (h.generators().empty()) return std::nullopt;
  if (h.generators().size() > 1) throw Error(ErrorCode::InvalidDescriptor, "group is not cyclic: " + h.group().to_string());
  return std::make_pair(h.generators()[0], h.orders()[0]);
}

/// Euler cocycle j × (generator of H²(M, ℤ_ξ)).
inline IntVector euler_cocycle(const Space& s, const LocalSystem& xi, const Integer& j) {
  const auto& m = s.complex;
  if (m.dimension() < 2) {
    if (j != 0) throw Error(ErrorCode::JOutOfRange, "bundles over " + s.id + " have no Euler class");
    return IntVector(m.count(2));
  }
  const auto h2 = exact::cohomology_at(simplicial::cochain_complex(m, xi), 2);
  const auto gen = cyclic_generator(h2);
  if (!gen) {
    if (j != 0) throw Error(ErrorCode::JOutOfRange, "H^2 vanishes; j must be 0");
    return IntVector(m.count(2));
  }
  const Integer& order = gen->second;
  if (order != 0 && (j < 0 || j >= order))
    throw Error(ErrorCode::JOutOfRange, "j must lie in [0, " + order.str() + ") for " + s.id);
  return exact::scale(gen->first, j);
}

inline void check_xi(const Space& s, const std::vector<int>& xi_bits) {
  bool nonzero = false;
  for (int b : xi_bits) nonzero = nonzero || (b % 2 != 0);
  const bool surface = s.id.rfind("sigma", 0) == 0 || s.id.rfind("crosscap_sum", 0) == 0;
  if (surface && !nonzero) throw Error(ErrorCode::InvalidXi, "the fibre orientation class must be nonzero over " + s.id);
}

inline BundleDescriptor build_bundle(const Space& s, const std::vector<int>& xi_bits, const Integer& j) {
  check_xi(s, xi_bits);
  const LocalSystem xi = s.local_system(xi_bits);
  return BundleDescriptor(s.complex, xi, euler_cocycle(s, xi, j));
}

inline BundleDescriptor build_bundle(const Space& s, const Integer& j) {
  return build_bundle(s, default_xi_bits(s), j);
}

/// Flux (H₃, F̂) = (0, k × generator of H²(M, ℤ_ξ)) on a bundle over a surface or curve.
inline duality::FluxPair build_flux(const BundleDescriptor& b, const Integer& k) {
  const auto& m = b.base;
  IntVector fhat(m.count(2));
  if (m.dimension() >= 2) {
    const auto gen = cyclic_generator(exact::cohomology_at(simplicial::cochain_complex(m, b.xi), 2));
    if (gen) {
      if (gen->second != 0 && (k < 0 || k >= gen->second))
        throw Error(ErrorCode::KOutOfRange, "k must lie in [0, " + gen->second.str() + ")");
      fhat = exact::scale(gen->first, k);
    } else if (k != 0) {
      throw Error(ErrorCode::KOutOfRange, "H^2 vanishes; k must be 0");
    }
  } else if (k != 0) {
    throw Error(ErrorCode::KOutOfRange, "no flux classes over a curve");
  }
  return duality::FluxPair(b, IntVector(m.count(3)), fhat);
}

}  // namespace tdual::catalog
