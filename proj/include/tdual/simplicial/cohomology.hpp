#pragma once

#include <string>
#include <vector>

#include "tdual/simplicial/cochains.hpp"

namespace tdual::simplicial {

using exact::Coefficients;
using exact::FGAbelianGroup;
using exact::HomologyGroup;

inline std::vector<FGAbelianGroup> cohomology(const DeltaComplex& x, const LocalSystem& l,
                                              const Coefficients& r = Coefficients::integers()) {
  return exact::cohomology_groups(cochain_complex(x, l), r);
}

/// Integral cohomology with generator cocycles and class_of maps.
inline std::vector<HomologyGroup> cohomology_with_generators(const DeltaComplex& x, const LocalSystem& l) {
  const CochainComplex c = cochain_complex(x, l);
  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k < c.dims.size(); ++k) out.push_back(exact::cohomology_at(c, k));
  return out;
}

/// Homology with local coefficients; the boundary is the transpose of δ.
inline std::vector<FGAbelianGroup> homology(const DeltaComplex& x, const LocalSystem& l,
                                            const Coefficients& r = Coefficients::integers()) {
  return exact::homology_groups(cochain_complex(x, l), r);
}

struct DualityReport {
  bool ok = true;
  std::vector<FGAbelianGroup> cohomology;  // H^i(X, L)
  std::vector<FGAbelianGroup> homology;    // H_{n-i}(X, L ⊗ orn), indexed by i
  std::vector<std::string> failures;
};

/// Compares H^i of `with_l` against H_{n-i} of `with_l_orn` for i = 0..n.
inline DualityReport poincare_duality_check(const CochainComplex& with_l, const CochainComplex& with_l_orn,
                                            std::size_t n) {
  DualityReport rep;
  const auto h_up = exact::cohomology_groups(with_l);
  const auto h_down = exact::homology_groups(with_l_orn);
  if (h_up.size() != n + 1 || h_down.size() != n + 1) {
    rep.ok = false;
    rep.failures.push_back("complex is not of dimension " + std::to_string(n));
    return rep;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    rep.cohomology.push_back(h_up[i]);
    rep.homology.push_back(h_down[n - i]);
    if (h_up[i] != h_down[n - i]) {
      rep.ok = false;
      rep.failures.push_back("H^" + std::to_string(i) + " = " + h_up[i].to_string() + " but H_" +
                             std::to_string(n - i) + " = " + h_down[n - i].to_string());
    }
  }
  return rep;
}

inline DualityReport poincare_duality_check(const DeltaComplex& x, const LocalSystem& orn, const LocalSystem& l) {
  return poincare_duality_check(cochain_complex(x, l), cochain_complex(x, l * orn),
                                static_cast<std::size_t>(x.dimension()));
}

inline DualityReport poincare_duality_check(const DeltaComplex& x, const LocalSystem& orn) {
  return poincare_duality_check(x, orn, LocalSystem::trivial(x));
}

}  // namespace tdual::simplicial
