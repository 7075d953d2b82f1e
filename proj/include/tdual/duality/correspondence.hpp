#pragma once

#include "tdual/duality/flux_pair.hpp"

namespace tdual::duality {

/// Cochains on F = E ×_M Ê: C^k(F) = C^k(M) ⊕ C^{k-1}(M,ξ) ⊕ C^{k-1}(M,ξ) ⊕ C^{k-2}(M), with
/// δ(a,b,c,d) = (δa + (-1)^k(e⌣b + ê⌣c), δb + (-1)^k ê⌣d, δc - (-1)^k e⌣d, δd).
/// δ² = -(e⌣ê - ê⌣e)⌣d, which vanishes for bases of dimension at most 3.
class CorrespondenceComplex {
 public:
  CorrespondenceComplex(const BundleDescriptor& e, const BundleDescriptor& ehat)
      : e_(e), ehat_(ehat), trivial_(LocalSystem::trivial(e.base)) {
    if (!(e.base == ehat.base)) throw Error(ErrorCode::BaseMismatch, "bundles over different bases");
    if (!(e.xi == ehat.xi)) throw Error(ErrorCode::BundleMismatch, "orientation cocycles differ; regauge first");
    if (e.base.dimension() > 3)
      throw Error(ErrorCode::DimensionTooHigh, "correspondence model requires a base of dimension <= 3");
    const std::size_t top = e.base_dimension() + 2;
    for (std::size_t k = 0; k <= top; ++k) complex_.dims.push_back(n(k) + 2 * n1(k) + n2(k));
    for (std::size_t k = 0; k < top; ++k) complex_.d.push_back(build(k));
  }

  const exact::CochainComplex& complex() const { return complex_; }
  std::size_t dimension() const { return complex_.top(); }

  IntVector differential(const IntVector& x, std::size_t k) const {
    return k < complex_.d.size() ? complex_.d[k] * x : IntVector{};
  }

  IntVector join(const IntVector& a, const IntVector& b, const IntVector& c, const IntVector& d) const {
    IntVector x = a;
    for (const auto* part : {&b, &c, &d}) x.insert(x.end(), part->begin(), part->end());
    return x;
  }

  /// Component i ∈ {0,1,2,3} of a k-cochain.
  IntVector part(const IntVector& x, std::size_t k, int i) const {
    const std::size_t sizes[4] = {n(k), n1(k), n1(k), n2(k)};
    std::size_t off = 0;
    for (int j = 0; j < i; ++j) off += sizes[j];
    return IntVector(x.begin() + static_cast<std::ptrdiff_t>(off),
                     x.begin() + static_cast<std::ptrdiff_t>(off + sizes[i]));
  }

  /// p*: (α, β) ↦ (α, β, 0, 0).
  IntVector pull_e(const IntVector& x, std::size_t k) const {
    const TotalComplex tc(e_, trivial_);
    return join(tc.alpha(x, k), tc.beta(x, k), IntVector(n1(k)), IntVector(n2(k)));
  }
  /// p̂*: (α, γ) ↦ (α, 0, γ, 0).
  IntVector pull_ehat(const IntVector& x, std::size_t k) const {
    const TotalComplex tc(ehat_, trivial_);
    return join(tc.alpha(x, k), IntVector(n1(k)), tc.beta(x, k), IntVector(n2(k)));
  }
  /// q*: a ↦ (a, 0, 0, 0).
  IntVector pull_base(const IntVector& a, std::size_t k) const {
    return join(a, IntVector(n1(k)), IntVector(n1(k)), IntVector(n2(k)));
  }
  /// p_*: (a, b, c, d) ↦ (b, -d), a (k-1)-cochain of Ê with coefficients ξ.
  IntVector push_e(const IntVector& x, std::size_t k) const {
    IntVector out = part(x, k, 1);
    const IntVector d = exact::scale(part(x, k, 3), -1);
    out.insert(out.end(), d.begin(), d.end());
    return out;
  }
  /// p̂_*: (a, b, c, d) ↦ (c, d), a (k-1)-cochain of E with coefficients ξ.
  IntVector push_ehat(const IntVector& x, std::size_t k) const {
    IntVector out = part(x, k, 2);
    const IntVector d = part(x, k, 3);
    out.insert(out.end(), d.begin(), d.end());
    return out;
  }

 private:
  std::size_t n(std::size_t k) const { return e_.base.count(k); }
  std::size_t n1(std::size_t k) const { return k >= 1 ? e_.base.count(k - 1) : 0; }
  std::size_t n2(std::size_t k) const { return k >= 2 ? e_.base.count(k - 2) : 0; }

  IntMatrix build(std::size_t k) const {
    const auto& m = e_.base;
    const auto& xi = e_.xi;
    const std::size_t r0 = 0, r1 = n(k + 1), r2 = r1 + n1(k + 1), r3 = r2 + n1(k + 1);
    const std::size_t c0 = 0, c1 = n(k), c2 = c1 + n1(k), c3 = c2 + n1(k);
    IntMatrix d(complex_.dims[k + 1], complex_.dims[k]);
    const int sign = k % 2 == 0 ? 1 : -1;
    auto put = [&](std::size_t r, std::size_t c, const IntMatrix& block) {
      if (!block.empty()) d.set_block(r, c, block);
    };
    if (n(k + 1) && n(k)) put(r0, c0, simplicial::coboundary(m, trivial_, k));
    if (k >= 1) {
      if (n(k + 1) && n1(k)) {
        IntMatrix eb = simplicial::cup_left_matrix(m, e_.euler, 2, k - 1, xi);
        IntMatrix ec = simplicial::cup_left_matrix(m, ehat_.euler, 2, k - 1, xi);
        put(r0, c1, sign > 0 ? eb : -eb);
        put(r0, c2, sign > 0 ? ec : -ec);
      }
      if (n1(k + 1) && n1(k)) {
        put(r1, c1, simplicial::coboundary(m, xi, k - 1));
        put(r2, c2, simplicial::coboundary(m, xi, k - 1));
      }
    }
    if (k >= 2 && n2(k)) {
      if (n1(k + 1)) {
        IntMatrix ed = simplicial::cup_left_matrix(m, ehat_.euler, 2, k - 2, trivial_);
        IntMatrix fd = simplicial::cup_left_matrix(m, e_.euler, 2, k - 2, trivial_);
        put(r1, c3, sign > 0 ? ed : -ed);
        put(r2, c3, sign > 0 ? -fd : fd);
      }
      if (n2(k + 1)) put(r3, c3, simplicial::coboundary(m, trivial_, k - 2));
    }
    return d;
  }

  BundleDescriptor e_, ehat_;
  LocalSystem trivial_;
  exact::CochainComplex complex_;
};

}  // namespace tdual::duality
