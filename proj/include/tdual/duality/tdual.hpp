#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdual/duality/correspondence.hpp"

namespace tdual::duality {

/// Output of construct_tdual: the dual pair and an integer witness
/// p*h - p̂*ĥ = q*a' + δ_F 𝓑 where a' = 0 after absorbing a into the dual flux.
struct TDualResult {
  FluxPair dual;
  IntVector B;  // 2-cochain on F
  IntVector a;  // closed 3-cochain on M absorbed into Ĥ₃
};

namespace detail {

inline void require_low_dimension(const DeltaComplex& m) {
  if (m.dimension() > 3) throw Error(ErrorCode::DimensionTooHigh, "T-duality is implemented for bases of dimension <= 3");
}

/// True when z is a coboundary in C²(M, ξ); vacuous below dimension 2.
inline bool exact_in_degree2(const DeltaComplex& m, const LocalSystem& xi, const IntVector& z) {
  if (m.dimension() < 2) return true;
  return exact::cohomology_at(simplicial::cochain_complex(m, xi), 2).is_boundary(z);
}

}  // namespace detail

inline TDualResult construct_tdual(const FluxPair& p) {
  const auto& m = p.base();
  detail::require_low_dimension(m);

  // ê := F̂.  For bases of dimension <= 3 the equation for Ĥ₃ lives in C⁴ = 0,
  // so Ĥ₃′ = H₃ is a solution; it keeps [Ĥ₃] = [H₃].
  const BundleDescriptor ehat(m, p.xi(), p.Fhat);
  const FluxPair candidate(ehat, p.H3, p.euler());

  const CorrespondenceComplex f(p.bundle, ehat);
  const IntVector d = exact::sub(f.pull_e(p.flux(), 3), f.pull_ehat(candidate.flux(), 3));
  const IntMatrix d2 = f.complex().d_out(2);

  TDualResult r;
  r.a = IntVector(m.count(3));
  if (auto b = exact::solve_integer(d2, d)) {
    r.B = std::move(*b);
  } else {
    // D = q*a + δ_F 𝓑 with δa = 0.
    const std::size_t n3 = m.count(3);
    IntMatrix q(d.size(), n3);
    for (std::size_t i = 0; i < n3; ++i) q(i, i) = 1;
    IntMatrix system = exact::hconcat(q, d2);
    if (m.count(4) > 0)
      system = exact::vconcat(system, exact::hconcat(simplicial::coboundary(m, LocalSystem::trivial(m), 3),
                                                     IntMatrix(m.count(4), d2.cols())));
    IntVector rhs = d;
    rhs.resize(system.rows());
    const auto sol = exact::solve_integer(system, rhs);
    if (!sol) throw Error(ErrorCode::InternalObstruction, "construct_tdual: no solution for the correspondence certificate");
    r.a.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n3));
    r.B.assign(sol->begin() + static_cast<std::ptrdiff_t>(n3), sol->end());
  }
  r.dual = FluxPair(ehat, exact::add(p.H3, r.a), p.euler());

  const IntVector lhs = exact::sub(f.pull_e(p.flux(), 3), f.pull_ehat(r.dual.flux(), 3));
  if (lhs != d2 * r.B) throw Error(ErrorCode::InternalObstruction, "construct_tdual: certificate recheck failed");
  return r;
}

/// Per-axiom outcome of verify_tduality.
struct AxiomReport {
  bool orientation = false;   // (i) [ξ] = [ξ̂]
  bool flux_classes = false;  // (ii) [π_*h] = [ê] and [π̂_*ĥ] = [e]
  bool certificate = false;   // (iii) p*h - p̂*ĥ = δ_F 𝓑
  std::optional<IntVector> B;
  int flip = 1, flip_hat = 1;  // fibre orientations used for (ii) and (iii)
  std::vector<std::string> notes;

  bool ok() const { return orientation && flux_classes && certificate; }
};

/// Moves q onto the orientation cocycle xi using vertex signs t.
inline FluxPair regauge_pair(const FluxPair& q, const LocalSystem& xi, const std::vector<int>& t) {
  const auto& m = q.base();
  const BundleDescriptor b(m, xi, bundle::regauge(m, q.euler(), 2, t));
  return FluxPair(b, q.H3, bundle::regauge(m, q.Fhat, 2, t));
}

/// Checks the three T-duality axioms.  Each fibre may be reversed, since a
/// pair and its fibre flip are isomorphic.
inline AxiomReport verify_tduality(const FluxPair& p, const FluxPair& q) {
  AxiomReport r;
  const auto& m = p.base();
  if (!(m == q.base())) {
    r.notes.push_back("pairs live over different base complexes");
    return r;
  }
  const auto t = simplicial::gauge_between(m, q.xi(), p.xi());
  if (!t) {
    r.notes.push_back("orientation classes differ");
    return r;
  }
  r.orientation = true;
  if (m.dimension() > 3) {
    r.notes.push_back("base dimension above 3");
    return r;
  }
  const FluxPair qq = regauge_pair(q, p.xi(), *t);
  for (int s : {1, -1})
    for (int sh : {1, -1}) {
      const FluxPair a = s > 0 ? p : fiber_flip(p);
      const FluxPair b = sh > 0 ? qq : fiber_flip(qq);
      if (!detail::exact_in_degree2(m, p.xi(), exact::sub(a.Fhat, b.euler())) ||
          !detail::exact_in_degree2(m, p.xi(), exact::sub(b.Fhat, a.euler())))
        continue;
      if (!r.flux_classes) {
        r.flux_classes = true;
        r.flip = s;
        r.flip_hat = sh;
      }
      const CorrespondenceComplex f(a.bundle, b.bundle);
      const IntVector d = exact::sub(f.pull_e(a.flux(), 3), f.pull_ehat(b.flux(), 3));
      if (auto cert = exact::solve_integer(f.complex().d_out(2), d)) {
        r.certificate = true;
        r.flip = s;
        r.flip_hat = sh;
        r.B = std::move(*cert);
        return r;
      }
    }
  if (!r.flux_classes) r.notes.push_back("pushforward of the flux does not match the dual Euler class");
  else r.notes.push_back("no correspondence certificate exists");
  return r;
}

struct Equivalence {
  bool equivalent = false;
  std::optional<IntVector> witness;  // ξ-twisted 1-cocycle α
};

/// Decides whether two fluxes on the same bundle differ by π*(α⌣F̂₁) in
/// H³(E) for some closed ξ-twisted 1-cochain α.
inline Equivalence duals_equivalent(const FluxPair& q1, const FluxPair& q2) {
  if (!(q1.bundle == q2.bundle)) throw Error(ErrorCode::BundleMismatch, "duals_equivalent: different bundle descriptors");
  const auto& m = q1.base();
  const auto& xi = q1.xi();
  const IntVector mu_h = exact::sub(q2.H3, q1.H3);
  const IntVector mu_f = exact::sub(q2.Fhat, q1.Fhat);
  if (!detail::exact_in_degree2(m, xi, mu_f)) return {};

  const TotalComplex tc(q1.bundle, LocalSystem::trivial(m));
  const IntVector zero_alpha(m.count(1));
  if (tc.dimension() < 3) return {true, zero_alpha};
  const auto h3 = exact::cohomology_at(tc.complex(), 3);
  const IntVector target = h3.class_of(tc.join(mu_h, mu_f));
  if (exact::is_zero(target)) return {true, zero_alpha};

  const auto h1 = exact::cohomology_at(simplicial::cochain_complex(m, xi), 1);
  const auto& gens = h1.generators();
  const std::size_t nc = target.size();
  IntMatrix system(nc, gens.size() + nc);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const IntVector shift = simplicial::cup(m, gens[i], 1, q1.Fhat, 2, xi);
    const IntVector c = h3.class_of(tc.pullback(shift, 3));
    for (std::size_t r = 0; r < nc; ++r) system(r, i) = c[r];
  }
  for (std::size_t r = 0; r < nc; ++r) system(r, gens.size() + r) = h3.orders()[r];
  const auto sol = exact::solve_integer(system, target);
  if (!sol) return {};
  IntVector alpha = zero_alpha;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((*sol)[i] != 0) alpha = exact::add(alpha, exact::scale(gens[i], (*sol)[i]));
  return {true, alpha};
}

}  // namespace tdual::duality
