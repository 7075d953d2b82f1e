#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tdual/duality/tdual.hpp"
#include "tdual/ktheory/twist.hpp"

namespace tdual::ktheory {

using exact::FGAbelianGroup;
using exact::IntMatrix;

/// K¹ when 0 → sub → K¹ → quot → 0 does not determine the group.
struct AmbiguousExtension {
  FGAbelianGroup sub, quot;
  std::vector<FGAbelianGroup> candidates;

  friend bool operator==(const AmbiguousExtension&, const AmbiguousExtension&) = default;
};

struct KGroups {
  FGAbelianGroup K0;
  std::variant<FGAbelianGroup, AmbiguousExtension> K1;
  std::vector<FGAbelianGroup> E_infinity;  // p = 0..3

  bool ambiguous() const { return std::holds_alternative<AmbiguousExtension>(K1); }
  const FGAbelianGroup& k1() const {
    if (ambiguous()) throw Error(ErrorCode::InternalObstruction, "K1 is an unresolved extension");
    return std::get<FGAbelianGroup>(K1);
  }
  std::string k1_string() const { return ambiguous() ? std::string("*") : k1().to_string(); }
};

/// Isomorphism types of extensions 0 → sub → G → quot → 0, from the
/// parametrisation Ext(⊕ℤ_{q_i}, S) = ⊕ S/q_i S.  The free part of quot
/// always splits off.
inline std::vector<FGAbelianGroup> extension_candidates(const FGAbelianGroup& sub, const FGAbelianGroup& quot,
                                                        std::size_t limit = 1u << 16) {
  const auto s_orders = sub.cyclic_orders();  // torsion first, then zeros
  const auto& q = quot.torsion();
  const std::size_t ns = s_orders.size(), nq = q.size();
  // One coordinate per (i, j): the S-coordinate j of the class s_i, ranging over
  // ℤ/q_i for free coordinates and ℤ_{t_j}/q_i = ℤ/gcd(q_i, t_j) for torsion ones.
  std::vector<Integer> range;
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      range.push_back(s_orders[j] == 0 ? q[i] : Integer(boost::multiprecision::gcd(q[i], s_orders[j])));
  Integer total = 1;
  for (const auto& r : range) total *= r;
  if (total > limit) throw Error(ErrorCode::InternalObstruction, "too many extension classes to enumerate");

  std::set<std::string> seen;
  std::vector<FGAbelianGroup> out;
  std::vector<Integer> idx(range.size(), Integer(0));
  for (;;) {
    IntMatrix rel(ns + nq, ns + nq);
    for (std::size_t j = 0; j < ns; ++j) rel(j, j) = s_orders[j];
    for (std::size_t i = 0; i < nq; ++i) {
      rel(ns + i, ns + i) = q[i];
      for (std::size_t j = 0; j < ns; ++j) rel(j, ns + i) = -idx[i * ns + j];
    }
    exact::PresentedGroup p;
    p.ambient_rank = ns + nq;
    p.relations = rel;
    const FGAbelianGroup g = exact::normal_form(p) + FGAbelianGroup::free(quot.free_rank());
    if (seen.insert(g.to_string()).second) out.push_back(g);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == range[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

/// Twisted K-theory of a total space of dimension ≤ 3 from the
/// Atiyah–Hirzebruch spectral sequence.  E₂^{p,0} = H^p(E, ℤ_w); the only
/// possible differential is d₃(x) = -h⌣x on E₂^{0,0}.
inline KGroups ahss_k_groups(const TwistClass& t) {
  const TotalComplex tw = t.coefficients();
  if (tw.dimension() > 3) throw Error(ErrorCode::DimensionTooHigh, "AHSS is implemented for total spaces of dimension <= 3");
  std::vector<FGAbelianGroup> e(4);
  std::vector<exact::HomologyGroup> h;
  for (std::size_t p = 0; p <= tw.dimension(); ++p) {
    h.push_back(exact::cohomology_at(tw.complex(), p));
    e[p] = h[p].group();
  }

  if (!e[0].is_trivial() && tw.dimension() == 3) {
    // H⁰(E, ℤ_w) = ℤ·π*u with u a flat section of w on the base.
    const IntVector u = tw.alpha(h[0].generators()[0], 0);
    const IntVector hu = t.untwisted().right_multiply(t.h, 3, u, 0, t.w);
    const IntVector d3 = exact::scale(h[3].class_of(hu), -1);
    // kernel of ℤ → H³, x ↦ x·d3(1): ℤ unless d3(1) has infinite order.
    bool infinite = false;
    for (std::size_t i = 0; i < d3.size(); ++i) infinite = infinite || (h[3].orders()[i] == 0 && d3[i] != 0);
    e[0] = infinite ? FGAbelianGroup{} : FGAbelianGroup::free(1);
    const auto orders = h[3].orders();
    IntMatrix rel(orders.size(), orders.size() + 1);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      rel(i, i) = orders[i];
      rel(i, orders.size()) = d3[i];
    }
    exact::PresentedGroup p;
    p.ambient_rank = orders.size();
    p.relations = rel;
    e[3] = exact::normal_form(p);
  }

  KGroups k;
  k.E_infinity = e;
  k.K0 = e[0] + e[2];
  if (e[1].is_free() || e[3].is_trivial()) {
    k.K1 = e[1] + e[3];
  } else {
    AmbiguousExtension amb{e[3], e[1], extension_candidates(e[3], e[1])};
    if (amb.candidates.size() == 1)
      k.K1 = amb.candidates.front();
    else
      k.K1 = std::move(amb);
  }
  return k;
}

/// Replaces an ambiguous K¹ by the candidate isomorphic to K⁰ of the T-dual
/// with the complementary twist.  K⁰ is never ambiguous, so one side always suffices.
inline KGroups resolve_by_tduality(const KGroups& amb, const KGroups& dual_known) {
  if (!amb.ambiguous()) return amb;
  const auto& ext = std::get<AmbiguousExtension>(amb.K1);
  std::vector<FGAbelianGroup> hits;
  for (const auto& c : ext.candidates)
    if (c == dual_known.K0) hits.push_back(c);
  if (hits.empty())
    throw Error(ErrorCode::NoMatchingCandidate, "dual K0 = " + dual_known.K0.to_string() + " matches no extension");
  if (hits.size() > 1) throw Error(ErrorCode::MultipleMatches, "several extensions match the dual K0");
  KGroups out = amb;
  out.K1 = hits.front();
  return out;
}

/// K-groups of (E, h) or (E, (π*ξ, h)), with an ambiguous K¹ filled in from
/// the T-dual carrying the complementary twist.
inline KGroups resolved_k_groups(const duality::FluxPair& p, bool xi_twist) {
  KGroups k = ahss_k_groups(TwistClass::from_pair(p, xi_twist));
  if (!k.ambiguous()) return k;
  const auto dual = duality::construct_tdual(p).dual;
  return resolve_by_tduality(k, ahss_k_groups(TwistClass::from_pair(dual, !xi_twist)));
}

struct RationalReport {
  bool ok = false;
  std::size_t rank0 = 0, rank1 = 0, even = 0, odd = 0;
};

/// Chern character check: ranks of K⁰, K¹ against the small twisted model dims.
/// An ambiguous K¹ still has a determined rank.
inline RationalReport rational_consistency(const KGroups& k, std::pair<std::size_t, std::size_t> dims) {
  RationalReport r;
  r.rank0 = k.K0.free_rank();
  if (k.ambiguous()) {
    const auto& ext = std::get<AmbiguousExtension>(k.K1);
    r.rank1 = ext.sub.free_rank() + ext.quot.free_rank();
  } else {
    r.rank1 = k.k1().free_rank();
  }
  r.even = dims.first;
  r.odd = dims.second;
  r.ok = r.rank0 == r.even && r.rank1 == r.odd;
  return r;
}

}  // namespace tdual::ktheory
