#pragma once

#include "tdual/exact/cochain_complex.hpp"
#include "tdual/simplicial/local_system.hpp"

namespace tdual::simplicial {

using exact::CochainComplex;
using exact::Integer;
using exact::IntMatrix;
using exact::IntVector;

/// δ: C^k(X, L) → C^{k+1}(X, L).  The 0th face term is transported along the
/// leading edge.
inline IntMatrix coboundary(const DeltaComplex& x, const LocalSystem& l, std::size_t k) {
  IntMatrix m(x.count(k + 1), x.count(k));
  for (std::size_t s = 0; s < x.count(k + 1); ++s) {
    const auto& f = x.faces(k + 1, s);
    for (std::size_t i = 0; i <= k + 1; ++i) {
      int c = (i % 2 == 0) ? 1 : -1;
      if (i == 0) c *= l.sign(x.edge(k + 1, s, 0, 1));
      m(s, f[i]) += c;
    }
  }
  return m;
}

inline CochainComplex cochain_complex(const DeltaComplex& x, const LocalSystem& l) {
  CochainComplex c;
  for (int k = 0; k <= x.dimension(); ++k) c.dims.push_back(x.count(static_cast<std::size_t>(k)));
  for (int k = 0; k < x.dimension(); ++k) c.d.push_back(coboundary(x, l, static_cast<std::size_t>(k)));
  return c;
}

/// Cochain of a given degree with values in the local system `system`.
struct TwistedCochain {
  std::size_t degree = 0;
  LocalSystem system;
  IntVector values;
};

/// α ⌣ β on (p+q)-simplices: α(front) · w · β(back), with w the transport of
/// β's local system along the front edges.
inline IntVector cup(const DeltaComplex& x, const IntVector& alpha, std::size_t p, const IntVector& beta, std::size_t q,
                     const LocalSystem& l2) {
  if (alpha.size() != x.count(p) || beta.size() != x.count(q))
    throw Error(ErrorCode::BaseMismatch, "cochain length does not match the complex");
  const std::size_t n = p + q;
  IntVector out(x.count(n));
  for (std::size_t s = 0; s < x.count(n); ++s) {
    const Integer& a = alpha[x.front(n, s, p)];
    if (a == 0) continue;
    const Integer& b = beta[x.back(n, s, p)];
    if (b == 0) continue;
    out[s] = a * b * l2.transport(x, n, s, 0, p);
  }
  return out;
}

inline TwistedCochain cup(const DeltaComplex& x, const TwistedCochain& a, const TwistedCochain& b) {
  if (a.system.edge_count() != x.count(1) || b.system.edge_count() != x.count(1))
    throw Error(ErrorCode::BaseMismatch, "local system on a different base");
  return {a.degree + b.degree, a.system * b.system, cup(x, a.values, a.degree, b.values, b.degree, b.system)};
}

/// Matrix of β ↦ a ⌣ β for a fixed p-cochain a and q-cochains β over l2.
inline IntMatrix cup_left_matrix(const DeltaComplex& x, const IntVector& a, std::size_t p, std::size_t q,
                                 const LocalSystem& l2) {
  const std::size_t n = p + q;
  IntMatrix m(x.count(n), x.count(q));
  for (std::size_t s = 0; s < x.count(n); ++s) {
    const Integer& av = a[x.front(n, s, p)];
    if (av != 0) m(s, x.back(n, s, p)) += av * l2.transport(x, n, s, 0, p);
  }
  return m;
}

/// Matrix of α ↦ α ⌣ b for p-cochains α and a fixed q-cochain b over l2.
inline IntMatrix cup_right_matrix(const DeltaComplex& x, std::size_t p, const IntVector& b, std::size_t q,
                                  const LocalSystem& l2) {
  const std::size_t n = p + q;
  IntMatrix m(x.count(n), x.count(p));
  for (std::size_t s = 0; s < x.count(n); ++s) {
    const Integer& bv = b[x.back(n, s, p)];
    if (bv != 0) m(s, x.front(n, s, p)) += bv * l2.transport(x, n, s, 0, p);
  }
  return m;
}

enum class LiftConvention { ZeroOne, ZeroMinusOne };

/// Integral Bockstein of a mod-2 k-cocycle: δ(lift)/2 with the lift taking
/// values in {0, 1} (or {0, -1}).  Coefficients in ℤ_L when L is given.
inline IntVector bockstein(const DeltaComplex& x, const IntVector& z2, std::size_t k, const LocalSystem& l,
                           LiftConvention lift = LiftConvention::ZeroOne) {
  if (z2.size() != x.count(k)) throw Error(ErrorCode::BaseMismatch, "cochain length does not match the complex");
  IntVector lifted(z2.size());
  for (std::size_t i = 0; i < z2.size(); ++i) {
    const bool odd = exact::mod_floor(z2[i], 2) == 1;
    lifted[i] = odd ? (lift == LiftConvention::ZeroOne ? 1 : -1) : 0;
  }
  IntVector d = coboundary(x, l, k) * lifted;
  for (auto& v : d) {
    if (exact::mod_floor(v, 2) != 0) throw Error(ErrorCode::NotACocycle, "bockstein input is not a mod-2 cocycle");
    v /= 2;
  }
  return d;
}

inline IntVector bockstein(const DeltaComplex& x, const IntVector& z2, std::size_t k,
                           LiftConvention lift = LiftConvention::ZeroOne) {
  return bockstein(x, z2, k, LocalSystem::trivial(x), lift);
}

}  // namespace tdual::simplicial
