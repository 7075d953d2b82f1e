#pragma once

#include <optional>
#include <string>

#include "tdual/courant/sections.hpp"

namespace tdual::courant {

enum class Side { E, Ehat };

/// Double cover T^{d+1} → E with deck σ̃(x, θ) = (Ax + b, -θ), connection
/// A = dθ + a, dual connection Â = dθ̂ + â with dâ = F̂, and
/// H = H₃ + A ∧ F̂, Ĥ = H₃ + Â ∧ F.
struct EquivariantContext {
  std::string name;
  Affine deck;
  Form a, ahat, Fhat, H3;

  std::size_t dim() const { return deck.dim(); }
  Form F() const { return d(a); }
  Form connection() const { return Form::dtheta(dim()) + a; }
  Form dual_connection() const { return Form::dtheta(dim()) + ahat; }
  Form H() const { return H3 + wedge(connection(), Fhat); }
  Form Hhat() const { return H3 + wedge(dual_connection(), F()); }
  Form flux(Side s) const { return s == Side::E ? H() : Hhat(); }

  /// The context seen from Ê: (a, F) and (â, F̂) exchanged.
  EquivariantContext dual() const {
    EquivariantContext c = *this;
    c.name = name + "^";
    std::swap(c.a, c.ahat);
    c.Fhat = F();
    return c;
  }

  void validate() const {
    deck.validate();
    const std::size_t n = dim();
    auto base_form = [&](const Form& w, std::size_t p, int parity, const char* what) {
      if (w.dim() != n) throw Error(ErrorCode::InvalidContext, std::string(what) + " lives on another torus");
      if (!w.homogeneous(p)) throw Error(ErrorCode::InvalidContext, std::string(what) + " has the wrong degree");
      if (w.involves_theta()) throw Error(ErrorCode::InvalidContext, std::string(what) + " must be a base form");
      if (!w.is_real()) throw Error(ErrorCode::InvalidContext, std::string(what) + " is not real");
      if (!has_parity(w, deck, parity))
        throw Error(ErrorCode::InvalidContext,
                    std::string(what) + (parity > 0 ? " is not invariant" : " is not anti-invariant"));
    };
    base_form(a, 1, -1, "a");
    base_form(ahat, 1, -1, "ahat");
    base_form(Fhat, 2, -1, "Fhat");
    base_form(H3, 3, 1, "H3");
    if (!(d(ahat) == Fhat)) throw Error(ErrorCode::InvalidContext, "d(ahat) differs from Fhat");
    if (!d(H()).is_zero()) throw Error(ErrorCode::InvalidContext, "H is not closed");
  }

  /// Builds the context, solving dâ = F̂ when â is not supplied.
  static EquivariantContext make(std::string name, Affine deck, Form a, Form Fhat, Form H3,
                                 std::optional<Form> ahat = std::nullopt);
};

/// Primitive of a closed base 2-form with no constant part: d*Δ⁻¹F on each
/// Fourier mode, projected to the anti-invariant part.
inline Form primitive(const Form& f, const Affine& deck) {
  const std::size_t n = f.dim();
  Form r(n);
  for (const auto& [m, s] : f.components()) {
    for (const auto& [k, c] : s.terms()) {
      long long k2 = 0;
      for (auto v : k) k2 += v * v;
      if (k2 == 0) throw Error(ErrorCode::InvalidContext, "Fhat has a harmonic part; the dual Euler class must vanish in real cohomology");
      // d* on the k-mode is -i Σ kⱼ i_{∂ⱼ}.
      int pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(m & detail::bit(j))) continue;
        const Gaussian coef = Gaussian(0, Rational(-k[j], k2)) * c;
        r.add(m & ~detail::bit(j), FourierScalar::mode(k, pos % 2 ? -coef : coef));
        ++pos;
      }
    }
  }
  return project(r, deck, -1);
}

inline EquivariantContext EquivariantContext::make(std::string name, Affine deck, Form a, Form Fhat, Form H3,
                                                   std::optional<Form> ahat) {
  EquivariantContext c;
  c.name = std::move(name);
  c.deck = std::move(deck);
  c.a = std::move(a);
  c.Fhat = std::move(Fhat);
  c.H3 = std::move(H3);
  c.ahat = ahat ? std::move(*ahat) : primitive(c.Fhat, c.deck);
  c.validate();
  return c;
}

/// ω = π*α + A ∧ π*β.
struct Decomposition {
  Form alpha, beta;
};

inline Decomposition decompose(const Form& w, const Form& a) {
  auto [w0, w1] = w.split_theta();
  // A ∧ β = dθ ∧ β + a ∧ β
  return {w0 - wedge(a, w1), w1};
}

/// Tω = π̂*β − Â ∧ π̂*α.
inline Form hori_forms(const Form& w, const EquivariantContext& ctx) {
  const auto [alpha, beta] = decompose(w, ctx.a);
  return beta - wedge(ctx.dual_connection(), alpha);
}

/// d_H ω = dω + H ∧ ω on E or Ê.
inline Form twisted_d(const Form& w, const EquivariantContext& ctx, Side side) {
  return d(w) + wedge(ctx.flux(side), w);
}

/// (X, x, a, λ) components of a section under the splitting given by A.
struct SplitSection {
  VectorField base;  // θ-component zero
  FourierScalar x;   // vertical tangent coefficient A(X)
  FourierScalar c;   // coefficient of A in the cotangent part
  Form lambda;       // horizontal cotangent part
};

inline SplitSection split(const GeneralizedSection& s, const Form& a) {
  const std::size_t n = s.dim();
  SplitSection r;
  r.base = s.X;
  r.base.c[n] = FourierScalar(n);
  r.x = s.X.c[n] + interior(r.base, a).component(0);
  auto [l0, l1] = s.xi.split_theta();
  r.c = l1.component(0);
  r.lambda = l0 - r.c * a;
  return r;
}

inline GeneralizedSection assemble(const SplitSection& p, const Form& a) {
  const std::size_t n = p.base.dim();
  VectorField x = p.base;
  x.c[n] = p.x - interior(p.base, a).component(0);
  Form f = p.lambda + p.c * (Form::dtheta(n) + a);
  return {std::move(x), std::move(f)};
}

/// φ(X, x, a, λ) = (X, a, x, λ), reassembled with Â.
inline GeneralizedSection phi_swap(const GeneralizedSection& s, const EquivariantContext& ctx) {
  SplitSection p = split(s, ctx.a);
  std::swap(p.x, p.c);
  return assemble(p, ctx.ahat);
}

/// Named contexts over T² and T³.
namespace contexts {

inline FourierScalar c2(long long k1, long long k2, const Rational& s = 1) { return FourierScalar::cos({k1, k2}, s); }
inline FourierScalar s2(long long k1, long long k2, const Rational& s = 1) { return FourierScalar::sin({k1, k2}, s); }

inline Affine half_shift(std::size_t d) {
  Affine f = Affine::identity(d);
  f.twice_b[0] = 1;
  return f;
}

/// σ(x, y) = (x + ½, y), everything flat.
inline EquivariantContext flat() {
  return EquivariantContext::make("flat", half_shift(2), Form(2), Form(2), Form(2));
}

/// σ(x, y) = (x + ½, y), F = 0 and F̂ = dâ with â anti-invariant.
inline EquivariantContext shift() {
  const Affine s = half_shift(2);
  const Form ahat = Form::basis(2, {1}, s2(1, 0)) + Form::basis(2, {0}, c2(1, 1, Rational(1, 2))) +
                    Form::basis(2, {1}, c2(3, -2, 2));
  return EquivariantContext::make("shift", s, Form(2), d(ahat), Form(2), ahat);
}

/// Same deck, both curvatures nonzero.
inline EquivariantContext shift_both() {
  const Affine s = half_shift(2);
  const Form a = Form::basis(2, {1}, c2(1, 2)) + Form::basis(2, {0}, s2(-1, 1, 3));
  const Form ahat = Form::basis(2, {1}, s2(1, 0)) + Form::basis(2, {0}, s2(3, 1, Rational(-1, 3)));
  return EquivariantContext::make("shift_both", s, a, d(ahat), Form(2), ahat);
}

/// Klein-bottle base: σ(x, y) = (x + ½, -y).
inline EquivariantContext klein() {
  Affine s = half_shift(2);
  s.A[1][1] = -1;
  const Form a = project(Form::basis(2, {0}, s2(1, 0) + c2(1, 2)) + Form::basis(2, {1}, c2(2, 0) + s2(1, 1)), s, -1);
  const Form ahat = project(Form::basis(2, {0}, c2(1, 1, 2)) + Form::basis(2, {1}, s2(2, 1) + c2(0, 3)), s, -1);
  return EquivariantContext::make("klein", s, a, d(ahat), Form(2), ahat);
}

/// T³ base with σ(x, y, z) = (x + ½, y, z) and nonzero H₃.
inline EquivariantContext three_torus() {
  const Affine s = half_shift(3);
  const Form a = Form::basis(3, {2}, FourierScalar::sin({1, 0, 1}));
  const Form ahat = Form::basis(3, {1}, FourierScalar::cos({1, 1, 0})) + Form::basis(3, {0}, FourierScalar::sin({1, 0, 2}));
  const Form h3 = Form::basis(3, {0, 1, 2}, FourierScalar::cos({2, 0, 1}) + FourierScalar::constant(3, 1));
  return EquivariantContext::make("three_torus", s, a, d(ahat), h3, ahat);
}

inline std::vector<EquivariantContext> all() { return {flat(), shift(), shift_both(), klein(), three_torus()}; }

}  // namespace contexts

}  // namespace tdual::courant
