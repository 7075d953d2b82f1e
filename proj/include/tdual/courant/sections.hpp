#pragma once

#include "tdual/courant/forms.hpp"

namespace tdual::courant {

/// Section (X, ξ) of TE ⊕ T*E on the cover T^{d+1}: θ-independent by
/// construction, σ̃-invariant when built through the checking constructor.
struct GeneralizedSection {
  VectorField X;
  Form xi;

  GeneralizedSection() = default;

  /// Unchecked; used for sections that are not tied to a deck map.
  GeneralizedSection(VectorField x, Form f) : X(std::move(x)), xi(std::move(f)) {
    if (X.dim() != xi.dim()) throw Error(ErrorCode::InvalidContext, "section components on different tori");
    if (!xi.homogeneous(1)) throw Error(ErrorCode::InvalidContext, "cotangent component must be a 1-form");
  }

  GeneralizedSection(const Affine& deck, VectorField x, Form f) : GeneralizedSection(std::move(x), std::move(f)) {
    if (!has_parity(X, deck, 1) || !has_parity(xi, deck, 1))
      throw Error(ErrorCode::InvalidContext, "section is not invariant under the deck involution");
  }

  std::size_t dim() const { return X.dim(); }
  static GeneralizedSection zero(std::size_t d) { return {VectorField(d), Form(d)}; }

  friend GeneralizedSection operator+(const GeneralizedSection& a, const GeneralizedSection& b) {
    return {a.X + b.X, a.xi + b.xi};
  }
  friend GeneralizedSection operator-(const GeneralizedSection& a, const GeneralizedSection& b) {
    return {a.X - b.X, a.xi - b.xi};
  }
  friend GeneralizedSection operator*(const FourierScalar& f, const GeneralizedSection& a) { return {f * a.X, f * a.xi}; }
  friend bool operator==(const GeneralizedSection&, const GeneralizedSection&) = default;
};

/// Clifford action s·ω = i_X ω + ξ ∧ ω.
inline Form act(const GeneralizedSection& s, const Form& w) { return interior(s.X, w) + wedge(s.xi, w); }

/// (s₁, s₂) = ½(ξ(Y) + η(X)), so that s₁s₂ + s₂s₁ = 2(s₁, s₂).
inline FourierScalar pairing(const GeneralizedSection& a, const GeneralizedSection& b) {
  const Form s = interior(b.X, a.xi) + interior(a.X, b.xi);
  return Gaussian(Rational(1, 2)) * s.component(0);
}

/// The operator D with (Df, s) = ρ(s)f.
inline GeneralizedSection exact_section(const FourierScalar& f) {
  return {VectorField(f.dim()), Gaussian(2) * d(Form::scalar(f))};
}

/// [(X, ξ), (Y, η)]_H = ([X, Y], L_X η − i_Y dξ + i_Y i_X H).
inline GeneralizedSection dorfman(const GeneralizedSection& a, const GeneralizedSection& b, const Form& H) {
  Form f = lie_derivative(a.X, b.xi) - interior(b.X, d(a.xi));
  if (!H.is_zero()) f += interior(b.X, interior(a.X, H));
  return {lie_bracket(a.X, b.X), f};
}

/// Invariant random section: projection of a random one.
inline GeneralizedSection random_section(std::mt19937_64& rng, const Affine& deck, std::size_t pairs = 3,
                                         long long max_freq = 3) {
  const std::size_t d = deck.dim();
  VectorField x = project(random_vector_field(rng, d, pairs, max_freq), deck, 1);
  Form f = project(random_form(rng, d, masks_of_degree(d, 1, true), pairs, max_freq), deck, 1);
  return {deck, std::move(x), std::move(f)};
}

}  // namespace tdual::courant
