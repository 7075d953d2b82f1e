#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "tdual/courant/context.hpp"

namespace tdual::courant {

struct BracketCheck {
  Form lhs, rhs;
  bool ok = false;
};

/// Graded double commutator [[d_K, a], b] ω = d_K(abω) + a d_K(bω) − b d_K(aω) − ba d_K ω.
inline Form double_commutator(const GeneralizedSection& a, const GeneralizedSection& b, const Form& w, const Form& K) {
  auto dk = [&](const Form& x) { return d(x) + wedge(K, x); };
  return dk(act(a, act(b, w))) + act(a, dk(act(b, w))) - act(b, dk(act(a, w))) - act(b, act(a, dk(w)));
}

/// [a, b]_H ω = [[d_{−H}, a], b] ω for the Dorfman bracket as written.
inline BracketCheck derived_bracket_check(const GeneralizedSection& a, const GeneralizedSection& b, const Form& w,
                                          const Form& H) {
  BracketCheck r;
  r.lhs = act(dorfman(a, b, H), w);
  r.rhs = double_commutator(a, b, w, -H);
  r.ok = r.lhs == r.rhs;
  return r;
}

/// The algebroid bracket of the context: [[d_H, a], b] with d_H = d + H∧,
/// which is the Dorfman formula evaluated at −H.
inline GeneralizedSection courant_bracket(const GeneralizedSection& a, const GeneralizedSection& b,
                                          const EquivariantContext& ctx, Side side = Side::E) {
  return dorfman(a, b, -ctx.flux(side));
}

inline BracketCheck derived_bracket_check(const GeneralizedSection& a, const GeneralizedSection& b, const Form& w,
                                          const EquivariantContext& ctx) {
  BracketCheck r;
  r.lhs = act(courant_bracket(a, b, ctx), w);
  r.rhs = double_commutator(a, b, w, ctx.H());
  r.ok = r.lhs == r.rhs;
  return r;
}

/// The expansion d_H(abω) − a d_H(bω) − b d_H(aω) + ba d_H ω taken literally.
inline BracketCheck literal_expansion_check(const GeneralizedSection& a, const GeneralizedSection& b, const Form& w,
                                            const Form& H) {
  auto dh = [&](const Form& x) { return d(x) + wedge(H, x); };
  BracketCheck r;
  r.lhs = act(dorfman(a, b, H), w);
  r.rhs = dh(act(a, act(b, w))) - act(a, dh(act(b, w))) - act(b, dh(act(a, w))) + act(b, act(a, dh(w)));
  r.ok = r.lhs == r.rhs;
  return r;
}

/// φ([a, b]) = [φa, φb] for the brackets derived from d_H and d_Ĥ.
inline bool check_phi_intertwines(const GeneralizedSection& a, const GeneralizedSection& b, const EquivariantContext& ctx) {
  return phi_swap(courant_bracket(a, b, ctx), ctx) ==
         courant_bracket(phi_swap(a, ctx), phi_swap(b, ctx), ctx, Side::Ehat);
}

/// The five Courant algebroid axioms for the H-twisted Dorfman bracket.
struct AxiomChecks {
  bool jacobi = false, anchor = false, leibniz = false, symmetric = false, invariance = false;
  bool all() const { return jacobi && anchor && leibniz && symmetric && invariance; }
};

inline AxiomChecks courant_axioms(const GeneralizedSection& a, const GeneralizedSection& b, const GeneralizedSection& c,
                                  const FourierScalar& f, const Form& H) {
  auto br = [&](const GeneralizedSection& x, const GeneralizedSection& y) { return dorfman(x, y, H); };
  AxiomChecks r;
  r.jacobi = br(a, br(b, c)) == br(br(a, b), c) + br(b, br(a, c));
  r.anchor = br(a, b).X == lie_bracket(a.X, b.X);
  r.leibniz = br(a, f * b) == a.X.apply(f) * b + f * br(a, b);
  r.symmetric = br(a, b) + br(b, a) == exact_section(pairing(a, b));
  r.invariance = a.X.apply(pairing(b, c)) == pairing(br(a, b), c) + pairing(b, br(a, c));
  return r;
}

/// T(s·ω) = −φ(s)·Tω.
inline bool check_clifford_intertwines(const GeneralizedSection& s, const Form& w, const EquivariantContext& ctx) {
  return hori_forms(act(s, w), ctx) == -act(phi_swap(s, ctx), hori_forms(w, ctx));
}

/// T(d_H ω) = −d_Ĥ(Tω).
inline bool check_hori_twisted_d(const Form& w, const EquivariantContext& ctx) {
  return hori_forms(twisted_d(w, ctx, Side::E), ctx) == -twisted_d(hori_forms(w, ctx), ctx, Side::Ehat);
}

/// T̂_ξ T ω = −ω.
inline bool check_hori_inverse(const Form& w, const EquivariantContext& ctx) {
  return hori_forms(hori_forms(w, ctx), ctx.dual()) == -w;
}

/// Random invariant (parity 1) or anti-invariant (parity -1) mixed-degree form.
inline Form random_equivariant_form(std::mt19937_64& rng, const Affine& deck, int parity, std::size_t pairs = 3,
                                    long long max_freq = 3) {
  const std::size_t n = deck.dim();
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask(1) << (n + 1)); ++m) masks.push_back(m);
  return project(random_form(rng, n, masks, pairs, max_freq), deck, parity);
}

struct SuiteOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::size_t pairs = 3;     // ± frequency pairs per random coefficient
  long long max_freq = 3;    // |kⱼ| bound
};

/// Pass counts per property over `samples` random draws.
struct SuiteReport {
  std::string context;
  std::size_t samples = 0;
  std::map<std::string, std::size_t> passed;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void record(const std::string& name, bool good, std::size_t i) {
    if (good)
      ++passed[name];
    else
      failures.push_back(name + " (sample " + std::to_string(i) + ")");
  }
};

inline SuiteReport run_courant_suite(const EquivariantContext& ctx, const SuiteOptions& opt = {}) {
  ctx.validate();
  SuiteReport r;
  r.context = ctx.name;
  r.samples = opt.samples;
  std::mt19937_64 rng(opt.seed);
  const Form H = ctx.H();
  const EquivariantContext dual = ctx.dual();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto a = random_section(rng, ctx.deck, opt.pairs, opt.max_freq);
    const auto b = random_section(rng, ctx.deck, opt.pairs, opt.max_freq);
    const auto c = random_section(rng, ctx.deck, opt.pairs, opt.max_freq);
    const auto f = project(random_scalar(rng, ctx.dim(), opt.pairs, opt.max_freq), ctx.deck, 1);
    const Form w = random_equivariant_form(rng, ctx.deck, 1, opt.pairs, opt.max_freq);
    const Form wx = random_equivariant_form(rng, ctx.deck, -1, opt.pairs, opt.max_freq);

    const auto ax = courant_axioms(a, b, c, f, -H);
    r.record("axiom.jacobi", ax.jacobi, i);
    r.record("axiom.anchor", ax.anchor, i);
    r.record("axiom.leibniz", ax.leibniz, i);
    r.record("axiom.symmetric", ax.symmetric, i);
    r.record("axiom.invariance", ax.invariance, i);

    const auto ab = courant_bracket(a, b, ctx);
    r.record("bracket.invariant", has_parity(ab.X, ctx.deck, 1) && has_parity(ab.xi, ctx.deck, 1), i);
    r.record("derived_bracket", derived_bracket_check(a, b, w, ctx).ok && derived_bracket_check(a, b, w, H).ok, i);
    r.record("phi.intertwines", check_phi_intertwines(a, b, ctx), i);
    r.record("phi.involution", phi_swap(phi_swap(a, ctx), dual) == a, i);
    r.record("phi.isometry", pairing(phi_swap(a, ctx), phi_swap(b, ctx)) == pairing(a, b), i);
    r.record("hori.clifford", check_clifford_intertwines(a, w, ctx), i);
    r.record("hori.twisted_d", check_hori_twisted_d(w, ctx), i);
    r.record("hori.twisted_d.xi", check_hori_twisted_d(wx, ctx), i);
    r.record("hori.inverse", check_hori_inverse(w, ctx) && check_hori_inverse(wx, ctx), i);
    r.record("hori.parity", has_parity(hori_forms(w, ctx), ctx.deck, -1) && has_parity(hori_forms(wx, ctx), ctx.deck, 1), i);
  }
  return r;
}

}  // namespace tdual::courant
