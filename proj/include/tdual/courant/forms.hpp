#pragma once

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "tdual/courant/fourier.hpp"

namespace tdual::courant {

/// Coordinates x₁..x_d, θ on T^{d+1}; θ has index d.  Components are keyed by
/// the bit mask of the basis covectors they multiply.
using Mask = unsigned;

namespace detail {

/// Sign of dx_I ∧ dx_J relative to dx_{I∪J} for disjoint I, J.
inline int merge_sign(Mask i, Mask j) {
  int swaps = 0;
  for (Mask b = j; b; b &= b - 1) {
    const Mask low = b & (~b + 1);
    swaps += std::popcount(i & ~(low | (low - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

inline Mask bit(std::size_t i) { return Mask(1) << i; }

}  // namespace detail

/// θ-independent vector field Σ Xʲ ∂ⱼ (j = d is ∂_θ).
struct VectorField {
  std::vector<FourierScalar> c;

  VectorField() = default;
  explicit VectorField(std::size_t d) : c(d + 1, FourierScalar(d)) {}

  std::size_t dim() const { return c.empty() ? 0 : c.size() - 1; }
  static VectorField coordinate(std::size_t d, std::size_t j) {
    VectorField x(d);
    x.c[j] = FourierScalar::constant(d, 1);
    return x;
  }

  bool is_zero() const {
    for (const auto& f : c)
      if (!f.is_zero()) return false;
    return true;
  }

  /// X(f); coefficients never depend on θ.
  FourierScalar apply(const FourierScalar& f) const {
    FourierScalar r(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (!c[j].is_zero()) r += c[j] * f.derivative(j);
    return r;
  }

  friend VectorField operator+(VectorField a, const VectorField& b) {
    for (std::size_t j = 0; j < a.c.size(); ++j) a.c[j] += b.c[j];
    return a;
  }
  friend VectorField operator-(VectorField a, const VectorField& b) {
    for (std::size_t j = 0; j < a.c.size(); ++j) a.c[j] -= b.c[j];
    return a;
  }
  friend VectorField operator*(const FourierScalar& f, VectorField a) {
    for (auto& x : a.c) x = f * x;
    return a;
  }
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

inline VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  VectorField r(x.dim());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.apply(y.c[i]) - y.apply(x.c[i]);
  return r;
}

/// Mixed-degree θ-independent form on T^{d+1}.
class Form {
 public:
  Form() = default;
  explicit Form(std::size_t d) : d_(d) {}

  static Form scalar(const FourierScalar& f) {
    Form w(f.dim());
    w.add(0, f);
    return w;
  }
  static Form one(std::size_t d) { return scalar(FourierScalar::constant(d, 1)); }
  /// f dx_{i₁} ∧ … in increasing index order.
  static Form basis(std::size_t d, std::vector<std::size_t> idx, const FourierScalar& f) {
    Mask m = 0;
    for (auto i : idx) {
      if (i > d) throw Error(ErrorCode::InvalidContext, "basis index out of range");
      if (m & detail::bit(i)) return Form(d);
      m |= detail::bit(i);
    }
    Form w(d);
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] > idx[b]) sign = -sign;
    w.add(m, sign > 0 ? f : -f);
    return w;
  }
  static Form dtheta(std::size_t d) { return basis(d, {d}, FourierScalar::constant(d, 1)); }

  std::size_t dim() const { return d_; }
  std::size_t coords() const { return d_ + 1; }
  const std::map<Mask, FourierScalar>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  FourierScalar component(Mask m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? FourierScalar(d_) : it->second;
  }

  void add(Mask m, const FourierScalar& f) {
    if (f.is_zero()) return;
    if (f.dim() != d_) throw Error(ErrorCode::InvalidContext, "form coefficient on a torus of another dimension");
    auto [it, fresh] = comps_.try_emplace(m, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  /// Homogeneous part of degree p.
  Form degree(std::size_t p) const {
    Form r(d_);
    for (const auto& [m, f] : comps_)
      if (static_cast<std::size_t>(std::popcount(m)) == p) r.comps_.emplace(m, f);
    return r;
  }
  /// True when every component has degree p.
  bool homogeneous(std::size_t p) const {
    for (const auto& [m, f] : comps_)
      if (static_cast<std::size_t>(std::popcount(m)) != p) return false;
    return true;
  }
  bool involves_theta() const {
    for (const auto& [m, f] : comps_)
      if (m & detail::bit(d_)) return true;
    return false;
  }
  bool is_real() const {
    for (const auto& [m, f] : comps_)
      if (!f.is_real()) return false;
    return true;
  }

  /// Splits ω = ω₀ + dθ ∧ ω₁ with ω₀, ω₁ free of dθ.
  std::pair<Form, Form> split_theta() const {
    Form w0(d_), w1(d_);
    const Mask t = detail::bit(d_);
    for (const auto& [m, f] : comps_) {
      if (m & t) {
        // dx_I ∧ dθ = (-1)^{|I|} dθ ∧ dx_I
        const Mask rest = m & ~t;
        w1.add(rest, std::popcount(rest) % 2 ? -f : f);
      } else {
        w0.add(m, f);
      }
    }
    return {w0, w1};
  }

  friend Form operator+(Form a, const Form& b) {
    a.check(b);
    for (const auto& [m, f] : b.comps_) a.add(m, f);
    return a;
  }
  friend Form operator-(const Form& a) {
    Form r(a.d_);
    for (const auto& [m, f] : a.comps_) r.comps_.emplace(m, -f);
    return r;
  }
  friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
  friend Form operator*(const FourierScalar& s, const Form& a) {
    Form r(a.d_);
    for (const auto& [m, f] : a.comps_) r.add(m, s * f);
    return r;
  }
  friend Form operator*(const Gaussian& s, const Form& a) {
    Form r(a.d_);
    for (const auto& [m, f] : a.comps_) r.add(m, s * f);
    return r;
  }
  Form& operator+=(const Form& b) { return *this = *this + b; }
  Form& operator-=(const Form& b) { return *this = *this - b; }
  friend bool operator==(const Form& a, const Form& b) { return a.d_ == b.d_ && a.comps_ == b.comps_; }

  friend Form wedge(const Form& a, const Form& b) {
    a.check(b);
    Form r(a.d_);
    for (const auto& [ma, fa] : a.comps_)
      for (const auto& [mb, fb] : b.comps_) {
        if (ma & mb) continue;
        const FourierScalar p = fa * fb;
        r.add(ma | mb, detail::merge_sign(ma, mb) > 0 ? p : -p);
      }
    return r;
  }

  std::string to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [m, f] : comps_) {
      if (!s.empty()) s += " + ";
      s += "[" + f.to_string() + "]";
      for (std::size_t i = 0; i <= d_; ++i)
        if (m & detail::bit(i)) s += i == d_ ? " dθ" : " dx" + std::to_string(i + 1);
    }
    return s;
  }

 private:
  void check(const Form& b) const {
    if (d_ != b.d_) throw Error(ErrorCode::InvalidContext, "forms on tori of different dimension");
  }

  std::size_t d_ = 0;
  std::map<Mask, FourierScalar> comps_;
};

/// Exterior derivative; the θ-derivative of every coefficient vanishes.
inline Form d(const Form& w) {
  Form r(w.dim());
  for (const auto& [m, f] : w.components())
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (m & detail::bit(j)) continue;
      const FourierScalar df = f.derivative(j);
      if (df.is_zero()) continue;
      r.add(m | detail::bit(j), detail::merge_sign(detail::bit(j), m) > 0 ? df : -df);
    }
  return r;
}

/// Contraction i_X.
inline Form interior(const VectorField& x, const Form& w) {
  Form r(w.dim());
  for (const auto& [m, f] : w.components()) {
    int pos = 0;
    for (std::size_t i = 0; i <= w.dim(); ++i) {
      if (!(m & detail::bit(i))) continue;
      if (!x.c[i].is_zero()) {
        const FourierScalar p = x.c[i] * f;
        r.add(m & ~detail::bit(i), pos % 2 ? -p : p);
      }
      ++pos;
    }
  }
  return r;
}

inline Form lie_derivative(const VectorField& x, const Form& w) { return d(interior(x, w)) + interior(x, d(w)); }

/// Pullback along σ̃(x, θ) = (Ax + b, -θ).
inline Form pullback(const Form& w, const Affine& s) {
  const std::size_t n = w.dim();
  std::vector<Form> dx;
  for (std::size_t i = 0; i < n; ++i) {
    Form e(n);
    for (std::size_t j = 0; j < n; ++j)
      if (s.A[i][j] != 0) e.add(detail::bit(j), FourierScalar::constant(n, s.A[i][j]));
    dx.push_back(e);
  }
  dx.push_back(-Form::dtheta(n));
  Form r(n);
  for (const auto& [m, f] : w.components()) {
    Form term = Form::scalar(f.compose(s));
    for (std::size_t i = 0; i <= n; ++i)
      if (m & detail::bit(i)) term = wedge(term, dx[i]);
    r += term;
  }
  return r;
}

/// σ̃*X = (dσ̃)⁻¹ X∘σ̃ with dσ̃ = diag(A, -1) its own inverse.
inline VectorField pullback(const VectorField& x, const Affine& s) {
  const std::size_t n = x.dim();
  VectorField r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.A[i][j] != 0) r.c[i] += Gaussian(s.A[i][j]) * x.c[j].compose(s);
  r.c[n] = -x.c[n].compose(s);
  return r;
}

/// (ω + sign·σ̃*ω)/2: the invariant (sign = 1) or anti-invariant (sign = -1) part.
inline Form project(const Form& w, const Affine& s, int sign) {
  const Form p = pullback(w, s);
  return Gaussian(Rational(1, 2)) * (sign > 0 ? w + p : w - p);
}
inline VectorField project(const VectorField& x, const Affine& s, int sign) {
  const VectorField p = pullback(x, s);
  return FourierScalar::constant(x.dim(), Rational(1, 2)) * (sign > 0 ? x + p : x - p);
}
inline FourierScalar project(const FourierScalar& f, const Affine& s, int sign) {
  const FourierScalar p = f.compose(s);
  return Gaussian(Rational(1, 2)) * (sign > 0 ? f + p : f - p);
}

inline bool has_parity(const Form& w, const Affine& s, int sign) {
  const Form p = pullback(w, s);
  return sign > 0 ? p == w : p == -w;
}
inline bool has_parity(const VectorField& x, const Affine& s, int sign) {
  const VectorField p = pullback(x, s);
  return sign > 0 ? p == x : p + x == VectorField(x.dim());
}

/// Random real form with coefficients from random_scalar on the given masks.
inline Form random_form(std::mt19937_64& rng, std::size_t d, const std::vector<Mask>& masks, std::size_t pairs = 3,
                        long long max_freq = 3) {
  Form w(d);
  for (Mask m : masks) w.add(m, random_scalar(rng, d, pairs, max_freq));
  return w;
}

/// All masks of degree p on d + 1 coordinates (with_theta) or on the base only.
inline std::vector<Mask> masks_of_degree(std::size_t d, std::size_t p, bool with_theta) {
  std::vector<Mask> out;
  const std::size_t n = with_theta ? d + 1 : d;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == p) out.push_back(m);
  return out;
}

inline VectorField random_vector_field(std::mt19937_64& rng, std::size_t d, std::size_t pairs = 3, long long max_freq = 3) {
  VectorField x(d);
  for (auto& f : x.c) f = random_scalar(rng, d, pairs, max_freq);
  return x;
}

}  // namespace tdual::courant
