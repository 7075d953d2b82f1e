#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "tdual/error.hpp"

namespace tdual::courant {

// GMP rationals: the symbolic suites are dominated by small-rational arithmetic.
using Rational = boost::multiprecision::mpq_rational;
using Freq = std::vector<long long>;

/// p + q·i with p, q rational.
struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    os << g.re;
    if (g.im != 0) os << (g.im > 0 ? "+" : "-") << (g.im > 0 ? g.im : Rational(-g.im)) << "i";
    return os;
  }
};

inline const Gaussian kI{0, 1};

/// x ↦ Ax + b on ℝ^d with A² = I and 2b ∈ ℤ^d, so the deck phases are ±1.
struct Affine {
  std::vector<std::vector<long long>> A;
  std::vector<long long> twice_b;

  std::size_t dim() const { return A.size(); }

  static Affine identity(std::size_t d) {
    Affine f;
    f.A.assign(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) f.A[i][i] = 1;
    f.twice_b.assign(d, 0);
    return f;
  }

  void validate() const {
    const std::size_t d = dim();
    if (twice_b.size() != d) throw Error(ErrorCode::InvalidContext, "deck translation has the wrong length");
    for (const auto& row : A)
      if (row.size() != d) throw Error(ErrorCode::InvalidContext, "deck matrix is not square");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        long long s = 0;
        for (std::size_t k = 0; k < d; ++k) s += A[i][k] * A[k][j];
        if (s != (i == j ? 1 : 0)) throw Error(ErrorCode::InvalidContext, "deck matrix does not square to the identity");
      }
    // σ² = id on the torus needs (A + I)b ∈ ℤ^d.
    for (std::size_t i = 0; i < d; ++i) {
      long long s = twice_b[i];
      for (std::size_t k = 0; k < d; ++k) s += A[i][k] * twice_b[k];
      if (s % 2 != 0) throw Error(ErrorCode::InvalidContext, "deck map is not an involution of the torus");
    }
  }
};

/// Real trigonometric polynomial Σ c_k e^{i k·x} on the d-torus with
/// Gaussian-rational coefficients; ∂ⱼ multiplies the k-term by i·kⱼ.
/// Frequencies are stored packed, 16 bits per coordinate, d ≤ 4.
class FourierScalar {
 public:
  using Key = std::uint64_t;
  static constexpr std::size_t kMaxDim = 4;
  static constexpr long long kBias = 1 << 15;

  FourierScalar() = default;
  explicit FourierScalar(std::size_t d) : d_(d) {
    if (d > kMaxDim) throw Error(ErrorCode::InvalidContext, "torus dimension above 4");
  }

  static FourierScalar constant(std::size_t d, const Rational& c) {
    FourierScalar f(d);
    f.add_term(Freq(d, 0), Gaussian(c));
    return f;
  }
  static FourierScalar mode(const Freq& k, const Gaussian& c) {
    FourierScalar f(k.size());
    f.add_term(k, c);
    return f;
  }
  static FourierScalar cos(const Freq& k, const Rational& c = 1) {
    return mode(k, Gaussian(c / 2)) + mode(negate(k), Gaussian(c / 2));
  }
  static FourierScalar sin(const Freq& k, const Rational& c = 1) {
    return mode(k, Gaussian(0, -c / 2)) + mode(negate(k), Gaussian(0, c / 2));
  }

  std::size_t dim() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// (frequency, coefficient) pairs in key order.
  std::vector<std::pair<Freq, Gaussian>> terms() const {
    std::vector<std::pair<Freq, Gaussian>> out;
    for (const auto& [k, c] : terms_) out.emplace_back(decode(k), c);
    return out;
  }

  Gaussian coefficient(const Freq& k) const {
    auto it = terms_.find(encode(k));
    return it == terms_.end() ? Gaussian{} : it->second;
  }
  Gaussian mean() const { return coefficient(Freq(d_, 0)); }

  /// Coefficient at -k is the conjugate of the one at k.
  bool is_real() const {
    for (const auto& [k, c] : terms_) {
      auto it = terms_.find(negate_key(k));
      if (it == terms_.end() || !(it->second == c.conj())) return false;
    }
    return true;
  }

  void add_term(const Freq& k, const Gaussian& c) {
    if (k.size() != d_) throw Error(ErrorCode::InvalidContext, "frequency of the wrong dimension");
    add_key(encode(k), c);
  }

  friend FourierScalar operator+(FourierScalar a, const FourierScalar& b) {
    a.check(b);
    for (const auto& [k, c] : b.terms_) a.add_key(k, c);
    return a;
  }
  friend FourierScalar operator-(const FourierScalar& a) {
    FourierScalar r(a.d_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
  }
  friend FourierScalar operator-(const FourierScalar& a, const FourierScalar& b) { return a + (-b); }
  friend FourierScalar operator*(const FourierScalar& a, const FourierScalar& b) {
    a.check(b);
    FourierScalar r(a.d_);
    for (const auto& [k1, c1] : a.terms_)
      for (const auto& [k2, c2] : b.terms_) r.add_key(a.add_keys(k1, k2), c1 * c2);
    return r;
  }
  friend FourierScalar operator*(const Gaussian& s, const FourierScalar& a) {
    FourierScalar r(a.d_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.add_key(k, s * c);
    return r;
  }
  FourierScalar& operator+=(const FourierScalar& b) {
    check(b);
    for (const auto& [k, c] : b.terms_) add_key(k, c);
    return *this;
  }
  FourierScalar& operator-=(const FourierScalar& b) {
    check(b);
    for (const auto& [k, c] : b.terms_) add_key(k, -c);
    return *this;
  }

  friend bool operator==(const FourierScalar& a, const FourierScalar& b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }

  FourierScalar derivative(std::size_t j) const {
    FourierScalar r(d_);
    if (j >= d_) return r;  // the fibre coordinate: coefficients never depend on it
    for (const auto& [k, c] : terms_) {
      const long long kj = lane(k, j);
      if (kj != 0) r.terms_.emplace_hint(r.terms_.end(), k, Gaussian(-c.im * kj, c.re * kj));
    }
    return r;
  }

  /// f ∘ (x ↦ Ax + b):  e^{ik·(Ax+b)} = (-1)^{k·2b} e^{i(Aᵀk)·x}.
  FourierScalar compose(const Affine& s) const {
    if (s.dim() != d_) throw Error(ErrorCode::InvalidContext, "deck map of the wrong dimension");
    FourierScalar r(d_);
    for (const auto& [key, c] : terms_) {
      const Freq k = decode(key);
      Freq kk(d_, 0);
      long long phase = 0;
      for (std::size_t j = 0; j < d_; ++j) {
        for (std::size_t i = 0; i < d_; ++i) kk[j] += s.A[i][j] * k[i];
        phase += k[j] * s.twice_b[j];
      }
      r.add_key(encode(kk), phase % 2 == 0 ? c : -c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms()) {
      os << (first ? "" : " + ") << "(" << c << ")e[";
      for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
      os << "]";
      first = false;
    }
    return os.str();
  }

  static Freq negate(Freq k) {
    for (auto& v : k) v = -v;
    return k;
  }

 private:
  void check(const FourierScalar& b) const {
    if (d_ != b.d_) throw Error(ErrorCode::InvalidContext, "scalars on tori of different dimension");
  }

  static long long lane(Key k, std::size_t j) { return static_cast<long long>((k >> (16 * j)) & 0xffff) - kBias; }

  Key encode(const Freq& k) const {
    Key key = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] <= -kBias || k[j] >= kBias) throw Error(ErrorCode::InternalObstruction, "frequency out of range");
      key |= static_cast<Key>(k[j] + kBias) << (16 * j);
    }
    return key;
  }
  Freq decode(Key key) const {
    Freq k(d_);
    for (std::size_t j = 0; j < d_; ++j) k[j] = lane(key, j);
    return k;
  }
  Key add_keys(Key a, Key b) const {
    Key key = 0;
    for (std::size_t j = 0; j < d_; ++j) {
      const long long v = lane(a, j) + lane(b, j);
      if (v <= -kBias || v >= kBias) throw Error(ErrorCode::InternalObstruction, "frequency out of range");
      key |= static_cast<Key>(v + kBias) << (16 * j);
    }
    return key;
  }
  Key negate_key(Key a) const {
    Key key = 0;
    for (std::size_t j = 0; j < d_; ++j) key |= static_cast<Key>(kBias - lane(a, j)) << (16 * j);
    return key;
  }

  void add_key(Key k, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::size_t d_ = 0;
  std::map<Key, Gaussian> terms_;
};

/// Random real scalar: `pairs` modes ±k with |kⱼ| ≤ max_freq and small integer
/// coefficients, plus a constant.
inline FourierScalar random_scalar(std::mt19937_64& rng, std::size_t d, std::size_t pairs = 3, long long max_freq = 3,
                                   long long max_coef = 3) {
  std::uniform_int_distribution<long long> freq(-max_freq, max_freq), coef(-max_coef, max_coef);
  FourierScalar f = FourierScalar::constant(d, coef(rng));
  for (std::size_t p = 0; p < pairs; ++p) {
    Freq k(d);
    for (auto& v : k) v = freq(rng);
    const Gaussian c(coef(rng), coef(rng));
    if (k == Freq(d, 0)) {
      f.add_term(k, Gaussian(c.re));
    } else {
      f.add_term(k, c);
      f.add_term(FourierScalar::negate(k), c.conj());
    }
  }
  return f;
}

}  // namespace tdual::courant
