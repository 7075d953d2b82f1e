#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "tdual/simplicial/delta_complex.hpp"

namespace tdual::simplicial {

/// Rank-one local system ℤ_ξ given by ±1 signs on edges.
class LocalSystem {
 public:
  LocalSystem() = default;

  /// Validates the cocycle condition s(e01)·s(e12)·s(e02) = 1 on every triangle.
  LocalSystem(const DeltaComplex& base, std::vector<int> edge_sign) : signs_(std::move(edge_sign)) {
    if (signs_.size() != base.count(1))
      throw Error(ErrorCode::InvalidLocalSystem, "edge sign count does not match the number of edges");
    for (int s : signs_)
      if (s != 1 && s != -1) throw Error(ErrorCode::InvalidLocalSystem, "edge signs must be +1 or -1");
    for (std::size_t t = 0; t < base.count(2); ++t) {
      const auto& f = base.faces(2, t);
      if (signs_[f[0]] * signs_[f[1]] * signs_[f[2]] != 1)
        throw Error(ErrorCode::InvalidLocalSystem, "cocycle condition fails on triangle " + std::to_string(t));
    }
  }

  static LocalSystem trivial(const DeltaComplex& base) { return LocalSystem(base, std::vector<int>(base.count(1), 1)); }

  /// From a ℤ₂ 1-cochain (values mod 2).
  static LocalSystem from_z2(const DeltaComplex& base, const std::vector<int>& bits) {
    std::vector<int> s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) s[i] = (bits[i] % 2 == 0) ? 1 : -1;
    return LocalSystem(base, s);
  }

  std::size_t edge_count() const { return signs_.size(); }
  int sign(std::size_t edge) const { return signs_[edge]; }
  const std::vector<int>& signs() const { return signs_; }
  bool is_trivial() const {
    for (int s : signs_)
      if (s != 1) return false;
    return true;
  }
  /// ℤ₂ cochain with 1 where the sign is -1.
  std::vector<int> as_z2() const {
    std::vector<int> b(signs_.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = signs_[i] == 1 ? 0 : 1;
    return b;
  }

  /// Transport sign along the edge path between positions a < b of a simplex.
  int transport(const DeltaComplex& x, std::size_t k, std::size_t s, std::size_t a, std::size_t b) const {
    int w = 1;
    for (std::size_t i = a; i < b; ++i) w *= signs_[x.edge(k, s, i, i + 1)];
    return w;
  }

  friend LocalSystem operator*(const LocalSystem& a, const LocalSystem& b) {
    if (a.signs_.size() != b.signs_.size()) throw Error(ErrorCode::BaseMismatch, "local systems on different bases");
    LocalSystem c;
    c.signs_.resize(a.signs_.size());
    for (std::size_t i = 0; i < c.signs_.size(); ++i) c.signs_[i] = a.signs_[i] * b.signs_[i];
    return c;
  }

  friend bool operator==(const LocalSystem&, const LocalSystem&) = default;

 private:
  std::vector<int> signs_;
};

/// Vertex signs t with b(e) = t(v0)·a(e)·t(v1) on every edge, i.e. a
/// witness that [a] = [b] in H¹(X, ℤ₂).  Breadth-first over each component.
inline std::optional<std::vector<int>> gauge_between(const DeltaComplex& x, const LocalSystem& a, const LocalSystem& b) {
  const std::size_t n = x.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < x.count(1); ++e) {
    adj[x.vertices(1, e)[0]].push_back({e, x.vertices(1, e)[1]});
    adj[x.vertices(1, e)[1]].push_back({e, x.vertices(1, e)[0]});
  }
  std::vector<int> t(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (t[root] != 0) continue;
    t[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto [e, w] : adj[v]) {
        const int want = a.sign(e) * b.sign(e) * t[v];
        if (t[w] == 0) {
          t[w] = want;
          queue.push_back(w);
        }
      }
    }
  }
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const auto& vt = x.vertices(1, e);
    if (b.sign(e) != t[vt[0]] * a.sign(e) * t[vt[1]]) return std::nullopt;
  }
  return t;
}

inline bool same_class(const DeltaComplex& x, const LocalSystem& a, const LocalSystem& b) {
  return gauge_between(x, a, b).has_value();
}

}  // namespace tdual::simplicial
