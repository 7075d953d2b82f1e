#pragma once

#include <string>
#include <vector>

#include "tdual/simplicial/local_system.hpp"

namespace tdual::catalog {

using simplicial::DeltaComplex;
using simplicial::LocalSystem;

/// A named base space together with labelled edges whose ℤ₂-duals generate
/// H¹(X, ℤ₂).  Classes are specified by bits on these edges.
struct Space {
  std::string id;
  DeltaComplex complex;
  std::vector<std::string> letter_names;
  std::vector<std::size_t> letter_edges;
  std::vector<std::size_t> anchor_edges;  // edges pinned to sign +1 when extending

  /// Local system with sign (-1)^{bits[i]} on letter i, extended over the
  /// remaining edges through the triangle cocycle condition.
  LocalSystem local_system(const std::vector<int>& bits) const {
    if (bits.size() != letter_edges.size()) throw Error(ErrorCode::InvalidXi, "expected one bit per letter of " + id);
    std::vector<int> s(complex.count(1), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) s[letter_edges[i]] = (bits[i] % 2 == 0) ? 1 : -1;
    for (std::size_t e : anchor_edges) s[e] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t t = 0; t < complex.count(2); ++t) {
        const auto& f = complex.faces(2, t);
        int known = 0, product = 1;
        std::size_t missing = 0;
        for (std::size_t e : f) {
          if (s[e] != 0) {
            ++known;
            product *= s[e];
          } else {
            missing = e;
          }
        }
        if (known == 2) {
          s[missing] = product;
          changed = true;
        }
      }
    }
    for (int& v : s)
      if (v == 0) v = 1;
    return LocalSystem(complex, s);
  }

  LocalSystem trivial() const { return LocalSystem::trivial(complex); }
};

inline Space circle() {
  Space s;
  s.id = "circle";
  s.complex = DeltaComplex::from_faces(1, {{{0, 0}}}, {{{0, 0}}});
  s.letter_names = {"a"};
  s.letter_edges = {0};
  return s;
}

/// One vertex, edges a (horizontal), b (vertical), c (diagonal), two triangles.
inline Space torus() {
  Space s;
  s.id = "torus";
  const std::vector<simplicial::Tuple> e(3, {0, 0});
  const std::vector<simplicial::Tuple> t(2, {0, 0, 0});
  s.complex = DeltaComplex::from_faces(1, {e, t}, {{{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 2, 1}}});
  s.letter_names = {"a", "b"};
  s.letter_edges = {0, 1};
  return s;
}

/// Square with the top edge reversed: the vertical loop b reverses orientation.
inline Space klein_bottle() {
  Space s;
  s.id = "klein_bottle";
  const std::vector<simplicial::Tuple> e(3, {0, 0});
  const std::vector<simplicial::Tuple> t(2, {0, 0, 0});
  s.complex = DeltaComplex::from_faces(1, {e, t}, {{{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 1, 2}}});
  s.letter_names = {"a", "b"};
  s.letter_edges = {0, 1};
  return s;
}

namespace detail {

struct Letter {
  std::size_t index;
  int exponent;
};

// Cone on a polygon whose boundary word uses each letter twice.  Vertex 0 is
// the common corner, vertex 1 the cone point.  Edges: letters first, then one
// spoke per corner.  Triangle i joins the cone point to side i.
inline Space polygon_cone(std::string id, std::size_t letters, const std::vector<Letter>& word,
                          std::vector<std::string> names) {
  const std::size_t n = word.size();
  std::vector<simplicial::Tuple> edges;
  std::vector<std::vector<std::size_t>> edge_faces;
  for (std::size_t i = 0; i < letters; ++i) {
    edges.push_back({0, 0});
    edge_faces.push_back({0, 0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({1, 0});
    edge_faces.push_back({0, 1});
  }
  auto spoke = [&](std::size_t corner) { return letters + corner % n; };
  std::vector<simplicial::Tuple> tris;
  std::vector<std::vector<std::size_t>> tri_faces;
  for (std::size_t i = 0; i < n; ++i) {
    tris.push_back({1, 0, 0});
    // (C, P_i, P_{i+1}) for a forward letter, (C, P_{i+1}, P_i) for a reversed one.
    if (word[i].exponent > 0)
      tri_faces.push_back({word[i].index, spoke(i + 1), spoke(i)});
    else
      tri_faces.push_back({word[i].index, spoke(i), spoke(i + 1)});
  }
  Space s;
  s.id = std::move(id);
  s.complex = DeltaComplex::from_faces(2, {edges, tris}, {edge_faces, tri_faces});
  s.letter_names = std::move(names);
  for (std::size_t i = 0; i < letters; ++i) s.letter_edges.push_back(i);
  s.anchor_edges = {letters};
  return s;
}

}  // namespace detail

/// Closed orientable surface of genus g ≥ 1 from a₁b₁a₁⁻¹b₁⁻¹…a_gb_ga_g⁻¹b_g⁻¹.
inline Space sigma(std::size_t g) {
  if (g == 0) throw Error(ErrorCode::InvalidComplex, "sigma(g) requires g >= 1");
  std::vector<detail::Letter> word;
  std::vector<std::string> names;
  for (std::size_t h = 0; h < g; ++h) {
    const std::size_t a = 2 * h, b = 2 * h + 1;
    word.insert(word.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    names.push_back("a" + std::to_string(h + 1));
    names.push_back("b" + std::to_string(h + 1));
  }
  return detail::polygon_cone("sigma(" + std::to_string(g) + ")", 2 * g, word, names);
}

/// Connected sum of n ≥ 1 projective planes from a₁a₁…a_na_n.
inline Space crosscap_sum(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidComplex, "crosscap_sum(n) requires n >= 1");
  std::vector<detail::Letter> word;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    word.insert(word.end(), {{i, 1}, {i, 1}});
    names.push_back("a" + std::to_string(i + 1));
  }
  return detail::polygon_cone("crosscap_sum(" + std::to_string(n) + ")", n, word, names);
}

/// Cube with opposite faces identified, cut into six tetrahedra.  Edges are the
/// nonempty subsets S of {x, y, z} (index mask(S) - 1), running from 0 to the
/// vertex Σ_{i∈S} e_i; simplices are chains of subsets.
inline Space three_torus() {
  auto edge = [](unsigned mask) { return static_cast<std::size_t>(mask - 1); };
  std::vector<simplicial::Tuple> edges(7, {0, 0});
  std::vector<std::vector<std::size_t>> edge_faces(7, {0, 0});
  std::vector<simplicial::Tuple> tris;
  std::vector<std::vector<std::size_t>> tri_faces;
  std::vector<std::pair<unsigned, unsigned>> chains;
  for (unsigned b = 1; b < 8; ++b)
    for (unsigned a = 1; a < b; ++a)
      if ((a & b) == a) {
        chains.push_back({a, b});
        tris.push_back({0, 0, 0});
        tri_faces.push_back({edge(b & ~a), edge(b), edge(a)});
      }
  auto tri = [&](unsigned a, unsigned b) {
    for (std::size_t i = 0; i < chains.size(); ++i)
      if (chains[i] == std::make_pair(a, b)) return i;
    throw Error(ErrorCode::InvalidComplex, "three_torus: missing triangle");
  };
  std::vector<simplicial::Tuple> tets;
  std::vector<std::vector<std::size_t>> tet_faces;
  for (unsigned a : {1u, 2u, 4u})
    for (unsigned b : {3u, 5u, 6u})
      if ((a & b) == a) {
        tets.push_back({0, 0, 0, 0});
        tet_faces.push_back({tri(b & ~a, 7u & ~a), tri(b, 7u), tri(a, 7u), tri(a, b)});
      }
  Space s;
  s.id = "three_torus";
  s.complex = DeltaComplex::from_faces(1, {edges, tris, tets}, {edge_faces, tri_faces, tet_faces});
  s.letter_names = {"x", "y", "z"};
  s.letter_edges = {edge(1), edge(2), edge(4)};
  return s;
}

/// Default classes: ξ dual to a₁ on Σ_g; w₁ (all crosscaps) on M_n; the
/// orientation-reversing loop b on the Klein bottle; the generator on S¹.
inline std::vector<int> default_xi_bits(const Space& s) {
  std::vector<int> bits(s.letter_edges.size(), 0);
  if (s.id == "klein_bottle") {
    bits[1] = 1;
  } else if (s.id.rfind("crosscap_sum", 0) == 0) {
    for (auto& b : bits) b = 1;
  } else if (!bits.empty()) {
    bits[0] = 1;
  }
  return bits;
}

/// Orientation character w₁ of the surface.
inline std::vector<int> orientation_bits(const Space& s) {
  std::vector<int> bits(s.letter_edges.size(), 0);
  if (s.id == "klein_bottle") bits[1] = 1;
  if (s.id.rfind("crosscap_sum", 0) == 0)
    for (auto& b : bits) b = 1;
  return bits;
}

inline Space by_id(const std::string& id, std::size_t param = 1) {
  if (id == "circle") return circle();
  if (id == "torus") return torus();
  if (id == "klein_bottle") return klein_bottle();
  if (id == "sigma") return sigma(param);
  if (id == "crosscap_sum") return crosscap_sum(param);
  if (id == "three_torus") return three_torus();
  throw Error(ErrorCode::InvalidComplex, "unknown catalog space '" + id + "'");
}

}  // namespace tdual::catalog
