#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdual/error.hpp"

namespace tdual::simplicial {

using Tuple = std::vector<std::size_t>;

/// Ordered Δ-complex.  Each k-simplex carries its vertex tuple and the indices
/// of its k+1 faces in dimension k-1; face i deletes position i.
class DeltaComplex {
 public:
  DeltaComplex() = default;

  /// Faces derived by tuple deletion.  Throws InvalidComplex when a face is
  /// missing or when several simplices share the deleted tuple.
  static DeltaComplex from_tuples(std::size_t vertex_count, const std::vector<std::vector<Tuple>>& higher) {
    std::vector<std::vector<std::vector<std::size_t>>> faces(higher.size());
    for (std::size_t k = 0; k < higher.size(); ++k) {
      std::map<Tuple, std::vector<std::size_t>> lookup;
      if (k == 0) {
        for (std::size_t v = 0; v < vertex_count; ++v) lookup[{v}].push_back(v);
      } else {
        for (std::size_t s = 0; s < higher[k - 1].size(); ++s) lookup[higher[k - 1][s]].push_back(s);
      }
      for (const Tuple& t : higher[k]) {
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < t.size(); ++i) {
          Tuple del = t;
          del.erase(del.begin() + static_cast<std::ptrdiff_t>(i));
          auto it = lookup.find(del);
          if (it == lookup.end()) throw Error(ErrorCode::InvalidComplex, "face " + describe(del) + " is not registered");
          if (it->second.size() > 1)
            throw Error(ErrorCode::InvalidComplex, "face " + describe(del) + " is ambiguous; explicit faces required");
          f.push_back(it->second.front());
        }
        faces[k].push_back(std::move(f));
      }
    }
    return from_faces(vertex_count, higher, faces);
  }

  /// `higher[k]` lists the (k+1)-simplices; `faces[k][s]` their face indices.
  static DeltaComplex from_faces(std::size_t vertex_count, const std::vector<std::vector<Tuple>>& higher,
                                 const std::vector<std::vector<std::vector<std::size_t>>>& faces) {
    if (faces.size() != higher.size()) throw Error(ErrorCode::InvalidComplex, "face table size mismatch");
    DeltaComplex x;
    x.tuples_.emplace_back();
    x.faces_.emplace_back(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) x.tuples_[0].push_back({v});
    for (std::size_t k = 0; k < higher.size(); ++k) {
      if (faces[k].size() != higher[k].size()) throw Error(ErrorCode::InvalidComplex, "face table size mismatch");
      x.tuples_.push_back(higher[k]);
      x.faces_.push_back(faces[k]);
    }
    while (x.tuples_.size() > 1 && x.tuples_.back().empty()) {
      x.tuples_.pop_back();
      x.faces_.pop_back();
    }
    x.validate();
    return x;
  }

  int dimension() const { return vertex_count() == 0 ? -1 : static_cast<int>(tuples_.size()) - 1; }
  std::size_t vertex_count() const { return tuples_.empty() ? 0 : tuples_[0].size(); }
  std::size_t count(std::size_t k) const { return k < tuples_.size() ? tuples_[k].size() : 0; }
  const Tuple& vertices(std::size_t k, std::size_t s) const { return tuples_[k][s]; }
  std::size_t face(std::size_t k, std::size_t s, std::size_t i) const { return faces_[k][s][i]; }
  const std::vector<std::size_t>& faces(std::size_t k, std::size_t s) const { return faces_[k][s]; }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < tuples_.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(count(k));
    return chi;
  }

  /// Index of the sub-simplex of σ (dimension k) spanned by the given
  /// increasing positions.
  std::size_t sub_simplex(std::size_t k, std::size_t s, const std::vector<std::size_t>& positions) const {
    std::size_t dim = k, cur = s;
    std::size_t p = positions.size();
    for (std::size_t i = k + 1; i-- > 0;) {
      if (p > 0 && positions[p - 1] == i) {
        --p;
        continue;
      }
      cur = faces_[dim][cur][i];
      --dim;
    }
    return cur;
  }

  /// Edge from position a to position b (a < b) of a k-simplex.
  std::size_t edge(std::size_t k, std::size_t s, std::size_t a, std::size_t b) const { return sub_simplex(k, s, {a, b}); }

  /// Front face on positions 0..p.
  std::size_t front(std::size_t k, std::size_t s, std::size_t p) const {
    std::vector<std::size_t> pos(p + 1);
    for (std::size_t i = 0; i <= p; ++i) pos[i] = i;
    return sub_simplex(k, s, pos);
  }

  /// Back face on positions p..k.
  std::size_t back(std::size_t k, std::size_t s, std::size_t p) const {
    std::vector<std::size_t> pos;
    for (std::size_t i = p; i <= k; ++i) pos.push_back(i);
    return sub_simplex(k, s, pos);
  }

  /// Checks face tuples and the simplicial identities d_i d_j = d_{j-1} d_i (i < j).
  void validate() const {
    for (std::size_t k = 1; k < tuples_.size(); ++k) {
      for (std::size_t s = 0; s < tuples_[k].size(); ++s) {
        const Tuple& t = tuples_[k][s];
        if (t.size() != k + 1 || faces_[k][s].size() != k + 1)
          throw Error(ErrorCode::InvalidComplex, "simplex " + describe(t) + " has the wrong length");
        for (std::size_t v : t)
          if (v >= vertex_count()) throw Error(ErrorCode::InvalidComplex, "vertex out of range in " + describe(t));
        for (std::size_t i = 0; i <= k; ++i) {
          const std::size_t f = faces_[k][s][i];
          if (f >= tuples_[k - 1].size()) throw Error(ErrorCode::InvalidComplex, "face index out of range");
          Tuple del = t;
          del.erase(del.begin() + static_cast<std::ptrdiff_t>(i));
          if (tuples_[k - 1][f] != del)
            throw Error(ErrorCode::InvalidComplex, "face " + std::to_string(i) + " of " + describe(t) + " has tuple " +
                                                       describe(tuples_[k - 1][f]));
        }
        if (k < 2) continue;
        for (std::size_t j = 1; j <= k; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (faces_[k - 1][faces_[k][s][j]][i] != faces_[k - 1][faces_[k][s][i]][j - 1])
              throw Error(ErrorCode::InvalidComplex, "face identity fails on " + describe(t));
      }
    }
  }

  friend bool operator==(const DeltaComplex&, const DeltaComplex&) = default;

  static std::string describe(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  }

 private:
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
};

}  // namespace tdual::simplicial
