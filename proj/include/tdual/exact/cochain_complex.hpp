#pragma once

#include <vector>

#include "tdual/exact/homology.hpp"

namespace tdual::exact {

/// Coefficient ring for group computations: ℤ, ℤ/m or ℚ.
struct Coefficients {
  enum class Kind { Integers, Modular, Rationals };
  Kind kind = Kind::Integers;
  Integer modulus = 0;

  static Coefficients integers() { return {}; }
  static Coefficients modular(const Integer& m) {
    if (m < 2) throw Error(ErrorCode::InvalidComplex, "modulus must be at least 2");
    return {Kind::Modular, m};
  }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Finite cochain complex C^0 → C^1 → … → C^N over ℤ.  d[k] maps C^k to
/// C^{k+1}; the last map is omitted.
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> d;

  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }

  /// d^{k-1}: C^{k-1} → C^k (zero-width at k = 0).
  IntMatrix d_in(std::size_t k) const { return k == 0 ? IntMatrix(dims[0], 0) : d[k - 1]; }
  /// d^k: C^k → C^{k+1} (zero-height at the top).
  IntMatrix d_out(std::size_t k) const { return k < d.size() ? d[k] : IntMatrix(0, dims[k]); }

  /// Throws CompositionNotZero unless d^{k+1} d^k = 0 for all k.
  void check() const {
    if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
      throw Error(ErrorCode::InvalidComplex, "differential count does not match degrees");
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k].rows() != dims[k + 1] || d[k].cols() != dims[k])
        throw Error(ErrorCode::InvalidComplex, "differential has wrong shape");
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
      if (!(d[k + 1] * d[k]).is_zero()) throw Error(ErrorCode::CompositionNotZero, "d^2 != 0");
  }

  /// The dual chain complex, reindexed so degree k still sits at index k.
  /// Its "d[k]" is the boundary C_{k+1} → C_k stored as the transpose.
  CochainComplex transposed() const {
    CochainComplex t;
    t.dims = dims;
    for (const auto& m : d) t.d.push_back(m.transpose());
    return t;
  }
};

/// Cohomology of one degree with generators (integers only).
inline HomologyGroup cohomology_at(const CochainComplex& c, std::size_t k) {
  return homology_at(c.d_in(k), c.d_out(k));
}

inline FGAbelianGroup group_at(const IntMatrix& d_in, const IntMatrix& d_out, const Coefficients& r) {
  switch (r.kind) {
    case Coefficients::Kind::Integers: return homology_at(d_in, d_out).group();
    case Coefficients::Kind::Modular: return homology_mod(d_in, d_out, r.modulus);
    case Coefficients::Kind::Rationals: return FGAbelianGroup::free(rational_betti(d_in, d_out));
  }
  return {};
}

/// H^0 .. H^N; over ℚ the result is free of the rational dimension.
inline std::vector<FGAbelianGroup> cohomology_groups(const CochainComplex& c,
                                                     const Coefficients& r = Coefficients::integers()) {
  std::vector<FGAbelianGroup> out;
  for (std::size_t k = 0; k < c.dims.size(); ++k) out.push_back(group_at(c.d_in(k), c.d_out(k), r));
  return out;
}

/// H_0 .. H_N of the dual chain complex (boundaries are the transposed coboundaries).
inline std::vector<FGAbelianGroup> homology_groups(const CochainComplex& c,
                                                   const Coefficients& r = Coefficients::integers()) {
  std::vector<FGAbelianGroup> out;
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const IntMatrix boundary_in = k < c.d.size() ? c.d[k].transpose() : IntMatrix(c.dims[k], 0);
    const IntMatrix boundary_out = k == 0 ? IntMatrix(0, c.dims[0]) : c.d[k - 1].transpose();
    out.push_back(group_at(boundary_in, boundary_out, r));
  }
  return out;
}

}  // namespace tdual::exact
