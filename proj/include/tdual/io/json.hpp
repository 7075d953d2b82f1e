#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tdual/duality/tdual.hpp"

namespace tdual::io {

using json = nlohmann::ordered_json;
using bundle::BundleDescriptor;
using duality::FluxPair;
using exact::FGAbelianGroup;
using exact::Integer;
using exact::IntVector;
using simplicial::DeltaComplex;
using simplicial::LocalSystem;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace detail

// Integers that fit in 64 bits are numbers; larger ones are decimal strings.
inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      detail::fail("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  detail::fail("expected an integer, got " + j.dump());
}

inline json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline IntVector vector_from_json(const json& j) {
  if (!j.is_array()) detail::fail("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline json to_json(const FGAbelianGroup& g) {
  json t = json::array();
  for (const auto& o : g.torsion()) t.push_back(to_json(o));
  return {{"rank", g.free_rank()}, {"torsion", t}, {"text", g.to_string()}};
}

inline json to_json(const std::vector<FGAbelianGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(to_json(g));
  return a;
}

/// "faces" is written only where deletion of tuple entries does not already
/// determine it.
inline json to_json(const DeltaComplex& x) {
  json simplices = json::object();
  json faces = json::object();
  bool need_faces = false;
  try {
    std::vector<std::vector<simplicial::Tuple>> higher;
    for (int k = 1; k <= x.dimension(); ++k) {
      higher.emplace_back();
      for (std::size_t s = 0; s < x.count(static_cast<std::size_t>(k)); ++s)
        higher.back().push_back(x.vertices(static_cast<std::size_t>(k), s));
    }
    need_faces = !(DeltaComplex::from_tuples(x.vertex_count(), higher) == x);
  } catch (const Error&) {
    need_faces = true;
  }
  for (int k = 1; k <= x.dimension(); ++k) {
    const auto kk = static_cast<std::size_t>(k);
    json ts = json::array(), fs = json::array();
    for (std::size_t s = 0; s < x.count(kk); ++s) {
      ts.push_back(x.vertices(kk, s));
      fs.push_back(x.faces(kk, s));
    }
    simplices[std::to_string(k)] = ts;
    faces[std::to_string(k)] = fs;
  }
  json j = {{"vertices", x.vertex_count()}, {"simplices", simplices}};
  if (need_faces) j["faces"] = faces;
  return j;
}

inline DeltaComplex complex_from_json(const json& j) {
  const auto& v = detail::field(j, "vertices");
  if (!v.is_number_unsigned()) detail::fail("'vertices' must be a non-negative integer");
  const auto& simplices = detail::field(j, "simplices");
  if (!simplices.is_object()) detail::fail("'simplices' must be an object keyed by dimension");
  std::size_t top = 0;
  for (const auto& [key, _] : simplices.items()) {
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (const std::exception&) {
      detail::fail("bad dimension key '" + key + "'");
    }
    if (k == 0) detail::fail("dimension keys start at 1");
    top = std::max(top, k);
  }
  std::vector<std::vector<simplicial::Tuple>> higher(top);
  std::vector<std::vector<std::vector<std::size_t>>> faces(top);
  const bool explicit_faces = j.contains("faces");
  try {
    for (std::size_t k = 1; k <= top; ++k) {
      const auto key = std::to_string(k);
      if (simplices.contains(key)) higher[k - 1] = simplices.at(key).get<std::vector<simplicial::Tuple>>();
      if (explicit_faces && j.at("faces").contains(key))
        faces[k - 1] = j.at("faces").at(key).get<std::vector<std::vector<std::size_t>>>();
    }
  } catch (const nlohmann::json::exception& e) {
    detail::fail(std::string("malformed simplex list: ") + e.what());
  }
  const auto n = v.get<std::size_t>();
  return explicit_faces ? DeltaComplex::from_faces(n, higher, faces) : DeltaComplex::from_tuples(n, higher);
}

inline json to_json(const LocalSystem& l) { return {{"edge_signs", l.signs()}}; }

inline LocalSystem local_system_from_json(const json& j, const DeltaComplex& base) {
  const auto& s = detail::field(j, "edge_signs");
  if (!s.is_array()) detail::fail("'edge_signs' must be an array");
  std::vector<int> signs;
  for (const auto& x : s) {
    if (!x.is_number_integer()) detail::fail("edge signs must be integers");
    signs.push_back(x.get<int>());
  }
  return LocalSystem(base, signs);
}

inline json to_json(const BundleDescriptor& b) {
  return {{"base", to_json(b.base)}, {"xi", to_json(b.xi)}, {"euler", {{"values", to_json(b.euler)}}}};
}

inline BundleDescriptor bundle_from_json(const json& j) {
  DeltaComplex base = complex_from_json(detail::field(j, "base"));
  LocalSystem xi = local_system_from_json(detail::field(j, "xi"), base);
  IntVector e = vector_from_json(detail::field(detail::field(j, "euler"), "values"));
  return BundleDescriptor(std::move(base), std::move(xi), std::move(e));
}

inline json to_json(const FluxPair& p) {
  return {{"bundle", to_json(p.bundle)}, {"H3", to_json(p.H3)}, {"Fhat", to_json(p.Fhat)}};
}

inline FluxPair pair_from_json(const json& j) {
  BundleDescriptor b = bundle_from_json(detail::field(j, "bundle"));
  return FluxPair(std::move(b), vector_from_json(detail::field(j, "H3")), vector_from_json(detail::field(j, "Fhat")));
}

/// The dual pair plus the correspondence witness: p*h − p̂*ĥ = δ_F B with the
/// absorbed shift a already added to the dual H₃.
inline json to_json(const duality::TDualResult& r) {
  json j = to_json(r.dual);
  j["certificate"] = {{"B", to_json(r.B)}, {"a", to_json(r.a)}};
  return j;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::fail(e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace tdual::io
