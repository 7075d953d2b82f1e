#pragma once

#include "tdual/courant/checks.hpp"
#include "tdual/io/json.hpp"

namespace tdual::io {

using courant::EquivariantContext;
using courant::Form;
using courant::FourierScalar;
using courant::Gaussian;

namespace detail {

inline courant::Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return courant::Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return courant::Rational(j.get<std::string>());
    } catch (const std::exception&) {
      fail("bad rational '" + j.get<std::string>() + "'");
    }
  }
  fail("expected a rational, got " + j.dump());
}

inline json rational_to_json(const courant::Rational& q) {
  if (denominator(q) == 1) {
    const auto n = numerator(q);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return static_cast<long long>(n);
  }
  return q.str();
}

}  // namespace detail

/// [{"basis": [i, ...], "terms": [{"k": [...], "re": q, "im": q}, ...]}, ...]
/// with basis indices 0..d-1 for x₁..x_d and d for θ.
inline json to_json(const Form& w) {
  json out = json::array();
  for (const auto& [m, f] : w.components()) {
    json basis = json::array();
    for (std::size_t i = 0; i <= w.dim(); ++i)
      if (m & courant::detail::bit(i)) basis.push_back(i);
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
      terms.push_back({{"k", k}, {"re", detail::rational_to_json(c.re)}, {"im", detail::rational_to_json(c.im)}});
    out.push_back({{"basis", basis}, {"terms", terms}});
  }
  return out;
}

inline Form form_from_json(const json& j, std::size_t d) {
  if (!j.is_array()) detail::fail("a form is a list of components");
  Form w(d);
  for (const auto& comp : j) {
    const auto& basis = detail::field(comp, "basis");
    const auto& terms = detail::field(comp, "terms");
    if (!basis.is_array() || !terms.is_array()) detail::fail("form component needs 'basis' and 'terms' arrays");
    std::vector<std::size_t> idx;
    for (const auto& i : basis) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() > d) detail::fail("basis index out of range");
      idx.push_back(i.get<std::size_t>());
    }
    FourierScalar f(d);
    for (const auto& t : terms) {
      const auto& k = detail::field(t, "k");
      if (!k.is_array() || k.size() != d) detail::fail("frequency must have one entry per base coordinate");
      courant::Freq freq;
      for (const auto& v : k) {
        if (!v.is_number_integer()) detail::fail("frequencies are integers");
        freq.push_back(v.get<long long>());
      }
      const auto re = t.contains("re") ? detail::rational_from_json(t.at("re")) : courant::Rational(0);
      const auto im = t.contains("im") ? detail::rational_from_json(t.at("im")) : courant::Rational(0);
      f.add_term(freq, Gaussian(re, im));
    }
    w += Form::basis(d, idx, f);
  }
  return w;
}

inline json to_json(const EquivariantContext& c) {
  json b = json::array();
  for (auto v : c.deck.twice_b) b.push_back(detail::rational_to_json(courant::Rational(v, 2)));
  return {{"name", c.name}, {"dim", c.dim()}, {"deck", {{"A", c.deck.A}, {"b", b}}}, {"a", to_json(c.a)},
          {"Fhat", to_json(c.Fhat)}, {"H3", to_json(c.H3)}, {"ahat", to_json(c.ahat)}};
}

/// "ahat" is optional; without it the anti-invariant primitive of F̂ is used.
inline EquivariantContext context_from_json(const json& j) {
  const auto& dj = detail::field(j, "dim");
  if (!dj.is_number_unsigned()) detail::fail("'dim' must be a positive integer");
  const auto d = dj.get<std::size_t>();
  if (d == 0 || d > 3) throw Error(ErrorCode::InvalidContext, "base torus dimension must be 1, 2 or 3");
  const auto& deck = detail::field(j, "deck");
  courant::Affine s;
  try {
    s.A = detail::field(deck, "A").get<std::vector<std::vector<long long>>>();
  } catch (const nlohmann::json::exception& e) {
    detail::fail(std::string("deck matrix: ") + e.what());
  }
  if (s.A.size() != d) throw Error(ErrorCode::InvalidContext, "deck matrix size differs from dim");
  const auto& b = detail::field(deck, "b");
  if (!b.is_array() || b.size() != d) throw Error(ErrorCode::InvalidContext, "deck translation size differs from dim");
  for (const auto& v : b) {
    const courant::Rational twice = detail::rational_from_json(v) * 2;
    if (denominator(twice) != 1) throw Error(ErrorCode::InvalidContext, "2b must be integral");
    s.twice_b.push_back(static_cast<long long>(numerator(twice)));
  }
  s.validate();
  auto form = [&](const char* key) { return j.contains(key) ? form_from_json(j.at(key), d) : Form(d); };
  std::optional<Form> ahat;
  if (j.contains("ahat")) ahat = form_from_json(j.at("ahat"), d);
  return EquivariantContext::make(j.value("name", std::string("context")), s, form("a"), form("Fhat"), form("H3"), ahat);
}

}  // namespace tdual::io
