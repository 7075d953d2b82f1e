#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdual/exact/abelian_group.hpp"

namespace tdual::catalog {

using exact::FGAbelianGroup;

/// Table parameters: genus g, crosscap count n, bundle index j, flux index k.
struct Params {
  long long g = 0, n = 0, j = 0, k = 0;
};

enum class Quantity { BaseCohomology, TotalCohomology, KTheoryAhss, KTheory };

inline const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::BaseCohomology: return "base cohomology";
    case Quantity::TotalCohomology: return "total cohomology";
    case Quantity::KTheoryAhss: return "K-theory (spectral sequence)";
    case Quantity::KTheory: return "K-theory";
  }
  return "";
}

/// One column of a reference table.  Cells are kept as written, row i = degree i;
/// "*" marks a group the spectral sequence leaves undetermined.
struct FixtureColumn {
  std::string label;
  Quantity quantity;
  bool twisted;  // coefficients Z_xi, or the twist (xi, eta)
  std::function<bool(const Params&)> applies;
  std::vector<std::string> cells;
};

struct FixtureTable {
  std::string id;
  std::string space;  // catalog id of the base
  std::string provenance;
  std::vector<FixtureColumn> columns;
};

namespace detail {

inline long long eval_linear(const std::string& expr, const Params& p) {
  long long total = 0;
  std::size_t i = 0;
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') sign = expr[i++] == '-' ? -1 : 1;
    long long coef = 1;
    bool digits = false;
    if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      coef = 0;
      while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) coef = coef * 10 + (expr[i++] - '0');
      digits = true;
    }
    long long var = 1;
    if (i < expr.size() && std::isalpha(static_cast<unsigned char>(expr[i]))) {
      switch (expr[i++]) {
        case 'g': var = p.g; break;
        case 'n': var = p.n; break;
        case 'j': var = p.j; break;
        case 'k': var = p.k; break;
        default: throw Error(ErrorCode::ParseError, "unknown variable in '" + expr + "'");
      }
    } else if (!digits) {
      throw Error(ErrorCode::ParseError, "bad expression '" + expr + "'");
    }
    total += sign * coef * var;
  }
  return total;
}

inline std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace detail

/// Evaluates a cell such as "Z^{2g-1} + Z_2", "Z_j" or "0"; nullopt for "*".
/// A cyclic factor of order 0 would be ℤ; a negative exponent is a parse error.
inline std::optional<FGAbelianGroup> evaluate_cell(const std::string& cell, const Params& p) {
  const std::string s = detail::strip(cell);
  if (s == "*") return std::nullopt;
  FGAbelianGroup g;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find('+', pos);
    const std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto arg = [&](std::size_t from) {
      std::string a = term.substr(from);
      if (!a.empty() && a.front() == '{' && a.back() == '}') a = a.substr(1, a.size() - 2);
      return detail::eval_linear(a, p);
    };
    if (term == "0") {
    } else if (term == "Z") {
      g = g + FGAbelianGroup::free(1);
    } else if (term.rfind("Z^", 0) == 0) {
      const long long r = arg(2);
      if (r < 0) throw Error(ErrorCode::ParseError, "negative rank in '" + cell + "'");
      g = g + FGAbelianGroup::free(static_cast<std::size_t>(r));
    } else if (term.rfind("Z_", 0) == 0) {
      const long long m = arg(2);
      g = g + FGAbelianGroup::cyclic(m < 0 ? -m : m);
    } else {
      throw Error(ErrorCode::ParseError, "cannot read cell '" + cell + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return g;
}

namespace detail {

inline bool always(const Params&) { return true; }

}  // namespace detail

/// The example tables, transcribed cell by cell.
inline std::vector<FixtureTable> fixture_tables() {
  using detail::always;
  auto jk = [](long long j, long long k) { return [j, k](const Params& p) { return p.j == j && p.k == k; }; };
  auto j_is = [](long long j) { return [j](const Params& p) { return p.j == j; }; };
  std::vector<FixtureTable> t;

  t.push_back({"klein.cohomology", "circle", "Klein bottle: cohomology of K",
               {{"H^i(K,Z)", Quantity::TotalCohomology, false, always, {"Z", "Z", "Z_2"}},
                {"H^i(K,Z_xi)", Quantity::TotalCohomology, true, always, {"0", "Z + Z_2", "Z"}}}});
  t.push_back({"klein.ktheory", "circle", "Klein bottle: K-theory of K",
               {{"K^i(K)", Quantity::KTheory, false, always, {"Z + Z_2", "Z"}},
                {"K^i(K,xi)", Quantity::KTheory, true, always, {"Z", "Z + Z_2"}}}});

  t.push_back({"sigma.base", "sigma", "Riemann surfaces: cohomology of the base",
               {{"H^i(Sigma_g,Z)", Quantity::BaseCohomology, false, always, {"Z", "Z^{2g}", "Z"}},
                {"H^i(Sigma_g,Z_xi)", Quantity::BaseCohomology, true, always, {"0", "Z^{2g-2} + Z_2", "Z_2"}}}});
  t.push_back({"sigma.cohomology", "sigma", "Riemann surfaces: cohomology of E_g^j",
               {{"H^i(E^0_g,Z)", Quantity::TotalCohomology, false, j_is(0), {"Z", "Z^{2g}", "Z^{2g-1} + Z_2", "Z_2"}},
                {"H^i(E^0_g,Z_xi)", Quantity::TotalCohomology, true, j_is(0), {"0", "Z^{2g-1} + Z_2", "Z^{2g} + Z_2", "Z"}},
                {"H^i(E^1_g,Z)", Quantity::TotalCohomology, false, j_is(1), {"Z", "Z^{2g}", "Z^{2g-1}", "Z_2"}},
                {"H^i(E^1_g,Z_xi)", Quantity::TotalCohomology, true, j_is(1), {"0", "Z^{2g-1} + Z_2", "Z^{2g}", "Z"}}}});
  t.push_back({"sigma.ktheory.ahss", "sigma", "Riemann surfaces: K-theory from the spectral sequence",
               {{"K^i(E^0_g,eta_0)", Quantity::KTheoryAhss, false, jk(0, 0), {"Z^{2g} + Z_2", "Z^{2g} + Z_2"}},
                {"K^i(E^0_g,(xi,eta_0))", Quantity::KTheoryAhss, true, jk(0, 0), {"Z^{2g} + Z_2", "*"}},
                {"K^i(E^1_g,eta_0)", Quantity::KTheoryAhss, false, jk(1, 0), {"Z^{2g}", "Z^{2g} + Z_2"}},
                {"K^i(E^1_g,(xi,eta_0))", Quantity::KTheoryAhss, true, jk(1, 0), {"Z^{2g}", "*"}},
                {"K^i(E^0_g,eta_1)", Quantity::KTheoryAhss, false, jk(0, 1), {"Z^{2g} + Z_2", "Z^{2g}"}},
                {"K^i(E^0_g,(xi,eta_1))", Quantity::KTheoryAhss, true, jk(0, 1), {"Z^{2g} + Z_2", "*"}},
                {"K^i(E^1_g,eta_1)", Quantity::KTheoryAhss, false, jk(1, 1), {"Z^{2g}", "Z^{2g}"}},
                {"K^i(E^1_g,(xi,eta_1))", Quantity::KTheoryAhss, true, jk(1, 1), {"Z^{2g}", "*"}}}});
  t.push_back({"sigma.ktheory", "sigma", "Riemann surfaces: K-theory completed by T-duality",
               {{"K^i(E^0_g,eta_0)", Quantity::KTheory, false, jk(0, 0), {"Z^{2g} + Z_2", "Z^{2g} + Z_2"}},
                {"K^i(E^0_g,(xi,eta_0))", Quantity::KTheory, true, jk(0, 0), {"Z^{2g} + Z_2", "Z^{2g} + Z_2"}},
                {"K^i(E^1_g,eta_0)", Quantity::KTheory, false, jk(1, 0), {"Z^{2g}", "Z^{2g} + Z_2"}},
                {"K^i(E^1_g,(xi,eta_0))", Quantity::KTheory, true, jk(1, 0), {"Z^{2g}", "Z^{2g} + Z_2"}},
                {"K^i(E^0_g,eta_1)", Quantity::KTheory, false, jk(0, 1), {"Z^{2g} + Z_2", "Z^{2g}"}},
                {"K^i(E^0_g,(xi,eta_1))", Quantity::KTheory, true, jk(0, 1), {"Z^{2g} + Z_2", "Z^{2g}"}},
                {"K^i(E^1_g,eta_1)", Quantity::KTheory, false, jk(1, 1), {"Z^{2g}", "Z^{2g}"}},
                {"K^i(E^1_g,(xi,eta_1))", Quantity::KTheory, true, jk(1, 1), {"Z^{2g}", "Z^{2g}"}}}});

  auto even = [](long long x) { return x % 2 == 0; };
  t.push_back({"crosscap.base", "crosscap_sum", "Non-orientable surfaces: cohomology of the base",
               {{"H^i(M_n,Z)", Quantity::BaseCohomology, false, always, {"Z", "Z^{n-1}", "Z_2"}},
                {"H^i(M_n,Z_xi)", Quantity::BaseCohomology, true, always, {"0", "Z^{n-1} + Z_2", "Z"}}}});
  t.push_back({"crosscap.cohomology", "crosscap_sum", "Non-orientable surfaces: cohomology of E_n^j",
               {{"H^i(E^j_n,Z), j even", Quantity::TotalCohomology, false, [=](const Params& p) { return even(p.j); },
                 {"Z", "Z^{n-1}", "Z^{n-1} + Z_2 + Z_2", "Z"}},
                {"H^i(E^j_n,Z), j odd", Quantity::TotalCohomology, false, [=](const Params& p) { return !even(p.j); },
                 {"Z", "Z^{n-1}", "Z^{n-1} + Z_4", "Z"}},
                {"H^i(E^j_n,Z_xi), j=0", Quantity::TotalCohomology, true, [](const Params& p) { return p.j == 0; },
                 {"0", "Z^{n} + Z_2", "Z^{n}", "Z_2"}},
                {"H^i(E^j_n,Z_xi), j!=0", Quantity::TotalCohomology, true, [](const Params& p) { return p.j != 0; },
                 {"0", "Z^{n-1} + Z_2", "Z^{n-1} + Z_j", "Z_2"}}}});
  t.push_back(
      {"crosscap.ktheory", "crosscap_sum", "Non-orientable surfaces: K-theory",
       {{"K^i(E^j_n,eta_k), j even, k = 0", Quantity::KTheory, false,
         [=](const Params& p) { return even(p.j) && p.k == 0; }, {"Z^{n} + Z_2 + Z_2", "Z^{n}"}},
        {"K^i(E^j_n,eta_k), j odd, k = 0", Quantity::KTheory, false,
         [=](const Params& p) { return !even(p.j) && p.k == 0; }, {"Z^{n} + Z_4", "Z^{n}"}},
        {"K^i(E^j_n,eta_k), j even, k != 0", Quantity::KTheory, false,
         [=](const Params& p) { return even(p.j) && p.k != 0; }, {"Z^{n-1} + Z_2 + Z_2", "Z^{n-1} + Z_k"}},
        {"K^i(E^j_n,eta_k), j odd, k != 0", Quantity::KTheory, false,
         [=](const Params& p) { return !even(p.j) && p.k != 0; }, {"Z^{n-1} + Z_4", "Z^{n-1} + Z_k"}},
        {"K^i(E^j_n,(xi,eta_k)), j = 0, k even", Quantity::KTheory, true,
         [=](const Params& p) { return p.j == 0 && even(p.k); }, {"Z^{n}", "Z^{n} + Z_2 + Z_2"}},
        {"K^i(E^j_n,(xi,eta_k)), j != 0, k even", Quantity::KTheory, true,
         [=](const Params& p) { return p.j != 0 && even(p.k); }, {"Z^{n-1} + Z_j", "Z^{n-1} + Z_2 + Z_2"}},
        {"K^i(E^j_n,(xi,eta_k)), j = 0, k odd", Quantity::KTheory, true,
         [=](const Params& p) { return p.j == 0 && !even(p.k); }, {"Z^{n}", "Z^n + Z_4"}},
        {"K^i(E^j_n,(xi,eta_k)), j != 0, k odd", Quantity::KTheory, true,
         [=](const Params& p) { return p.j != 0 && !even(p.k); }, {"Z^{n-1} + Z_j", "Z^{n-1} + Z_4"}}}});
  return t;
}

/// Tables whose base matches the catalog id.
inline std::vector<FixtureTable> fixtures_for(const std::string& space_family) {
  std::vector<FixtureTable> out;
  for (auto& t : fixture_tables())
    if (t.space == space_family) out.push_back(std::move(t));
  return out;
}

}  // namespace tdual::catalog
