#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tdual/catalog/pipeline.hpp"
#include "tdual/io/json.hpp"

namespace tdual::io {

/// A rectangular table of strings, rendered as Markdown or CSV.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string twist_label(const catalog::PipelineReport& r, bool xi) {
  const std::string eta = "eta_" + std::to_string(r.params.k);
  return xi ? "(xi, " + eta + ")" : eta;
}

}  // namespace detail

/// Cohomology by degree: H^i(M), H^i(M; Z_xi), H^i(E), H^i(E; Z_xi).
inline Table cohomology_table(const catalog::PipelineReport& r) {
  Table t{"Cohomology of " + r.space + " and E (j = " + std::to_string(r.params.j) + ")",
          {"i", "H^i(M,Z)", "H^i(M,Z_xi)", "H^i(E,Z)", "H^i(E,Z_xi)"},
          {}};
  const std::size_t top = std::max(r.total_h.size(), r.base_h.size());
  auto at = [](const std::vector<FGAbelianGroup>& v, std::size_t i) { return i < v.size() ? v[i].to_string() : "0"; };
  for (std::size_t i = 0; i < top; ++i)
    t.rows.push_back({std::to_string(i), at(r.base_h, i), at(r.base_h_xi, i), at(r.total_h, i), at(r.total_h_xi, i)});
  return t;
}

/// K-groups from the spectral sequence ("*" when undetermined) and after
/// resolution through the T-dual.
inline Table ktheory_table(const catalog::PipelineReport& r) {
  const auto h = detail::twist_label(r, false), hx = detail::twist_label(r, true);
  Table t{"Twisted K-theory of E", {"", "K(E," + h + ") AHSS", "K(E," + h + ")", "K(E," + hx + ") AHSS", "K(E," + hx + ")"}, {}};
  t.rows.push_back({"K^0", r.k_ahss.K0.to_string(), r.k.K0.to_string(), r.k_ahss_xi.K0.to_string(), r.k_xi.K0.to_string()});
  t.rows.push_back({"K^1", r.k_ahss.k1_string(), r.k.k1_string(), r.k_ahss_xi.k1_string(), r.k_xi.k1_string()});
  return t;
}

inline Table checks_table(const catalog::PipelineReport& r) {
  Table t{"Checks", {"check", "expected", "actual", "status"}, {}};
  auto yes = [](bool b) { return std::string(b ? "pass" : "FAIL"); };
  const auto& v = r.verification;
  t.rows.push_back({"T-dual orientation classes agree", "", "", yes(v.orientation)});
  t.rows.push_back({"T-dual flux/Euler classes exchanged", "", "", yes(v.flux_classes)});
  t.rows.push_back({"T-dual certificate on the correspondence", "", "", yes(v.certificate)});
  t.rows.push_back({"double dual equivalent to the pair", "", "", yes(r.round_trip)});
  t.rows.push_back({"K^0/K^1 exchanged with the dual", "", "", yes(r.k_exchange)});
  auto rational = [&](const ktheory::RationalReport& q, const std::string& label) {
    t.rows.push_back({"rank K^0, K^1 vs even/odd dims " + label,
                      std::to_string(q.even) + ", " + std::to_string(q.odd),
                      std::to_string(q.rank0) + ", " + std::to_string(q.rank1), yes(q.ok)});
  };
  rational(r.rational, detail::twist_label(r, false));
  rational(r.rational_xi, detail::twist_label(r, true));
  for (const auto& c : r.checks)
    t.rows.push_back({c.table + " / " + c.column + " / row " + std::to_string(c.row), c.expected, c.actual, yes(c.ok)});
  return t;
}

inline std::vector<Table> report_tables(const catalog::PipelineReport& r) {
  return {cohomology_table(r), ktheory_table(r), checks_table(r)};
}

inline std::string render_markdown(const Table& t) {
  std::ostringstream os;
  os << "### " << t.title << "\n\n|";
  for (const auto& h : t.header) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (const auto& c : row) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

inline std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << detail::csv_cell(cells[i]);
    os << "\n";
  };
  line({"# " + t.title});
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

inline json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) o[t.header[i].empty() ? "group" : t.header[i]] = row[i];
    rows.push_back(o);
  }
  return {{"title", t.title}, {"rows", rows}};
}

inline json to_json(const ktheory::KGroups& k) {
  json o{{"K0", to_json(k.K0)}, {"K1", k.k1_string()}, {"ambiguous", k.ambiguous()}};
  if (!k.ambiguous()) {
    o["K1"] = to_json(k.k1());
  } else {
    const auto& ext = std::get<ktheory::AmbiguousExtension>(k.K1);
    o["K1_extension"] = {{"sub", to_json(ext.sub)}, {"quot", to_json(ext.quot)}, {"candidates", to_json(ext.candidates)}};
  }
  o["E_infinity"] = to_json(k.E_infinity);
  return o;
}

inline json to_json(const catalog::PipelineReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"table", c.table}, {"column", c.column}, {"row", c.row}, {"expected", c.expected},
                      {"actual", c.actual}, {"ok", c.ok}});
  return {{"space", r.space},
          {"params", {{"g", r.params.g}, {"n", r.params.n}, {"j", r.params.j}, {"k", r.params.k}}},
          {"xi_bits", r.xi_bits},
          {"verified_against_fixtures", r.default_xi},
          {"cohomology",
           {{"base", to_json(r.base_h)}, {"base_xi", to_json(r.base_h_xi)}, {"total", to_json(r.total_h)},
            {"total_xi", to_json(r.total_h_xi)}}},
          {"ktheory",
           {{"ahss", to_json(r.k_ahss)}, {"ahss_xi", to_json(r.k_ahss_xi)}, {"resolved", to_json(r.k)},
            {"resolved_xi", to_json(r.k_xi)}}},
          {"tdual",
           {{"orientation", r.verification.orientation}, {"flux_classes", r.verification.flux_classes},
            {"certificate", r.verification.certificate}, {"round_trip", r.round_trip}, {"k_exchange", r.k_exchange}}},
          {"rational",
           {{"untwisted", r.rational.ok}, {"xi", r.rational_xi.ok}}},
          {"fixture_checks", checks},
          {"ok", r.ok()}};
}

/// The whole report in one format: "md", "csv" or "json".
inline std::string render_report(const catalog::PipelineReport& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  std::string out;
  if (format == "md") {
    out += "## " + r.space + ", j = " + std::to_string(r.params.j) + ", k = " + std::to_string(r.params.k) + "\n\n";
    if (!r.default_xi) out += "_Non-default orientation class: no reference values, results unverified._\n\n";
    for (const auto& t : report_tables(r)) out += render_markdown(t) + "\n";
    return out;
  }
  if (format == "csv") {
    if (!r.default_xi) out += "# unverified: non-default orientation class\n";
    for (const auto& t : report_tables(r)) out += render_csv(t);
    return out;
  }
  throw Error(ErrorCode::ParseError, "unknown format '" + format + "' (md, json or csv)");
}

}  // namespace tdual::io
