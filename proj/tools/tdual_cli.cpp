#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "tdual/tdual.hpp"

using namespace tdual;
using io::json;
using simplicial::LocalSystem;

namespace {

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> bits;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1') throw Error(ErrorCode::InvalidXi, "--xi takes a string of 0/1 bits, one per letter");
    bits.push_back(c - '0');
  }
  return bits;
}

json axiom_json(const duality::AxiomReport& r) {
  json j = {{"orientation", r.orientation}, {"flux_classes", r.flux_classes}, {"certificate", r.certificate},
            {"ok", r.ok()}};
  if (r.B) j["B"] = io::to_json(*r.B);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

int cmd_cohomology(const std::string& space, const std::string& ls) {
  const auto x = io::complex_from_json(io::read_file(space));
  const auto l = ls.empty() ? LocalSystem::trivial(x) : io::local_system_from_json(io::read_file(ls), x);
  print({{"cohomology", io::to_json(simplicial::cohomology(x, l))},
         {"homology", io::to_json(simplicial::homology(x, l))},
         {"euler_characteristic", x.euler_characteristic()}});
  return 0;
}

int cmd_bundle_cohomology(const std::string& path, const std::string& coeff) {
  const auto b = io::bundle_from_json(io::read_file(path));
  const auto zeta = coeff == "xi" ? b.xi : LocalSystem::trivial(b.base);
  print({{"coefficients", coeff}, {"cohomology", io::to_json(bundle::total_cohomology(b, zeta))}});
  return 0;
}

int cmd_tdual(const std::string& path) {
  const auto p = io::pair_from_json(io::read_file(path));
  const auto r = duality::construct_tdual(p);
  const auto v = duality::verify_tduality(p, r.dual);
  print({{"dual", io::to_json(r)}, {"verification", axiom_json(v)}});
  return v.ok() ? 0 : 1;
}

int cmd_verify(const std::string& a, const std::string& b) {
  const auto v = duality::verify_tduality(io::pair_from_json(io::read_file(a)), io::pair_from_json(io::read_file(b)));
  print(axiom_json(v));
  return v.ok() ? 0 : 1;
}

int cmd_ktheory(const std::string& path, bool xi_twist) {
  const auto p = io::pair_from_json(io::read_file(path));
  const auto ahss = ktheory::ahss_k_groups(ktheory::TwistClass::from_pair(p, xi_twist));
  const auto k = ktheory::resolved_k_groups(p, xi_twist);
  const auto rat = ktheory::rational_consistency(k, duality::small_twisted_cohomology(p, xi_twist));
  print({{"twist", xi_twist ? "(xi, h)" : "h"},
         {"ahss", io::to_json(ahss)},
         {"resolved", io::to_json(k)},
         {"rational", {{"ok", rat.ok}, {"rank0", rat.rank0}, {"rank1", rat.rank1}, {"even", rat.even}, {"odd", rat.odd}}}});
  return rat.ok ? 0 : 1;
}

int cmd_tables(const std::string& id, long long g, long long n, long long j, long long k, const std::string& xi,
               const std::string& format) {
  std::size_t param = 1;
  if (id == "sigma") param = static_cast<std::size_t>(g);
  if (id == "crosscap_sum") param = static_cast<std::size_t>(n);
  std::optional<std::vector<int>> bits;
  if (!xi.empty()) bits = parse_bits(xi);
  const auto r = catalog::run_pipeline(id, param, bits, j, k);
  std::cout << io::render_report(r, format);
  if (!r.default_xi) std::cerr << "note: non-default xi, no reference values to compare (unverified)\n";
  return r.ok() ? 0 : 1;
}

int cmd_courant(const std::string& path, std::size_t samples, std::uint64_t seed) {
  const auto ctx = io::context_from_json(io::read_file(path));
  courant::SuiteOptions o;
  o.samples = samples;
  o.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = courant::run_courant_suite(ctx, o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print({{"context", r.context}, {"samples", r.samples}, {"passed", r.passed}, {"failures", r.failures},
         {"seconds", secs}, {"ok", r.ok()}});
  return r.ok() ? 0 : 1;
}

int cmd_fixtures(const std::string& format) {
  bool all_ok = true;
  std::size_t checks = 0;
  for (const auto& c : catalog::fixture_grid()) {
    const auto r = catalog::run_pipeline(c.family, c.param, std::nullopt, c.j, c.k);
    checks += r.checks.size();
    all_ok = all_ok && r.ok();
    if (format == "summary") {
      std::size_t bad = 0;
      for (const auto& x : r.checks) bad += !x.ok;
      std::cout << (r.ok() ? "ok   " : "FAIL ") << r.space << " j=" << c.j << " k=" << c.k << "  " << r.checks.size()
                << " fixture cells";
      if (bad) std::cout << ", " << bad << " mismatched";
      std::cout << "\n";
      for (const auto& x : r.checks)
        if (!x.ok) std::cout << "    " << x.table << " / " << x.column << " row " << x.row << ": expected " << x.expected
                             << ", got " << x.actual << "\n";
    } else {
      std::cout << io::render_report(r, format);
    }
  }
  if (format == "summary") std::cout << (all_ok ? "all fixtures reproduced" : "fixture mismatches") << " (" << checks << " cells)\n";
  return all_ok ? 0 : 1;
}

int cmd_export(const std::string& what, const std::string& id, long long param, long long j, long long k) {
  if (what == "context") {
    for (const auto& c : courant::contexts::all())
      if (c.name == id) {
        print(io::to_json(c));
        return 0;
      }
    throw Error(ErrorCode::InvalidContext, "unknown context '" + id + "'");
  }
  const auto s = catalog::by_id(id, static_cast<std::size_t>(param));
  if (what == "space") print(io::to_json(s.complex));
  else if (what == "xi") print(io::to_json(s.local_system(catalog::default_xi_bits(s))));
  else if (what == "bundle") print(io::to_json(catalog::build_bundle(s, j)));
  else print(io::to_json(catalog::build_flux(catalog::build_bundle(s, j), k)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle bundles with orientation twist: cohomology, T-duality and twisted K-theory"};
  app.require_subcommand(1);
  int rc = 0;

  std::string space, ls;
  auto* coh = app.add_subcommand("cohomology", "cohomology of a complex with a local system");
  coh->add_option("space", space, "complex JSON")->required()->check(CLI::ExistingFile);
  coh->add_option("--local-system", ls, "local system JSON")->check(CLI::ExistingFile);
  coh->callback([&] { rc = cmd_cohomology(space, ls); });

  std::string bundle, coeff = "trivial";
  auto* bc = app.add_subcommand("bundle-cohomology", "cohomology of the total space of a bundle");
  bc->add_option("bundle", bundle, "bundle JSON")->required()->check(CLI::ExistingFile);
  bc->add_option("--coeff", coeff, "coefficients")->check(CLI::IsMember({"xi", "trivial"}));
  bc->callback([&] { rc = cmd_bundle_cohomology(bundle, coeff); });

  std::string pair, pair2;
  auto* td = app.add_subcommand("tdual", "construct and verify the T-dual of a flux pair");
  td->add_option("pair", pair, "pair JSON")->required()->check(CLI::ExistingFile);
  td->callback([&] { rc = cmd_tdual(pair); });

  auto* vf = app.add_subcommand("verify", "check that two pairs are T-dual");
  vf->add_option("pair", pair, "pair JSON")->required()->check(CLI::ExistingFile);
  vf->add_option("dual", pair2, "candidate dual JSON")->required()->check(CLI::ExistingFile);
  vf->callback([&] { rc = cmd_verify(pair, pair2); });

  bool xi_twist = false;
  auto* kt = app.add_subcommand("ktheory", "twisted K-theory of a flux pair");
  kt->add_option("pair", pair, "pair JSON")->required()->check(CLI::ExistingFile);
  kt->add_flag("--xi-twist", xi_twist, "twist by (xi, h) instead of h");
  kt->callback([&] { rc = cmd_ktheory(pair, xi_twist); });

  std::string id, xi, format = "md";
  long long g = 1, n = 1, j = 0, k = 0;
  auto* tb = app.add_subcommand("tables", "full report for one catalog bundle");
  tb->add_option("id", id, "catalog id")
      ->required()
      ->check(CLI::IsMember({"circle", "torus", "klein_bottle", "sigma", "crosscap_sum"}));
  tb->add_option("--g", g, "genus for sigma")->check(CLI::PositiveNumber);
  tb->add_option("--n", n, "crosscaps for crosscap_sum")->check(CLI::PositiveNumber);
  tb->add_option("--j", j, "Euler class index");
  tb->add_option("--k", k, "flux index");
  tb->add_option("--xi", xi, "orientation class as 0/1 bits per letter (default: the reference class)");
  tb->add_option("--format", format, "output format")->check(CLI::IsMember({"md", "json", "csv"}));
  tb->callback([&] { rc = cmd_tables(id, g, n, j, k, xi, format); });

  std::string ctx;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  auto* cc = app.add_subcommand("courant-check", "symbolic Courant/Hori suite on an equivariant torus context");
  cc->add_option("context", ctx, "context JSON")->required()->check(CLI::ExistingFile);
  cc->add_option("--samples", samples, "random draws");
  cc->add_option("--seed", seed, "RNG seed");
  cc->callback([&] { rc = cmd_courant(ctx, samples, seed); });

  bool all = false;
  std::string fformat = "summary";
  auto* fx = app.add_subcommand("fixtures", "compare the pipeline with every reference table");
  fx->add_flag("--all", all, "run the full grid")->required();
  fx->add_option("--format", fformat, "summary or a report format")->check(CLI::IsMember({"summary", "md", "json", "csv"}));
  fx->callback([&] { rc = cmd_fixtures(fformat); });

  std::string what, eid;
  long long ep = 1, ej = 0, ek = 0;
  auto* ex = app.add_subcommand("export", "write a catalog object as JSON input for the other commands");
  ex->add_option("what", what, "kind of object")->required()->check(CLI::IsMember({"space", "xi", "bundle", "pair", "context"}));
  ex->add_option("id", eid, "catalog id, or context name")->required();
  ex->add_option("--param", ep, "g for sigma, n for crosscap_sum")->check(CLI::PositiveNumber);
  ex->add_option("--j", ej, "Euler class index");
  ex->add_option("--k", ek, "flux index");
  ex->callback([&] { rc = cmd_export(what, eid, ep, ej, ek); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
