// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// All comparisons are exact (normal-form group equality, exact rational forms).
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "tdual/tdual.hpp"
#include "test_support.hpp"

using namespace tdual;
using exact::FGAbelianGroup;
using exact::IntMatrix;
using exact::IntVector;
using exact::Integer;

namespace {

// Wall-clock budgets in seconds, one per criterion; 0 means none.
constexpr double kBudget[10] = {0, 1.0, 10.0, 30.0, 0, 0, 0, 0, 60.0, 0};

// Criterion 8 sizes.
constexpr std::size_t kCourantSamples = 50;
constexpr long long kCourantMaxFreq = 3;
constexpr std::size_t kCourantPairs = 3;
constexpr std::uint64_t kCourantSeed = 2024;

// Criterion 9 sizes.
constexpr int kSnfMatrices = 1000;
constexpr int kSolveSystems = 500;
constexpr long long kBruteBox = 6;
constexpr int kCochainTrials = 4;

FGAbelianGroup Z(std::size_t r) { return FGAbelianGroup::free(r); }
FGAbelianGroup Zm(long long m) { return FGAbelianGroup::cyclic(m); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;  // first few failures, or a summary

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok || notes.size() < 5) notes.push_back(what);
    ok = false;
  }
};

struct Cell {
  catalog::GridCell cell;
  catalog::PipelineReport report;
};

std::vector<Cell> run_cells(const std::string& family) {
  std::vector<Cell> out;
  for (const auto& c : catalog::fixture_grid())
    if (c.family == family) out.push_back({c, catalog::run_pipeline(c.family, c.param, std::nullopt, c.j, c.k)});
  return out;
}

std::string label(const catalog::PipelineReport& r) {
  return r.space + " j=" + std::to_string(r.params.j) + " k=" + std::to_string(r.params.k);
}

void require_fixtures(Outcome& o, const catalog::PipelineReport& r, std::size_t& cells) {
  cells += r.checks.size();
  o.require(!r.checks.empty(), label(r) + ": no fixture cells applied");
  for (const auto& c : r.checks)
    o.require(c.ok, label(r) + " " + c.table + "/" + c.column + " row " + std::to_string(c.row) + ": expected " +
                        c.expected + ", got " + c.actual);
}

// 1. Klein bottle.
Outcome klein() {
  Outcome o;
  const auto r = catalog::run_pipeline("circle", 1, std::nullopt, 0, 0);
  std::size_t cells = 0;
  require_fixtures(o, r, cells);
  const std::vector<FGAbelianGroup> hz{Z(1), Z(1), Zm(2)}, hxi{Z(0), Z(1) + Zm(2), Z(1)};
  o.require(r.total_h == hz, "H*(K,Z)");
  o.require(r.total_h_xi == hxi, "H*(K,Z_xi)");
  o.require(r.k.K0 == Z(1) + Zm(2) && !r.k.ambiguous() && r.k.k1() == Z(1), "K*(K)");
  o.require(r.k_xi.K0 == Z(1) && !r.k_xi.ambiguous() && r.k_xi.k1() == Z(1) + Zm(2), "K*(K,xi)");
  o.notes.insert(o.notes.begin(), std::to_string(cells) + " fixture cells");
  return o;
}

// 2. Orientable bases.
Outcome sigma_tables() {
  Outcome o;
  std::size_t cells = 0, resolved = 0;
  for (const auto& [c, r] : run_cells("sigma")) {
    require_fixtures(o, r, cells);
    const std::size_t g = c.param;
    if (r.k_ahss_xi.ambiguous()) {
      ++resolved;
      const auto want = c.k == 0 ? Z(2 * g) + Zm(2) : Z(2 * g);
      o.require(!r.k_xi.ambiguous() && r.k_xi.k1() == want, label(r) + ": resolved K^1(E,(xi,eta))");
    }
  }
  o.require(resolved == 12, "expected four undetermined entries per genus, found " + std::to_string(resolved));
  o.notes.insert(o.notes.begin(), std::to_string(cells) + " fixture cells, " + std::to_string(resolved) + " entries resolved through the dual");
  return o;
}

// 3. Non-orientable bases.
Outcome crosscap_tables() {
  Outcome o;
  std::size_t cells = 0;
  for (const auto& [c, r] : run_cells("crosscap_sum")) {
    require_fixtures(o, r, cells);
    const std::size_t n = c.param;
    const auto h2 = c.j % 2 ? Z(n - 1) + Zm(4) : Z(n - 1) + Zm(2) + Zm(2);
    o.require(r.total_h[2] == h2, label(r) + ": H^2(E) parity");
    o.require(r.total_h_xi[2] == Z(n - 1) + Zm(c.j), label(r) + ": H^2(E,Z_xi)");
  }
  o.notes.insert(o.notes.begin(), std::to_string(cells) + " fixture cells");
  return o;
}

// 4. T-duality round trip on every pair of 1-3.
Outcome round_trips() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& c : catalog::fixture_grid()) {
    const auto s = catalog::by_id(c.family, c.param);
    const auto p = catalog::build_flux(catalog::build_bundle(s, c.j), c.k);
    const auto d = duality::construct_tdual(p);
    const auto v = duality::verify_tduality(p, d.dual);
    const auto dd = duality::construct_tdual(d.dual).dual;
    const std::string id = s.id + " j=" + std::to_string(c.j) + " k=" + std::to_string(c.k);
    o.require(v.orientation && v.flux_classes, id + ": class conditions");
    o.require(v.certificate && v.B.has_value(), id + ": integer certificate");
    o.require(bundle::same_bundle(dd.bundle, p.bundle), id + ": double dual bundle");
    o.require(duality::duals_equivalent(p, dd).equivalent, id + ": double dual flux");
    ++pairs;
  }
  o.notes.insert(o.notes.begin(), std::to_string(pairs) + " pairs");
  return o;
}

// 5. H₁ from the fundamental group: generators a_1..a_n, t with
// a_i t a_i⁻¹ = t⁻¹ and a_1²…a_n² = t^j.
Outcome h1_oracle() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n)
    for (long long j = 0; j <= 4; ++j) {
      IntMatrix rows(2, n + 1);
      for (std::size_t i = 0; i < n; ++i) rows(0, i) = 2;
      rows(0, n) = -j;
      rows(1, n) = 2;
      const auto pi1 = exact::normal_form(exact::PresentedGroup::from_relation_rows(n + 1, rows));
      const auto s = catalog::crosscap_sum(n);
      const auto e = catalog::build_bundle(s, j);
      const auto gysin = bundle::total_homology(e, s.trivial())[1];
      const std::string id = "n=" + std::to_string(n) + " j=" + std::to_string(j);
      o.require(pi1 == gysin, id + ": " + pi1.to_string() + " vs " + gysin.to_string());
      if (j % 2) o.require(gysin == Z(n - 1) + Zm(4), id + ": expected Z^{n-1} + Z_4");
    }
  o.notes.insert(o.notes.begin(), "15 bundles");
  return o;
}

// 6. Poincaré duality on every 3-dimensional total model of 2-3.
Outcome poincare() {
  Outcome o;
  std::size_t models = 0;
  for (const auto& c : catalog::fixture_grid()) {
    if (c.family == "circle" || c.k != 0) continue;  // the model depends on (space, j) only
    const auto s = catalog::by_id(c.family, c.param);
    const auto e = catalog::build_bundle(s, c.j);
    const auto orn = bundle::total_orientation(e, s.local_system(catalog::orientation_bits(s)));
    for (const auto& zeta : {s.trivial(), e.xi}) {
      const bundle::TotalComplex tc(e, zeta);
      const auto rep = simplicial::poincare_duality_check(tc.complex(), bundle::TotalComplex(e, zeta * orn).complex(), 3);
      o.require(tc.dimension() == 3, s.id + ": total model not 3-dimensional");
      o.require(rep.ok, s.id + " j=" + std::to_string(c.j) + ": " + (rep.failures.empty() ? "" : rep.failures[0]));
      ++models;
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(models) + " (model, coefficient) cases");
  return o;
}

// 7. Ranks of K against the small twisted model.
Outcome chern_ranks() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : catalog::fixture_grid()) {
    const auto r = catalog::run_pipeline(c.family, c.param, std::nullopt, c.j, c.k);
    o.require(r.rational.ok && r.rational_xi.ok, label(r));
    if (c.family == "sigma") {
      const std::size_t g = c.param;
      o.require(r.rational.rank0 == 2 * g && r.rational.rank1 == 2 * g, label(r) + ": rank 2g/2g");
    }
    n += 2;
  }
  o.notes.insert(o.notes.begin(), std::to_string(n) + " twists");
  return o;
}

// 8. Symbolic Courant/Hori suite on contexts over T².
Outcome courant_suite() {
  Outcome o;
  const std::vector<courant::EquivariantContext> ctxs{courant::contexts::flat(), courant::contexts::shift(),
                                                      courant::contexts::shift_both(), courant::contexts::klein()};
  const auto& shift = ctxs[1];
  o.require(shift.deck.twice_b == std::vector<long long>{1, 0} && !shift.Fhat.is_zero() &&
                courant::has_parity(shift.Fhat, shift.deck, -1),
            "shift context must have σ = (x+1/2, y) and nonzero anti-invariant Fhat");
  const std::vector<std::string> required{"axiom.jacobi",   "axiom.anchor",  "axiom.leibniz",   "axiom.symmetric",
                                          "axiom.invariance", "derived_bracket", "phi.intertwines", "hori.clifford",
                                          "hori.twisted_d",  "hori.twisted_d.xi", "hori.inverse"};
  courant::SuiteOptions opt;
  opt.samples = kCourantSamples;
  opt.seed = kCourantSeed;
  opt.pairs = kCourantPairs;
  opt.max_freq = kCourantMaxFreq;
  std::ostringstream summary;
  for (const auto& ctx : ctxs) {
    o.require(ctx.dim() == 2, ctx.name + ": base is not T^2");
    const auto r = courant::run_courant_suite(ctx, opt);
    for (const auto& f : r.failures) o.require(false, ctx.name + ": " + f);
    for (const auto& name : required) {
      const auto it = r.passed.find(name);
      o.require(it != r.passed.end() && it->second == kCourantSamples, ctx.name + ": " + name + " not run on every sample");
    }
    summary << (summary.tellp() ? ", " : "") << ctx.name;
  }
  o.notes.insert(o.notes.begin(), std::to_string(kCourantSamples) + " samples on " + summary.str());
  return o;
}

// 9. Algebra properties.
Outcome algebra() {
  Outcome o;
  std::mt19937_64 rng(9);
  auto divisibility = [](const exact::SmithResult& s) {
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) return false;
      if (i + 1 < d.size() && d[i] != 0 && d[i + 1] % d[i] != 0) return false;
      if (i + 1 < d.size() && d[i] == 0 && d[i + 1] != 0) return false;
    }
    for (std::size_t r = 0; r < s.D.rows(); ++r)
      for (std::size_t c = 0; c < s.D.cols(); ++c)
        if (r != c && s.D(r, c) != 0) return false;
    return true;
  };
  for (int t = 0; t < kSnfMatrices; ++t) {
    const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    const IntMatrix a = testing_support::random_matrix(rng, m, n, -30, 30, t % 3 == 0 ? 0.5 : 0.0);
    const auto s = exact::smith_normal_form(a);
    o.require(s.U * s.D * s.V == a, "SNF reconstruction");
    o.require(s.left * a * s.right == s.D, "SNF transforms");
    o.require(Integer(abs(exact::determinant(s.U))) == 1 && Integer(abs(exact::determinant(s.V))) == 1, "unimodularity");
    o.require(divisibility(s), "divisibility chain");
  }
  for (int t = 0; t < kSolveSystems; ++t) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
    const IntMatrix a = testing_support::random_matrix(rng, m, n, -3, 3, 0.2);
    IntVector b = t % 2 ? testing_support::random_vector(rng, m, -4, 4) : a * testing_support::random_vector(rng, n, -2, 2);
    const auto x = exact::solve_integer(a, b);
    const bool brute = testing_support::brute_force_solvable(a, b, kBruteBox);
    o.require(!x || a * *x == b, "solve_integer returned a non-solution");
    o.require(x.has_value() || !brute, "solve_integer missed a solution");
  }
  std::size_t cochain_checks = 0;
  const std::vector<catalog::Space> spaces{catalog::circle(),   catalog::torus(),        catalog::klein_bottle(),
                                           catalog::sigma(1),   catalog::sigma(2),       catalog::sigma(3),
                                           catalog::crosscap_sum(1), catalog::crosscap_sum(2), catalog::crosscap_sum(3),
                                           catalog::three_torus()};
  auto bits = [&](std::size_t n) {
    std::vector<int> b(n);
    for (auto& x : b) x = static_cast<int>(rng() % 2);
    return b;
  };
  for (const auto& s : spaces) {
    const auto& x = s.complex;
    const auto dim = static_cast<std::size_t>(x.dimension());
    for (int t = 0; t < kCochainTrials; ++t) {
      const auto l1 = s.local_system(bits(s.letter_edges.size()));
      const auto l2 = s.local_system(bits(s.letter_edges.size()));
      for (std::size_t p = 0; p + 1 < dim; ++p) {
        const IntVector a = testing_support::random_vector(rng, x.count(p), -3, 3);
        const IntVector dda = simplicial::coboundary(x, l1, p + 1) * (simplicial::coboundary(x, l1, p) * a);
        o.require(exact::is_zero(dda), s.id + ": d^2 != 0");
        ++cochain_checks;
      }
      for (std::size_t p = 0; p <= dim; ++p)
        for (std::size_t q = 0; p + q < dim; ++q) {
          const IntVector a = testing_support::random_vector(rng, x.count(p), -3, 3);
          const IntVector b = testing_support::random_vector(rng, x.count(q), -3, 3);
          const IntVector lhs = simplicial::coboundary(x, l1 * l2, p + q) * simplicial::cup(x, a, p, b, q, l2);
          const IntVector t1 = simplicial::cup(x, simplicial::coboundary(x, l1, p) * a, p + 1, b, q, l2);
          const IntVector t2 = simplicial::cup(x, a, p, simplicial::coboundary(x, l2, q) * b, q + 1, l2);
          o.require(lhs == (p % 2 == 0 ? exact::add(t1, t2) : exact::sub(t1, t2)), s.id + ": Leibniz");
          ++cochain_checks;
        }
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(kSnfMatrices) + " SNF, " + std::to_string(kSolveSystems) +
                                      " solves, " + std::to_string(cochain_checks) + " cochain identities");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Klein bottle tables", klein},
      {"genus-g tables with dual-resolved K^1", sigma_tables},
      {"crosscap tables", crosscap_tables},
      {"T-duality round trip with integer certificate", round_trips},
      {"H_1 from pi_1 presentation vs Gysin model", h1_oracle},
      {"Poincare duality on total models", poincare},
      {"K ranks vs twisted de Rham dimensions", chern_ranks},
      {"Courant/Hori symbolic suite on T^2 contexts", courant_suite},
      {"SNF, integer solving, cochain algebra", algebra},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double budget = kBudget[i + 1];
    if (budget > 0 && secs > budget) o.require(false, "over the " + std::to_string(budget) + " s budget");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  [" << std::fixed
              << std::setprecision(2) << secs << " s";
    if (budget > 0) std::cout << " / " << std::setprecision(0) << budget << " s";
    std::cout << "]";
    for (const auto& n : o.notes) std::cout << "\n      " << n;
    std::cout << std::endl;
  }
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
