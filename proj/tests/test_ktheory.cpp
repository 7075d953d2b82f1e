#include <gtest/gtest.h>

#include <random>

#include "tdual/catalog/builders.hpp"
#include "tdual/duality/small_model.hpp"
#include "tdual/ktheory/ahss.hpp"

using namespace tdual;
using namespace tdual::ktheory;
using exact::FGAbelianGroup;

namespace {

FGAbelianGroup Z(std::size_t r = 1) { return FGAbelianGroup::free(r); }
FGAbelianGroup Zm(long long m) { return FGAbelianGroup::cyclic(m); }
const FGAbelianGroup zero{};

duality::FluxPair surface_pair(std::size_t g, int j, int k) {
  return catalog::build_flux(catalog::build_bundle(catalog::sigma(g), j), k);
}
duality::FluxPair crosscap_pair(std::size_t n, int j, int k) {
  return catalog::build_flux(catalog::build_bundle(catalog::crosscap_sum(n), j), k);
}

std::vector<duality::FluxPair> all_pairs() {
  std::vector<duality::FluxPair> out;
  out.push_back(catalog::build_flux(catalog::build_bundle(catalog::circle(), 0), 0));
  for (std::size_t g = 1; g <= 3; ++g)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) out.push_back(surface_pair(g, j, k));
  for (std::size_t n = 1; n <= 3; ++n)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k) out.push_back(crosscap_pair(n, j, k));
  return out;
}

// Bundles over T³ with random ξ and a flux drawn from base cohomology.
TwistClass random_t3_twist(std::mt19937_64& rng, const BundleDescriptor& b) {
  const auto& m = b.base;
  const auto t = catalog::three_torus();
  std::vector<int> bits(3);
  for (auto& x : bits) x = static_cast<int>(rng() % 2);
  const TotalComplex tc(b, LocalSystem::trivial(m));
  const auto h3 = simplicial::cohomology_with_generators(m, LocalSystem::trivial(m))[3];
  const IntVector base = exact::scale(h3.generators()[0], static_cast<long long>(rng() % 5) - 2);
  IntVector h = tc.pullback(base, 3);
  // Add a coboundary so h is not a canonical representative.
  IntVector c(tc.complex().dims[2]);
  for (auto& v : c) v = static_cast<long long>(rng() % 3) - 1;
  h = exact::add(h, tc.differential(c, 2));
  return TwistClass(b, t.local_system(bits), h);
}

}  // namespace

TEST(Twist, IdentityAndUntwistedSector) {
  const auto p = surface_pair(2, 1, 1);
  const auto t = TwistClass::from_pair(p, false);
  const auto id = identity_twist(p.bundle);
  EXPECT_EQ(twist_product(t, id).h, t.h);
  EXPECT_EQ(twist_product(id, t).h, t.h);
  const auto sum = twist_product(t, t);
  EXPECT_EQ(sum.h, exact::scale(t.h, 2));
  EXPECT_TRUE(sum.w.is_trivial());
}

TEST(Twist, XiSquaredOnSurfaceBundles) {
  // (ξ, 0)(ξ, 0) = (0, β(ξ⌣ξ)); π*β(ξ²) comes from H³ of a surface, which vanishes.
  for (std::size_t g = 1; g <= 2; ++g) {
    const auto b = catalog::build_bundle(catalog::sigma(g), 0);
    const TwistClass xi(b, b.xi, identity_twist(b).h);
    const auto sq = twist_product(xi, xi);
    EXPECT_TRUE(sq.w.is_trivial());
    EXPECT_TRUE(equivalent(sq, identity_twist(b)));
  }
}

TEST(Twist, GroupLawOnThreeTorus) {
  std::mt19937_64 rng(19);
  const auto s = catalog::three_torus();
  const auto triv = s.trivial();
  const auto h2 = simplicial::cohomology_with_generators(s.complex, triv)[2];
  const BundleDescriptor b(s.complex, triv, h2.generators()[0]);
  bool saw_bockstein = false;
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_t3_twist(rng, b), c = random_t3_twist(rng, b), d = random_t3_twist(rng, b);
    EXPECT_TRUE(equivalent(twist_product(twist_product(a, c), d), twist_product(a, twist_product(c, d))));
    EXPECT_TRUE(equivalent(twist_product(a, identity_twist(b)), a));
    // Exact at the cochain level: t · t⁻¹ = (0, 0).
    const auto one = twist_product(a, inverse(a));
    EXPECT_TRUE(one.w.is_trivial());
    EXPECT_TRUE(exact::is_zero(one.h));
    saw_bockstein = saw_bockstein || !exact::is_zero(detail::bockstein_of_product(a, a.w, c.w));
  }
  EXPECT_TRUE(saw_bockstein);
}

TEST(Twist, SpaceMismatch) {
  const auto a = TwistClass::from_pair(surface_pair(1, 0, 0), false);
  const auto b = TwistClass::from_pair(surface_pair(1, 1, 0), false);
  try {
    twist_product(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpaceMismatch);
  }
}

TEST(Extensions, Candidates) {
  EXPECT_EQ(extension_candidates(Z(), Zm(2)), (std::vector<FGAbelianGroup>{Z() + Zm(2), Z()}));
  EXPECT_EQ(extension_candidates(Zm(2), Zm(2)), (std::vector<FGAbelianGroup>{Zm(2) + Zm(2), Zm(4)}));
  EXPECT_EQ(extension_candidates(Zm(3), Zm(2)), (std::vector<FGAbelianGroup>{Zm(6)}));
  EXPECT_EQ(extension_candidates(Z(2), Z(1)), (std::vector<FGAbelianGroup>{Z(3)}));
  // Every candidate has the right rank and a torsion order dividing |T_sub|·|T_quot|.
  const std::vector<FGAbelianGroup> groups{Z(), Zm(2), Zm(4), Z() + Zm(2), Zm(2) + Zm(2), Z(2) + Zm(3)};
  for (const auto& s : groups)
    for (const auto& q : groups) {
      const auto c = extension_candidates(s, q);
      ASSERT_FALSE(c.empty());
      for (const auto& g : c) {
        EXPECT_EQ(g.free_rank(), s.free_rank() + q.free_rank());
        EXPECT_EQ((s.torsion_order() * q.torsion_order()) % g.torsion_order(), 0);
      }
      if (s.is_free() && q.is_free()) EXPECT_EQ(c.size(), 1u);
    }
}

TEST(Ahss, KleinBottle) {
  const auto p = catalog::build_flux(catalog::build_bundle(catalog::circle(), 0), 0);
  const auto k = ahss_k_groups(TwistClass::from_pair(p, false));
  EXPECT_EQ(k.K0, Z() + Zm(2));
  EXPECT_EQ(k.k1(), Z());
  const auto kx = ahss_k_groups(TwistClass::from_pair(p, true));
  EXPECT_EQ(kx.K0, Z());
  EXPECT_EQ(kx.k1(), Z() + Zm(2));
}

TEST(Ahss, SurfaceBundleTables) {
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto n = 2 * g;
    // Untwisted columns: (E_g^0, η₀), (E_g^1, η₀), (E_g^0, η₁), (E_g^1, η₁).
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 0, 0), false)).K0, Z(n) + Zm(2));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 0, 0), false)).k1(), Z(n) + Zm(2));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 1, 0), false)).K0, Z(n));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 1, 0), false)).k1(), Z(n) + Zm(2));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 0, 1), false)).K0, Z(n) + Zm(2));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 0, 1), false)).k1(), Z(n));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 1, 1), false)).K0, Z(n));
    EXPECT_EQ(ahss_k_groups(TwistClass::from_pair(surface_pair(g, 1, 1), false)).k1(), Z(n));
    // Twisted columns: K⁰ determined, K¹ the four "*" entries.
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) {
        const auto t = ahss_k_groups(TwistClass::from_pair(surface_pair(g, j, k), true));
        EXPECT_EQ(t.K0, j == 0 ? Z(n) + Zm(2) : Z(n));
        ASSERT_TRUE(t.ambiguous());
        const auto& amb = std::get<AmbiguousExtension>(t.K1);
        EXPECT_EQ(amb.sub, Z());
        EXPECT_EQ(amb.quot, Z(n - 1) + Zm(2));
        EXPECT_EQ(amb.candidates.size(), 2u);
        const auto r = resolved_k_groups(surface_pair(g, j, k), true);
        EXPECT_EQ(r.k1(), k == 0 ? Z(n) + Zm(2) : Z(n));
      }
  }
}

TEST(Ahss, CrosscapBundleTables) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k) {
        const auto p = crosscap_pair(n, j, k);
        const auto u = resolved_k_groups(p, false);
        const FGAbelianGroup tors = j % 2 == 0 ? Zm(2) + Zm(2) : Zm(4);
        const FGAbelianGroup kt = k % 2 == 0 ? Zm(2) + Zm(2) : Zm(4);
        if (k == 0) {
          EXPECT_EQ(u.K0, Z(n) + tors);
          EXPECT_EQ(u.k1(), Z(n));
        } else {
          EXPECT_EQ(u.K0, Z(n - 1) + tors);
          EXPECT_EQ(u.k1(), Z(n - 1) + Zm(k));
        }
        const auto t = resolved_k_groups(p, true);
        if (j == 0) {
          EXPECT_EQ(t.K0, Z(n));
          EXPECT_EQ(t.k1(), Z(n) + kt);
        } else {
          EXPECT_EQ(t.K0, Z(n - 1) + Zm(j));
          EXPECT_EQ(t.k1(), Z(n - 1) + kt);
        }
      }
}

TEST(Resolve, UnambiguousInputUnchanged) {
  const auto k = ahss_k_groups(TwistClass::from_pair(surface_pair(1, 1, 1), false));
  const auto r = resolve_by_tduality(k, k);
  EXPECT_EQ(r.K0, k.K0);
  EXPECT_EQ(r.k1(), k.k1());
}

TEST(Resolve, NoMatchingCandidate) {
  const auto amb = ahss_k_groups(TwistClass::from_pair(surface_pair(1, 0, 0), true));
  KGroups bogus;
  bogus.K0 = Zm(7);
  bogus.K1 = zero;
  try {
    resolve_by_tduality(amb, bogus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoMatchingCandidate);
  }
}

TEST(Ahss, TwistedSideNeverSilentlyResolvedWrongly) {
  // With [w] ≠ 0 there is no differential; E∞ = E₂.
  for (const auto& p : all_pairs()) {
    const auto t = ahss_k_groups(TwistClass::from_pair(p, true));
    const auto groups = bundle::total_cohomology(p.bundle, p.xi());
    for (std::size_t i = 0; i < groups.size(); ++i) EXPECT_EQ(t.E_infinity[i], groups[i]);
  }
}

TEST(Ahss, RejectsHighDimension) {
  const auto s = catalog::three_torus();
  const BundleDescriptor b(s.complex, s.trivial(), IntVector(s.complex.count(2)));
  try {
    ahss_k_groups(identity_twist(b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooHigh);
  }
}

TEST(KExchange, TdualSwapsDegreesAndTwists) {
  for (const auto& p : all_pairs()) {
    const auto dual = duality::construct_tdual(p).dual;
    for (bool xi : {false, true}) {
      const auto a = resolved_k_groups(p, xi);
      const auto b = resolved_k_groups(dual, !xi);
      EXPECT_EQ(a.K0, b.k1());
      EXPECT_EQ(a.k1(), b.K0);
    }
  }
}

TEST(Rational, ChernCharacterRanks) {
  for (const auto& p : all_pairs())
    for (bool xi : {false, true}) {
      const auto r = rational_consistency(resolved_k_groups(p, xi), duality::small_twisted_cohomology(p, xi));
      EXPECT_TRUE(r.ok) << r.rank0 << " " << r.rank1 << " vs " << r.even << " " << r.odd;
    }
}
