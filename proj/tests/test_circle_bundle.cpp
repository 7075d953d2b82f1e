#include <gtest/gtest.h>

#include <random>

#include "tdual/catalog/builders.hpp"
#include "tdual/exact/induced.hpp"
#include "test_support.hpp"

using namespace tdual;
using namespace tdual::bundle;
using exact::FGAbelianGroup;

namespace {

FGAbelianGroup Z(std::size_t r = 1) { return FGAbelianGroup::free(r); }
FGAbelianGroup Zm(long long m) { return FGAbelianGroup::cyclic(m); }
const FGAbelianGroup zero{};
using Groups = std::vector<FGAbelianGroup>;

struct Case {
  catalog::Space space;
  long long j;
};

std::vector<Case> bundle_cases() {
  std::vector<Case> c;
  c.push_back({catalog::circle(), 0});
  for (std::size_t g = 1; g <= 3; ++g)
    for (long long j = 0; j <= 1; ++j) c.push_back({catalog::sigma(g), j});
  for (std::size_t n = 1; n <= 3; ++n)
    for (long long j = 0; j <= 3; ++j) c.push_back({catalog::crosscap_sum(n), j});
  return c;
}

}  // namespace

TEST(Bundle, KleinBottleOverCircle) {
  const auto s = catalog::circle();
  const auto k = catalog::build_bundle(s, 0);
  EXPECT_EQ(total_cohomology(k, s.trivial()), (Groups{Z(), Z(), Zm(2)}));
  EXPECT_EQ(total_cohomology(k, k.xi), (Groups{zero, Z() + Zm(2), Z()}));
  const auto t2 = catalog::build_bundle(s, {0}, 0);
  EXPECT_EQ(total_cohomology(t2, s.trivial()), (Groups{Z(), Z(2), Z()}));
}

TEST(Bundle, SurfaceBundleTables) {
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto s = catalog::sigma(g);
    const auto e0 = catalog::build_bundle(s, 0);
    const auto e1 = catalog::build_bundle(s, 1);
    EXPECT_EQ(total_cohomology(e0, s.trivial()), (Groups{Z(), Z(2 * g), Z(2 * g - 1) + Zm(2), Zm(2)}));
    EXPECT_EQ(total_cohomology(e0, e0.xi), (Groups{zero, Z(2 * g - 1) + Zm(2), Z(2 * g) + Zm(2), Z()}));
    EXPECT_EQ(total_cohomology(e1, s.trivial()), (Groups{Z(), Z(2 * g), Z(2 * g - 1), Zm(2)}));
    EXPECT_EQ(total_cohomology(e1, e1.xi), (Groups{zero, Z(2 * g - 1) + Zm(2), Z(2 * g), Z()}));
  }
}

TEST(Bundle, CrosscapBundleTables) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto m = catalog::crosscap_sum(n);
    for (long long j = 0; j <= 4; ++j) {
      const auto e = catalog::build_bundle(m, j);
      const FGAbelianGroup h2 = j % 2 == 0 ? Z(n - 1) + Zm(2) + Zm(2) : Z(n - 1) + Zm(4);
      EXPECT_EQ(total_cohomology(e, m.trivial()), (Groups{Z(), Z(n - 1), h2, Z()})) << "n=" << n << " j=" << j;
      const Groups twisted = j == 0 ? Groups{zero, Z(n) + Zm(2), Z(n), Zm(2)}
                                    : Groups{zero, Z(n - 1) + Zm(2), Z(n - 1) + Zm(j), Zm(2)};
      EXPECT_EQ(total_cohomology(e, e.xi), twisted) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Bundle, TrivialBundleIsKunneth) {
  for (const auto& s : {catalog::torus(), catalog::klein_bottle(), catalog::sigma(2), catalog::crosscap_sum(2)}) {
    const BundleDescriptor b(s.complex, s.trivial(), IntVector(s.complex.count(2)));
    const auto hm = simplicial::cohomology(s.complex, s.trivial());
    const auto he = total_cohomology(b, s.trivial());
    ASSERT_EQ(he.size(), hm.size() + 1);
    for (std::size_t k = 0; k < he.size(); ++k) {
      FGAbelianGroup expect = k < hm.size() ? hm[k] : zero;
      if (k >= 1) expect = expect + hm[k - 1];
      EXPECT_EQ(he[k], expect) << s.id << " k=" << k;
    }
  }
}

TEST(Bundle, DifferentialSquaresToZero) {
  std::mt19937_64 rng(7);
  for (const auto& c : bundle_cases()) {
    const auto e = catalog::build_bundle(c.space, c.j);
    EXPECT_NO_THROW(TotalComplex(e, c.space.trivial()).complex().check());
    EXPECT_NO_THROW(TotalComplex(e, e.xi).complex().check());
  }
  // Arbitrary ξ and non-generator Euler cocycles.
  const auto s = catalog::sigma(2);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> bits(4);
    for (auto& b : bits) b = static_cast<int>(rng() % 2);
    const auto xi = s.local_system(bits);
    const BundleDescriptor b(s.complex, xi, testing_support::random_vector(rng, s.complex.count(2), -3, 3));
    EXPECT_NO_THROW(TotalComplex(b, xi).complex().check());
  }
}

TEST(Bundle, RejectsBadDescriptor) {
  const auto s = catalog::sigma(1);
  try {
    BundleDescriptor(s.complex, s.trivial(), IntVector(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDescriptor);
  }
  EXPECT_THROW(catalog::build_bundle(s, 2), Error);
  EXPECT_THROW(catalog::build_bundle(s, {0, 0}, 0), Error);
}

TEST(Bundle, PullbackAndPushforward) {
  std::mt19937_64 rng(9);
  const auto m = catalog::crosscap_sum(2);
  const auto e = catalog::build_bundle(m, 1);
  const TotalComplex tc(e, m.trivial());
  for (std::size_t k = 0; k <= 2; ++k) {
    const IntVector a = testing_support::random_vector(rng, m.complex.count(k), -4, 4);
    EXPECT_TRUE(exact::is_zero(tc.pushforward(tc.pullback(a, k), k)));
    if (k < 2) {
      EXPECT_EQ(tc.differential(tc.pullback(a, k), k), tc.pullback(simplicial::coboundary(m.complex, m.trivial(), k) * a, k + 1));
    }
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    const IntVector x = testing_support::random_vector(rng, tc.complex().dims[k], -4, 4);
    EXPECT_EQ(tc.pushforward(tc.differential(x, k), k + 1),
              simplicial::coboundary(m.complex, tc.zeta_xi(), k - 1) * tc.pushforward(x, k));
  }
}

TEST(Bundle, PullbackOfCircleGeneratorOnKlein) {
  const auto s = catalog::circle();
  const auto k = catalog::build_bundle(s, 0);
  const TotalComplex tc(k, s.trivial());
  const auto h1 = exact::cohomology_at(tc.complex(), 1);
  EXPECT_FALSE(h1.is_boundary(tc.pullback(IntVector{1}, 1)));
}

TEST(Bundle, ProjectionFormulaAndRightLeibniz) {
  std::mt19937_64 rng(13);
  const auto s = catalog::sigma(2);
  const auto e = catalog::build_bundle(s, 1);
  const TotalComplex tc(e, s.trivial());
  const auto& x = s.complex;
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t k = 0; k <= 2; ++k)
      for (std::size_t p = 0; p + k <= 3; ++p) {
        if (p > 2) continue;
        const IntVector a = testing_support::random_vector(rng, x.count(p), -3, 3);
        const IntVector v = testing_support::random_vector(rng, tc.complex().dims[k], -3, 3);
        IntVector lhs = tc.pushforward(tc.left_multiply(a, p, v, k), k + p);
        IntVector rhs = k == 0 ? IntVector(tc.fiber_count(k + p)) : simplicial::cup(x, a, p, tc.pushforward(v, k), k - 1, tc.zeta_xi());
        if (p % 2 == 1) rhs = exact::scale(rhs, -1);
        ASSERT_EQ(lhs, rhs);
      }
    // δ(x·c) = δx·c + (-1)^k x·δc for a trivial-coefficient base cochain c.
    for (std::size_t k = 0; k <= 2; ++k)
      for (std::size_t q = 0; k + q + 1 <= 3 && q <= 1; ++q) {
        const IntVector v = testing_support::random_vector(rng, tc.complex().dims[k], -3, 3);
        const IntVector c = testing_support::random_vector(rng, x.count(q), -3, 3);
        const IntVector lhs = tc.differential(tc.right_multiply(v, k, c, q, s.trivial()), k + q);
        const IntVector t1 = tc.right_multiply(tc.differential(v, k), k + 1, c, q, s.trivial());
        const IntVector t2 = tc.right_multiply(v, k, simplicial::coboundary(x, s.trivial(), q) * c, q + 1, s.trivial());
        ASSERT_EQ(lhs, k % 2 == 0 ? exact::add(t1, t2) : exact::sub(t1, t2)) << "k=" << k << " q=" << q;
      }
  }
}

TEST(Bundle, TrivialBundleFundamentalClass) {
  const auto s = catalog::torus();
  const BundleDescriptor b(s.complex, s.trivial(), IntVector(2));
  const TotalComplex tc(b, s.trivial());
  // 1 × fibre class is (0, 1) in degree 1; it pushes forward to the unit.
  const IntVector fibre = tc.join(IntVector(3), IntVector{1});
  EXPECT_TRUE(exact::is_zero(tc.differential(fibre, 1)));
  EXPECT_EQ(tc.pushforward(fibre, 1), IntVector{1});
}

TEST(Bundle, GaugeAction) {
  const auto s = catalog::sigma(1);
  const auto e = catalog::build_bundle(s, 0);
  const TotalComplex tc(e, s.trivial());
  const auto h3 = exact::cohomology_at(tc.complex(), 3);
  const auto h1xi = exact::cohomology_at(simplicial::cochain_complex(s.complex, e.xi), 1);
  const auto h2xi = exact::cohomology_at(simplicial::cochain_complex(s.complex, e.xi), 2);
  const IntVector fhat = h2xi.generators()[0];
  const IntVector eta = tc.join(IntVector(0), fhat);  // (H3, F̂) with H3 on an empty C^3
  ASSERT_TRUE(exact::is_zero(tc.differential(eta, 3)));
  const IntVector zero_alpha(s.complex.count(1));
  EXPECT_EQ(gauge_action(tc, eta, 3, zero_alpha), eta);
  // Pushforward-free cocycles are fixed.
  const IntVector pulled = tc.pullback(IntVector(s.complex.count(2)), 2);
  EXPECT_EQ(gauge_action(tc, pulled, 2, h1xi.generators()[0]), pulled);
  for (const auto& alpha : h1xi.generators()) {
    const IntVector shifted = gauge_action(tc, eta, 3, alpha);
    const IntVector expected_shift = tc.pullback(simplicial::cup(s.complex, alpha, 1, fhat, 2, tc.zeta_xi()), 3);
    EXPECT_EQ(h3.class_of(exact::sub(shifted, eta)), h3.class_of(expected_shift));
    EXPECT_TRUE(exact::is_zero(tc.differential(shifted, 3)));
  }
  EXPECT_THROW(gauge_action(tc, eta, 3, IntVector{1, 0, 0, 0, 0, 0}), Error);
}

TEST(Bundle, GaugeActionIsAdditiveOnClasses) {
  std::mt19937_64 rng(17);
  const auto m = catalog::crosscap_sum(2);
  const auto e = catalog::build_bundle(m, 1);
  const TotalComplex tc(e, m.trivial());
  const auto h2 = exact::cohomology_at(tc.complex(), 2);
  const auto h1xi = exact::cohomology_at(simplicial::cochain_complex(m.complex, e.xi), 1);
  const auto& alpha = h1xi.generators().back();
  for (int trial = 0; trial < 5; ++trial) {
    IntVector c1(h2.generators().size()), c2(h2.generators().size());
    for (std::size_t i = 0; i < c1.size(); ++i) {
      c1[i] = testing_support::uniform(rng, -3, 3);
      c2[i] = testing_support::uniform(rng, -3, 3);
    }
    const IntVector x1 = h2.representative(c1), x2 = h2.representative(c2);
    const IntVector lhs = gauge_action(tc, exact::add(x1, x2), 2, alpha);
    const IntVector rhs = exact::sub(exact::add(gauge_action(tc, x1, 2, alpha), gauge_action(tc, x2, 2, alpha)),
                                     exact::IntVector(x1.size()));
    EXPECT_EQ(h2.class_of(lhs), h2.class_of(rhs));
  }
}

TEST(Bundle, SameBundle) {
  const auto s = catalog::sigma(2);
  const auto e1 = catalog::build_bundle(s, 1);
  const auto e0 = catalog::build_bundle(s, 0);
  EXPECT_FALSE(same_bundle(e0, e1));
  EXPECT_TRUE(same_bundle(e1, BundleDescriptor(s.complex, e1.xi, exact::scale(e1.euler, -1))));
  const IntVector t = simplicial::coboundary(s.complex, e1.xi, 1) * IntVector{1, 2, 0, -1, 1, 0, 0, 3, 0, 0, 0, 1};
  EXPECT_TRUE(same_bundle(e1, BundleDescriptor(s.complex, e1.xi, exact::add(e1.euler, t))));

  const auto m = catalog::crosscap_sum(2);
  const auto f3 = catalog::build_bundle(m, 3);
  EXPECT_TRUE(same_bundle(f3, BundleDescriptor(m.complex, f3.xi, exact::scale(f3.euler, -1))));
  EXPECT_FALSE(same_bundle(f3, catalog::build_bundle(m, 2)));

  // A regauged ξ with the matching Euler cocycle.
  std::vector<int> flipped = e1.xi.signs();
  std::vector<int> t_vertex{1, -1};
  for (std::size_t ed = 0; ed < s.complex.count(1); ++ed) {
    const auto& v = s.complex.vertices(1, ed);
    flipped[ed] *= t_vertex[v[0]] * t_vertex[v[1]];
  }
  const LocalSystem xi2(s.complex, flipped);
  const BundleDescriptor e1b(s.complex, xi2, regauge(s.complex, e1.euler, 2, t_vertex));
  EXPECT_TRUE(same_bundle(e1, e1b));
  EXPECT_FALSE(same_bundle(e0, e1b));
}

TEST(Bundle, GysinSequenceIsExact) {
  for (const auto& c : bundle_cases()) {
    const auto e = catalog::build_bundle(c.space, c.j);
    const auto& m = c.space.complex;
    for (const auto& zeta : {c.space.trivial(), e.xi}) {
      const TotalComplex tc(e, zeta);
      const auto base = simplicial::cochain_complex(m, zeta);
      const auto fib = simplicial::cochain_complex(m, tc.zeta_xi());
      const std::size_t top = tc.dimension();
      // H^i(M) -> H^i(E) -> H^{i-1}(M, ζξ) -> H^{i+1}(M) -> H^{i+1}(E)
      for (std::size_t i = 0; i <= top; ++i) {
        const bool has_base = i < base.dims.size();
        const auto hE = exact::cohomology_at(tc.complex(), i);
        if (has_base) {
          const auto hM = exact::cohomology_at(base, i);
          const IntMatrix f = exact::induced_map(hM, hE, tc.pullback_matrix(i));
          IntMatrix g(0, hE.generators().size());
          std::vector<exact::Integer> c_orders;
          if (i >= 1) {
            const auto hF = exact::cohomology_at(fib, i - 1);
            g = exact::induced_map(hE, hF, tc.pushforward_matrix(i));
            c_orders = hF.orders();
          }
          ASSERT_TRUE(exact::is_exact_at(f, hE.orders(), g, c_orders)) << c.space.id << " j=" << c.j << " i=" << i;
        }
        if (i >= 1) {
          // Exactness at H^{i-1}(M, ζξ): image of π_* equals kernel of ±e⌣.
          const auto hF = exact::cohomology_at(fib, i - 1);
          const IntMatrix f = exact::induced_map(hE, hF, tc.pushforward_matrix(i));
          IntMatrix g(0, hF.generators().size());
          std::vector<exact::Integer> c_orders;
          if (i + 1 < base.dims.size()) {
            const auto hM = exact::cohomology_at(base, i + 1);
            g = exact::induced_map(hF, hM, simplicial::cup_left_matrix(m, e.euler, 2, i - 1, tc.zeta_xi()));
            c_orders = hM.orders();
          }
          ASSERT_TRUE(exact::is_exact_at(f, hF.orders(), g, c_orders)) << c.space.id << " j=" << c.j << " i=" << i;
        }
      }
    }
  }
}

TEST(Bundle, FirstHomologyMatchesFundamentalGroup) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto m = catalog::crosscap_sum(n);
    for (long long j = 0; j <= 4; ++j) {
      const auto e = catalog::build_bundle(m, j);
      exact::IntMatrix rows(2, n + 1);
      for (std::size_t i = 0; i < n; ++i) rows(0, i) = 2;
      rows(0, n) = -j;
      rows(1, n) = 2;
      const auto pi1_ab = exact::normal_form(exact::PresentedGroup::from_relation_rows(n + 1, rows));
      EXPECT_EQ(total_homology(e, m.trivial())[1], pi1_ab) << "n=" << n << " j=" << j;
      EXPECT_EQ(pi1_ab, j % 2 == 0 ? Z(n - 1) + Zm(2) + Zm(2) : Z(n - 1) + Zm(4));
    }
  }
}

TEST(Bundle, PoincareDualityOnTotalModels) {
  for (const auto& c : bundle_cases()) {
    const auto e = catalog::build_bundle(c.space, c.j);
    const auto orn_m = c.space.local_system(catalog::orientation_bits(c.space));
    const auto orn = total_orientation(e, orn_m);
    for (const auto& zeta : {c.space.trivial(), e.xi}) {
      const auto rep = simplicial::poincare_duality_check(TotalComplex(e, zeta).complex(),
                                                          TotalComplex(e, zeta * orn).complex(),
                                                          TotalComplex(e, zeta).dimension());
      EXPECT_TRUE(rep.ok) << c.space.id << " j=" << c.j << ": " << (rep.failures.empty() ? "" : rep.failures[0]);
    }
  }
}
