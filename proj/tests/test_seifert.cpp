#include <gtest/gtest.h>

#include <random>

#include "qhs/fixtures.hpp"
#include "qhs/seifert.hpp"

using namespace qhs;

TEST(Seifert, ContinuedFractions) {
  EXPECT_EQ(hj_expand(2, 1), std::vector<long>({2}));
  EXPECT_EQ(hj_expand(3, 2), std::vector<long>({2, 2}));
  EXPECT_EQ(hj_expand(5, 3), std::vector<long>({2, 3}));
  EXPECT_EQ(hj_expand(7, 3), std::vector<long>({3, 2, 2}));
  EXPECT_THROW(hj_expand(4, 2), Error);
}

TEST(Seifert, Graphs) {
  auto d4 = star_graph(fixtures::d_seifert(4));
  ASSERT_EQ(d4.size(), 4u);
  for (const auto& v : d4.vertices) EXPECT_EQ(v.euler, -2);

  auto m2 = star_graph(fixtures::rational_family_seifert(2));
  ASSERT_EQ(m2.size(), 4u);
  EXPECT_EQ(m2.vertices[0].euler, -3);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(m2.vertices[i].euler, -2);

  EXPECT_EQ(star_graph(fixtures::e7_seifert()).size(), 7u);

  EXPECT_EQ(lens_chain(2, 1).vertices.size(), 1u);
  EXPECT_EQ(lens_chain(3, 2).vertices[1].euler, -2);
  EXPECT_EQ(lens_chain(4, 1).vertices[0].euler, -4);
  EXPECT_THROW(lens_chain(6, 3), Error);
}

TEST(Seifert, InvalidData) {
  EXPECT_THROW(make_seifert(-2, {{2, 1}, {3, 2}}), Error);
  EXPECT_THROW(make_seifert(-2, {{2, 1}, {4, 2}, {5, 1}}), Error);
  EXPECT_THROW(make_seifert(-2, {{1, 0}, {3, 1}, {5, 1}}), Error);
  EXPECT_THROW(make_seifert(0, {{2, 1}, {3, 1}, {5, 1}}), Error);
}

TEST(Seifert, KnownValues) {
  auto m3 = fixtures::rational_family_seifert(3);
  EXPECT_EQ(seifert_casson_walker(m3) / BigRational(m3.order_H()), BigRational(-7, 36));
  EXPECT_EQ(seifert_k2nv(fixtures::rational_family_seifert(2)), BigRational(10, 3));

  auto e7 = ks_route(fixtures::e7_seifert());
  EXPECT_EQ(e7.ks, 7);
  ASSERT_TRUE(e7.sw0_ks);
  EXPECT_EQ(*e7.sw0_ks, BigRational(7, 8));

  for (long n = 4; n <= 12; ++n) {
    auto ks = ks_route(fixtures::d_seifert(n));
    ASSERT_TRUE(ks.sw0_ks) << n;
    EXPECT_EQ(8 * *ks.sw0_ks, n);
    EXPECT_EQ(fixtures::d_seifert(n).rho0, BigRational(1, 2));
  }

  for (long m : {2L, 4L, 5L, 7L, 8L, 10L, 11L}) {
    auto ks = ks_route(fixtures::rational_family_seifert(m));
    ASSERT_TRUE(ks.applicable) << m;
    EXPECT_EQ(ks.s0_plus, to_long(floor_of(make_rational(m - 3, 6))) + 1) << m;
    EXPECT_EQ(ks.s0_minus, 0);
    EXPECT_EQ(8 * *ks.sw0_ks, 3 * m - make_rational(m, 3) - 2) << m;
  }
  // rho_0 = 0 and a nonempty monopole window: reported, not forced
  EXPECT_FALSE(ks_route(fixtures::rational_family_seifert(3)).applicable);
  EXPECT_FALSE(ks_route(fixtures::rational_family_seifert(9)).applicable);

  auto poly = ks_route(fixtures::polygonal_seifert({3, 4, 5}));
  EXPECT_EQ(poly.s0_plus, 1);
  EXPECT_EQ(poly.s0_minus, 1);
  ASSERT_TRUE(poly.sw0_ks);
  EXPECT_EQ(8 * *poly.sw0_ks, 17 + 3 - 12);
}

TEST(Seifert, RandomRoundTrip) {
  std::mt19937 rng(11);
  int accepted = 0;
  while (accepted < 30) {
    const long nu = 3 + static_cast<long>(rng() % 3);
    std::vector<SeifertArm> arms;
    BigRational sum = 0;
    for (long i = 0; i < nu; ++i) {
      long alpha = 2 + static_cast<long>(rng() % 11), omega = 1 + static_cast<long>(rng() % (alpha - 1));
      while (std::gcd(alpha, omega) != 1) omega = 1 + static_cast<long>(rng() % (alpha - 1));
      arms.push_back({alpha, omega});
      sum += make_rational(omega, alpha);
    }
    const long b = -to_long(ceil_of(sum)) - static_cast<long>(rng() % 2);
    if (b + sum >= 0) continue;
    auto s = make_seifert(b, arms);
    ++accepted;
    EXPECT_LE(BigRational(s.b), s.e);
    EXPECT_LT(s.e, 0);
    LatticeData L = build_lattice(star_graph(s));
    EXPECT_EQ(L.order_H(), s.order_H());
    EXPECT_EQ(casson_walker(L), seifert_casson_walker(s));
    EXPECT_EQ(seifert_casson_walker(s, default_dedekind(), 1), seifert_casson_walker(s));
    EXPECT_EQ(k2_plus_nv(L), seifert_k2nv(s));
    FinAbGroup H = homology_from_lattice(L);
    if (H.order() > 300) continue;
    TorsionContext ctx(L, H);
    auto base = torsion_base_values(ctx);
    const BigRational t1 = torsion_table_from(ctx, base, H.zero()).t_at_1;
    EXPECT_EQ(seifert_torsion_shortcut(s, H, H.zero()), t1);
    auto ks = ks_route(s);
    if (ks.sw0_ks) {
      EXPECT_EQ(*ks.sw0_ks, sw0_from(t1, casson_walker(L), H.order()));
    }
  }
}

TEST(Seifert, ShortcutOnCorpus) {
  std::vector<SeifertData> stars{fixtures::d_seifert(4), fixtures::d_seifert(7), fixtures::e6_seifert(),
                                 fixtures::e7_seifert(), fixtures::rational_family_seifert(3),
                                 fixtures::polygonal_seifert({3, 3, 3, 3})};
  for (const auto& s : stars) {
    LatticeData L = build_lattice(star_graph(s));
    FinAbGroup H = homology_from_lattice(L);
    const std::size_t count = H.order().get_ui();
    for (std::size_t i = 0; i < std::min<std::size_t>(count, 10); ++i) {
      GroupElement h = H.element_at(i);
      EXPECT_EQ(seifert_torsion_shortcut(s, H, h), torsion_table(L, H, h).t_at_1);
    }
  }
}
