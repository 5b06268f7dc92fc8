#include <gtest/gtest.h>

#include <random>

#include "qhs/fixtures.hpp"
#include "qhs/homology.hpp"
#include "qhs/seifert.hpp"

using namespace qhs;

TEST(Homology, InvariantFactors) {
  auto group = [](const PlumbingGraph& g) { return homology_from_lattice(build_lattice(g)).factors(); };
  EXPECT_EQ(group(lens_chain(7, 3)), std::vector<long>({7}));
  EXPECT_EQ(group(fixtures::d_graph(4)), std::vector<long>({2, 2}));
  EXPECT_EQ(group(fixtures::d_graph(5)), std::vector<long>({4}));
  EXPECT_TRUE(group(star_graph(fixtures::e8_seifert())).empty());
  EXPECT_EQ(group(star_graph(fixtures::rational_family_seifert(3))), std::vector<long>({3, 9}));
}

TEST(Homology, ClassesAndLifts) {
  for (const auto& named : fixtures::corpus()) {
    LatticeData L = build_lattice(named.graph);
    FinAbGroup H = homology_from_lattice(L);
    ASSERT_EQ(H.order(), L.order_H()) << named.name;
    const std::size_t count = H.order().get_ui();
    for (std::size_t i = 0; i < std::min<std::size_t>(count, 60); ++i) {
      GroupElement h = H.element_at(i);
      EXPECT_EQ(H.index_of(h), i);
      EXPECT_EQ(H.class_of(H.lift(h)), h) << named.name;
    }
    // the columns of I are relations
    for (std::size_t v = 0; v < L.size(); ++v) {
      std::vector<BigInt> col(L.size());
      for (std::size_t r = 0; r < L.size(); ++r) col[r] = L.I(r, v);
      EXPECT_EQ(H.class_of(col), H.zero()) << named.name;
    }
  }
}

TEST(Homology, CharacterOrthogonality) {
  LatticeData L = build_lattice(star_graph(fixtures::rational_family_seifert(3)));
  FinAbGroup H = homology_from_lattice(L);
  auto chars = characters(H);
  ASSERT_EQ(chars.size(), 27u);
  auto F = CyclotomicField::get(H.exponent());
  for (std::size_t i = 0; i < 27; ++i) {
    GroupElement h = H.element_at(i);
    CycNum sum(F);
    for (const auto& chi : chars) sum += character_value(H, chi, h);
    EXPECT_EQ(sum, CycNum(F, BigRational(i == 0 ? 27 : 0)));
  }
  EXPECT_THROW(characters(H, 10), Error);
}

TEST(Homology, LinkingForm) {
  LatticeData L = build_lattice(fixtures::a_chain(1));
  FinAbGroup H = homology_from_lattice(L);
  EXPECT_EQ(linking_form(L, H, H.generator(0), H.generator(0)), BigRational(1, 2));
  for (const auto& named : fixtures::corpus()) {
    LatticeData M = build_lattice(named.graph);
    FinAbGroup G = homology_from_lattice(M);
    for (std::size_t v = 0; v < M.size(); ++v)
      for (std::size_t w = 0; w < M.size(); ++w)
        EXPECT_EQ(linking_form(M, G, G.generator(v), G.generator(w)), mod_one(-M.Iinv(v, w))) << named.name;
  }
}

TEST(Homology, QuadraticFunctionLaw) {
  std::mt19937 rng(3);
  for (const auto& named : fixtures::corpus()) {
    LatticeData L = build_lattice(named.graph);
    FinAbGroup H = homology_from_lattice(L);
    const long order = to_long(H.order());
    for (int t = 0; t < 20; ++t) {
      GroupElement x = H.element_at(rng() % order), y = H.element_at(rng() % order);
      EXPECT_EQ(mod_one(q_can(L, H, H.add(x, y)) - q_can(L, H, x) - q_can(L, H, y)), linking_form(L, H, x, y)) << named.name;
      auto d = H.lift(x);
      auto shifted = d;
      for (std::size_t v = 0; v < L.size(); ++v) {
        long u = static_cast<long>(rng() % 7) - 3;
        for (std::size_t r = 0; r < L.size(); ++r) shifted[r] += L.I(r, v) * u;
      }
      EXPECT_EQ(q_can_of_lift(L, shifted), q_can_of_lift(L, d)) << named.name;
    }
  }
}

TEST(Homology, SpincConjugationIsInvolution) {
  for (const auto& named : fixtures::corpus()) {
    LatticeData L = build_lattice(named.graph);
    FinAbGroup H = homology_from_lattice(L);
    const long order = to_long(H.order());
    for (long i = 0; i < std::min(order, 20L); ++i) {
      GroupElement h = H.element_at(static_cast<std::size_t>(i));
      EXPECT_EQ(spinc_conjugate(L, H, spinc_conjugate(L, H, h)), h);
    }
    // the canonical structure is self-conjugate exactly when it is spin
    const bool spin = spinc_conjugate(L, H, H.zero()) == H.zero();
    EXPECT_EQ(spin, numerically_gorenstein(L)) << named.name;
  }
}

TEST(Homology, GaussSums) {
  for (const auto& named : fixtures::corpus()) {
    LatticeData L = build_lattice(named.graph);
    FinAbGroup H = homology_from_lattice(L);
    if (H.order() > 500) continue;
    EXPECT_LT(gauss_sum_check(L, H).error(), 1e-9) << named.name;
  }
}
