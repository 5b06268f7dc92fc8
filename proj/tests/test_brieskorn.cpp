#include <gtest/gtest.h>

#include <numeric>

#include "qhs/brieskorn.hpp"
#include "qhs/fixtures.hpp"

using namespace qhs;

TEST(Brieskorn, Classification) {
  auto c235 = classify(make_brieskorn({2, 3, 5}));
  EXPECT_EQ(c235.kind, BrieskornCase::CaseI);
  EXPECT_EQ(c235.d, 1);

  auto c465 = classify(make_brieskorn({4, 6, 5}));
  EXPECT_EQ(c465.kind, BrieskornCase::CaseI);
  EXPECT_EQ(c465.d, 2);
  EXPECT_EQ(c465.b, std::vector<long>({2, 3, 5}));

  auto c4223 = classify(make_brieskorn({4, 2, 2, 3}));
  EXPECT_EQ(c4223.kind, BrieskornCase::CaseII);
  EXPECT_EQ(c4223.c, 2);
  EXPECT_EQ(c4223.b, std::vector<long>({1, 1, 1, 3}));

  EXPECT_EQ(classify(make_brieskorn({2, 2, 2, 2})).kind, BrieskornCase::NotQHS);
  EXPECT_THROW(order_of_H(make_brieskorn({2, 2, 2, 2})), Error);
  EXPECT_THROW(make_brieskorn({2, 3}), Error);
}

TEST(Brieskorn, OrderOfH) {
  EXPECT_EQ(order_of_H(make_brieskorn({2, 3, 5})), 1);
  EXPECT_EQ(order_of_H(make_brieskorn({4, 6, 5})), 5);
  EXPECT_EQ(order_of_H(make_brieskorn({6, 10, 7})), 7);
  EXPECT_EQ(order_of_H(make_brieskorn({6, 10, 7, 11})), 77);
  EXPECT_EQ(order_of_H(make_brieskorn({4, 2, 2, 3})), 108);
  EXPECT_EQ(order_of_H(make_brieskorn({8, 2, 2, 3, 5})), 27000);
}

TEST(Brieskorn, SeifertData) {
  EXPECT_EQ(brieskorn_seifert(make_brieskorn({2, 3, 5})).e, BigRational(-1, 30));
  EXPECT_EQ(brieskorn_seifert(make_brieskorn({2, 3, 7})).e, BigRational(-1, 42));
  EXPECT_EQ(brieskorn_seifert(make_brieskorn({4, 6, 5})).e, BigRational(-1, 30));
  for (const auto& a : fixtures::brieskorn_corpus()) {
    auto spec = make_brieskorn(a);
    auto s = brieskorn_seifert(spec);
    EXPECT_EQ(s.order_H(), order_of_H(spec));
    if (classify(spec).kind == BrieskornCase::CaseII) {
      EXPECT_EQ(s.b % 2, 0);
    }
    // any four exponents are coprime
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) EXPECT_EQ(std::gcd(std::gcd(a[i], a[j]), std::gcd(a[k], a[l])), 1);
  }
}

TEST(Brieskorn, ClosedFormsMatchPlumbing) {
  for (const auto& a : fixtures::brieskorn_corpus()) {
    auto spec = make_brieskorn(a);
    auto rep = closed_form_invariants(spec);
    EXPECT_TRUE(rep.gorenstein_check);
    EXPECT_TRUE(rep.dedekind_check);
    if (rep.order_H > 10000) continue;
    auto report = compute_report(star_graph(brieskorn_seifert(spec)));
    EXPECT_EQ(report.order_H, rep.order_H);
    EXPECT_EQ(report.torsion_at_1, rep.torsion_closed);
    EXPECT_EQ(report.casson_walker, rep.lambda_closed);
    EXPECT_EQ(report.sw0, rep.sw0);
  }
}

TEST(Brieskorn, KnownValues) {
  auto e8 = closed_form_invariants(make_brieskorn({2, 3, 5}));
  EXPECT_EQ(e8.torsion_closed, 0);
  EXPECT_EQ(e8.sw0, 1);
  EXPECT_EQ(e8.sigma_F, -8);
  auto r465 = closed_form_invariants(make_brieskorn({4, 6, 5}));
  EXPECT_EQ(r465.torsion_closed, BigRational(30 * 2, 24) * (1 - BigRational(1, 25)));
  EXPECT_TRUE(closed_form_invariants(make_brieskorn({2, 3, 7})).gorenstein_check);
}

TEST(Brieskorn, MoreExponents) {
  // further genus-zero exponent lists, each checked against the plumbing pipeline
  for (std::vector<long> a : std::vector<std::vector<long>>{{2, 3, 4}, {2, 4, 6}, {3, 4, 5}, {2, 5, 7}, {2, 2, 3, 5}, {3, 3, 4}}) {
    auto spec = make_brieskorn(a);
    if (classify(spec).kind == BrieskornCase::NotQHS) continue;
    auto rep = closed_form_invariants(spec);
    EXPECT_TRUE(rep.gorenstein_check) << fixtures::join(a);
    if (rep.order_H > 2000) continue;
    auto report = compute_report(star_graph(brieskorn_seifert(spec)));
    EXPECT_EQ(report.torsion_at_1, rep.torsion_closed) << fixtures::join(a);
    EXPECT_EQ(report.casson_walker, rep.lambda_closed) << fixtures::join(a);
  }
}
