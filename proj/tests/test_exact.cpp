#include <gtest/gtest.h>

#include <random>

#include "qhs/exact/cyclotomic.hpp"
#include "qhs/exact/matrix.hpp"

using namespace qhs;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Cofactor-expansion determinant, the independent oracle.
BigInt cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    BigInt term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

RatMatrix adjugate_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  BigInt det = cofactor_det(a);
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt cof = 1;
      if (n > 1) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c)
            if (c != i) minor(rr, cc++) = a(r, c);
          ++rr;
        }
        cof = cofactor_det(minor);
      }
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = make_rational(cof, det);
    }
  return inv;
}

void expect_valid_smith(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(a.rows()));
  BigInt du = abs(determinant(s.U)), dv = abs(determinant(s.V));
  EXPECT_EQ(du, 1);
  EXPECT_EQ(dv, 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) { EXPECT_EQ(s.D(i, j), 0); }
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size() && d[i] != 0) { EXPECT_TRUE(d[i + 1] % d[i] == 0); }
    if (i + 1 < d.size() && d[i] == 0) { EXPECT_EQ(d[i + 1], 0); }
  }
}

}  // namespace

TEST(Smith, OneByOne) {
  auto s = smith_normal_form(IntMatrix{{-2}});
  EXPECT_EQ(s.D, (IntMatrix{{2}}));
}

TEST(Smith, A2Chain) {
  IntMatrix a{{-2, 1}, {1, -2}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 3}}));
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(cofactor_det(a)), 3);
}

TEST(Smith, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
}

TEST(Smith, RandomProperty) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    expect_valid_smith(random_matrix(rng, r, c, -6, 6));
  }
}

TEST(Smith, ProductOfDiagonalIsDeterminant) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, n, n, -5, 5);
    BigInt det = cofactor_det(a);
    if (det == 0) continue;
    BigInt prod = 1;
    for (const auto& d : smith_normal_form(a).diagonal()) prod *= d;
    EXPECT_EQ(prod, abs(det));
  }
}

TEST(Determinant, MatchesCofactor) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, n, n, -5, 5);
    EXPECT_EQ(determinant(a), cofactor_det(a));
  }
}

TEST(Determinant, LeadingMinors) {
  auto minors = leading_principal_minors(IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_EQ(minors[0], -2);
  EXPECT_EQ(minors[1], 3);
  EXPECT_EQ(minors[2], -4);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(invert_rational_matrix(IntMatrix{{-2}})(0, 0), BigRational(-1, 2));
  RatMatrix inv = invert_rational_matrix(IntMatrix{{-2, 1}, {1, -2}});
  EXPECT_EQ(inv(0, 0), BigRational(-2, 3));
  EXPECT_EQ(inv(0, 1), BigRational(-1, 3));
  EXPECT_EQ(inv(1, 1), BigRational(-2, 3));
  RatMatrix inv2 = invert_rational_matrix(IntMatrix{{-2, 1}, {1, -1}});
  EXPECT_EQ(inv2, (to_rational(IntMatrix{{-1, -1}, {-1, -2}})));
}

TEST(Inverse, Singular) {
  try {
    invert_rational_matrix(IntMatrix{{1, 2}, {2, 4}});
    FAIL() << "expected SingularMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Inverse, AgreesWithAdjugate) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 150; ++trial) {
    std::size_t n = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, n, n, -5, 5);
    if (cofactor_det(a) == 0) continue;
    ++checked;
    RatMatrix inv = invert_rational_matrix(a);
    EXPECT_EQ(inv, adjugate_inverse(a));
    EXPECT_EQ(to_rational(a) * inv, RatMatrix::identity(n));
  }
  EXPECT_GT(checked, 100);
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(static_cast<long>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
}

TEST(Cyclotomic, BasicIdentities) {
  auto f4 = CyclotomicField::get(4);
  CycNum i = CycNum::zeta(f4, 1);
  EXPECT_EQ(i * i, CycNum(f4, BigRational(-1)));

  auto f3 = CyclotomicField::get(3);
  CycNum w = CycNum::zeta(f3, 1) - CycNum(f3, BigRational(1));
  EXPECT_EQ(w.inverse() * w, CycNum(f3, BigRational(1)));
  EXPECT_EQ(cyc_as_rational(CycNum::zeta(f3, 1) + CycNum::zeta(f3, 2)), -1);

  auto f5 = CyclotomicField::get(5);
  CycNum x = CycNum::zeta(f5, 1) + CycNum::zeta(f5, 4);
  EXPECT_EQ(x * x + x, CycNum(f5, BigRational(1)));

  EXPECT_EQ(cyc_as_rational(CycNum(f5, BigRational(7, 3))), BigRational(7, 3));
  try {
    cyc_as_rational(CycNum::zeta(f5, 1));
    FAIL() << "expected NotRational";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRational);
  }
}

TEST(Cyclotomic, Errors) {
  auto f5 = CyclotomicField::get(5);
  auto f7 = CyclotomicField::get(7);
  try {
    CycNum(f5).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  try {
    (void)(CycNum::zeta(f5, 1) + CycNum::zeta(f7, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConductorMismatch);
  }
}

TEST(Cyclotomic, RootsSumToZero) {
  for (long n = 2; n <= 24; ++n) {
    auto f = CyclotomicField::get(n);
    CycNum total(f);
    for (long k = 0; k < n; ++k) total += CycNum::zeta(f, k);
    EXPECT_TRUE(total.is_zero()) << n;
  }
}

TEST(Cyclotomic, FieldAxiomsSampled) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (long n : {3L, 5L, 8L, 9L, 12L, 15L}) {
    auto f = CyclotomicField::get(n);
    auto random_elem = [&] {
      IntPoly p(f->degree());
      for (auto& c : p) c = coef(rng);
      return CycNum(f, p, BigInt(1 + rng() % 5));
    };
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_elem(), b = random_elem(), c = random_elem();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) { EXPECT_EQ(a * a.inverse(), CycNum(f, BigRational(1))); }
    }
  }
}

TEST(Cyclotomic, InverseOfZetaMinusOne) {
  for (long n : {2L, 6L, 10L, 12L, 30L}) {
    auto f = CyclotomicField::get(n);
    for (long k = 1; k < n; ++k) {
      CycNum u = CycNum::zeta(f, k) - CycNum(f, BigRational(1));
      EXPECT_EQ(inverse_zeta_minus_one(f, k), u.inverse()) << n << " " << k;
    }
  }
}

TEST(Cyclotomic, TraceIsGaloisSum) {
  auto f = CyclotomicField::get(12);
  CycNum z = CycNum::zeta(f, 1) * CycNum(f, BigRational(3, 2)) + CycNum::zeta(f, 4);
  CycNum galois_sum(f);
  for (long a : {1L, 5L, 7L, 11L})
    galois_sum += CycNum::zeta(f, a) * CycNum(f, BigRational(3, 2)) + CycNum::zeta(f, 4 * a);
  EXPECT_EQ(z.trace(), cyc_as_rational(galois_sum));
}

TEST(Cyclotomic, LargeConductorWithoutPowerTable) {
  auto f = CyclotomicField::get(4099);
  CycNum z = CycNum::zeta(f, 4098);
  EXPECT_EQ(z * CycNum::zeta(f, 1), CycNum(f, BigRational(1)));
}

TEST(Rational, Helpers) {
  EXPECT_EQ(floor_of(BigRational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(BigRational(-7, 2)), -3);
  EXPECT_EQ(frac(BigRational(-1, 3)), BigRational(2, 3));
  EXPECT_EQ(mod_inverse(BigInt(3), BigInt(7)), 5);
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(to_string(BigRational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}
