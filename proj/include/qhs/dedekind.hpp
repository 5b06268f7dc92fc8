#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qhs/exact/cyclotomic.hpp"
#include "qhs/exact/rational.hpp"

namespace qhs {

/// ((x)) = {x} - 1/2 off the integers, 0 on them.
inline BigRational dedekind_symbol(const BigRational& x) {
  if (is_integer(x)) return 0;
  return frac(x) - BigRational(1, 2);
}

/// Second Bernoulli polynomial at the fractional part: B_2({x}).
inline BigRational psi2(const BigRational& x) {
  BigRational f = frac(x);
  return f * f - f + BigRational(1, 6);
}

/// s(h,k;x,y) summed straight from the definition, O(k).
inline BigRational dr_sum_direct(long h, long k, const BigRational& x = 0, const BigRational& y = 0) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "Dedekind sum needs k >= 1");
  if (std::gcd(h, k) != 1) fail(ErrorKind::InvalidArgument, "Dedekind sum needs gcd(h,k) = 1");
  BigRational total = 0;
  for (long mu = 0; mu < k; ++mu) {
    BigRational t = (BigRational(mu) + y) / k;
    total += dedekind_symbol(t) * dedekind_symbol(BigRational(h) * t + x);
  }
  return total;
}

/// s(h,k;x,y) by Euclid-style reduction and the reciprocity laws.
inline BigRational dr_sum(long h, long k, BigRational x = 0, BigRational y = 0) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "Dedekind sum needs k >= 1");
  if (std::gcd(h, k) != 1) fail(ErrorKind::InvalidArgument, "Dedekind sum needs gcd(h,k) = 1");
  // Accumulates sign * s(h,k;x,y) + acc through successive reciprocity steps.
  BigRational acc = 0;
  int sign = 1;
  for (;;) {
    x = frac(x);
    y = frac(y);
    const long m = (h - mod_floor(h, k)) / k;
    h = mod_floor(h, k);
    x = frac(x + BigRational(m) * y);
    if (k == 1) {
      acc += sign * dedekind_symbol(y) * dedekind_symbol(x);
      return acc;
    }
    const BigRational hk = BigRational(h) * k;
    if (x == 0 && y == 0) {
      acc += sign * (BigRational(-1, 4) + (BigRational(h) * h + BigRational(k) * k + 1) / (12 * hk));
    } else {
      acc += sign * (dedekind_symbol(x) * dedekind_symbol(y) +
                     (BigRational(h) * h * psi2(y) + psi2(BigRational(h) * y + BigRational(k) * x) +
                      BigRational(k) * k * psi2(x)) / (2 * hk));
    }
    sign = -sign;
    std::swap(h, k);
    std::swap(x, y);
  }
}

/// Classical Dedekind sum s(h,k).
inline BigRational dedekind_sum(long h, long k) { return dr_sum(h, k); }

/// Signature of an evaluator of s(h,k;x,y); callers may inject an alternative.
using DedekindFn = std::function<BigRational(long, long, const BigRational&, const BigRational&)>;

inline DedekindFn default_dedekind() {
  return [](long h, long k, const BigRational& x, const BigRational& y) { return dr_sum(h, k, x, y); };
}

struct IdentityCheck {
  std::string name;
  BigRational lhs;
  BigRational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Sum over mu of ((mu + w)/k) against ((w)).
inline IdentityCheck kubert_identity(long k, const BigRational& w) {
  BigRational lhs = 0;
  for (long mu = 0; mu < k; ++mu) lhs += dedekind_symbol((BigRational(mu) + w) / k);
  return {"kubert", lhs, dedekind_symbol(w)};
}

/// Sum of f(zeta) over the nontrivial p-th roots of unity zeta. The roots of
/// exact order d form one Galois orbit, so the sum is a sum of field traces of
/// f(zeta_d) taken in Q(zeta_d).
template <class F>
BigRational sum_over_nontrivial_roots(long p, F&& f) {
  BigRational total = 0;
  for (long d = 2; d <= p; ++d) {
    if (p % d) continue;
    total += f(CyclotomicField::get(d)).trace();
  }
  return total;
}

/// Character-sum identities over nontrivial p-th roots of unity, each side
/// evaluated exactly (left in cyclotomic fields, right through Dedekind sums).
inline std::vector<IdentityCheck> fourier_identity_suite(long p, long q, long t, const DedekindFn& s = default_dedekind()) {
  if (p < 2) fail(ErrorKind::InvalidArgument, "identity suite needs p > 1");
  if (std::gcd(p, q) != 1) fail(ErrorKind::InvalidArgument, "identity suite needs gcd(p,q) = 1");
  using FieldPtr = CycNum::FieldPtr;
  const BigRational inv_p(1, p);
  auto b6 = sum_over_nontrivial_roots(p, [&](const FieldPtr& f) {
    return -(CycNum::zeta(f, t) * inverse_zeta_minus_one(f, 1));
  });
  auto b7 = sum_over_nontrivial_roots(p, [&](const FieldPtr& f) {
    return CycNum::zeta(f, t) * inverse_zeta_minus_one(f, 1) * inverse_zeta_minus_one(f, q);
  });
  auto b8 = sum_over_nontrivial_roots(p, [&](const FieldPtr& f) {
    return inverse_zeta_minus_one(f, 1) * inverse_zeta_minus_one(f, q);
  });
  // |z-1|^2 = (z-1)(z^-1 - 1)
  auto b9 = sum_over_nontrivial_roots(p, [&](const FieldPtr& f) {
    return inverse_zeta_minus_one(f, 1) * inverse_zeta_minus_one(f, -1);
  });
  auto b10 = sum_over_nontrivial_roots(p, [&](const FieldPtr& f) {
    CycNum one(f, BigRational(1));
    return (CycNum::zeta(f, 1) + one) * inverse_zeta_minus_one(f, 1) * (CycNum::zeta(f, q) + one) *
           inverse_zeta_minus_one(f, q);
  });
  std::vector<IdentityCheck> out;
  out.push_back({"B6", b6 * inv_p, dedekind_symbol(make_rational(2 * t - 1, 2 * p))});
  out.push_back({"B7", b7 * inv_p, -s(q, p, make_rational(q + 1 - 2 * t, 2 * p), BigRational(-1, 2))});
  out.push_back({"B8", b8 * inv_p, -s(q, p, 0, 0) + make_rational(p - 1, 4 * p)});
  out.push_back({"B9", b9 * inv_p, make_rational(p, 12) - make_rational(1, 12 * p)});
  out.push_back({"B10", b10 * inv_p, -4 * s(q, p, 0, 0)});
  return out;
}

}  // namespace qhs
