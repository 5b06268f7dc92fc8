#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "qhs/dedekind.hpp"
#include "qhs/seifert.hpp"

namespace qhs {

/// Exponents of a Brieskorn-Hamm complete intersection and the derived
/// Seifert numerology.
struct BrieskornSpec {
  std::vector<long> a;  // exponents a_1..a_n

  long lcm_all = 1;             // a = lcm(a_i)
  BigInt product;               // A = prod a_i
  std::vector<long> q;          // a / a_i
  std::vector<long> alpha;      // a / lcm(a_j, j != i)
  std::vector<BigInt> copies;   // s_i, the number of arms with multiplicity alpha_i
  BigInt genus;                 // genus of the base orbifold
  BigRational e;                // -A / a^2

  std::size_t n() const { return a.size(); }
};

inline BrieskornSpec make_brieskorn(std::vector<long> exponents) {
  if (exponents.size() < 3) fail(ErrorKind::InvalidArgument, "a Brieskorn-Hamm link needs at least three exponents");
  for (long x : exponents)
    if (x < 2) fail(ErrorKind::InvalidArgument, "exponent " + std::to_string(x) + " must be at least 2");
  BrieskornSpec s;
  s.a = std::move(exponents);
  s.product = 1;
  for (long x : s.a) {
    s.lcm_all = std::lcm(s.lcm_all, x);
    s.product *= x;
  }
  BigInt copy_sum = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    long others = 1;
    for (std::size_t j = 0; j < s.n(); ++j)
      if (j != i) others = std::lcm(others, s.a[j]);
    s.q.push_back(s.lcm_all / s.a[i]);
    s.alpha.push_back(s.lcm_all / others);
    s.copies.push_back(s.product * s.alpha[i] / (BigInt(s.lcm_all) * s.a[i]));
    copy_sum += s.copies.back();
  }
  BigInt twice_genus = 2 + BigInt(static_cast<long>(s.n()) - 2) * s.product / s.lcm_all - copy_sum;
  if (twice_genus % 2 != 0) fail(ErrorKind::InternalInvariantViolated, "base genus is not an integer");
  s.genus = twice_genus / 2;
  s.e = -make_rational(s.product, BigInt(s.lcm_all) * s.lcm_all);
  return s;
}

enum class BrieskornCase { CaseI, CaseII, NotQHS };

/// Normal form of the exponents. `position[k]` is the index in the original
/// exponent list carrying the factor b[k]; for case (i) a_{position[0]} = d b_0
/// and a_{position[1]} = d b_1, for case (ii) a_{position[0]} = 2^c b_0 and
/// a_{position[1,2]} = 2 b_{1,2}.
struct BrieskornClass {
  BrieskornCase kind = BrieskornCase::NotQHS;
  long d = 1;  // case (i)
  long c = 0;  // case (ii)
  std::vector<long> b;
  std::vector<std::size_t> position;
};

namespace detail {
inline bool pairwise_coprime(const std::vector<long>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(v[i], v[j]) != 1) return false;
  return true;
}
}  // namespace detail

inline BrieskornClass classify(const BrieskornSpec& s) {
  BrieskornClass cls;
  if (s.genus != 0) return cls;
  const std::size_t n = s.n();
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < n; ++i)
    if (s.a[i] % 2 == 0) even.push_back(i);
  auto rest = [&](const std::vector<std::size_t>& front) {
    std::vector<std::size_t> order = front;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(front.begin(), front.end(), i) == front.end()) order.push_back(i);
    return order;
  };
  if (even.size() >= 3) {
    std::size_t top = even[0];
    for (std::size_t i : even)
      if (s.a[i] % 4 == 0) top = i;
    std::vector<std::size_t> front{top};
    for (std::size_t i : even)
      if (i != top) front.push_back(i);
    cls.position = rest(front);
    long c = 0, x = s.a[top];
    while (x % 2 == 0) {
      x /= 2;
      ++c;
    }
    cls.c = c;
    for (std::size_t k = 0; k < n; ++k) {
      long v = s.a[cls.position[k]];
      if (k == 0) v = x;
      else if (k < 3) v /= 2;
      cls.b.push_back(v);
    }
    bool ok = even.size() == 3 && detail::pairwise_coprime(cls.b);
    for (long v : cls.b) ok = ok && v % 2 == 1;
    if (!ok) fail(ErrorKind::InternalInvariantViolated, "exponents with genus 0 do not match case (ii)");
    cls.kind = BrieskornCase::CaseII;
    return cls;
  }
  std::vector<std::size_t> front{0, 1};
  long d = 1;
  for (std::size_t i = 0; i < n && d == 1; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::gcd(s.a[i], s.a[j]) != 1) {
        front = {i, j};
        d = std::gcd(s.a[i], s.a[j]);
        break;
      }
  cls.position = rest(front);
  cls.d = d;
  for (std::size_t k = 0; k < n; ++k) cls.b.push_back(s.a[cls.position[k]] / (k < 2 ? d : 1));
  bool ok = detail::pairwise_coprime(cls.b);
  for (std::size_t k = 2; k < n; ++k) ok = ok && std::gcd(d, cls.b[k]) == 1;
  if (!ok) fail(ErrorKind::InternalInvariantViolated, "exponents with genus 0 do not match case (i)");
  cls.kind = BrieskornCase::CaseI;
  return cls;
}

inline BrieskornClass require_qhs(const BrieskornSpec& s) {
  auto cls = classify(s);
  if (cls.kind == BrieskornCase::NotQHS)
    fail(ErrorKind::NotQHS, "base genus is " + s.genus.get_str() + ", the link is not a rational homology sphere");
  return cls;
}

inline BigInt order_of_H(const BrieskornSpec& s) {
  auto cls = require_qhs(s);
  BigInt order = 1;
  if (cls.kind == BrieskornCase::CaseI) {
    for (std::size_t k = 2; k < s.n(); ++k)
      for (long i = 0; i < cls.d - 1; ++i) order *= cls.b[k];
    return order;
  }
  BigInt B = 1;
  for (long v : cls.b) B *= v;
  const BigInt head = BigInt(cls.b[0]) * cls.b[1] * cls.b[2];
  BigInt num = B * B * B;
  for (long i = 0; i < cls.c; ++i) num *= 2;
  return num / (head * head);
}

/// beta_i with q_i beta_i = 1 mod alpha_i.
inline std::vector<long> brieskorn_betas(const BrieskornSpec& s) {
  std::vector<long> beta;
  for (std::size_t i = 0; i < s.n(); ++i)
    beta.push_back(s.alpha[i] == 1 ? 0 : to_long(mod_inverse(BigInt(s.q[i]), BigInt(s.alpha[i]))));
  return beta;
}

/// Normalized Seifert invariants: arm (alpha_i, -beta_i mod alpha_i) repeated
/// s_i times, arms with alpha_i = 1 omitted.
inline SeifertData brieskorn_seifert(const BrieskornSpec& s) {
  require_qhs(s);
  auto beta = brieskorn_betas(s);
  std::vector<SeifertArm> arms;
  BigRational central = s.e;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (s.alpha[i] == 1) continue;
    const long omega = mod_floor(-beta[i], s.alpha[i]);
    central -= BigRational(s.copies[i]) * make_rational(omega, s.alpha[i]);
    for (BigInt k = 0; k < s.copies[i]; ++k) arms.push_back({s.alpha[i], omega});
  }
  if (!is_integer(central))
    fail(ErrorKind::InternalInvariantViolated, "central Euler number " + to_string(central) + " is not an integer");
  SeifertData data = make_seifert(to_long(central.get_num()), std::move(arms));
  if (data.e != s.e) fail(ErrorKind::InternalInvariantViolated, "Seifert data has the wrong Euler number");
  return data;
}

struct BrieskornReport {
  BigInt order_H;
  BigRational torsion_closed;  // T(1) of the canonical structure
  BigRational lambda_closed;
  BigRational sigma_F;         // signature of the Milnor fiber
  BigRational sw0;
  bool gorenstein_check = false;  // -sw0 == sigma(F)/8
  bool dedekind_check = false;    // s(q_i, alpha_i) == s(beta_i, alpha_i) for every i
};

inline BrieskornReport closed_form_invariants(const BrieskornSpec& s, const DedekindFn& ded = default_dedekind()) {
  auto cls = require_qhs(s);
  auto beta = brieskorn_betas(s);
  const long n = static_cast<long>(s.n());
  BrieskornReport rep;
  rep.order_H = order_of_H(s);
  rep.dedekind_check = true;
  BigRational sum_sq = 0, sum_sq2 = 0, sum_ded = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    const long al = s.alpha[i];
    const BigRational si = BigRational(s.copies[i]);
    const BigRational sb = ded(beta[i], al, 0, 0);
    rep.dedekind_check = rep.dedekind_check && sb == ded(s.q[i], al, 0, 0);
    sum_sq += si / (al * al);
    sum_sq2 += si * si / (al * al);
    sum_ded += si * sb;
  }
  BigInt B = 1;
  for (long v : cls.b) B *= v;
  const BigRational Bq(B);
  BigRational minus_lambda_over_H;
  if (cls.kind == BrieskornCase::CaseI) {
    const long d = cls.d;
    BigRational arms = 0;
    for (std::size_t k = 2; k < s.n(); ++k) arms += 1 - make_rational(1, cls.b[k] * cls.b[k]);
    rep.torsion_closed = Bq * (d * (d - 1)) / 24 * arms;
    minus_lambda_over_H = -Bq / 24 * (-d * (n - 2) + sum_sq) - 1 / (24 * Bq) + BigRational(1, 8) + sum_ded / 2;
    rep.sigma_F = -1 + (1 - (n - 2) * d * d * Bq * Bq + Bq * Bq * sum_sq2) / (3 * Bq) - 4 * sum_ded;
  } else {
    BigRational p2 = 1;  // 2^(c-2)
    for (long i = 0; i < cls.c - 2; ++i) p2 *= 2;
    for (long i = 0; i > cls.c - 2; --i) p2 /= 2;
    BigRational arms = 0;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const BigRational si = BigRational(s.copies[i]);
      arms += si * (si - 1) / 2 * (1 - make_rational(1, s.alpha[i] * s.alpha[i]));
    }
    rep.torsion_closed = 2 * p2 * Bq / 8 + 2 * p2 * Bq / 24 * arms;
    minus_lambda_over_H = -p2 * Bq / 24 * (-4 * (n - 2) + sum_sq) - 1 / (3 * 8 * p2 * Bq) + BigRational(1, 8) + sum_ded / 2;
    const BigRational four_c = 16 * p2 * p2;  // 2^(2c)
    rep.sigma_F = -1 + (1 - (n - 2) * four_c * Bq * Bq + four_c / 16 * Bq * Bq * sum_sq2) / (3 * p2 * Bq) - 4 * sum_ded;
  }
  rep.lambda_closed = -minus_lambda_over_H * BigRational(rep.order_H);
  rep.sw0 = rep.torsion_closed + minus_lambda_over_H;
  rep.gorenstein_check = -rep.sw0 == rep.sigma_F / 8;
  return rep;
}

}  // namespace qhs
