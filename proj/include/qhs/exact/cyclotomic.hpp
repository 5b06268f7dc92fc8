#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qhs/exact/rational.hpp"

namespace qhs {

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient a / b for monic b; throws if the remainder is nonzero.
inline IntPoly exact_divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) fail(ErrorKind::InternalInvariantViolated, "polynomial division degree");
  IntPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) fail(ErrorKind::InternalInvariantViolated, "inexact polynomial division");
  return q;
}

inline std::map<long, IntPoly>& cyclotomic_cache() {
  static std::map<long, IntPoly> cache;
  return cache;
}

inline std::mutex& cyclotomic_mutex() {
  static std::mutex m;
  return m;
}

inline IntPoly cyclotomic_unlocked(long n) {
  auto& cache = cyclotomic_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide_monic(std::move(p), cyclotomic_unlocked(d));
  trim(p);
  cache.emplace(n, p);
  return p;
}

}  // namespace detail

/// Phi_n, computed by dividing x^n - 1 by Phi_d for all proper divisors d.
inline IntPoly cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  std::lock_guard lock(detail::cyclotomic_mutex());
  return detail::cyclotomic_unlocked(n);
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Ramanujan sum c_n(j) = trace of zeta_n^j from Q(zeta_n) down to Q.
inline long ramanujan_sum(long n, long j) {
  long g = std::gcd(mod_floor(j, n), n);
  if (g == 0) g = n;
  long m = n / g;
  return moebius(m) * (euler_phi(n) / euler_phi(m));
}

class CycNum;

/// Q(zeta_N) presented as Q[x]/(Phi_N). Shared, immutable after construction.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(long conductor);

  long conductor() const { return n_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return phi_; }

  /// Reduce an integer polynomial of any degree modulo Phi_N in place.
  void reduce(IntPoly& p) const {
    for (std::size_t i = p.size(); i-- > degree_;) {
      if (p[i] == 0) continue;
      BigInt c = p[i];
      for (const auto& [j, coeff] : sparse_)
        p[i - degree_ + j] -= c * coeff;
      p[i] = 0;
    }
    p.resize(degree_);
  }

  /// zeta^k reduced, as integer coefficients of length degree().
  IntPoly power(long k) const {
    k = mod_floor(k, n_);
    if (!powers_.empty()) return powers_[static_cast<std::size_t>(k)];
    IntPoly p(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] = 1;
    reduce(p);
    return p;
  }

  /// Ramanujan sums c_N(j) for j in [0, N).
  const std::vector<long>& traces() const { return traces_; }

  /// Memo for (zeta^k - 1)^{-1} as (numerator, denominator); filled on demand.
  std::optional<std::pair<IntPoly, BigInt>> cached_inverse(long k) const {
    std::lock_guard lock(inverse_mutex_);
    if (auto it = inverses_.find(k); it != inverses_.end()) return it->second;
    return std::nullopt;
  }
  void store_inverse(long k, std::pair<IntPoly, BigInt> value) const {
    std::lock_guard lock(inverse_mutex_);
    inverses_.emplace(k, std::move(value));
  }

  explicit CyclotomicField(long n) : n_(n) {
    phi_ = cyclotomic_polynomial(n);
    degree_ = phi_.size() - 1;
    for (std::size_t j = 0; j < degree_; ++j)
      if (phi_[j] != 0) sparse_.emplace_back(j, phi_[j]);
    if (degree_ == 0) fail(ErrorKind::InternalInvariantViolated, "degenerate cyclotomic field");
    IntPoly cur(degree_);
    cur[0] = 1;
    for (long k = 0; n <= kPowerTableLimit && k < n; ++k) {
      powers_.push_back(cur);
      // multiply by x
      IntPoly next(degree_ + 1);
      for (std::size_t i = 0; i < degree_; ++i) next[i + 1] = cur[i];
      reduce(next);
      cur = std::move(next);
    }
    if (n > kPowerTableLimit) powers_.clear();
    traces_.resize(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) traces_[static_cast<std::size_t>(j)] = ramanujan_sum(n, j);
  }

 private:
  static constexpr long kPowerTableLimit = 4096;

  long n_;
  std::size_t degree_ = 0;
  IntPoly phi_;
  std::vector<std::pair<std::size_t, BigInt>> sparse_;  // non-leading terms of Phi_N
  std::vector<IntPoly> powers_;
  std::vector<long> traces_;
  mutable std::mutex inverse_mutex_;
  mutable std::map<long, std::pair<IntPoly, BigInt>> inverses_;
};

inline std::shared_ptr<const CyclotomicField> CyclotomicField::get(long conductor) {
  if (conductor < 1) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  static std::mutex m;
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(conductor); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const CyclotomicField>(conductor);
  std::lock_guard lock(m);
  return cache.emplace(conductor, std::move(field)).first->second;
}

/// Element of Q(zeta_N): integer numerator polynomial over a positive common
/// denominator, fully reduced mod Phi_N and with content coprime to the
/// denominator. The representation of a field element is unique.
class CycNum {
 public:
  using FieldPtr = std::shared_ptr<const CyclotomicField>;

  CycNum() = default;
  explicit CycNum(FieldPtr field) : field_(std::move(field)), num_(field_->degree()), den_(1) {}
  CycNum(FieldPtr field, const BigRational& value) : CycNum(std::move(field)) {
    num_[0] = value.get_num();
    den_ = value.get_den();
  }
  CycNum(FieldPtr field, IntPoly num, BigInt den) : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.size() > field_->degree()) field_->reduce(num_);
    num_.resize(field_->degree());
    normalize();
  }

  static CycNum zeta(FieldPtr field, long k) {
    CycNum z(field);
    z.num_ = field->power(k);
    return z;
  }

  const FieldPtr& field() const { return field_; }
  long conductor() const { return field_->conductor(); }
  const IntPoly& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  BigRational coeff(std::size_t i) const { return make_rational(num_.at(i), den_); }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    a.check_same(b);
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) { return a.combine(b, 1); }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a.combine(b, -1); }
  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.check_same(b);
    const std::size_t n = a.num_.size();
    IntPoly prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    return CycNum(a.field_, std::move(prod), a.den_ * b.den_);
  }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  CycNum scaled(const BigRational& q) const {
    IntPoly p = num_;
    for (auto& c : p) c *= q.get_num();
    return CycNum(field_, std::move(p), den_ * q.get_den());
  }

  /// Multiplication by zeta^k.
  CycNum times_zeta(long k) const {
    k = mod_floor(k, conductor());
    if (k == 0) return *this;
    IntPoly p(num_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < num_.size(); ++i) p[i + static_cast<std::size_t>(k)] = num_[i];
    return CycNum(field_, std::move(p), den_);
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against Phi_N.
  CycNum inverse() const;

  CycNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(field_, BigRational(1)), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Field trace down to Q.
  BigRational trace() const {
    BigInt t = 0;
    const auto& tr = field_->traces();
    for (std::size_t j = 0; j < num_.size(); ++j) t += num_[j] * tr[j];
    return make_rational(t, den_);
  }

 private:
  void check_same(const CycNum& b) const {
    if (!field_ || !b.field_) fail(ErrorKind::InvalidArgument, "uninitialised cyclotomic number");
    if (field_->conductor() != b.field_->conductor())
      fail(ErrorKind::ConductorMismatch,
           std::to_string(field_->conductor()) + " vs " + std::to_string(b.field_->conductor()));
  }

  CycNum combine(const CycNum& b, int sign) const {
    check_same(b);
    IntPoly p(num_.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = num_[i] * b.den_;
      if (sign > 0)
        mpz_addmul(p[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
      else
        mpz_submul(p[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    return CycNum(field_, std::move(p), den_ * b.den_);
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    BigInt g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (c != 0) g = gcd(g, c);
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  FieldPtr field_;
  IntPoly num_;
  BigInt den_ = 1;
};

namespace detail {

using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// (quotient, remainder) of a / b over Q, b nonzero after trimming.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const BigRational lead = b.back();
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1, shift = top - b.size();
    BigRational c = a[i] / lead;
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

inline RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly r(std::max(a.size(), q.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

}  // namespace detail

inline CycNum CycNum::inverse() const {
  if (!field_) fail(ErrorKind::InvalidArgument, "uninitialised cyclotomic number");
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  using detail::RatPoly;
  // invariant: s * self == r  (mod Phi_N)
  RatPoly r0(field_->modulus().begin(), field_->modulus().end());
  RatPoly r1(num_.begin(), num_.end());
  for (auto& c : r1) c /= den_;
  detail::trim(r1);
  RatPoly s0, s1{BigRational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = detail::divmod(r0, r1);
    RatPoly s2 = detail::sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_N is irreducible
  BigRational c = r1.at(0);
  BigInt common = 1;
  for (const auto& x : s1) common = lcm(common, x.get_den());
  IntPoly p(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) p[i] = BigRational(s1[i] * common).get_num();
  CycNum result(field_, std::move(p), common);
  return result.scaled(1 / c);
}

/// The rational value of z; NotRational if z is not in Q.
inline BigRational cyc_as_rational(const CycNum& z) {
  for (std::size_t i = 1; i < z.numerator().size(); ++i)
    if (z.numerator()[i] != 0)
      fail(ErrorKind::NotRational, "coefficient of zeta^" + std::to_string(i) + " is nonzero");
  return make_rational(z.numerator().at(0), z.denominator());
}

/// (zeta^k - 1)^{-1} via sum_j j u^j = d / (u - 1) where d is the order of u = zeta^k.
inline CycNum inverse_zeta_minus_one(const CycNum::FieldPtr& field, long k) {
  const long n = field->conductor();
  k = mod_floor(k, n);
  if (k == 0) fail(ErrorKind::DivisionByZero, "zeta^0 - 1 = 0");
  if (auto hit = field->cached_inverse(k)) return CycNum(field, std::move(hit->first), std::move(hit->second));
  const long order = n / std::gcd(k, n);
  IntPoly acc(field->degree());
  for (long j = 1; j < order; ++j) {
    const IntPoly p = field->power(k * j % n);
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (p[i] != 0) mpz_addmul_ui(acc[i].get_mpz_t(), p[i].get_mpz_t(), static_cast<unsigned long>(j));
  }
  CycNum result(field, std::move(acc), BigInt(order));
  field->store_inverse(k, {result.numerator(), result.denominator()});
  return result;
}

}  // namespace qhs
