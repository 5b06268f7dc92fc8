#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "qhs/errors.hpp"

namespace qhs {

using BigInt = mpz_class;
// mpq_class keeps every result canonical (reduced, positive denominator).
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline BigInt floor_of(const BigRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline BigInt ceil_of(const BigRational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// {x} = x - floor(x), always in [0, 1).
inline BigRational frac(const BigRational& x) { return x - BigRational(floor_of(x)); }

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

/// Representative of x mod 1 in [0, 1).
inline BigRational mod_one(const BigRational& x) { return frac(x); }

/// Non-negative residue of a mod m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Inverse of a modulo m, in [0, m). Throws when gcd(a, m) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m == 1) return 0;
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), mod_floor(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::InvalidArgument, "no inverse of " + a.get_str() + " mod " + m.get_str());
  return r;
}

inline bool fits_long(const BigInt& x) { return x.fits_slong_p(); }

inline long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) fail(ErrorKind::InvalidArgument, "integer out of range: " + x.get_str());
  return x.get_si();
}

/// "a/b", or "a" for integers.
inline std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigInt parse_int(std::string_view s) {
  std::string t(s);
  if (t.empty()) fail(ErrorKind::ParseError, "empty integer");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size()) fail(ErrorKind::ParseError, "bad integer '" + t + "'");
  for (std::size_t i = start; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') fail(ErrorKind::ParseError, "bad integer '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return BigInt(t, 10);
}

/// Accepts "a", "a/b" with b != 0.
inline BigRational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(s));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
  return make_rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace qhs
