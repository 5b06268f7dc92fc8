#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qhs/exact/cyclotomic.hpp"
#include "qhs/exact/matrix.hpp"
#include "qhs/plumbing.hpp"

namespace qhs {

inline constexpr long kDefaultOrderCap = 1000000;

/// Element of H in invariant-factor coordinates, each component in [0, d_i).
struct GroupElement {
  std::vector<long> c;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Character given by its exponent tuple; chi(h) = zeta_N^{sum (N/d_i) k_i h_i}.
struct Character {
  std::vector<long> k;
  friend bool operator==(const Character&, const Character&) = default;
  bool trivial() const {
    for (long x : k)
      if (x) return false;
    return true;
  }
};

/// H = coker(I) in invariant-factor form, with the SNF data needed to move
/// between vertex coordinates and group coordinates.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// `u_rows` are the rows of U (from U I V = D) at the nontrivial factors;
  /// `u_inv` is U^{-1} and `factor_rows` the positions of those factors in D.
  FinAbGroup(std::vector<long> factors, std::vector<GroupElement> generators, std::vector<std::vector<BigInt>> u_rows,
             IntMatrix u_inv, std::vector<std::size_t> factor_rows)
      : factors_(std::move(factors)),
        generators_(std::move(generators)),
        u_inv_(std::move(u_inv)),
        factor_rows_(std::move(factor_rows)),
        u_row_(std::move(u_rows)) {
    order_ = 1;
    exponent_ = 1;
    for (long d : factors_) {
      order_ *= d;
      exponent_ = d;  // divisibility chain: the last factor is the exponent
    }
  }

  const std::vector<long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  const BigInt& order() const { return order_; }
  long exponent() const { return exponent_; }
  const GroupElement& generator(std::size_t v) const { return generators_.at(v); }
  std::size_t generator_count() const { return generators_.size(); }

  GroupElement zero() const { return {std::vector<long>(rank(), 0)}; }

  GroupElement reduce(std::vector<long> c) const {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], factors_[i]);
    return {std::move(c)};
  }
  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    std::vector<long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = a.c[i] + b.c[i];
    return reduce(std::move(c));
  }
  GroupElement neg(const GroupElement& a) const {
    std::vector<long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = -a.c[i];
    return reduce(std::move(c));
  }
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
  GroupElement scale(const GroupElement& a, long n) const {
    std::vector<long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = mod_floor(static_cast<long>(
        (static_cast<__int128>(a.c[i]) * n) % factors_[i]), factors_[i]);
    return {std::move(c)};
  }

  /// Class of an integer vector in vertex (dual-basis) coordinates.
  GroupElement class_of(const std::vector<BigInt>& vec) const {
    std::vector<long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      BigInt acc = 0;
      for (std::size_t v = 0; v < vec.size(); ++v) acc += u_row_[i][v] * vec[v];
      c[i] = to_long(mod_floor(acc, BigInt(factors_[i])));
    }
    return {std::move(c)};
  }

  /// An integer vector in vertex coordinates whose class is h.
  std::vector<BigInt> lift(const GroupElement& h) const {
    std::vector<BigInt> out(u_inv_.rows());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += u_inv_(r, factor_rows_[i]) * h.c[i];
    return out;
  }

  /// Mixed-radix index, first coordinate most significant.
  std::size_t index_of(const GroupElement& h) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(h.c[i]);
    return idx;
  }
  GroupElement element_at(std::size_t idx) const {
    std::vector<long> c(rank());
    for (std::size_t i = rank(); i-- > 0;) {
      c[i] = static_cast<long>(idx % static_cast<std::size_t>(factors_[i]));
      idx /= static_cast<std::size_t>(factors_[i]);
    }
    return {std::move(c)};
  }

  /// Exponent a with chi(h) = zeta_N^a.
  long pair(const Character& chi, const GroupElement& h) const {
    __int128 acc = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      acc += static_cast<__int128>(exponent_ / factors_[i]) * chi.k[i] % exponent_ * h.c[i];
    return static_cast<long>(acc % exponent_);
  }
  Character character_at(std::size_t idx) const { return {element_at(idx).c}; }
  std::size_t character_index(const Character& chi) const { return index_of({chi.k}); }
  Character conjugate(const Character& chi) const { return {neg({chi.k}).c}; }

 private:
  std::vector<long> factors_;
  std::vector<GroupElement> generators_;
  IntMatrix u_inv_;
  std::vector<std::size_t> factor_rows_;
  std::vector<std::vector<BigInt>> u_row_;
  BigInt order_ = 1;
  long exponent_ = 1;
};

inline FinAbGroup homology_from_lattice(const LatticeData& L) {
  const std::size_t n = L.size();
  auto snf = smith_normal_form(L.I);
  std::vector<long> factors;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& d = snf.D(i, i);
    if (d == 0) fail(ErrorKind::SingularMatrix, "intersection matrix is degenerate");
    if (d == 1) continue;
    if (!fits_long(d)) fail(ErrorKind::OrderCapExceeded, "invariant factor " + d.get_str() + " exceeds 64 bits");
    factors.push_back(to_long(d));
    rows.push_back(i);
  }
  std::vector<std::vector<BigInt>> u_rows;
  for (std::size_t r : rows) {
    std::vector<BigInt> row(n);
    for (std::size_t v = 0; v < n; ++v) row[v] = snf.U(r, v);
    u_rows.push_back(std::move(row));
  }
  std::vector<GroupElement> gens;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<long> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      c[i] = to_long(mod_floor(snf.U(rows[i], v), BigInt(factors[i])));
    gens.push_back({std::move(c)});
  }
  return FinAbGroup(std::move(factors), std::move(gens), std::move(u_rows), snf.U_inv, std::move(rows));
}

inline void check_order_cap(const FinAbGroup& H, long cap) {
  if (H.order() > cap)
    fail(ErrorKind::OrderCapExceeded, "|H| = " + H.order().get_str() + " exceeds cap " + std::to_string(cap));
}

/// All |H| characters in lexicographic order of exponent tuples, trivial first.
inline std::vector<Character> characters(const FinAbGroup& H, long cap = kDefaultOrderCap) {
  check_order_cap(H, cap);
  const std::size_t count = H.order().get_ui();
  std::vector<Character> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(H.character_at(i));
  return out;
}

inline CycNum character_value(const FinAbGroup& H, const Character& chi, const GroupElement& h) {
  return CycNum::zeta(CyclotomicField::get(H.exponent()), H.pair(chi, h));
}

namespace detail {
inline BigRational bilinear(const LatticeData& L, const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigRational acc = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) continue;
    for (std::size_t w = 0; w < b.size(); ++w)
      if (b[w] != 0) acc += L.Iinv(v, w) * a[v] * b[w];
  }
  return acc;
}

inline std::vector<BigInt> z_vec(const LatticeData& L) {
  std::vector<BigInt> z(L.size());
  for (std::size_t v = 0; v < L.size(); ++v) z[v] = L.euler(v) + 2;
  return z;
}
}  // namespace detail

/// b_M(a, b) = -(lift a)^T I^{-1} (lift b) mod 1, in [0, 1).
inline BigRational linking_form(const LatticeData& L, const FinAbGroup& H, const GroupElement& a, const GroupElement& b) {
  return mod_one(-detail::bilinear(L, H.lift(a), H.lift(b)));
}

/// q_can evaluated on an explicit lift d: -(1/2)(d - z)^T I^{-1} d mod 1.
inline BigRational q_can_of_lift(const LatticeData& L, const std::vector<BigInt>& d) {
  auto z = detail::z_vec(L);
  std::vector<BigInt> diff(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) diff[v] = d[v] - z[v];
  return mod_one(-detail::bilinear(L, diff, d) / 2);
}

inline BigRational q_can(const LatticeData& L, const FinAbGroup& H, const GroupElement& h) {
  return q_can_of_lift(L, H.lift(h));
}

/// c(sigma_can) = class of (e_v + 2)_v.
inline GroupElement spinc_canonical_class(const LatticeData& L, const FinAbGroup& H) {
  return H.class_of(detail::z_vec(L));
}

/// The offset of the conjugate structure: -h - c(sigma_can).
inline GroupElement spinc_conjugate(const LatticeData& L, const FinAbGroup& H, const GroupElement& h) {
  return H.sub(H.neg(h), spinc_canonical_class(L, H));
}

/// Quadratic function attached to h.sigma_can. The canonical structure
/// extends over the plumbing with characteristic element (e_v + 2)_v, whose
/// quadratic function is x -> q_can(-x); the H-action adds b_M(h, .).
inline BigRational spinc_quadratic(const LatticeData& L, const FinAbGroup& H, const GroupElement& h_sigma,
                                   const GroupElement& x) {
  return mod_one(q_can(L, H, H.neg(x)) + linking_form(L, H, h_sigma, x));
}

struct GaussSumCheck {
  std::complex<double> computed;
  std::complex<double> predicted;
  double error() const { return std::abs(computed - predicted); }
};

/// van der Blij: |H|^{-1/2} sum_x exp(2 pi i q(x)) against exp(pi i (sigma - K^2) / 4),
/// with q(x) = (1/2)(d, d + k) and sigma = -#V. Floating point by design.
inline GaussSumCheck gauss_sum_check(const LatticeData& L, const FinAbGroup& H, long cap = kDefaultOrderCap) {
  check_order_cap(H, cap);
  const std::size_t count = H.order().get_ui();
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    auto d = H.lift(H.element_at(i));
    std::vector<BigInt> dk(d.size());
    for (std::size_t v = 0; v < d.size(); ++v) dk[v] = d[v] + L.k_vec[v];
    BigRational q = mod_one(detail::bilinear(L, d, dk) / 2);
    total += std::polar(1.0, two_pi * q.get_d());
  }
  total /= std::sqrt(static_cast<double>(count));
  BigRational k2 = detail::bilinear(L, L.k_vec, L.k_vec);
  BigRational phase = mod_one((-BigRational(static_cast<long>(L.size())) - k2) / 8);
  return {total, std::polar(1.0, two_pi * phase.get_d())};
}

}  // namespace qhs
