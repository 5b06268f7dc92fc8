#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qhs/dedekind.hpp"
#include "qhs/homology.hpp"
#include "qhs/plumbing.hpp"
#include "qhs/torsion.hpp"

namespace qhs {

struct SeifertArm {
  long alpha;
  long omega;
};

/// Normalized Seifert invariants (b; (alpha_i, omega_i)) over S^2, with the
/// derived quantities used by the closed formulas.
struct SeifertData {
  long b = 0;
  std::vector<SeifertArm> arms;

  BigRational e;      // orbifold Euler number b + sum omega_i / alpha_i
  long alpha = 1;     // lcm of the alpha_i
  std::vector<long> beta;  // unnormalized invariants, beta_1 absorbs b
  BigRational kappa;  // rational degree of the orbifold canonical bundle
  BigRational rho0;
  BigInt n0;
  std::vector<long> gamma;
  std::vector<long> r;  // r_i omega_i = 1 mod alpha_i

  std::size_t nu() const { return arms.size(); }
  BigInt order_H() const {
    BigRational prod = abs(e);
    for (const auto& a : arms) prod *= a.alpha;
    return prod.get_num();
  }
};

inline SeifertData make_seifert(long b, std::vector<SeifertArm> arms) {
  if (arms.size() < 3) fail(ErrorKind::InvalidArgument, "a Seifert presentation needs at least three arms");
  SeifertData s;
  s.b = b;
  s.arms = std::move(arms);
  s.e = b;
  s.kappa = -2;
  for (const auto& a : s.arms) {
    if (a.alpha < 2) fail(ErrorKind::InvalidArgument, "arm multiplicity " + std::to_string(a.alpha) + " must be at least 2");
    if (a.omega <= 0 || a.omega >= a.alpha)
      fail(ErrorKind::InvalidArgument, "arm " + std::to_string(a.alpha) + "/" + std::to_string(a.omega) + " needs 0 < omega < alpha");
    if (std::gcd(a.alpha, a.omega) != 1)
      fail(ErrorKind::InvalidArgument, "arm " + std::to_string(a.alpha) + "/" + std::to_string(a.omega) + " is not coprime");
    s.e += make_rational(a.omega, a.alpha);
    s.kappa += 1 - make_rational(1, a.alpha);
    s.alpha = std::lcm(s.alpha, a.alpha);
  }
  if (s.e >= 0) fail(ErrorKind::NotNegativeDefinite, "orbifold Euler number " + to_string(s.e) + " is not negative");
  for (std::size_t i = 0; i < s.nu(); ++i)
    s.beta.push_back(-s.arms[i].omega - (i == 0 ? b * s.arms[i].alpha : 0));
  BigRational ratio = s.kappa / (2 * s.e);
  s.n0 = floor_of(ratio);
  s.rho0 = ratio - BigRational(s.n0);
  for (const auto& a : s.arms) {
    s.gamma.push_back(to_long(mod_floor(s.n0 * a.omega, BigInt(a.alpha))));
    s.r.push_back(to_long(mod_inverse(BigInt(a.omega), BigInt(a.alpha))));
  }
  return s;
}

/// Negative continued fraction alpha/omega = b_1 - 1/(b_2 - ...), all b_j >= 2.
inline std::vector<long> hj_expand(long alpha, long omega) {
  if (omega <= 0 || omega >= alpha || std::gcd(alpha, omega) != 1)
    fail(ErrorKind::InvalidArgument, "continued fraction needs coprime 0 < omega < alpha");
  std::vector<long> out;
  long p = alpha, q = omega;
  while (q > 0) {
    long c = (p + q - 1) / q;
    out.push_back(c);
    long next = c * q - p;
    p = q;
    q = next;
  }
  BigRational back = out.back();
  for (std::size_t i = out.size() - 1; i-- > 0;) back = out[i] - 1 / back;
  if (back != make_rational(alpha, omega))
    fail(ErrorKind::InternalInvariantViolated, "continued fraction does not reconstruct " + std::to_string(alpha) + "/" + std::to_string(omega));
  return out;
}

/// Vertex positions of the star graph: the center first, then each arm in order.
struct StarLayout {
  std::size_t center = 0;
  std::vector<std::size_t> arm_ends;
};

inline StarLayout star_layout(const SeifertData& s) {
  StarLayout layout;
  std::size_t next = 1;
  for (const auto& a : s.arms) {
    next += hj_expand(a.alpha, a.omega).size();
    layout.arm_ends.push_back(next - 1);
  }
  return layout;
}

/// Star-shaped plumbing: center "c" with Euler number b, arm i the chain
/// "a<i>_<j>" of -b_{ij}, with a<i>_0 next to the center.
inline PlumbingGraph star_graph(const SeifertData& s) {
  PlumbingGraph g;
  g.add_vertex(s.b, "c");
  for (std::size_t i = 0; i < s.nu(); ++i) {
    auto chain = hj_expand(s.arms[i].alpha, s.arms[i].omega);
    std::string prev = "c";
    for (std::size_t j = 0; j < chain.size(); ++j) {
      std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j);
      g.add_vertex(-chain[j], id);
      g.add_edge(prev, id);
      prev = id;
    }
  }
  return g;
}

/// L(p,q) as the linear plumbing of -b_j with p/q = [b_1, ..., b_k].
inline PlumbingGraph lens_chain(long p, long q) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1)
    fail(ErrorKind::InvalidArgument, "lens space needs coprime 0 < q < p");
  auto chain = hj_expand(p, q);
  std::vector<long> eulers;
  for (long c : chain) eulers.push_back(-c);
  return chain_graph(eulers);
}

namespace detail {
/// Unnormalized invariants with b absorbed into arm `absorb`.
inline std::vector<long> betas_absorbed(const SeifertData& s, std::size_t absorb) {
  std::vector<long> beta;
  for (std::size_t i = 0; i < s.nu(); ++i) beta.push_back(-s.arms[i].omega - (i == absorb ? s.b * s.arms[i].alpha : 0));
  return beta;
}

inline BigRational dedekind_total(const SeifertData& s, std::size_t absorb, const DedekindFn& ded) {
  auto beta = betas_absorbed(s, absorb);
  BigRational total = 0;
  for (std::size_t i = 0; i < s.nu(); ++i) total += ded(beta[i], s.arms[i].alpha, 0, 0);
  return total;
}
}  // namespace detail

/// lambda(M) from -24 lambda / |H| = (2 - nu + sum 1/alpha_i^2)/e + e + 3 + 12 sum s(beta_i, alpha_i).
inline BigRational seifert_casson_walker(const SeifertData& s, const DedekindFn& ded = default_dedekind(),
                                         std::size_t absorb = 0) {
  BigRational inner = 2 - static_cast<long>(s.nu());
  for (const auto& a : s.arms) inner += make_rational(1, a.alpha * a.alpha);
  BigRational rhs = inner / s.e + s.e + 3 + 12 * detail::dedekind_total(s, absorb, ded);
  return -rhs * BigRational(s.order_H()) / 24;
}

/// K^2 + #V = (2 - nu + sum 1/alpha_i)^2 / e + e + 5 + 12 sum s(beta_i, alpha_i).
inline BigRational seifert_k2nv(const SeifertData& s, const DedekindFn& ded = default_dedekind(),
                                std::size_t absorb = 0) {
  BigRational inner = 2 - static_cast<long>(s.nu());
  for (const auto& a : s.arms) inner += make_rational(1, a.alpha);
  return inner * inner / s.e + s.e + 5 + 12 * detail::dedekind_total(s, absorb, ded);
}

struct KSReport {
  BigRational ks;
  long s0_plus = 0;
  long s0_minus = 0;
  bool applicable = false;
  std::optional<BigRational> sw0_ks;
};

/// Kreck-Stolz invariant of the canonical structure for the Seifert metric,
/// together with the count of irreducible monopole components.
inline KSReport ks_route(const SeifertData& s, const DedekindFn& ded = default_dedekind()) {
  const BigRational& ell = s.e;
  const BigRational& rho = s.rho0;
  const long nu = static_cast<long>(s.nu());
  KSReport rep;
  BigRational ks = ell + 1 - 4 * ell * rho * (1 - rho) + 4 * nu * rho;
  BigRational tail = 0;
  if (rho != 0) tail = (2 + s.kappa) / 2 * (1 - 2 * rho);
  for (std::size_t i = 0; i < s.nu(); ++i) {
    const long a = s.arms[i].alpha, w = s.arms[i].omega;
    ks -= 4 * ded(w, a, 0, 0);
    ks -= 8 * ded(w, a, (s.gamma[i] + rho * w) / a, -rho);
    const BigRational rg = make_rational(s.r[i] * s.gamma[i], a);
    if (rho == 0)
      tail -= dedekind_symbol(rg);
    else
      tail -= frac(rg + rho / a);
  }
  rep.ks = ks + 4 * tail;

  // E = N L_0 with 0 < |N ell - kappa/2| <= kappa/2, i.e. N ell in [0, kappa] and N ell != kappa/2.
  bool zero_dimensional = true;
  if (s.kappa > 0) {
    const BigInt lo = ceil_of(s.kappa / ell);
    for (BigInt N = lo; N <= 0; ++N) {
      const BigRational deg = BigRational(N) * ell;
      const BigRational nu_e = deg - s.kappa / 2;
      if (nu_e == 0) continue;
      BigRational data_e = 0, data_k = 0;
      for (const auto& arm : s.arms) {
        data_e += frac(make_rational(BigInt(N * arm.omega), BigInt(arm.alpha)));
        data_k += frac(make_rational(BigInt(BigInt(arm.alpha - 1) - N * arm.omega), BigInt(arm.alpha)));
      }
      if (nu_e < 0) {
        const BigRational d = deg - data_e;
        if (d >= 0) {
          ++rep.s0_plus;
          zero_dimensional = zero_dimensional && d == 0;
        }
      } else {
        const BigRational d = s.kappa - deg - data_k;
        if (d >= 0) {
          ++rep.s0_minus;
          zero_dimensional = zero_dimensional && d == 0;
        }
      }
    }
  }
  rep.applicable = (rho != 0 && zero_dimensional) || s.kappa < 0;
  if (rep.applicable) rep.sw0_ks = rep.ks / 8 + rep.s0_plus + rep.s0_minus;
  return rep;
}

/// T_{h_sigma}(1) using only the center and the arm ends, with weights
/// alpha at the center and alpha/alpha_i at the end of arm i.
inline BigRational seifert_torsion_shortcut(const SeifertData& s, const FinAbGroup& H, const GroupElement& h_sigma,
                                            long max_order = kDefaultOrderCap) {
  check_order_cap(H, max_order);
  const auto layout = star_layout(s);
  const long nu = static_cast<long>(s.nu());
  auto field = CyclotomicField::get(H.exponent());
  CycNum total(field);
  const std::size_t count = H.order().get_ui();
  for (std::size_t idx = 1; idx < count; ++idx) {
    const Character chi = H.character_at(idx);
    const long c0 = H.pair(chi, H.generator(layout.center));
    std::vector<long> ends;
    long order = c0 == 0 ? nu - 2 : 0;
    for (std::size_t v : layout.arm_ends) {
      ends.push_back(H.pair(chi, H.generator(v)));
      if (ends.back() == 0) --order;
    }
    if (order > 0) continue;
    if (order < 0) fail(ErrorKind::InternalInvariantViolated, "Seifert torsion factor has a pole");
    BigRational scalar = 1;
    CycNum value(field, BigRational(1));
    if (c0 == 0) {
      for (long i = 0; i < nu - 2; ++i) scalar *= s.alpha;
    } else {
      CycNum f = CycNum::zeta(field, c0) - CycNum(field, BigRational(1));
      for (long i = 0; i < nu - 2; ++i) value *= f;
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      if (ends[i] == 0)
        scalar /= s.alpha / s.arms[i].alpha;
      else
        value *= inverse_zeta_minus_one(field, ends[i]);
    }
    total += value.scaled(scalar).times_zeta(-H.pair(chi, h_sigma));
  }
  return cyc_as_rational(total) / BigRational(H.order());
}

}  // namespace qhs
