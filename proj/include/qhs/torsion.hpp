#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "qhs/exact/cyclotomic.hpp"
#include "qhs/homology.hpp"
#include "qhs/plumbing.hpp"

namespace qhs {

/// I w = -m e_{base}, with m minimal and w primitive and positive.
struct WeightVector {
  std::size_t base = 0;
  BigInt m;
  std::vector<BigInt> w;

  WeightVector scaled(long c) const {
    WeightVector out = *this;
    out.m *= c;
    for (auto& x : out.w) x *= c;
    return out;
  }
};

inline WeightVector weight_vector(const LatticeData& L, std::size_t v0) {
  const std::size_t n = L.size();
  if (v0 >= n) fail(ErrorKind::InvalidBaseVertex, "vertex index out of range");
  WeightVector wv;
  wv.base = v0;
  wv.m = 1;
  for (std::size_t v = 0; v < n; ++v) wv.m = lcm(wv.m, L.Iinv(v, v0).get_den());
  BigInt g = 0;
  for (std::size_t v = 0; v < n; ++v) {
    BigRational x = -BigRational(wv.m) * L.Iinv(v, v0);
    wv.w.push_back(x.get_num());
    g = gcd(g, x.get_num());
  }
  // minimal m already makes w primitive
  if (g != 1) fail(ErrorKind::InternalInvariantViolated, "weight vector is not primitive");
  for (std::size_t v = 0; v < n; ++v) {
    if (wv.w[v] <= 0) fail(ErrorKind::InternalInvariantViolated, "non-positive weight");
    BigInt row = 0;
    for (std::size_t u = 0; u < n; ++u) row += L.I(v, u) * wv.w[u];
    if (row != (v == v0 ? BigInt(-wv.m) : BigInt(0)))
      fail(ErrorKind::InternalInvariantViolated, "weight vector does not solve I w = -m e");
  }
  return wv;
}

struct TorsionOptions {
  long max_order = kDefaultOrderCap;
  unsigned threads = 1;
};

/// Precomputed data shared by every character of one manifold.
struct TorsionContext {
  const LatticeData* L;
  const FinAbGroup* H;
  CycNum::FieldPtr field;
  std::vector<WeightVector> weights;  // one per vertex
  std::vector<std::size_t> special;   // vertices of degree != 2

  TorsionContext(const LatticeData& lattice, const FinAbGroup& group)
      : L(&lattice), H(&group), field(CyclotomicField::get(group.exponent())) {
    for (std::size_t v = 0; v < lattice.size(); ++v) {
      weights.push_back(weight_vector(lattice, v));
      if (lattice.degrees[v] != 2) special.push_back(v);
    }
  }

  /// chi(g_v) = zeta_N^{result[v]}.
  std::vector<long> exponents(const Character& chi) const {
    std::vector<long> out(L->size());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = H->pair(chi, H->generator(v));
    return out;
  }

  /// Base vertex: lowest index with chi(g_v) != 1.
  std::size_t default_base(const std::vector<long>& exps) const {
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) return v;
    fail(ErrorKind::InvalidBaseVertex, "trivial character has no base vertex");
  }

  bool admissible_base(const std::vector<long>& exps, std::size_t v0) const {
    if (exps.at(v0) != 0) return true;
    for (std::size_t u : L->adjacency[v0])
      if (exps[u] != 0) return true;
    return false;
  }

  /// lim_{t->1} prod_v (t^{w_v} chi(g_v) - 1)^{delta_v - 2} by order counting at t = 1.
  CycNum regularized(const std::vector<long>& exps, const WeightVector& w) const {
    if (!admissible_base(exps, w.base))
      fail(ErrorKind::InvalidBaseVertex, "vertex " + L->graph.vertices[w.base].id + " is not admissible");
    long order = 0;
    for (std::size_t v : special)
      if (exps[v] == 0) order += L->degrees[v] - 2;
    if (order > 0) return CycNum(field);
    if (order < 0) fail(ErrorKind::InternalInvariantViolated, "regularized product has a pole");
    BigRational scalar = 1;
    std::optional<CycNum> product;
    for (std::size_t v : special) {
      const long e = L->degrees[v] - 2;
      if (exps[v] == 0) {
        for (long i = 0; i < std::abs(e); ++i) scalar = e > 0 ? BigRational(scalar * w.w[v]) : BigRational(scalar / w.w[v]);
        continue;
      }
      CycNum factor = e > 0 ? CycNum::zeta(field, exps[v]) - CycNum(field, BigRational(1))
                            : inverse_zeta_minus_one(field, exps[v]);
      for (long i = 0; i < std::abs(e); ++i) product = product ? *product * factor : factor;
    }
    CycNum result = product ? *product : CycNum(field, BigRational(1));
    return scalar == 1 ? result : result.scaled(scalar);
  }

  /// The h_sigma-independent part R_chi of the torsion entry at chi.
  CycNum base_value(const Character& chi) const {
    if (chi.trivial()) return CycNum(field);
    auto exps = exponents(chi);
    return regularized(exps, weights[default_base(exps)]);
  }
};

inline CycNum regularized_product(const LatticeData& L, const FinAbGroup& H, const Character& chi, const WeightVector& w) {
  if (chi.trivial()) fail(ErrorKind::InvalidArgument, "regularized product needs a nontrivial character");
  TorsionContext ctx(L, H);
  return ctx.regularized(ctx.exponents(chi), w);
}

namespace detail {

/// Run body(i) for i in [0, count) on up to `threads` workers; rethrows the first failure.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// R_chi for every character, indexed like characters(H).
inline std::vector<CycNum> torsion_base_values(const TorsionContext& ctx, const TorsionOptions& opt = {}) {
  check_order_cap(*ctx.H, opt.max_order);
  const std::size_t count = ctx.H->order().get_ui();
  std::vector<CycNum> values(count);
  detail::parallel_for(count, opt.threads, [&](std::size_t i) { values[i] = ctx.base_value(ctx.H->character_at(i)); });
  return values;
}

struct TorsionTable {
  GroupElement h_sigma;
  std::vector<CycNum> entries;  // entries[index of chi] = T^_sigma(conj chi)
  BigRational t_at_1;
};

inline TorsionTable torsion_table_from(const TorsionContext& ctx, const std::vector<CycNum>& base,
                                       const GroupElement& h_sigma) {
  TorsionTable table{h_sigma, {}, 0};
  table.entries.reserve(base.size());
  CycNum total(ctx.field);
  for (std::size_t i = 0; i < base.size(); ++i) {
    long a = ctx.H->pair(ctx.H->character_at(i), h_sigma);
    table.entries.push_back(base[i].times_zeta(-a));
    total += table.entries.back();
  }
  table.t_at_1 = cyc_as_rational(total) / BigRational(ctx.H->order());
  return table;
}

inline TorsionTable torsion_table(const LatticeData& L, const FinAbGroup& H, const GroupElement& h_sigma,
                                  const TorsionOptions& opt = {}) {
  TorsionContext ctx(L, H);
  return torsion_table_from(ctx, torsion_base_values(ctx, opt), h_sigma);
}

/// T_{h.sigma_can}(1) for every h, indexed by H.index_of(h). The sums are
/// rational, so each is recovered from its field trace.
inline std::vector<BigRational> torsion_at_one_all(const TorsionContext& ctx, const std::vector<CycNum>& base) {
  const FinAbGroup& H = *ctx.H;
  const std::size_t count = base.size();
  const long N = H.exponent();
  const auto& tr = ctx.field->traces();
  BigInt common = 1;
  for (const auto& b : base) common = lcm(common, b.denominator());
  std::vector<BigInt> acc(count);
  std::vector<BigInt> tau(static_cast<std::size_t>(N));
  for (std::size_t c = 0; c < count; ++c) {
    const auto& num = base[c].numerator();
    // tau[j] = trace(R_chi zeta^j) scaled to the common denominator
    BigInt scale = common / base[c].denominator();
    bool zero = base[c].is_zero();
    if (zero) continue;
    for (long j = 0; j < N; ++j) {
      BigInt t = 0;
      for (std::size_t i = 0; i < num.size(); ++i)
        if (num[i] != 0) t += num[i] * tr[static_cast<std::size_t>((static_cast<long>(i) + j) % N)];
      tau[static_cast<std::size_t>(j)] = t * scale;
    }
    Character chi = H.character_at(c);
    for (std::size_t y = 0; y < count; ++y) {
      long a = H.pair(chi, H.element_at(y));
      acc[y] += tau[static_cast<std::size_t>(mod_floor(-a, N))];
    }
  }
  std::vector<BigRational> out(count);
  BigRational norm = BigRational(common) * BigRational(H.order()) * static_cast<long>(ctx.field->degree());
  for (std::size_t y = 0; y < count; ++y) out[y] = BigRational(acc[y]) / norm;
  return out;
}

inline BigRational sw0_from(const BigRational& t_at_1, const BigRational& lambda, const BigInt& order) {
  return t_at_1 - lambda / BigRational(order);
}

inline BigRational sw0(const LatticeData& L, const FinAbGroup& H, const GroupElement& h_sigma, const TorsionOptions& opt = {}) {
  return sw0_from(torsion_table(L, H, h_sigma, opt).t_at_1, casson_walker(L), H.order());
}

inline BigRational conjecture_gap(const LatticeData& L, const FinAbGroup& H, const TorsionOptions& opt = {}) {
  return sw0(L, H, H.zero(), opt) - k2_plus_nv(L) / 8;
}

struct SwidenResult {
  bool bilinear_identity = true;   // T(0)-T(g)-T(h)+T(g+h) = -b(g,h)
  bool quadratic_identity = true;  // T(0)-T(h) = q^c(sigma)(h)
  bool ok() const { return bilinear_identity && quadratic_identity; }
};

inline constexpr long kExhaustiveCap = 500;

/// Checks both torsion/quadratic-function identities mod Z over all of H.
inline SwidenResult swiden_consistency_from(const LatticeData& L, const FinAbGroup& H,
                                            const std::vector<BigRational>& at_one_all, const GroupElement& h_sigma,
                                            long cap = kExhaustiveCap) {
  check_order_cap(H, cap);
  const std::size_t count = H.order().get_ui();
  auto T = [&](const GroupElement& x) { return at_one_all[H.index_of(H.add(h_sigma, x))]; };
  SwidenResult result;
  const BigRational t0 = T(H.zero());
  std::vector<BigRational> tv(count);
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < count; ++i) {
    elems.push_back(H.element_at(i));
    tv[i] = T(elems[i]);
    if (mod_one(t0 - tv[i]) != spinc_quadratic(L, H, h_sigma, elems[i])) result.quadratic_identity = false;
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j) {
      BigRational lhs = t0 - tv[i] - tv[j] + tv[H.index_of(H.add(elems[i], elems[j]))];
      if (mod_one(lhs) != mod_one(-linking_form(L, H, elems[i], elems[j]))) result.bilinear_identity = false;
    }
  return result;
}

inline SwidenResult swiden_consistency(const LatticeData& L, const FinAbGroup& H, const GroupElement& h_sigma,
                                       const TorsionOptions& opt = {}) {
  check_order_cap(H, kExhaustiveCap);
  TorsionContext ctx(L, H);
  return swiden_consistency_from(L, H, torsion_at_one_all(ctx, torsion_base_values(ctx, opt)), h_sigma);
}

/// Delta(1) = prod_v w_v^{delta'_v - 2} with delta' raised by one at v0; must equal |H|/m.
inline bool delta_at_one_check(const LatticeData& L, std::size_t v0) {
  WeightVector wv = weight_vector(L, v0);
  BigRational value = 1;
  for (std::size_t v = 0; v < L.size(); ++v) {
    long e = L.degrees[v] + (v == v0 ? 1 : 0) - 2;
    for (long i = 0; i < std::abs(e); ++i) value = e > 0 ? BigRational(value * wv.w[v]) : BigRational(value / wv.w[v]);
  }
  return value == BigRational(L.order_H()) / BigRational(wv.m);
}

struct SpincRow {
  GroupElement h_sigma;
  BigRational torsion_at_1;
  BigRational sw0;
  friend bool operator==(const SpincRow&, const SpincRow&) = default;
};

struct InvariantReport {
  BigInt order_H;
  std::vector<long> invariant_factors;
  BigRational k2_plus_nv;
  BigRational casson_walker;
  BigRational torsion_at_1;
  BigRational sw0;
  BigRational conjecture_gap;
  bool numerically_gorenstein = false;
  std::vector<SpincRow> spinc_table;  // filled on request

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct ReportOptions {
  long max_order = kDefaultOrderCap;
  unsigned threads = 1;
  bool all_spinc = false;
};

inline InvariantReport compute_report(const LatticeData& L, const FinAbGroup& H, const ReportOptions& opt = {}) {
  check_order_cap(H, opt.max_order);
  InvariantReport r;
  r.order_H = H.order();
  r.invariant_factors = H.factors();
  r.k2_plus_nv = k2_plus_nv(L);
  r.casson_walker = casson_walker(L);
  r.numerically_gorenstein = numerically_gorenstein(L);
  TorsionContext ctx(L, H);
  auto base = torsion_base_values(ctx, {opt.max_order, opt.threads});
  r.torsion_at_1 = torsion_table_from(ctx, base, H.zero()).t_at_1;
  r.sw0 = sw0_from(r.torsion_at_1, r.casson_walker, r.order_H);
  r.conjecture_gap = r.sw0 - r.k2_plus_nv / 8;
  if (opt.all_spinc) {
    auto all = torsion_at_one_all(ctx, base);
    for (std::size_t i = 0; i < all.size(); ++i)
      r.spinc_table.push_back({H.element_at(i), all[i], sw0_from(all[i], r.casson_walker, r.order_H)});
  }
  return r;
}

inline InvariantReport compute_report(const PlumbingGraph& g, const ReportOptions& opt = {}) {
  LatticeData L = build_lattice(g);
  FinAbGroup H = homology_from_lattice(L);
  return compute_report(L, H, opt);
}

}  // namespace qhs
