#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhs/brieskorn.hpp"
#include "qhs/dedekind.hpp"
#include "qhs/exact/cyclotomic.hpp"
#include "qhs/exact/matrix.hpp"
#include "qhs/fixtures.hpp"
#include "qhs/homology.hpp"
#include "qhs/plumbing.hpp"
#include "qhs/seifert.hpp"
#include "qhs/torsion.hpp"

namespace qhs::acceptance {

struct Options {
  DedekindFn dedekind = default_dedekind();
  unsigned threads = 1;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// Collects comparisons; keeps the first few failure messages.
class Recorder {
 public:
  explicit Recorder(Result& r) : r_(r) {}

  template <class A, class B>
  void equal(const std::string& what, const A& got, const B& want) {
    ++r_.checks;
    if (got == want) return;
    std::ostringstream msg;
    msg << what << ": got " << got << ", expected " << want;
    note(msg.str());
  }

  void truth(const std::string& what, bool ok) {
    ++r_.checks;
    if (!ok) note(what);
  }

  /// Runs `body`, turning a library error into a recorded failure.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      ++r_.checks;
      note(what + ": " + ex.what());
    }
  }

 private:
  void note(std::string msg) {
    r_.passed = false;
    if (r_.failures.size() < 5) r_.failures.push_back(std::move(msg));
  }
  Result& r_;
};

namespace detail {

struct Pipeline {
  LatticeData L;
  FinAbGroup H;
  InvariantReport report;
};

inline Pipeline run(const PlumbingGraph& g, const Options& opt) {
  Pipeline p{build_lattice(g), {}, {}};
  p.H = homology_from_lattice(p.L);
  p.report = compute_report(p.L, p.H, {kDefaultOrderCap, opt.threads, false});
  return p;
}

inline std::string str(const BigRational& q) { return to_string(q); }

inline void lens_spaces(Recorder& rec, const Options& opt) {
  for (long p = 2; p <= 50; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::string tag = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
      rec.guard(tag, [&] {
        auto P = run(lens_chain(p, q), opt);
        const BigRational s = opt.dedekind(q, p, 0, 0);
        rec.equal(tag + " T(1)", P.report.torsion_at_1, make_rational(p - 1, 4 * p) - s);
        rec.equal(tag + " lambda", P.report.casson_walker, p * s / 2);
        rec.equal(tag + " K^2+#V", P.report.k2_plus_nv, make_rational(2 * (p - 1), p) - 12 * s);
        rec.equal(tag + " gap", P.report.conjecture_gap, BigRational(0));
      });
    }
}

inline void a_chains(Recorder& rec, const Options& opt) {
  for (long p = 2; p <= 30; ++p) {
    const std::string tag = "A" + std::to_string(p - 1);
    rec.guard(tag, [&] { rec.equal(tag + " sw0", run(fixtures::a_chain(p - 1), opt).report.sw0, make_rational(p - 1, 8)); });
  }
}

inline void d_series(Recorder& rec, const Options& opt) {
  for (long n = 4; n <= 12; ++n) {
    const std::string tag = "D" + std::to_string(n);
    rec.guard(tag, [&] {
      auto s = fixtures::d_seifert(n);
      rec.equal(tag + " torsion route 8 sw0", 8 * run(star_graph(s), opt).report.sw0, BigRational(n));
      auto ks = ks_route(s, opt.dedekind);
      rec.truth(tag + " KS route applicable", ks.applicable);
      if (ks.sw0_ks) rec.equal(tag + " KS route 8 sw0", 8 * *ks.sw0_ks, BigRational(n));
    });
  }
}

inline void e_series(Recorder& rec, const Options& opt) {
  struct Row {
    const char* name;
    SeifertData data;
    std::vector<long> brieskorn;
    BigRational sw0;
  };
  std::vector<Row> rows{{"E6", fixtures::e6_seifert(), {2, 3, 4}, make_rational(6, 8)},
                        {"E7", fixtures::e7_seifert(), {}, BigRational(7, 8)},
                        {"E8", fixtures::e8_seifert(), {2, 3, 5}, BigRational(1)}};
  for (auto& row : rows) {
    rec.guard(row.name, [&] {
      auto P = run(star_graph(row.data), opt);
      rec.equal(std::string(row.name) + " torsion route sw0", P.report.sw0, row.sw0);
      if (row.brieskorn.empty()) {
        auto ks = ks_route(row.data, opt.dedekind);
        rec.equal(std::string(row.name) + " KS", ks.ks, BigRational(7));
        rec.truth(std::string(row.name) + " KS route applicable", ks.applicable);
        if (ks.sw0_ks) rec.equal(std::string(row.name) + " KS route sw0", *ks.sw0_ks, row.sw0);
      } else {
        auto rep = closed_form_invariants(make_brieskorn(row.brieskorn), opt.dedekind);
        rec.equal(std::string(row.name) + " closed form sw0", rep.sw0, row.sw0);
        rec.truth(std::string(row.name) + " -sw0 = sigma(F)/8", rep.gorenstein_check);
      }
    });
  }
}

inline void rational_family(Recorder& rec, const Options& opt) {
  for (long m : {2L, 4L, 5L, 7L, 8L}) {
    const std::string tag = "m=" + std::to_string(m);
    rec.guard(tag, [&] {
      auto s = fixtures::rational_family_seifert(m);
      const BigRational want = 3 * m - make_rational(m, 3) - 2;
      auto P = run(star_graph(s), opt);
      rec.equal(tag + " torsion route 8 sw0", 8 * P.report.sw0, want);
      rec.equal(tag + " gap", P.report.conjecture_gap, BigRational(0));
      auto ks = ks_route(s, opt.dedekind);
      rec.truth(tag + " KS route applicable", ks.applicable);
      rec.equal(tag + " |S0+|", ks.s0_plus, to_long(floor_of(make_rational(m - 3, 6))) + 1);
      if (ks.sw0_ks) rec.equal(tag + " KS route 8 sw0", 8 * *ks.sw0_ks, want);
    });
  }
}

inline void rational_family_m3(Recorder& rec, const Options& opt) {
  rec.guard("m=3", [&] {
    auto s = fixtures::rational_family_seifert(3);
    auto P = run(star_graph(s), opt);
    const BigRational order(P.report.order_H);
    rec.equal("m=3 |H|", P.report.order_H, BigInt(27));
    rec.equal("m=3 T(1)", P.report.torsion_at_1, BigRational(5, 9));
    rec.equal("m=3 Seifert shortcut T(1)", seifert_torsion_shortcut(s, P.H, P.H.zero()), BigRational(5, 9));
    rec.equal("m=3 lambda/|H|", P.report.casson_walker / order, BigRational(-7, 36));
    rec.equal("m=3 Seifert lambda/|H|", seifert_casson_walker(s, opt.dedekind) / order, BigRational(-7, 36));
    rec.equal("m=3 sw0", P.report.sw0, BigRational(3, 4));
    rec.equal("m=3 gap", P.report.conjecture_gap, BigRational(0));
  });
}

inline void polygonal(Recorder& rec, const Options& opt) {
  for (const auto& a : fixtures::polygonal_parameters()) {
    const std::string tag = "polygonal(" + fixtures::join(a) + ")";
    rec.guard(tag, [&] {
      auto s = fixtures::polygonal_seifert(a);
      const long nu = static_cast<long>(a.size());
      const BigRational want = 17 + nu - std::accumulate(a.begin(), a.end(), 0L);
      auto P = run(star_graph(s), opt);
      rec.equal(tag + " 8 sw0", 8 * P.report.sw0, want);
      rec.equal(tag + " gap", P.report.conjecture_gap, BigRational(1));
      rec.equal(tag + " Seifert K^2+#V", seifert_k2nv(s, opt.dedekind), P.report.k2_plus_nv);
      auto ks = ks_route(s, opt.dedekind);
      if (ks.sw0_ks) rec.equal(tag + " KS route 8 sw0", 8 * *ks.sw0_ks, want);
    });
  }
}

inline void minimally_elliptic(Recorder& rec, const Options& opt) {
  rec.guard("13-vertex graph", [&] {
    auto P = run(fixtures::minimally_elliptic_graph(), opt);
    rec.equal("|H| (transcription gate)", P.report.order_H, BigInt(3));
    if (P.report.order_H != 3) return;
    rec.equal("lambda/|H|", P.report.casson_walker / 3, BigRational(-49, 36));
    rec.equal("T(1)", P.report.torsion_at_1, BigRational(8, 9));
    rec.equal("K^2+#V", P.report.k2_plus_nv, BigRational(10));
    rec.equal("sw0", P.report.sw0, BigRational(9, 4));
    rec.equal("sw0 - (K^2+#V)/8", P.report.sw0 - P.report.k2_plus_nv / 8, BigRational(1));
    rec.equal("gap", P.report.conjecture_gap, BigRational(1));
  });
}

inline void brieskorn(Recorder& rec, const Options& opt) {
  for (const auto& a : fixtures::brieskorn_corpus()) {
    const std::string tag = "Sigma(" + fixtures::join(a) + ")";
    rec.guard(tag, [&] {
      auto spec = make_brieskorn(a);
      if (classify(spec).kind == BrieskornCase::NotQHS) return;
      auto rep = closed_form_invariants(spec, opt.dedekind);
      rec.truth(tag + " -sw0 = sigma(F)/8", rep.gorenstein_check);
      rec.truth(tag + " s(q,alpha) = s(beta,alpha)", rep.dedekind_check);
      if (rep.order_H > 10000) return;
      auto P = run(star_graph(brieskorn_seifert(spec)), opt);
      rec.equal(tag + " |H|", P.report.order_H, rep.order_H);
      rec.equal(tag + " T(1)", P.report.torsion_at_1, rep.torsion_closed);
      rec.equal(tag + " lambda", P.report.casson_walker, rep.lambda_closed);
    });
  }
}

/// Cofactor expansion, the oracle for the elimination determinant.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += (j % 2 ? -1 : 1) * m(0, j) * cofactor_det(minor);
  }
  return total;
}

inline void exact_layer(Recorder& rec) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<long>(rng() % 13) - 6;
    auto snf = smith_normal_form(A);
    rec.truth("SNF: U A V = D", snf.U * A * snf.V == snf.D);
    rec.truth("SNF: U U^-1 = 1", snf.U * snf.U_inv == IntMatrix::identity(n));
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      rec.truth("SNF: divisibility chain", diag[i + 1] == 0 || (diag[i] != 0 && diag[i + 1] % diag[i] == 0));
    const BigInt det = determinant(A);
    rec.equal("determinant vs cofactor expansion", det, cofactor_det(A));
    if (det != 0) rec.truth("A A^-1 = 1", to_rational(A) * invert_rational_matrix(A) == RatMatrix::identity(n));
  }
  for (long N : {5L, 12L, 15L, 16L}) {
    auto F = CyclotomicField::get(N);
    auto element = [&] {
      IntPoly c(F->degree());
      for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
      return CycNum(F, c, BigInt(1 + rng() % 4));
    };
    CycNum total(F);
    for (long k = 0; k < N; ++k) total += CycNum::zeta(F, k);
    rec.truth("sum of all N-th roots vanishes", total.is_zero());
    for (int t = 0; t < 10; ++t) {
      CycNum x = element(), y = element(), z = element();
      rec.truth("associativity", (x * y) * z == x * (y * z));
      rec.truth("distributivity", x * (y + z) == x * y + x * z);
      if (!x.is_zero()) rec.truth("inverse", x * x.inverse() == CycNum(F, BigRational(1)));
    }
  }
}

inline void dedekind_layer(Recorder& rec, const Options& opt) {
  const auto& s = opt.dedekind;
  for (long k = 2; k <= 60; ++k)
    for (long h = 1; h < k; ++h)
      if (std::gcd(h, k) == 1)
        rec.equal("reciprocity s(" + std::to_string(h) + "," + std::to_string(k) + ")", s(h, k, 0, 0) + s(k, h, 0, 0),
                  BigRational(-1, 4) + make_rational(h * h + k * k + 1, 12 * h * k));
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    long h = 1 + rng() % 30, k = 1 + rng() % 30;
    if (std::gcd(h, k) != 1) continue;
    BigRational x = make_rational(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 8));
    BigRational y = make_rational(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 8));
    if (is_integer(x) && is_integer(y)) continue;
    BigRational rhs = dedekind_symbol(x) * dedekind_symbol(y) +
                      (BigRational(h * h) * psi2(y) + psi2(BigRational(h) * y + BigRational(k) * x) + BigRational(k * k) * psi2(x)) /
                          (2 * h * k);
    rec.equal("shifted reciprocity", s(h, k, x, y) + s(k, h, y, x), rhs);
  }
  for (long k = 1; k <= 30; ++k)
    for (int i = 0; i < 10; ++i)
      rec.truth("Kubert identity", kubert_identity(k, make_rational(static_cast<long>(rng() % 60) - 30, 1 + static_cast<long>(rng() % 9))).holds());
  for (long p = 2; p <= 40; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long t : {0L, q}) {
        for (const auto& c : fourier_identity_suite(p, q, t, s)) {
          // only the first two identities involve the shift t
          if (t != 0 && c.name != "B6" && c.name != "B7") continue;
          rec.equal(c.name + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " t=" + std::to_string(t), c.lhs, c.rhs);
        }
      }
    }
}

inline void torsion_layer(Recorder& rec, const Options& opt) {
  for (const auto& named : fixtures::corpus()) {
    rec.guard(named.name, [&] {
      LatticeData L = build_lattice(named.graph);
      FinAbGroup H = homology_from_lattice(L);
      const long order = to_long(H.order());
      if (order > kExhaustiveCap) return;
      const std::string tag = named.name;
      TorsionContext ctx(L, H);
      auto base = torsion_base_values(ctx, {kDefaultOrderCap, opt.threads});
      rec.guard(tag + " rationality", [&] { torsion_table_from(ctx, base, H.zero()); });
      for (std::size_t v = 0; v < L.size(); ++v) rec.truth(tag + " Delta(1) = |H|/m", delta_at_one_check(L, v));

      if (order <= 200) {
        for (std::size_t i = 1; i < base.size(); ++i) {
          const Character chi = H.character_at(i);
          auto exps = ctx.exponents(chi);
          for (std::size_t v = 0; v < L.size(); ++v)
            if (ctx.admissible_base(exps, v)) rec.truth(tag + " base-vertex independence", ctx.regularized(exps, ctx.weights[v]) == base[i]);
          const auto& w = ctx.weights[ctx.default_base(exps)];
          for (long c : {2L, 3L}) rec.truth(tag + " scale independence", ctx.regularized(exps, w.scaled(c)) == base[i]);
        }
        for (std::size_t hi = 0; hi < base.size(); ++hi) {
          const GroupElement h = H.element_at(hi);
          auto t = torsion_table_from(ctx, base, h);
          auto u = torsion_table_from(ctx, base, spinc_conjugate(L, H, h));
          for (std::size_t i = 0; i < base.size(); ++i)
            rec.truth(tag + " torsion symmetry",
                      t.entries[i] == u.entries[H.character_index(H.conjugate(H.character_at(i)))]);
          if (order > 16) break;
        }
      }

      auto all = torsion_at_one_all(ctx, base);
      for (std::size_t hi = 0; hi < base.size(); ++hi) {
        rec.truth(tag + " torsion/quadratic identities", swiden_consistency_from(L, H, all, H.element_at(hi)).ok());
        if (order > 16) break;
      }

      std::mt19937 rng(static_cast<unsigned>(order));
      for (int t = 0; t < 20; ++t) {
        GroupElement x = H.element_at(rng() % order), y = H.element_at(rng() % order);
        rec.equal(tag + " q_can quadratic law", mod_one(q_can(L, H, H.add(x, y)) - q_can(L, H, x) - q_can(L, H, y)),
                  linking_form(L, H, x, y));
        auto d = H.lift(x);
        std::vector<BigInt> shifted = d;
        for (std::size_t v = 0; v < L.size(); ++v) {
          long u = static_cast<long>(rng() % 5) - 2;
          for (std::size_t r = 0; r < L.size(); ++r) shifted[r] += L.I(r, v) * u;
        }
        rec.equal(tag + " q_can lift independence", q_can_of_lift(L, shifted), q_can_of_lift(L, d));
      }
      auto g = gauss_sum_check(L, H);
      rec.truth(tag + " Gauss sum (float) within 1e-9", g.error() < 1e-9);
    });
  }

  for (const auto& named : fixtures::corpus()) {
    if (named.graph.size() > 12) continue;
    rec.guard(named.name + " blowups", [&] {
      auto ref = run(named.graph, opt).report;
      const auto& g = named.graph;
      std::vector<PlumbingGraph> variants{blowup_vertex(g, g.vertices.front().id)};
      if (!g.edges.empty()) variants.push_back(blowup_edge(g, g.edges.front().first, g.edges.front().second));
      for (const auto& b : variants) {
        auto rep = run(b, opt).report;
        rec.equal(named.name + " blowup |H|", rep.order_H, ref.order_H);
        rec.equal(named.name + " blowup K^2+#V", rep.k2_plus_nv, ref.k2_plus_nv);
        rec.equal(named.name + " blowup lambda", rep.casson_walker, ref.casson_walker);
        rec.equal(named.name + " blowup T(1)", rep.torsion_at_1, ref.torsion_at_1);
        rec.equal(named.name + " blowup sw0", rep.sw0, ref.sw0);
      }
    });
  }
}

inline void property_suites(Recorder& rec, const Options& opt) {
  exact_layer(rec);
  dedekind_layer(rec, opt);
  torsion_layer(rec, opt);
}

inline void nonnegativity(Recorder& rec, const Options& opt) {
  for (const auto& named : fixtures::corpus())
    rec.guard(named.name, [&] {
      rec.truth(named.name + " conjecture gap >= 0", run(named.graph, opt).report.conjecture_gap >= 0);
    });
}

}  // namespace detail

struct Criterion {
  int id;
  std::string name;
  std::function<void(Recorder&, const Options&)> body;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "lens spaces L(p,q), p <= 50: T(1), lambda, K^2+#V, gap", detail::lens_spaces},
      {2, "A_{p-1} chains, p <= 30: sw0 = (p-1)/8", detail::a_chains},
      {3, "D_n, 4 <= n <= 12: torsion and KS routes give 8 sw0 = n", detail::d_series},
      {4, "E6, E7, E8: sw0 = 6/8, 7/8, 1", detail::e_series},
      {5, "rational family m in {2,4,5,7,8}: 8 sw0 = 3m - m/3 - 2 by both routes", detail::rational_family},
      {6, "rational family m = 3: T(1) = 5/9, lambda/|H| = -7/36, sw0 = 3/4", detail::rational_family_m3},
      {7, "polygonal singularities: 8 sw0 = 17 + nu - sum a_i, gap = 1", detail::polygonal},
      {8, "13-vertex minimally elliptic graph: |H| = 3, sw0 = 9/4, gap = 1", detail::minimally_elliptic},
      {9, "Brieskorn-Hamm corpus: closed forms vs plumbing, -sw0 = sigma(F)/8", detail::brieskorn},
      {10, "property suites: exact layer, Dedekind identities, torsion laws, blowups, Gauss sums", detail::property_suites},
      {11, "conjecture gap >= 0 on the corpus", detail::nonnegativity},
  };
}

inline Result run_criterion(const Criterion& c, const Options& opt) {
  Result r;
  r.id = c.id;
  r.name = c.name;
  Recorder rec(r);
  const auto start = std::chrono::steady_clock::now();
  rec.guard("criterion " + std::to_string(c.id), [&] { c.body(rec, opt); });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// One line per criterion plus indented failure details.
inline std::string format_result(const Result& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.checks << " checks)\n";
  for (const auto& f : r.failures) out << "        " << f << "\n";
  return out.str();
}

/// The deliberately corrupted evaluator used to show the harness can fail.
inline DedekindFn mutated_dedekind() {
  return [](long h, long k, const BigRational& x, const BigRational& y) {
    BigRational v = dr_sum(h, k, x, y);
    return k > 2 ? BigRational(v + make_rational(1, 12 * k)) : v;
  };
}

}  // namespace qhs::acceptance
