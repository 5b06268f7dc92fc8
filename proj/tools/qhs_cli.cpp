#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhs/acceptance.hpp"
#include "qhs/brieskorn.hpp"
#include "qhs/dedekind.hpp"
#include "qhs/io.hpp"
#include "qhs/seifert.hpp"
#include "qhs/torsion.hpp"

namespace {

using namespace qhs;

struct Flags {
  std::string format = "table";
  long max_order = kDefaultOrderCap;
  bool all_spinc = false;
  unsigned threads = 1;
};

struct CrossCheck {
  std::string name;
  std::string computed;
  std::string expected;
  bool match;
};

CrossCheck compare(const std::string& name, const BigRational& computed, const BigRational& expected) {
  return {name, to_string(computed), to_string(expected), computed == expected};
}

struct Output {
  InvariantReport report;
  std::vector<CrossCheck> checks;
  std::vector<std::pair<std::string, std::string>> notes;  // extra labelled values
  std::optional<double> gauss_error;
};

void print(const Output& out, const Flags& flags) {
  if (flags.format == "json") {
    Json doc = report_to_json(out.report);
    if (!out.checks.empty()) {
      doc["cross_checks"] = Json::array();
      for (const auto& c : out.checks)
        doc["cross_checks"].push_back(
            {{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"status", c.match ? "MATCH" : "MISMATCH"}});
    }
    for (const auto& [k, v] : out.notes) doc["notes"][k] = v;
    if (out.gauss_error) doc["gauss_sum_error_float"] = *out.gauss_error;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << report_to_table(out.report);
  for (const auto& [k, v] : out.notes) std::cout << k << std::string(k.size() < 25 ? 25 - k.size() : 1, ' ') << v << "\n";
  if (out.gauss_error) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", *out.gauss_error);
    std::cout << "Gauss sum check (floating point) |error| = " << buf << "\n";
  }
  if (!out.checks.empty()) {
    std::cout << "cross-checks\n";
    for (const auto& c : out.checks)
      std::cout << "  " << (c.match ? "MATCH    " : "MISMATCH ") << c.name << ": " << c.computed << " vs " << c.expected << "\n";
  }
}

struct Pipeline {
  LatticeData L;
  FinAbGroup H;
  Output out;
};

Pipeline pipeline(const PlumbingGraph& g, const Flags& flags) {
  Pipeline p{build_lattice(g), {}, {}};
  p.H = homology_from_lattice(p.L);
  p.out.report = compute_report(p.L, p.H, {flags.max_order, flags.threads, flags.all_spinc});
  if (p.H.order() <= kExhaustiveCap) p.out.gauss_error = gauss_sum_check(p.L, p.H).error();
  return p;
}

bool all_match(const Output& out) {
  for (const auto& c : out.checks)
    if (!c.match) return false;
  return true;
}

int cmd_graph(const std::string& path, const Flags& flags) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  print(pipeline(parse_graph_json(buf.str()), flags).out, flags);
  return 0;
}

int cmd_lens(long p, long q, const Flags& flags) {
  auto P = pipeline(lens_chain(p, q), flags);
  const BigRational s = dedekind_sum(q, p);
  P.out.checks.push_back(compare("T(1) = (p-1)/4p - s(q,p)", P.out.report.torsion_at_1, make_rational(p - 1, 4 * p) - s));
  P.out.checks.push_back(compare("lambda = p s(q,p)/2", P.out.report.casson_walker, p * s / 2));
  P.out.checks.push_back(compare("K^2+#V = 2(p-1)/p - 12 s(q,p)", P.out.report.k2_plus_nv, make_rational(2 * (p - 1), p) - 12 * s));
  print(P.out, flags);
  return all_match(P.out) ? 0 : 3;
}

void seifert_checks(const SeifertData& s, Pipeline& P) {
  const auto& r = P.out.report;
  P.out.checks.push_back(compare("|H| = alpha_1...alpha_nu |e|", BigRational(r.order_H), BigRational(s.order_H())));
  P.out.checks.push_back(compare("lambda (Seifert closed form)", r.casson_walker, seifert_casson_walker(s)));
  P.out.checks.push_back(compare("K^2+#V (Seifert closed form)", r.k2_plus_nv, seifert_k2nv(s)));
  P.out.checks.push_back(compare("T(1) (center and arm ends only)", r.torsion_at_1, seifert_torsion_shortcut(s, P.H, P.H.zero())));
  auto ks = ks_route(s);
  P.out.notes.push_back({"Kreck-Stolz KS", to_string(ks.ks)});
  P.out.notes.push_back({"monopoles |S+|, |S-|", std::to_string(ks.s0_plus) + ", " + std::to_string(ks.s0_minus)});
  if (ks.sw0_ks)
    P.out.checks.push_back(compare("sw0 (Kreck-Stolz route)", r.sw0, *ks.sw0_ks));
  else
    P.out.notes.push_back({"Kreck-Stolz route", "not applicable"});
}

int cmd_seifert(long b, const std::vector<std::string>& arm_text, const Flags& flags) {
  std::vector<SeifertArm> arms;
  for (const auto& t : arm_text) {
    auto slash = t.find('/');
    if (slash == std::string::npos) fail(ErrorKind::InvalidArgument, "arm '" + t + "' must be alpha/omega");
    arms.push_back({to_long(parse_int(t.substr(0, slash))), to_long(parse_int(t.substr(slash + 1)))});
  }
  auto s = make_seifert(b, arms);
  auto P = pipeline(star_graph(s), flags);
  seifert_checks(s, P);
  print(P.out, flags);
  return all_match(P.out) ? 0 : 3;
}

int cmd_brieskorn(const std::vector<long>& exponents, const Flags& flags) {
  auto spec = make_brieskorn(exponents);
  auto closed = closed_form_invariants(spec);
  auto s = brieskorn_seifert(spec);
  auto P = pipeline(star_graph(s), flags);
  const auto& r = P.out.report;
  P.out.notes.push_back({"sigma(F)", to_string(closed.sigma_F)});
  P.out.checks.push_back(compare("|H| (closed form)", BigRational(r.order_H), BigRational(closed.order_H)));
  P.out.checks.push_back(compare("T(1) (closed form)", r.torsion_at_1, closed.torsion_closed));
  P.out.checks.push_back(compare("lambda (closed form)", r.casson_walker, closed.lambda_closed));
  P.out.checks.push_back(compare("-sw0 = sigma(F)/8 (gorenstein_check)", -r.sw0, closed.sigma_F / 8));
  seifert_checks(s, P);
  print(P.out, flags);
  return all_match(P.out) ? 0 : 3;
}

int cmd_dedekind(long h, long k, const std::string& xs, const std::string& ys, const Flags& flags) {
  if (k < 1 || std::gcd(h, k) != 1) fail(ErrorKind::InvalidArgument, "need k >= 1 and gcd(h,k) = 1");
  const BigRational x = parse_rational(xs), y = parse_rational(ys);
  const BigRational fast = dr_sum(h, k, x, y), direct = dr_sum_direct(h, k, x, y);
  if (flags.format == "json") {
    Json doc{{"h", h}, {"k", k}, {"x", rational_to_json(x)}, {"y", rational_to_json(y)}, {"value", rational_to_json(fast)},
             {"direct_sum", rational_to_json(direct)}, {"status", fast == direct ? "MATCH" : "MISMATCH"}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "s(" << h << "," << k << ";" << to_string(x) << "," << to_string(y) << ") = " << to_string(fast) << "\n"
              << (fast == direct ? "MATCH" : "MISMATCH") << "    direct summation: " << to_string(direct) << "\n";
  }
  return fast == direct ? 0 : 3;
}

int cmd_verify(bool list, bool mutate, const Flags& flags) {
  auto all = acceptance::criteria();
  if (list) {
    for (const auto& c : all) std::cout << "[" << c.id << "] " << c.name << "\n";
    return 0;
  }
  acceptance::Options opt;
  opt.threads = flags.threads;
  if (mutate) opt.dedekind = acceptance::mutated_dedekind();
  bool ok = true;
  for (const auto& c : all) {
    auto r = acceptance::run_criterion(c, opt);
    std::cout << acceptance::format_result(r) << std::flush;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of negative definite plumbed rational homology spheres"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-order", flags.max_order, "Largest |H| handled by character sums")->check(CLI::PositiveNumber);
  app.add_flag("--all-spinc", flags.all_spinc, "Also list sw0 for every spin^c structure");
  app.add_option("--threads", flags.threads, "Worker threads for the character sum")->check(CLI::Range(1u, 256u));

  std::string path;
  auto* graph = app.add_subcommand("graph", "Invariants of a plumbing graph given as JSON");
  graph->add_option("file", path, "Graph file")->required();

  long p = 0, q = 0;
  auto* lens = app.add_subcommand("lens", "Lens space L(p,q)");
  lens->add_option("p", p)->required();
  lens->add_option("q", q)->required();

  long b = 0;
  std::vector<std::string> arms;
  auto* seifert = app.add_subcommand("seifert", "Seifert manifold from normalized invariants");
  seifert->add_option("--b", b, "Central Euler number")->required()->allow_extra_args(false);
  seifert->add_option("--arm", arms, "Arm alpha/omega (repeatable)")->required()->allow_extra_args(false);

  std::vector<long> exponents;
  auto* brieskorn = app.add_subcommand("brieskorn", "Brieskorn-Hamm complete intersection");
  brieskorn->add_option("exponents", exponents)->required()->expected(3, -1);

  long h = 0, k = 1;
  std::string xs = "0", ys = "0";
  auto* ded = app.add_subcommand("dedekind", "Dedekind-Rademacher sum s(h,k;x,y)");
  ded->add_option("numerator", h, "Numerator h")->required();
  ded->add_option("modulus", k, "Modulus k")->required();
  ded->add_option("--x", xs, "Shift x as a/b");
  ded->add_option("--y", ys, "Shift y as a/b");

  bool list = false, mutate = false;
  auto* verify = app.add_subcommand("verify", "Run every acceptance criterion");
  verify->add_flag("--list", list, "Print criterion names only");
  verify->add_flag("--mutate-dedekind", mutate, "Run with a deliberately corrupted Dedekind sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*graph) return cmd_graph(path, flags);
    if (*lens) return cmd_lens(p, q, flags);
    if (*seifert) return cmd_seifert(b, arms, flags);
    if (*brieskorn) return cmd_brieskorn(exponents, flags);
    if (*ded) return cmd_dedekind(h, k, xs, ys, flags);
    if (*verify) return cmd_verify(list, mutate, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::OrderCapExceeded ? 2 : 1;
  }
  return 1;
}
