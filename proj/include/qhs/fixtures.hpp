#pragma once

#include <string>
#include <vector>

#include "qhs/brieskorn.hpp"
#include "qhs/plumbing.hpp"
#include "qhs/seifert.hpp"

namespace qhs::fixtures {

/// Chain of `length` vertices of Euler number -2: the A_length singularity link.
inline PlumbingGraph a_chain(long length) { return chain_graph(std::vector<long>(static_cast<std::size_t>(length), -2)); }

/// D_n, n >= 4: Seifert invariants (-2; (n-2, n-3), (2,1), (2,1)).
inline SeifertData d_seifert(long n) { return make_seifert(-2, {{n - 2, n - 3}, {2, 1}, {2, 1}}); }
inline PlumbingGraph d_graph(long n) { return star_graph(d_seifert(n)); }

inline SeifertData e6_seifert() { return make_seifert(-2, {{2, 1}, {3, 2}, {3, 2}}); }
inline SeifertData e7_seifert() { return make_seifert(-2, {{2, 1}, {3, 2}, {4, 3}}); }
inline SeifertData e8_seifert() { return make_seifert(-2, {{2, 1}, {3, 2}, {5, 4}}); }

/// Rational family with central -3 and three arms of m-1 vertices of -2.
inline SeifertData rational_family_seifert(long m) { return make_seifert(-3, {{m, m - 1}, {m, m - 1}, {m, m - 1}}); }

/// Polygonal graph: central 2 - nu with single leaves -a_i.
inline SeifertData polygonal_seifert(const std::vector<long>& a) {
  std::vector<SeifertArm> arms;
  for (long x : a) arms.push_back({x, 1});
  return make_seifert(2 - static_cast<long>(a.size()), std::move(arms));
}

/// Thirteen-vertex minimally elliptic graph: a chain (-2,-2,-2,-2,-3,-2,-2,-2,-2)
/// with a pendant chain of two -2 vertices at the second and at the eighth
/// chain vertex.
inline PlumbingGraph minimally_elliptic_graph() {
  PlumbingGraph g = chain_graph({-2, -2, -2, -2, -3, -2, -2, -2, -2});
  for (const char* root : {"v1", "v7"}) {
    std::string first = g.add_vertex(-2, std::string("p") + root + "a");
    std::string second = g.add_vertex(-2, std::string("p") + root + "b");
    g.add_edge(root, first);
    g.add_edge(first, second);
  }
  return g;
}

/// Polygonal parameter sets with negative orbifold degree.
inline std::vector<std::vector<long>> polygonal_parameters() {
  return {{3, 3, 4}, {3, 4, 5}, {3, 3, 3, 3}, {2, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3}};
}

inline std::vector<std::vector<long>> brieskorn_corpus() {
  return {{2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {4, 6, 5}, {6, 10, 7}, {6, 10, 7, 11}, {4, 2, 2, 3}, {8, 2, 2, 3, 5}};
}

inline std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

struct NamedGraph {
  std::string name;
  PlumbingGraph graph;
};

/// Every singularity link used by the checks, small enough for exhaustive work.
inline std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {4, 1}, {5, 2}, {7, 3}, {9, 2}, {12, 5}})
    out.push_back({"lens(" + std::to_string(p) + "," + std::to_string(q) + ")", lens_chain(p, q)});
  for (long k : {1, 2, 4, 6}) out.push_back({"A" + std::to_string(k), a_chain(k)});
  for (long n : {4, 5, 6, 8}) out.push_back({"D" + std::to_string(n), d_graph(n)});
  out.push_back({"E6", star_graph(e6_seifert())});
  out.push_back({"E7", star_graph(e7_seifert())});
  out.push_back({"E8", star_graph(e8_seifert())});
  for (long m : {2, 3, 4, 5}) out.push_back({"rational-family(m=" + std::to_string(m) + ")", star_graph(rational_family_seifert(m))});
  for (const auto& a : polygonal_parameters()) out.push_back({"polygonal(" + join(a) + ")", star_graph(polygonal_seifert(a))});
  out.push_back({"minimally-elliptic-13", minimally_elliptic_graph()});
  for (const auto& a : brieskorn_corpus()) {
    auto spec = make_brieskorn(a);
    if (order_of_H(spec) > 500) continue;
    out.push_back({"brieskorn(" + join(a) + ")", star_graph(brieskorn_seifert(spec))});
  }
  return out;
}

}  // namespace qhs::fixtures
