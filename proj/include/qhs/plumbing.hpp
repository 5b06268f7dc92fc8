#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/exact/matrix.hpp"
#include "qhs/exact/rational.hpp"

namespace qhs {

struct Vertex {
  std::string id;
  long euler;
};

/// Decorated tree. Vertex order fixes the row order of every derived matrix.
struct PlumbingGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t size() const { return vertices.size(); }

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].id == id) return i;
    fail(ErrorKind::InvalidArgument, "unknown vertex id '" + id + "'");
  }

  /// Fresh vertex id not yet in use, of the form prefix + number.
  std::string fresh_id(const std::string& prefix = "x") const {
    for (std::size_t n = vertices.size();; ++n) {
      std::string candidate = prefix + std::to_string(n);
      bool taken = false;
      for (const auto& v : vertices) taken = taken || v.id == candidate;
      if (!taken) return candidate;
    }
  }

  std::string add_vertex(long euler, std::string id = {}) {
    if (id.empty()) id = fresh_id("v");
    vertices.push_back({id, euler});
    return id;
  }

  void add_edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }

  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges != b.edges) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      if (a.vertices[i].id != b.vertices[i].id || a.vertices[i].euler != b.vertices[i].euler) return false;
    return true;
  }
};

/// Linear graph with the given Euler numbers, ids v0, v1, ...
inline PlumbingGraph chain_graph(const std::vector<long>& eulers) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < eulers.size(); ++i) {
    g.add_vertex(eulers[i], "v" + std::to_string(i));
    if (i > 0) g.add_edge("v" + std::to_string(i - 1), "v" + std::to_string(i));
  }
  return g;
}

/// Adjacency lists after validating ids, edges, and the tree shape.
inline std::vector<std::vector<std::size_t>> tree_adjacency(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) fail(ErrorKind::NotATree, "graph has no vertices");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(g.vertices[i].id, i).second)
      fail(ErrorKind::InvalidArgument, "duplicate vertex id '" + g.vertices[i].id + "'");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : g.edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      fail(ErrorKind::InvalidArgument, "edge references unknown vertex '" + (ia == index.end() ? a : b) + "'");
    if (ia->second == ib->second) fail(ErrorKind::NotATree, "self-loop at '" + a + "'");
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
  }
  if (g.edges.size() != n - 1)
    fail(ErrorKind::NotATree, std::to_string(g.edges.size()) + " edges for " + std::to_string(n) + " vertices");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) fail(ErrorKind::NotATree, "graph is disconnected");
  return adj;
}

/// Everything derived from the intersection matrix of a negative definite tree.
struct LatticeData {
  PlumbingGraph graph;
  std::vector<std::vector<std::size_t>> adjacency;
  IntMatrix I;
  RatMatrix Iinv;
  BigInt detI;
  std::vector<long> degrees;
  std::vector<BigRational> zk;  // coefficients r_v of Z_K
  std::vector<BigInt> k_vec;    // (-e_v - 2)_v

  std::size_t size() const { return graph.size(); }
  long euler(std::size_t v) const { return graph.vertices[v].euler; }
  BigInt order_H() const { return abs(detI); }
};

inline LatticeData build_lattice(const PlumbingGraph& g) {
  LatticeData L;
  L.graph = g;
  L.adjacency = tree_adjacency(g);
  const std::size_t n = g.size();
  L.I = IntMatrix(n, n);
  L.degrees.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    L.I(v, v) = g.vertices[v].euler;
    L.degrees[v] = static_cast<long>(L.adjacency[v].size());
    for (std::size_t w : L.adjacency[v]) L.I(v, w) = 1;
  }
  auto minors = leading_principal_minors(L.I);
  for (std::size_t k = 0; k < n; ++k) {
    // the (k+1)-st leading minor must have sign (-1)^(k+1)
    const BigInt& m = minors.at(k);
    if ((k % 2 == 0 && m >= 0) || (k % 2 == 1 && m <= 0))
      fail(ErrorKind::NotNegativeDefinite,
           "leading minor " + std::to_string(k + 1) + " is " + m.get_str());
  }
  L.detI = minors.back();
  L.Iinv = invert_rational_matrix(L.I);
  L.zk.assign(n, BigRational(0));
  L.k_vec.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    L.k_vec[v] = -g.vertices[v].euler - 2;
    for (std::size_t w = 0; w < n; ++w) L.zk[v] += L.Iinv(v, w) * (g.vertices[w].euler + 2);
  }
  return L;
}

/// K^2 + #V from the degree formula; the naive double sum is checked alongside.
inline BigRational k2_plus_nv(const LatticeData& L) {
  const std::size_t n = L.size();
  BigRational value = 2 + 3 * static_cast<long>(n);
  BigRational naive = static_cast<long>(n);
  for (std::size_t v = 0; v < n; ++v) {
    value += L.euler(v);
    for (std::size_t w = 0; w < n; ++w) {
      value += BigRational((2 - L.degrees[v]) * (2 - L.degrees[w])) * L.Iinv(v, w);
      naive += BigRational((L.euler(v) + 2) * (L.euler(w) + 2)) * L.Iinv(v, w);
    }
  }
  if (value != naive)
    fail(ErrorKind::InternalInvariantViolated, "K^2+#V formulas disagree: " + to_string(value) + " vs " + to_string(naive));
  return value;
}

/// Casson-Walker invariant (Lescop normalization).
inline BigRational casson_walker(const LatticeData& L) {
  const std::size_t n = L.size();
  BigRational bracket = 3 * static_cast<long>(n);
  for (std::size_t v = 0; v < n; ++v) bracket += L.euler(v) + (2 - L.degrees[v]) * L.Iinv(v, v);
  return -BigRational(L.order_H()) * bracket / 24;
}

inline bool numerically_gorenstein(const LatticeData& L) {
  for (const auto& r : L.zk)
    if (!is_integer(r)) return false;
  return true;
}

/// Blow up the intersection point of the edge {a, b}: a new (-1)-vertex
/// sits between them and both neighbours drop by one.
inline PlumbingGraph blowup_edge(PlumbingGraph g, const std::string& a, const std::string& b) {
  auto it = g.edges.begin();
  for (; it != g.edges.end(); ++it)
    if ((it->first == a && it->second == b) || (it->first == b && it->second == a)) break;
  if (it == g.edges.end()) fail(ErrorKind::InvalidArgument, "no edge " + a + "-" + b);
  g.edges.erase(it);
  std::string fresh = g.fresh_id("e");
  g.vertices[g.index_of(a)].euler -= 1;
  g.vertices[g.index_of(b)].euler -= 1;
  g.add_vertex(-1, fresh);
  g.add_edge(a, fresh);
  g.add_edge(fresh, b);
  return g;
}

/// Blow up a generic point of E_v: a new (-1)-leaf on v, which drops by one.
inline PlumbingGraph blowup_vertex(PlumbingGraph g, const std::string& v) {
  std::string fresh = g.fresh_id("e");
  g.vertices[g.index_of(v)].euler -= 1;
  g.add_vertex(-1, fresh);
  g.add_edge(v, fresh);
  return g;
}

}  // namespace qhs
