#pragma once

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhs/plumbing.hpp"
#include "qhs/torsion.hpp"

namespace qhs {

using Json = nlohmann::ordered_json;

namespace detail {
inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline long json_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(ErrorKind::ParseError, where + ": expected an integer");
  return j.get<long>();
}

inline std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(ErrorKind::ParseError, where + ": expected a string");
  return j.get<std::string>();
}

inline const Json& json_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(ErrorKind::ParseError, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::ParseError, where + ": missing field '" + key + "'");
  return *it;
}
}  // namespace detail

/// Graph file: {"vertices":[{"id":"v0","euler":-2},...],"edges":[["v0","v1"],...]}.
inline PlumbingGraph parse_graph_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    fail(ErrorKind::ParseError, detail::line_col(text, ex.byte == 0 ? 0 : ex.byte - 1) + ": malformed JSON");
  }
  PlumbingGraph g;
  const Json& vertices = detail::json_field(doc, "vertices", "document");
  if (!vertices.is_array()) fail(ErrorKind::ParseError, "vertices: expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    g.vertices.push_back({detail::json_string(detail::json_field(vertices[i], "id", where), where + ".id"),
                          detail::json_long(detail::json_field(vertices[i], "euler", where), where + ".euler")});
  }
  const Json& edges = detail::json_field(doc, "edges", "document");
  if (!edges.is_array()) fail(ErrorKind::ParseError, "edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) fail(ErrorKind::ParseError, where + ": expected a pair of vertex ids");
    g.add_edge(detail::json_string(edges[i][0], where + "[0]"), detail::json_string(edges[i][1], where + "[1]"));
  }
  return g;
}

inline Json graph_to_json(const PlumbingGraph& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& v : g.vertices) doc["vertices"].push_back({{"id", v.id}, {"euler", v.euler}});
  doc["edges"] = Json::array();
  for (const auto& [a, b] : g.edges) doc["edges"].push_back({a, b});
  return doc;
}

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline Json integer_to_json(const BigInt& x) {
  if (fits_long(x)) return Json(to_long(x));
  return Json(x.get_str());
}

inline BigInt integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  fail(ErrorKind::ParseError, where + ": expected an integer");
}

inline Json rational_to_json(const BigRational& q) {
  return Json{{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

inline BigRational rational_from_json(const Json& j, const std::string& where) {
  BigInt num = integer_from_json(detail::json_field(j, "num", where), where + ".num");
  BigInt den = integer_from_json(detail::json_field(j, "den", where), where + ".den");
  if (den == 0) fail(ErrorKind::ParseError, where + ": zero denominator");
  return make_rational(num, den);
}

inline Json report_to_json(const InvariantReport& r) {
  Json doc;
  doc["order_H"] = integer_to_json(r.order_H);
  doc["invariant_factors"] = r.invariant_factors;
  doc["k2_plus_nv"] = rational_to_json(r.k2_plus_nv);
  doc["casson_walker"] = rational_to_json(r.casson_walker);
  doc["torsion_at_1"] = rational_to_json(r.torsion_at_1);
  doc["sw0"] = rational_to_json(r.sw0);
  doc["conjecture_gap"] = rational_to_json(r.conjecture_gap);
  doc["numerically_gorenstein"] = r.numerically_gorenstein;
  if (!r.spinc_table.empty()) {
    doc["spinc_table"] = Json::array();
    for (const auto& row : r.spinc_table)
      doc["spinc_table"].push_back({{"h_sigma", row.h_sigma.c},
                                    {"torsion_at_1", rational_to_json(row.torsion_at_1)},
                                    {"sw0", rational_to_json(row.sw0)}});
  }
  return doc;
}

inline InvariantReport report_from_json(const Json& doc) {
  InvariantReport r;
  r.order_H = integer_from_json(detail::json_field(doc, "order_H", "report"), "order_H");
  const Json& factors = detail::json_field(doc, "invariant_factors", "report");
  if (!factors.is_array()) fail(ErrorKind::ParseError, "invariant_factors: expected an array");
  for (std::size_t i = 0; i < factors.size(); ++i)
    r.invariant_factors.push_back(detail::json_long(factors[i], "invariant_factors[" + std::to_string(i) + "]"));
  auto rat = [&](const char* key) { return rational_from_json(detail::json_field(doc, key, "report"), key); };
  r.k2_plus_nv = rat("k2_plus_nv");
  r.casson_walker = rat("casson_walker");
  r.torsion_at_1 = rat("torsion_at_1");
  r.sw0 = rat("sw0");
  r.conjecture_gap = rat("conjecture_gap");
  const Json& gor = detail::json_field(doc, "numerically_gorenstein", "report");
  if (!gor.is_boolean()) fail(ErrorKind::ParseError, "numerically_gorenstein: expected a boolean");
  r.numerically_gorenstein = gor.get<bool>();
  if (auto it = doc.find("spinc_table"); it != doc.end()) {
    if (!it->is_array()) fail(ErrorKind::ParseError, "spinc_table: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "spinc_table[" + std::to_string(i) + "]";
      const Json& row = (*it)[i];
      SpincRow out;
      const Json& h = detail::json_field(row, "h_sigma", where);
      if (!h.is_array()) fail(ErrorKind::ParseError, where + ".h_sigma: expected an array");
      for (std::size_t k = 0; k < h.size(); ++k) out.h_sigma.c.push_back(detail::json_long(h[k], where + ".h_sigma"));
      out.torsion_at_1 = rational_from_json(detail::json_field(row, "torsion_at_1", where), where + ".torsion_at_1");
      out.sw0 = rational_from_json(detail::json_field(row, "sw0", where), where + ".sw0");
      r.spinc_table.push_back(std::move(out));
    }
  }
  return r;
}

inline std::string format_group(const std::vector<long>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " + Z/" : "Z/") + std::to_string(factors[i]);
  return out;
}

inline std::string format_element(const GroupElement& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.c.size(); ++i) out += (i ? "," : "") + std::to_string(h.c[i]);
  return out + ")";
}

/// Human-readable report; every rational is printed exactly as a/b.
inline std::string report_to_table(const InvariantReport& r) {
  std::ostringstream out;
  out << "|H|                      " << r.order_H.get_str() << "\n"
      << "H                        " << format_group(r.invariant_factors) << "\n"
      << "K^2+#V                   " << to_string(r.k2_plus_nv) << "\n"
      << "Casson-Walker lambda     " << to_string(r.casson_walker) << "\n"
      << "torsion T(1)             " << to_string(r.torsion_at_1) << "\n"
      << "sw0(canonical)           " << to_string(r.sw0) << "\n"
      << "conjecture gap           " << to_string(r.conjecture_gap) << "\n"
      << "numerically Gorenstein   " << (r.numerically_gorenstein ? "yes" : "no") << "\n";
  if (!r.spinc_table.empty()) {
    out << "spin^c table (h_sigma, T(1), sw0)\n";
    for (const auto& row : r.spinc_table)
      out << "  " << format_element(row.h_sigma) << "  " << to_string(row.torsion_at_1) << "  " << to_string(row.sw0) << "\n";
  }
  return out.str();
}

}  // namespace qhs
