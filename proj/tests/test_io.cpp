#include <gtest/gtest.h>

#include "qhs/fixtures.hpp"
#include "qhs/io.hpp"

using namespace qhs;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_graph_json(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

}  // namespace

TEST(Io, ParsesGraph) {
  auto g = parse_graph_json(R"({"vertices":[{"id":"v0","euler":-2},{"id":"v1","euler":-3}],"edges":[["v0","v1"]]})");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertices[1].id, "v1");
  EXPECT_EQ(g.vertices[1].euler, -3);
  EXPECT_EQ(g.edges[0], std::make_pair(std::string("v0"), std::string("v1")));
}

TEST(Io, LocatedErrors) {
  EXPECT_NE(error_of("{\n  \"vertices\": [\n    {\"id\": \"v0\" \"euler\": -2}\n  ]\n}").find("line 3"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":[{"id":"v0"}],"edges":[]})").find("vertices[0]: missing field 'euler'"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":[{"id":"v0","euler":"x"}],"edges":[]})").find("vertices[0].euler"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":[{"id":"v0","euler":-2}],"edges":[["v0"]]})").find("edges[0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"edges":[]})").find("missing field 'vertices'"), std::string::npos);
}

TEST(Io, GraphRoundTrip) {
  for (const auto& named : fixtures::corpus()) EXPECT_EQ(parse_graph_json(graph_to_json(named.graph).dump()), named.graph);
}

TEST(Io, ReportRoundTrip) {
  for (const auto& g : {fixtures::a_chain(3), fixtures::minimally_elliptic_graph(), fixtures::d_graph(4)}) {
    auto report = compute_report(g, {kDefaultOrderCap, 1, true});
    EXPECT_EQ(report_from_json(Json::parse(report_to_json(report).dump())), report);
  }
}

TEST(Io, LargeIntegersAreStrings) {
  BigRational big = make_rational(BigInt("123456789012345678901234567890"), BigInt(7));
  Json j = rational_to_json(big);
  EXPECT_TRUE(j["num"].is_string());
  EXPECT_TRUE(j["den"].is_number_integer());
  EXPECT_EQ(rational_from_json(j, "x"), big);
  InvariantReport r;
  r.order_H = BigInt("99999999999999999999");
  r.sw0 = big;
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

TEST(Io, RationalsNeverFloats) {
  auto report = compute_report(fixtures::a_chain(2));
  Json doc = report_to_json(report);
  for (const char* key : {"k2_plus_nv", "casson_walker", "torsion_at_1", "sw0", "conjecture_gap"}) {
    EXPECT_TRUE(doc[key]["num"].is_number_integer()) << key;
    EXPECT_TRUE(doc[key]["den"].is_number_integer()) << key;
  }
  EXPECT_EQ(doc["sw0"]["num"], 1);
  EXPECT_EQ(doc["sw0"]["den"], 4);
}

TEST(Io, TableIsDeterministic) {
  auto g = star_graph(fixtures::rational_family_seifert(3));
  auto a = report_to_table(compute_report(g, {kDefaultOrderCap, 1, true}));
  auto b = report_to_table(compute_report(g, {kDefaultOrderCap, 3, true}));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("sw0(canonical)           3/4"), std::string::npos) << a;
  EXPECT_NE(a.find("Z/3 + Z/9"), std::string::npos);
}
