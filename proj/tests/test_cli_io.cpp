#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bldg/json_io.hpp"
#include "bldg/selftest.hpp"

using namespace bldg;

TEST_CASE("building json round trip") {
  for (const char* spec : {"A2:p=2", "C2:p=2", "thin:A3", "thin:I2:4"}) {
    CAPTURE(spec);
    Geometry g = Geometry::build(spec);
    Json j = building_to_json(g);
    Geometry back = load_building(j);
    CHECK(building_to_json(back) == j);
    CHECK(back.building().size() == g.building().size());
  }
  Geometry thin4 = Geometry::build("thin:I2:4");
  CHECK(thin4.building().size() == 8);
}

TEST_CASE("hash mismatch on corruption") {
  Geometry g = Geometry::build("A2:p=2");
  Json j = building_to_json(g);
  Json corrupt = j;
  corrupt["panels"][0][0][0] = 5;
  CHECK_THROWS_AS(load_building(corrupt), Error);
  Json badhash = j;
  badhash["hash"] = "deadbeef";
  CHECK_THROWS_AS(load_building(badhash), Error);
  CHECK_THROWS_AS(load_building(Json::object()), Error);
}

TEST_CASE("omega json round trip and hash binding") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  auto omega = convex_hull(b, {0, 1, 5});
  Json j = omega_to_json(g, omega);
  auto back = load_omega(g, j);
  CHECK(back.chambers() == omega.chambers());
  // a subcomplex saved against one building will not load against another
  Geometry other = Geometry::build("C2:p=2");
  CHECK_THROWS_AS(load_omega(other, j), Error);
}

TEST_CASE("verdict json") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Verdict centre = classify(g, ConvexChamberSubcomplex(b, {0}));
  Json j = verdict_to_json(centre);
  CHECK(j["kind"] == "Centre");
  CHECK(j["centre"]["type"] == std::vector<int>{2});
  CHECK(j["witness_count"] == 0);

  std::vector<Chamber> apt;
  for (Chamber y = 0; y < b.size(); ++y)
    if (b.is_opposite_chambers(0, y)) {
      apt = apartment_hull(b, 0, y);
      break;
    }
  Verdict cr = classify(g, ConvexChamberSubcomplex(b, apt));
  Json jcr = verdict_to_json(cr, true);
  CHECK(jcr["kind"] == "CR");
  CHECK(jcr["witness_count"].get<std::size_t>() ==
        ConvexChamberSubcomplex(b, apt).all_simplices().size());
  CHECK(jcr["traces"].size() == jcr["trace_count"].get<std::size_t>());
}

TEST_CASE("dot export counts") {
  Geometry g = Geometry::build("A2:p=2");
  std::string dot = export_dot(g.building());
  std::size_t nodes = 0, edges = 0, pos = 0;
  for (std::size_t i = 0; (i = dot.find(";\n", i)) != std::string::npos; ++i) ++nodes;
  for (std::size_t i = 0; (i = dot.find(" -- ", i)) != std::string::npos; ++i) ++edges;
  (void)pos;
  CHECK(nodes == 21 + 42);  // 21 node lines + 42 edge lines
  CHECK(edges == 42);

  Geometry t = Geometry::build("thin:A2");
  std::string tdot = export_dot(t.building());
  std::size_t tedges = 0;
  for (std::size_t i = 0; (i = tdot.find(" -- ", i)) != std::string::npos; ++i) ++tedges;
  CHECK(tedges == 6);

  // marked subcomplex chambers
  const Building& b = g.building();
  std::vector<Chamber> apt;
  for (Chamber y = 0; y < b.size(); ++y)
    if (b.is_opposite_chambers(0, y)) {
      apt = apartment_hull(b, 0, y);
      break;
    }
  ConvexChamberSubcomplex omega(b, apt);
  std::string marked = export_dot(b, &omega);
  std::size_t filled = 0;
  for (std::size_t i = 0; (i = marked.find("style=filled", i)) != std::string::npos; ++i)
    ++filled;
  CHECK(filled == 6);
}

TEST_CASE("selftest quick is deterministic and passes") {
  std::string r1 = selftest_report(false, 0);
  std::string r2 = selftest_report(false, 0);
  CHECK(r1 == r2);
  CHECK(r1.find("result: pass") != std::string::npos);
  CHECK(r1.find("inconclusive") != std::string::npos);  // dichotomy line present
}
