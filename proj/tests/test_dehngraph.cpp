#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <regex>

#include "dehn/dehngraph.hpp"
#include "dehn/error.hpp"
#include "fixtures.hpp"

using namespace dehn;

namespace {

struct Built {
  KnotDiagram diagram;
  CornerLabeling d1;
  RegionLabeling d2;
  DehnGraph graph;
};

Built build(const std::string& pd, std::optional<int> outer = std::nullopt) {
  Built b;
  b.diagram = build_diagram(parse_pd(pd), outer);
  b.d1 = build_d1(b.diagram);
  b.d2 = build_d2(b.diagram);
  b.graph = build_dehn_graph(b.diagram, b.d1, b.d2);
  return b;
}

std::vector<std::string> all_fixture_pds() {
  std::vector<std::string> v = {fixtures::kTrefoilKinked, fixtures::kTrefoilKinkedOther,
                                fixtures::kFigureEightKinked};
  for (const auto& k : fixtures::corpus()) v.push_back(k.pd);
  return v;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_CASE("D1 labels") {
  for (const auto& text : all_fixture_pds()) {
    Built b = build(text);
    const Representation rep = Representation::abelian(static_cast<int>(b.diagram.arcs.size()));
    for (const auto& cr : b.diagram.crossings) {
      const auto& l = b.d1.labels[cr.id];
      const Word x = Word::generator(cr.over_arc);
      const int s = cr.over_in_slot;
      CHECK(l[(s + 3) % 4] == GroupRingTerm{-1, x});
      CHECK(l[s] == GroupRingTerm{1, Word{}});
      CHECK(l[(s + 2) % 4] == GroupRingTerm{1, x});
      CHECK(l[(s + 1) % 4] == GroupRingTerm{-1, Word{}});
      RatFunc sum;
      for (const auto& term : l) sum += rep.eval(term)(0, 0);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("D1 labels of the trefoil") {
  Built b = build(fixtures::kTrefoil, fixtures::kTrefoilReferenceOuter);
  // Every crossing has over_in_slot 1, so positions 0..3 read -x, +1, -1, +x.
  for (const auto& cr : b.diagram.crossings) {
    const std::string x = generator_name(cr.over_arc);
    CHECK(b.d1.labels[cr.id][0].to_string() == "-" + x);
    CHECK(b.d1.labels[cr.id][1].to_string() == "+1");
    CHECK(b.d1.labels[cr.id][2].to_string() == "-1");
    CHECK(b.d1.labels[cr.id][3].to_string() == "+" + x);
  }
  // The unbounded face collects the +x corner of every crossing.
  for (const auto& cr : b.diagram.crossings) CHECK(b.diagram.corner_region[cr.id][3] == fixtures::kTrefoilReferenceOuter);
}

TEST_CASE("D2 labels") {
  Built b = build(fixtures::kTrefoil, fixtures::kTrefoilReferenceOuter);
  CHECK(b.d2.labels[fixtures::kTrefoilReferenceOuter].empty());
  CHECK(b.d2.tree_edge[fixtures::kTrefoilReferenceOuter] == -1);
  std::vector<int> sums;
  for (int r : b.diagram.bounded_regions()) sums.push_back(b.d2.labels[r].exponent_sum());
  std::sort(sums.begin(), sums.end());
  CHECK(sums == std::vector<int>{1, 1, 1, 2});

  Built kink = build(fixtures::kUnknotKink, 2);
  CHECK(kink.d2.labels[0].exponent_sum() + kink.d2.labels[1].exponent_sum() == 3);
  CHECK(std::abs(kink.d2.labels[0].exponent_sum() - kink.d2.labels[1].exponent_sum()) == 1);
}

TEST_CASE("check_d2 on every fixture and face") {
  for (const auto& text : all_fixture_pds()) {
    KnotDiagram base = build_diagram(parse_pd(text));
    const Representation rep = Representation::abelian(static_cast<int>(base.arcs.size()));
    for (const auto& reg : base.regions) {
      KnotDiagram d = with_outer_region(base, reg.id);
      RegionLabeling l = build_d2(d);
      CHECK(check_d2(l, d, rep).clean());
      CHECK_NOTHROW(require_d2_consistent(l, d, rep));
    }
  }
}

TEST_CASE("check_d2 catches a corrupted labeling") {
  Built b = build(fixtures::kTrefoil, fixtures::kTrefoilReferenceOuter);
  const Representation rep = Representation::abelian(3);
  RegionLabeling bad = b.d2;
  const int victim = b.diagram.bounded_regions().front();
  bad.labels[victim] = bad.labels[victim] * Word::generator(0);
  D2Report report = check_d2(bad, b.diagram, rep);
  REQUIRE_FALSE(report.clean());
  for (const auto& v : report.violations) CHECK((v.left_region == victim || v.right_region == victim));
  CHECK_THROWS_AS(require_d2_consistent(bad, b.diagram, rep), Error);
  try {
    require_d2_consistent(bad, b.diagram, rep);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentLabels);
  }
}

TEST_CASE("Dehn graph shape") {
  Built b = build(fixtures::kTrefoil, fixtures::kTrefoilReferenceOuter);
  const DehnGraph& g = b.graph;
  CHECK(g.vertices.size() == 8);
  CHECK(g.generator_count == 3);
  CHECK(g.basepoint() == 7);
  CHECK(g.vertices[7].kind == VertexKind::Basepoint);
  for (int i = 0; i < 3; ++i) CHECK(g.vertices[i].index == 2);
  std::vector<int> region_refs;
  for (int i = 3; i < 7; ++i) {
    CHECK(g.vertices[i].index == 1);
    region_refs.push_back(g.vertices[i].ref);
  }
  CHECK(region_refs == b.diagram.bounded_regions());

  std::map<EdgeOrigin, int> by_origin;
  for (const auto& e : g.edges) {
    ++by_origin[e.origin];
    CHECK(g.vertices[e.from].index == g.vertices[e.to].index + 1);
  }
  CHECK(by_origin[EdgeOrigin::Corner] == 9);
  CHECK(by_origin[EdgeOrigin::RegionPlus] == 4);
  CHECK(by_origin[EdgeOrigin::RegionMinus] == 4);

  for (const auto& e : g.edges) {
    const int region = g.vertices[e.from].ref;
    if (e.origin == EdgeOrigin::RegionPlus) CHECK(e.label == GroupRingTerm{1, Word{}});
    if (e.origin == EdgeOrigin::RegionMinus) CHECK(e.label == GroupRingTerm{-1, b.d2.labels[region]});
    if (e.origin == EdgeOrigin::Corner) {
      CHECK(e.label == b.d1.at(e.corner));
      CHECK(g.vertices[e.from].ref == e.corner.crossing);
      CHECK(g.vertices[e.to].ref == b.diagram.region_of(e.corner));
    }
  }
}

TEST_CASE("kinks give parallel edges") {
  Built b = build(fixtures::kUnknotKink, 2);
  const DehnGraph& g = b.graph;
  CHECK(g.vertices.size() == 4);
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : g.edges)
    if (e.origin == EdgeOrigin::Corner) ++multiplicity[{e.from, e.to}];
  int doubled = 0;
  for (const auto& [key, m] : multiplicity) doubled += (m == 2);
  CHECK(doubled == 1);
}

TEST_CASE("edge counts on every fixture") {
  for (const auto& text : all_fixture_pds()) {
    Built b = build(text);
    const int k = b.diagram.crossing_count();
    const auto outer_corners = b.diagram.regions[b.diagram.unbounded_region].corners.size();
    CHECK(static_cast<int>(b.graph.vertices.size()) == 2 * k + 2);
    CHECK(b.graph.edges.size() == 4 * k - outer_corners + 2 * (k + 1));
  }
}

TEST_CASE("export_dot") {
  Built b = build(fixtures::kTrefoil, fixtures::kTrefoilReferenceOuter);
  const std::string dot = export_dot(b.graph);
  CHECK(dot.rfind("digraph dehn {", 0) == 0);
  CHECK(count_matches(dot, R"(\[shape=)") == 8);
  CHECK(count_matches(dot, R"( -> )") == 17);
  CHECK(count_matches(dot, R"(shape=box)") == 3);
  CHECK(count_matches(dot, R"(shape=doublecircle)") == 1);
  CHECK(dot.find("label=\"+1\"") != std::string::npos);
  CHECK(export_dot(b.graph) == dot);
}

TEST_CASE("graph json round trip") {
  for (const auto& text : all_fixture_pds()) {
    Built b = build(text);
    nlohmann::json j = graph_to_json(b.graph);
    CHECK(graph_from_json(j) == b.graph);
    CHECK(graph_from_json(nlohmann::json::parse(j.dump())) == b.graph);
  }
}
