#include "dehn/dehngraph.hpp"

#include <deque>
#include <sstream>

#include "dehn/error.hpp"

namespace dehn {

CornerLabeling build_d1(const KnotDiagram& diagram) {
  CornerLabeling out;
  out.labels.resize(diagram.crossings.size());
  for (const auto& cr : diagram.crossings) {
    const Word x = Word::generator(cr.over_arc);
    const int s = cr.over_in_slot;
    auto& l = out.labels[cr.id];
    l[(s + 3) % 4] = {-1, x};  // before, left
    l[s] = {1, Word{}};        // before, right
    l[(s + 2) % 4] = {1, x};   // after, left
    l[(s + 1) % 4] = {-1, Word{}};
  }
  return out;
}

RegionLabeling build_d2(const KnotDiagram& diagram) {
  const std::size_t nregions = diagram.regions.size();
  RegionLabeling out;
  out.labels.resize(nregions);
  out.tree_edge.assign(nregions, -1);
  std::vector<bool> seen(nregions, false);
  std::deque<int> queue{diagram.unbounded_region};
  seen[diagram.unbounded_region] = true;
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (const auto& e : diagram.edges) {
      const Word x = Word::generator(e.arc);
      int target = -1;
      Word label;
      if (e.left_region == r && !seen[e.right_region]) {
        target = e.right_region;
        label = x * out.labels[r];
      } else if (e.right_region == r && !seen[e.left_region]) {
        target = e.left_region;
        label = x.inverse() * out.labels[r];
      }
      if (target < 0) continue;
      seen[target] = true;
      out.labels[target] = std::move(label);
      out.tree_edge[target] = e.label;
      queue.push_back(target);
    }
  }
  return out;
}

D2Report check_d2(const RegionLabeling& labeling, const KnotDiagram& diagram, const Representation& rep) {
  D2Report report;
  for (const auto& e : diagram.edges) {
    const Word expected = Word::generator(e.arc) * labeling.labels[e.left_region];
    if (!(rep.eval(expected) == rep.eval(labeling.labels[e.right_region])))
      report.violations.push_back({e.label, e.left_region, e.right_region});
  }
  return report;
}

void require_d2_consistent(const RegionLabeling& labeling, const KnotDiagram& diagram, const Representation& rep) {
  D2Report report = check_d2(labeling, diagram, rep);
  if (report.clean()) return;
  std::ostringstream os;
  os << "region labels inconsistent across edges";
  for (const auto& v : report.violations) os << " " << v.edge_label;
  throw Error(ErrorKind::InconsistentLabels, os.str());
}

DehnGraph build_dehn_graph(const KnotDiagram& diagram, const CornerLabeling& d1, const RegionLabeling& d2) {
  DehnGraph g;
  g.generator_count = static_cast<int>(diagram.arcs.size());
  for (const auto& cr : diagram.crossings)
    g.vertices.push_back({static_cast<int>(g.vertices.size()), VertexKind::Crossing, 2, cr.id});
  std::vector<int> region_vertex(diagram.regions.size(), -1);
  for (int r : diagram.bounded_regions()) {
    region_vertex[r] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({region_vertex[r], VertexKind::Region, 1, r});
  }
  const int base = static_cast<int>(g.vertices.size());
  g.vertices.push_back({base, VertexKind::Basepoint, 0, -1});

  for (const auto& cr : diagram.crossings)
    for (int p = 0; p < 4; ++p) {
      Corner c{cr.id, p};
      int r = diagram.region_of(c);
      if (r == diagram.unbounded_region) continue;
      g.edges.push_back({cr.id, region_vertex[r], d1.at(c), EdgeOrigin::Corner, c});
    }
  for (int r : diagram.bounded_regions()) {
    g.edges.push_back({region_vertex[r], base, {1, Word{}}, EdgeOrigin::RegionPlus, {}});
    g.edges.push_back({region_vertex[r], base, {-1, d2.labels[r]}, EdgeOrigin::RegionMinus, {}});
  }
  return g;
}

namespace {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Crossing: return "crossing";
    case VertexKind::Region: return "region";
    case VertexKind::Basepoint: return "basepoint";
  }
  return "";
}

const char* origin_name(EdgeOrigin o) {
  switch (o) {
    case EdgeOrigin::Corner: return "corner";
    case EdgeOrigin::RegionPlus: return "region_plus";
    case EdgeOrigin::RegionMinus: return "region_minus";
  }
  return "";
}

std::string vertex_name(const DehnVertex& v) {
  switch (v.kind) {
    case VertexKind::Crossing: return "p" + std::to_string(v.ref + 1);
    case VertexKind::Region: return "q" + std::to_string(v.ref);
    case VertexKind::Basepoint: return "inf";
  }
  return "";
}

}  // namespace

std::string export_dot(const DehnGraph& graph) {
  std::ostringstream os;
  os << "digraph dehn {\n";
  for (const auto& v : graph.vertices) {
    const char* shape = v.index == 2 ? "box" : v.index == 1 ? "ellipse" : "doublecircle";
    os << "  " << vertex_name(v) << " [shape=" << shape << ", label=\"" << vertex_name(v) << " (" << v.index
       << ")\"];\n";
  }
  for (const auto& e : graph.edges)
    os << "  " << vertex_name(graph.vertices[e.from]) << " -> " << vertex_name(graph.vertices[e.to])
       << " [label=\"" << e.label.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json graph_to_json(const DehnGraph& graph) {
  nlohmann::json j;
  j["generators"] = graph.generator_count;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : graph.vertices)
    j["vertices"].push_back({{"id", v.id}, {"kind", kind_name(v.kind)}, {"index", v.index}, {"ref", v.ref}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& l : e.label.word.letters()) word.push_back({generator_name(l.generator), l.exponent});
    nlohmann::json je{{"from", e.from}, {"to", e.to}, {"sign", e.label.sign}, {"word", word},
                      {"origin", origin_name(e.origin)}};
    if (e.origin == EdgeOrigin::Corner) {
      je["crossing"] = e.corner.crossing;
      je["position"] = e.corner.position;
    }
    j["edges"].push_back(std::move(je));
  }
  return j;
}

DehnGraph graph_from_json(const nlohmann::json& j) {
  DehnGraph g;
  g.generator_count = j.at("generators").get<int>();
  for (const auto& jv : j.at("vertices")) {
    DehnVertex v;
    v.id = jv.at("id").get<int>();
    const auto kind = jv.at("kind").get<std::string>();
    v.kind = kind == "crossing" ? VertexKind::Crossing : kind == "region" ? VertexKind::Region : VertexKind::Basepoint;
    v.index = jv.at("index").get<int>();
    v.ref = jv.at("ref").get<int>();
    g.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    DehnEdge e;
    e.from = je.at("from").get<int>();
    e.to = je.at("to").get<int>();
    std::vector<Letter> letters;
    for (const auto& l : je.at("word")) {
      int gen = generator_from_name(l.at(0).get<std::string>());
      if (gen < 0) throw std::invalid_argument("unknown generator " + l.at(0).get<std::string>());
      letters.push_back({gen, l.at(1).get<int>()});
    }
    e.label = {je.at("sign").get<int>(), Word(std::move(letters))};
    const auto origin = je.at("origin").get<std::string>();
    e.origin = origin == "corner" ? EdgeOrigin::Corner
               : origin == "region_plus" ? EdgeOrigin::RegionPlus
                                         : EdgeOrigin::RegionMinus;
    if (e.origin == EdgeOrigin::Corner) e.corner = {je.at("crossing").get<int>(), je.at("position").get<int>()};
    g.edges.push_back(std::move(e));
  }
  return g;
}

}  // namespace dehn
