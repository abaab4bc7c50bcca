#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "dehn/diagram.hpp"
#include "dehn/representation.hpp"
#include "dehn/word.hpp"

namespace dehn {

// Corner labels of diagram D1: per crossing, indexed by corner position.
struct CornerLabeling {
  std::vector<std::array<GroupRingTerm, 4>> labels;

  const GroupRingTerm& at(const Corner& c) const { return labels[c.crossing][c.position]; }
};

// Labels the four corners at each crossing with over arc x. Walking along x,
// the corners before the crossing get -x (left) and +1 (right) and the
// corners after it get +x (left) and -1 (right).
CornerLabeling build_d1(const KnotDiagram& diagram);

// Region labels of diagram D2, indexed by region id.
struct RegionLabeling {
  std::vector<Word> labels;
  // Edge labels used to reach each region from the unbounded one; -1 for the
  // unbounded region itself.
  std::vector<int> tree_edge;
};

// Breadth-first from the unbounded region: crossing arc x from its left side
// Q_i into Q_j gives l(Q_j) = x l(Q_i).
RegionLabeling build_d2(const KnotDiagram& diagram);

struct D2Violation {
  int edge_label = 0;
  int left_region = 0;
  int right_region = 0;
};

struct D2Report {
  std::vector<D2Violation> violations;
  bool clean() const { return violations.empty(); }
};

// Checks rho(l(right)) = rho(x l(left)) across every edge of the diagram.
D2Report check_d2(const RegionLabeling& labeling, const KnotDiagram& diagram, const Representation& rep);
// Throws Error(InconsistentLabels) listing the violations, if any.
void require_d2_consistent(const RegionLabeling& labeling, const KnotDiagram& diagram, const Representation& rep);

enum class VertexKind { Crossing, Region, Basepoint };
enum class EdgeOrigin { Corner, RegionPlus, RegionMinus };

struct DehnVertex {
  int id = 0;
  VertexKind kind = VertexKind::Crossing;
  int index = 2;  // Morse index: 2 crossing, 1 region, 0 basepoint
  int ref = -1;   // crossing id or region id
  friend bool operator==(const DehnVertex&, const DehnVertex&) = default;
};

struct DehnEdge {
  int from = 0;
  int to = 0;
  GroupRingTerm label;
  EdgeOrigin origin = EdgeOrigin::Corner;
  Corner corner;  // meaningful for EdgeOrigin::Corner
  friend bool operator==(const DehnEdge&, const DehnEdge&) = default;
};

// Vertices are ordered crossings, bounded regions (ascending region id),
// basepoint. Edges run from the higher to the lower index.
struct DehnGraph {
  std::vector<DehnVertex> vertices;
  std::vector<DehnEdge> edges;
  int generator_count = 0;

  int basepoint() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const DehnGraph&, const DehnGraph&) = default;
};

// One crossing-region edge per corner on a bounded region, so a region
// meeting a crossing at two corners gets two parallel edges.
DehnGraph build_dehn_graph(const KnotDiagram& diagram, const CornerLabeling& d1, const RegionLabeling& d2);

std::string export_dot(const DehnGraph& graph);
nlohmann::json graph_to_json(const DehnGraph& graph);
DehnGraph graph_from_json(const nlohmann::json& j);

}  // namespace dehn
