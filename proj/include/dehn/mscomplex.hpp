#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dehn/dehngraph.hpp"
#include "dehn/matrix.hpp"
#include "dehn/representation.hpp"

namespace dehn {

// 0 -> C2 -> C1 -> C0 -> 0 with one copy of Q(t)^dim per vertex of the
// Dehn graph. Blocks of C2 follow crossing order, blocks of C1 bounded
// region order, C0 is the basepoint block.
struct ChainComplex {
  int dim = 1;
  std::size_t c2_dim = 0;
  std::size_t c1_dim = 0;
  std::size_t c0_dim = 0;
  FieldMatrix d2;  // c1_dim x c2_dim
  FieldMatrix d1;  // c0_dim x c1_dim
  // Dehn-graph vertex id of each block, per chain degree.
  std::vector<int> c2_vertices;
  std::vector<int> c1_vertices;
  std::vector<int> c0_vertices;

  // Block index of a vertex within its degree, -1 if absent.
  int block_of(int vertex) const;
};

ChainComplex build_complex(const DehnGraph& graph, const Representation& rep);

struct ExactnessReport {
  bool exact = false;
  std::size_t rank_d2 = 0;
  std::size_t rank_d1 = 0;
  // Empty when exact; otherwise names the failing condition.
  std::string witness;
};

ExactnessReport check_exactness(const ChainComplex& cx);

nlohmann::json complex_to_json(const ChainComplex& cx, const DehnGraph& graph);

}  // namespace dehn
