#include "dehn/mscomplex.hpp"

#include <algorithm>

#include "dehn/json_io.hpp"

namespace dehn {

int ChainComplex::block_of(int vertex) const {
  for (const auto* v : {&c2_vertices, &c1_vertices, &c0_vertices}) {
    auto it = std::find(v->begin(), v->end(), vertex);
    if (it != v->end()) return static_cast<int>(it - v->begin());
  }
  return -1;
}

ChainComplex build_complex(const DehnGraph& graph, const Representation& rep) {
  ChainComplex cx;
  cx.dim = rep.dim();
  for (const auto& v : graph.vertices) {
    if (v.index == 2) cx.c2_vertices.push_back(v.id);
    if (v.index == 1) cx.c1_vertices.push_back(v.id);
    if (v.index == 0) cx.c0_vertices.push_back(v.id);
  }
  const std::size_t n = static_cast<std::size_t>(cx.dim);
  cx.c2_dim = cx.c2_vertices.size() * n;
  cx.c1_dim = cx.c1_vertices.size() * n;
  cx.c0_dim = cx.c0_vertices.size() * n;
  cx.d2 = FieldMatrix(cx.c1_dim, cx.c2_dim);
  cx.d1 = FieldMatrix(cx.c0_dim, cx.c1_dim);

  for (const auto& e : graph.edges) {
    const std::size_t row = static_cast<std::size_t>(cx.block_of(e.to)) * n;
    const std::size_t col = static_cast<std::size_t>(cx.block_of(e.from)) * n;
    FieldMatrix& d = graph.vertices[e.from].index == 2 ? cx.d2 : cx.d1;
    d.set_block(row, col, d.block(row, col, n, n) + rep.eval(e.label));
  }
  return cx;
}

ExactnessReport check_exactness(const ChainComplex& cx) {
  ExactnessReport r;
  r.rank_d2 = matrix_rank(cx.d2);
  r.rank_d1 = matrix_rank(cx.d1);
  if (r.rank_d2 != cx.c2_dim)
    r.witness = "rank(d2) = " + std::to_string(r.rank_d2) + " < dim C2 = " + std::to_string(cx.c2_dim);
  else if (r.rank_d1 != cx.c0_dim)
    r.witness = "rank(d1) = " + std::to_string(r.rank_d1) + " < dim C0 = " + std::to_string(cx.c0_dim);
  else if (cx.c1_dim != cx.c2_dim + cx.c0_dim)
    r.witness = "dim C1 = " + std::to_string(cx.c1_dim) + " != dim C2 + dim C0";
  r.exact = r.witness.empty();
  return r;
}

nlohmann::json complex_to_json(const ChainComplex& cx, const DehnGraph& graph) {
  auto blocks = [&](const std::vector<int>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = graph.vertices[vs[i]];
      a.push_back({{"block", i}, {"vertex", v.id}, {"ref", v.ref}});
    }
    return a;
  };
  return {{"dim", cx.dim},
          {"d2", matrix_to_json(cx.d2)},
          {"d1", matrix_to_json(cx.d1)},
          {"basis", {{"c2", blocks(cx.c2_vertices)}, {"c1", blocks(cx.c1_vertices)}, {"c0", blocks(cx.c0_vertices)}}}};
}

}  // namespace dehn
