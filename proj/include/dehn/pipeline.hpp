#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dehn/dehngraph.hpp"
#include "dehn/diagram.hpp"
#include "dehn/invariants.hpp"
#include "dehn/mscomplex.hpp"
#include "dehn/oracle.hpp"
#include "dehn/representation.hpp"

namespace dehn {

inline constexpr int kSchemaVersion = 1;

struct PipelineOptions {
  std::optional<int> outer_region;
  std::optional<std::uint64_t> pivot_seed;
};

// Everything computed for one knot with the abelian representation.
struct KnotResult {
  KnotDiagram diagram;
  CornerLabeling d1;
  RegionLabeling d2;
  DehnGraph graph;
  Representation rep = Representation::abelian(0);
  ChainComplex complex;
  Propagator propagator;
  TorsionValue torsion;
  DefectValue defect;
  AlexanderPolynomial alexander;
};

// Diagram and Dehn graph only; checks D2 consistency under the abelian
// representation.
KnotResult build_graph_stage(const PDCode& pd, const PipelineOptions& opts = {});
// Full pipeline. Throws dehn::Error on any failure.
KnotResult compute_knot(const PDCode& pd, const PipelineOptions& opts = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs every structural and invariant check on one knot; seeds feed the
// propagator-independence checks.
std::vector<CheckResult> run_checks(const PDCode& pd, const PipelineOptions& opts, int seeds);

nlohmann::json result_to_json(const KnotResult& r);
nlohmann::json oracle_to_json(const PDCode& pd, const AlexanderPolynomial& alex);

}  // namespace dehn
