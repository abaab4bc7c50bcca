#include "dehn/pipeline.hpp"

#include "dehn/error.hpp"
#include "dehn/json_io.hpp"

namespace dehn {

KnotResult build_graph_stage(const PDCode& pd, const PipelineOptions& opts) {
  KnotResult r;
  r.diagram = build_diagram(pd, opts.outer_region);
  r.d1 = build_d1(r.diagram);
  r.d2 = build_d2(r.diagram);
  r.rep = Representation::abelian(static_cast<int>(r.diagram.arcs.size()));
  require_d2_consistent(r.d2, r.diagram, r.rep);
  r.graph = build_dehn_graph(r.diagram, r.d1, r.d2);
  return r;
}

KnotResult compute_knot(const PDCode& pd, const PipelineOptions& opts) {
  KnotResult r = build_graph_stage(pd, opts);
  r.complex = build_complex(r.graph, r.rep);
  r.propagator = build_propagator(r.complex, opts.pivot_seed);
  r.torsion = torsion(r.complex, r.propagator);
  r.defect = defect(r.graph, r.complex, r.propagator, r.rep);
  r.alexander = fox_alexander(wirtinger(r.diagram));
  return r;
}

namespace {

void add(std::vector<CheckResult>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> run_checks(const PDCode& pd, const PipelineOptions& opts, int seeds) {
  std::vector<CheckResult> out;
  KnotResult r = build_graph_stage(pd, opts);
  const KnotDiagram& dg = r.diagram;
  const int k = dg.crossing_count();

  std::size_t corners = 0;
  for (const auto& reg : dg.regions) corners += reg.corners.size();
  add(out, "face_count", static_cast<int>(dg.regions.size()) == k + 2);
  add(out, "corner_count", static_cast<int>(corners) == 4 * k);
  add(out, "arc_count", static_cast<int>(dg.arcs.size()) == k);

  bool corner_sum = true;
  for (const auto& labels : r.d1.labels) {
    RatFunc sum;
    for (const auto& l : labels) sum += r.rep.eval(l)(0, 0);
    corner_sum = corner_sum && sum.is_zero();
  }
  add(out, "d1_corner_sum", corner_sum);
  add(out, "d2_consistency", check_d2(r.d2, dg, r.rep).clean());

  r.complex = build_complex(r.graph, r.rep);
  add(out, "d1_d2_zero", (r.complex.d1 * r.complex.d2).is_zero());
  ExactnessReport ex = check_exactness(r.complex);
  add(out, "exact", ex.exact, ex.witness);
  if (!ex.exact) return out;

  KnotResult full = compute_knot(pd, opts);
  add(out, "propagator", verify_propagator(full.complex, full.propagator));
  add(out, "lescop", check_lescop_relation(full.torsion, full.defect));
  add(out, "milnor", milnor_check(full.torsion, full.alexander), "alexander " + full.alexander.poly.to_string());

  bool seed_prop = true, seed_tor = true, seed_def = true;
  const std::uint64_t base = opts.pivot_seed.value_or(0);
  for (int s = 1; s <= seeds; ++s) {
    Propagator g = build_propagator(full.complex, base + static_cast<std::uint64_t>(s));
    seed_prop = seed_prop && verify_propagator(full.complex, g);
    seed_tor = seed_tor && torsion_equal_up_to_units(torsion(full.complex, g), full.torsion);
    seed_def = seed_def && defect_equal_mod_Z(defect(full.graph, full.complex, g, full.rep), full.defect);
  }
  add(out, "seed_propagator_identities", seed_prop);
  add(out, "seed_torsion_independence", seed_tor);
  add(out, "seed_defect_independence", seed_def);

  bool outer_tor = true, outer_def = true;
  for (const auto& reg : dg.regions) {
    PipelineOptions o = opts;
    o.outer_region = reg.id;
    KnotResult alt = compute_knot(pd, o);
    outer_tor = outer_tor && torsion_equal_up_to_units(alt.torsion, full.torsion);
    outer_def = outer_def && defect_equal_mod_Z(alt.defect, full.defect);
  }
  add(out, "outer_region_torsion_independence", outer_tor);
  add(out, "outer_region_defect_independence", outer_def);
  return out;
}

nlohmann::json result_to_json(const KnotResult& r) {
  const bool lescop = check_lescop_relation(r.torsion, r.defect);
  const bool milnor = milnor_check(r.torsion, r.alexander);
  return {{"schema_version", kSchemaVersion},
          {"pd", r.diagram.pd.to_string()},
          {"crossings", r.diagram.crossing_count()},
          {"outer_region", r.diagram.unbounded_region},
          {"torsion",
           {{"raw", ratfunc_to_json(r.torsion.raw)},
            {"normalized", ratfunc_to_json(r.torsion.normalized)},
            {"unit_exponent", r.torsion.unit_exponent},
            {"unit_sign", r.torsion.unit_sign}}},
          {"defect", {{"representative", ratfunc_to_json(r.defect.representative)}}},
          {"alexander", polynomial_to_json(r.alexander.poly)},
          {"checks",
           {{"exact", true},
            {"propagator", verify_propagator(r.complex, r.propagator)},
            {"lescop", lescop},
            {"milnor", milnor},
            {"d2_consistency", check_d2(r.d2, r.diagram, r.rep).clean()}}}};
}

nlohmann::json oracle_to_json(const PDCode& pd, const AlexanderPolynomial& alex) {
  return {{"schema_version", kSchemaVersion}, {"pd", pd.to_string()}, {"alexander", polynomial_to_json(alex.poly)}};
}

}  // namespace dehn
