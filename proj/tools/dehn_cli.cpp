// dehn: torsion and defect of knot exteriors from PD codes.
//
//   dehn compute --pd "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
//   dehn check --file knots.txt --seeds 10
//   dehn graph --pd "..." --format dot
//   dehn oracle --pd "..."
//
// Output is one JSON document per knot and line, in input order.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dehn/error.hpp"
#include "dehn/json_io.hpp"
#include "dehn/pipeline.hpp"

namespace {

using dehn::ErrorKind;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParse = 3,
  kNotPlanar = 4,
  kNotExact = 5,
  kUnsupported = 6,
  kInconsistent = 7,
  kIo = 8,
  kInternal = 9,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PdSyntax:
    case ErrorKind::PdLabelCount:
    case ErrorKind::PdMultipleComponents:
    case ErrorKind::PdNotSequential:
      return kParse;
    case ErrorKind::NotPlanar:
    case ErrorKind::NoSuchRegion:
      return kNotPlanar;
    case ErrorKind::NotExact:
      return kNotExact;
    case ErrorKind::UnsupportedRepresentation:
    case ErrorKind::InvalidRepresentation:
      return kUnsupported;
    case ErrorKind::InconsistentLabels:
      return kInconsistent;
    default:
      return kInternal;
  }
}

enum class LogLevel { Error, Info, Debug };

LogLevel log_level() {
  const char* v = std::getenv("DEHN_LOG");
  if (!v) return LogLevel::Error;
  std::string s(v);
  if (s == "debug") return LogLevel::Debug;
  if (s == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void log(LogLevel at, const std::string& msg) {
  if (log_level() >= at) std::cerr << (at == LogLevel::Debug ? "[debug] " : "[info] ") << msg << "\n";
}

struct RunConfig {
  std::string command;
  std::optional<std::string> pd;
  std::optional<std::string> file;
  std::optional<int> outer_region;
  std::optional<std::uint64_t> pivot_seed;
  std::string format = "json";
  int parallel = 1;
  int seeds = 10;
};

struct Failure {
  ErrorKind kind;
  std::string message;
};

// Rendered output for one knot, or the error that stopped it.
struct Outcome {
  std::string text;
  bool checks_passed = true;
  std::optional<Failure> failure;
};

std::string render_check_text(const dehn::PDCode& pd, const std::vector<dehn::CheckResult>& checks) {
  std::ostringstream os;
  os << "knot " << pd.to_string() << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_compute_text(const dehn::KnotResult& r) {
  std::ostringstream os;
  os << "knot " << r.diagram.pd.to_string() << "\n"
     << "  crossings  " << r.diagram.crossing_count() << "\n"
     << "  torsion    " << r.torsion.normalized.to_string() << "  (raw " << r.torsion.raw.to_string() << ")\n"
     << "  defect     " << r.defect.representative.to_string() << "  (mod Z)\n"
     << "  alexander  " << r.alexander.poly.to_string() << "\n";
  return os.str();
}

nlohmann::json diagram_to_json(const dehn::KnotDiagram& d) {
  nlohmann::json crossings = nlohmann::json::array();
  for (const auto& c : d.crossings)
    crossings.push_back({{"id", c.id},
                         {"edges", c.edges},
                         {"over_arc", c.over_arc},
                         {"under_in_arc", c.under_in_arc},
                         {"under_out_arc", c.under_out_arc},
                         {"sign", c.sign},
                         {"corner_regions", d.corner_region[c.id]}});
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : d.arcs) arcs.push_back({{"id", a.id}, {"name", dehn::generator_name(a.id)}, {"edges", a.edges}});
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& r : d.regions) {
    nlohmann::json corners = nlohmann::json::array();
    for (const auto& c : r.corners) corners.push_back({c.crossing, c.position});
    regions.push_back({{"id", r.id}, {"corners", corners}, {"unbounded", r.is_unbounded}});
  }
  return {{"crossings", crossings}, {"arcs", arcs}, {"regions", regions}, {"unbounded_region", d.unbounded_region}};
}

Outcome run_one(const RunConfig& cfg, const std::string& line) {
  Outcome out;
  try {
    auto start = std::chrono::steady_clock::now();
    const dehn::PDCode pd = dehn::parse_pd(line);
    dehn::PipelineOptions opts{cfg.outer_region, cfg.pivot_seed};
    if (cfg.command == "compute") {
      dehn::KnotResult r = dehn::compute_knot(pd, opts);
      nlohmann::json j = dehn::result_to_json(r);
      for (const auto& [name, ok] : j["checks"].items()) out.checks_passed = out.checks_passed && ok.get<bool>();
      out.text = cfg.format == "text" ? render_compute_text(r) : j.dump() + "\n";
    } else if (cfg.command == "graph") {
      dehn::KnotResult r = dehn::build_graph_stage(pd, opts);
      if (cfg.format == "dot") {
        out.text = dehn::export_dot(r.graph);
      } else {
        dehn::ChainComplex cx = dehn::build_complex(r.graph, r.rep);
        nlohmann::json j{{"schema_version", dehn::kSchemaVersion},
                         {"pd", pd.to_string()},
                         {"diagram", diagram_to_json(r.diagram)},
                         {"graph", dehn::graph_to_json(r.graph)},
                         {"complex", dehn::complex_to_json(cx, r.graph)}};
        out.text = j.dump() + "\n";
      }
    } else if (cfg.command == "check") {
      auto checks = dehn::run_checks(pd, opts, cfg.seeds);
      for (const auto& c : checks) out.checks_passed = out.checks_passed && c.passed;
      if (cfg.format == "text") {
        out.text = render_check_text(pd, checks);
      } else {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out.text = nlohmann::json{{"schema_version", dehn::kSchemaVersion},
                                  {"pd", pd.to_string()},
                                  {"checks", list},
                                  {"passed", out.checks_passed}}
                       .dump() +
                   "\n";
      }
    } else {
      dehn::AlexanderPolynomial alex = dehn::fox_alexander(dehn::wirtinger(dehn::build_diagram(pd)));
      out.text = cfg.format == "text" ? "knot " + pd.to_string() + "\n  alexander  " + alex.poly.to_string() + "\n"
                                      : dehn::oracle_to_json(pd, alex).dump() + "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    log(LogLevel::Info, cfg.command + " " + pd.to_string() + " in " + std::to_string(ms.count()) + " ms");
  } catch (const dehn::Error& e) {
    out.failure = Failure{e.kind(), e.what()};
  }
  return out;
}

struct InputLine {
  std::size_t number = 0;  // 1-based, in the source
  std::string text;
};

std::vector<InputLine> read_inputs(const RunConfig& cfg) {
  std::vector<InputLine> lines;
  auto take = [&](std::istream& in) {
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back({n, line.substr(first)});
    }
  };
  if (cfg.pd) {
    std::istringstream in(*cfg.pd);
    take(in);
  } else {
    std::ifstream in(*cfg.file);
    if (!in) throw std::runtime_error("cannot read " + *cfg.file);
    take(in);
  }
  return lines;
}

std::vector<Outcome> run_all(const RunConfig& cfg, const std::vector<InputLine>& lines) {
  std::vector<Outcome> outcomes(lines.size());
  const int workers = std::max(1, std::min<int>(cfg.parallel, static_cast<int>(lines.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      log(LogLevel::Debug, "start line " + std::to_string(lines[i].number));
      outcomes[i] = run_one(cfg, lines[i].text);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return outcomes;
}

int usage_error(const std::string& msg) {
  std::cerr << nlohmann::json{{"error", "usage"}, {"message", msg}}.dump() << "\n";
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Dehn-graph torsion and defect of knot exteriors"};
  app.add_option("command", cfg.command, "compute | graph | check | oracle")
      ->required()
      ->check(CLI::IsMember({"compute", "graph", "check", "oracle"}));
  auto* pd_opt = app.add_option("--pd", cfg.pd, "PD code (bracket or X-form)");
  auto* file_opt = app.add_option("--file", cfg.file, "file with one PD code per line; '#' starts a comment");
  pd_opt->excludes(file_opt);
  app.add_option("--outer-region", cfg.outer_region, "region id to use as the unbounded region");
  app.add_option("--pivot-seed", cfg.pivot_seed, "seed for the propagator's complement order");
  app.add_option("--format", cfg.format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--parallel", cfg.parallel, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seeds", cfg.seeds, "random pivot seeds per knot for check")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }
  if (!cfg.pd && !cfg.file) return usage_error("one of --pd or --file is required");
  if (cfg.format == "dot" && cfg.command != "graph") return usage_error("--format dot is only valid with graph");

  std::vector<InputLine> lines;
  try {
    lines = read_inputs(cfg);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "io"}, {"message", e.what()}}.dump() << "\n";
    return kIo;
  }

  std::vector<Outcome> outcomes;
  try {
    outcomes = run_all(cfg, lines);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInternal;
  }

  int code = kOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.failure) continue;
    std::cerr << nlohmann::json{{"error", std::string(dehn::to_string(o.failure->kind))},
                                {"message", o.failure->message},
                                {"line", lines[i].number}}
                     .dump()
              << "\n";
    if (code == kOk) code = exit_code_for(o.failure->kind);
  }
  if (code != kOk) return code;

  for (const auto& o : outcomes) {
    std::cout << o.text;
    if (!o.checks_passed) code = kCheckFailed;
  }
  return code;
}
