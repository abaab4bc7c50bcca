#include "dehn/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "dehn/error.hpp"

namespace dehn {

namespace {

struct Slot {
  int crossing;
  int position;
};

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

[[noreturn]] void syntax_error(const std::string& why) {
  throw Error(ErrorKind::PdSyntax, "malformed PD code: " + why);
}

std::array<int, 4> parse_tuple(const std::string& body) {
  std::array<int, 4> t{};
  std::stringstream ss(body);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 4) syntax_error("crossing with more than 4 labels");
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      syntax_error("label '" + item + "' is not a positive integer");
    if (item.size() > 9) syntax_error("label '" + item + "' is too large");
    t[n++] = std::stoi(item);
    if (t[n - 1] <= 0) syntax_error("labels must be positive");
  }
  if (n != 4) syntax_error("crossing with fewer than 4 labels");
  return t;
}

std::vector<std::array<int, 4>> parse_bracket(const std::string& s) {
  // [[a,b,c,d],[...],...]
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') syntax_error("expected [[...],...]");
  std::string inner = s.substr(1, s.size() - 2);
  static const std::regex tuple_re(R"(\[([^\[\]]*)\])");
  std::vector<std::array<int, 4>> out;
  std::size_t pos = 0;
  auto begin = std::sregex_iterator(inner.begin(), inner.end(), tuple_re);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    std::size_t at = static_cast<std::size_t>(m.position(0));
    std::string gap = inner.substr(pos, at - pos);
    if (gap != (pos == 0 ? "" : ",")) syntax_error("unexpected '" + gap + "'");
    out.push_back(parse_tuple(m[1].str()));
    pos = at + static_cast<std::size_t>(m.length(0));
  }
  if (pos != inner.size()) syntax_error("trailing '" + inner.substr(pos) + "'");
  return out;
}

std::vector<std::array<int, 4>> parse_xform(const std::string& s) {
  std::string body = s;
  if (body.rfind("PD[", 0) == 0 && body.back() == ']') body = body.substr(3, body.size() - 4);
  static const std::regex x_re(R"(X[\(\[]([^()\[\]]*)[\)\]])");
  std::vector<std::array<int, 4>> out;
  std::size_t pos = 0;
  auto begin = std::sregex_iterator(body.begin(), body.end(), x_re);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    std::size_t at = static_cast<std::size_t>(m.position(0));
    std::string gap = body.substr(pos, at - pos);
    if (!gap.empty() && gap != ",") syntax_error("unexpected '" + gap + "'");
    out.push_back(parse_tuple(m[1].str()));
    pos = at + static_cast<std::size_t>(m.length(0));
  }
  if (pos != body.size()) syntax_error("trailing '" + body.substr(pos) + "'");
  return out;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void validate(const PDCode& pd) {
  const int k = static_cast<int>(pd.crossings.size());
  if (k == 0) syntax_error("no crossings");

  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int l : x) ++count[l];
  std::vector<int> bad;
  for (const auto& x : pd.crossings)
    for (int l : x)
      if (count[l] != 2 && std::find(bad.begin(), bad.end(), l) == bad.end()) bad.push_back(l);
  if (!bad.empty()) {
    std::string list;
    for (int l : bad) list += (list.empty() ? "" : ",") + std::to_string(l);
    throw Error(ErrorKind::PdLabelCount, "labels " + list + " do not appear exactly twice");
  }
  const int n = 2 * k;
  if (count.begin()->first != 1 || count.rbegin()->first != n)
    throw Error(ErrorKind::PdNotSequential, "edge labels must be 1.." + std::to_string(n));

  // Strands pair slot 0 with 2 and slot 1 with 3; the connected components of
  // that pairing are the link components.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : pd.crossings) {
    parent[find_root(parent, x[0])] = find_root(parent, x[2]);
    parent[find_root(parent, x[1])] = find_root(parent, x[3]);
  }
  int components = 0;
  for (int l = 1; l <= n; ++l)
    if (find_root(parent, l) == l) ++components;
  if (components > 1)
    throw Error(ErrorKind::PdMultipleComponents,
                "PD code describes a link with " + std::to_string(components) + " components");

  auto next = [n](int l) { return l % n + 1; };
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    bool under_ok = next(x[0]) == x[2];
    bool over_ok = next(x[1]) == x[3] || next(x[3]) == x[1];
    if (!under_ok || !over_ok)
      throw Error(ErrorKind::PdNotSequential,
                  "crossing " + std::to_string(i) + " does not follow the traversal order of its labels");
  }
}

}  // namespace

std::string PDCode::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(crossings[i][j]);
    s += "]";
  }
  return s + "]";
}

PDCode parse_pd(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) syntax_error("empty input");
  PDCode pd;
  if (s.front() == '[')
    pd.crossings = parse_bracket(s);
  else if (s.front() == 'X' || s.rfind("PD[", 0) == 0)
    pd.crossings = parse_xform(s);
  else
    syntax_error("expected bracket form or X-form");
  validate(pd);
  return pd;
}

std::vector<int> KnotDiagram::bounded_regions() const {
  std::vector<int> out;
  for (const auto& r : regions)
    if (!r.is_unbounded) out.push_back(r.id);
  return out;
}

KnotDiagram build_diagram(const PDCode& pd, std::optional<int> outer_region) {
  KnotDiagram d;
  d.pd = pd;
  const int k = static_cast<int>(pd.crossings.size());
  const int n = 2 * k;
  auto next = [n](int l) { return l % n + 1; };

  std::vector<std::vector<Slot>> occurrences(n + 1);
  for (int c = 0; c < k; ++c)
    for (int p = 0; p < 4; ++p) occurrences[pd.crossings[c][p]].push_back({c, p});
  auto other_end = [&](int c, int p) {
    const auto& occ = occurrences[pd.crossings[c][p]];
    return (occ[0].crossing == c && occ[0].position == p) ? occ[1] : occ[0];
  };

  // Orientation of the over-strand.
  d.crossings.resize(k);
  for (int c = 0; c < k; ++c) {
    const auto& x = pd.crossings[c];
    Crossing& cr = d.crossings[c];
    cr.id = c;
    cr.edges = x;
    bool b_to_d = next(x[1]) == x[3];
    bool d_to_b = next(x[3]) == x[1];
    if (b_to_d && !d_to_b) {
      cr.over_in_slot = 1;
    } else if (d_to_b && !b_to_d) {
      cr.over_in_slot = 3;
    } else {
      // Only possible with two edges: orient by the under-strand end of b.
      Slot o = other_end(c, 1);
      cr.over_in_slot = (o.position == 2) ? 1 : 3;
    }
    cr.sign = cr.over_in_slot == 3 ? 1 : -1;
  }

  // Arcs start at every outgoing under-edge.
  std::vector<int> starts;
  for (const auto& x : pd.crossings) starts.push_back(x[2]);
  std::sort(starts.begin(), starts.end());
  std::vector<int> edge_arc(n + 1, -1);
  d.arcs.resize(k);
  for (int a = 0; a < k; ++a) {
    d.arcs[a].id = a;
    int e = starts[a];
    do {
      edge_arc[e] = a;
      d.arcs[a].edges.push_back(e);
      e = next(e);
    } while (!std::binary_search(starts.begin(), starts.end(), e));
  }
  for (auto& cr : d.crossings) {
    cr.over_arc = edge_arc[cr.edges[cr.over_in_slot]];
    cr.under_in_arc = edge_arc[cr.edges[0]];
    cr.under_out_arc = edge_arc[cr.edges[2]];
  }

  // Face tracing: corner (c, i) is followed by the corner (c', j) at the far
  // end of the half-edge in slot i+1.
  d.corner_region.assign(k, {-1, -1, -1, -1});
  for (int c = 0; c < k; ++c)
    for (int p = 0; p < 4; ++p) {
      if (d.corner_region[c][p] >= 0) continue;
      Region r;
      r.id = static_cast<int>(d.regions.size());
      Corner cur{c, p};
      while (d.corner_region[cur.crossing][cur.position] < 0) {
        d.corner_region[cur.crossing][cur.position] = r.id;
        r.corners.push_back(cur);
        Slot o = other_end(cur.crossing, (cur.position + 1) % 4);
        cur = {o.crossing, o.position};
      }
      if (!(cur == r.corners.front()))
        throw Error(ErrorKind::NotPlanar, "not a planar diagram: face tracing does not close up");
      d.regions.push_back(std::move(r));
    }
  if (static_cast<int>(d.regions.size()) != k + 2)
    throw Error(ErrorKind::NotPlanar, "not a planar diagram: " + std::to_string(d.regions.size()) +
                                          " faces, expected " + std::to_string(k + 2));

  // Sides of each edge, read at its head.
  d.edges.resize(n);
  for (int c = 0; c < k; ++c) {
    const Crossing& cr = d.crossings[c];
    for (int p : {0, cr.over_in_slot}) {
      int label = cr.edges[p];
      d.edges[label - 1] = EdgeSides{label, edge_arc[label], d.corner_region[c][(p + 3) % 4],
                                     d.corner_region[c][p]};
    }
  }

  int outer = identify_unbounded(d);
  if (outer_region) {
    if (*outer_region < 0 || *outer_region >= static_cast<int>(d.regions.size()))
      throw Error(ErrorKind::NoSuchRegion, "region " + std::to_string(*outer_region) + " does not exist");
    outer = *outer_region;
  }
  d.unbounded_region = outer;
  d.regions[outer].is_unbounded = true;
  return d;
}

int identify_unbounded(const KnotDiagram& diagram) {
  int best = 0;
  for (const auto& r : diagram.regions)
    if (r.corners.size() > diagram.regions[best].corners.size()) best = r.id;
  return best;
}

KnotDiagram with_outer_region(KnotDiagram diagram, int region) {
  if (region < 0 || region >= static_cast<int>(diagram.regions.size()))
    throw Error(ErrorKind::NoSuchRegion, "region " + std::to_string(region) + " does not exist");
  for (auto& r : diagram.regions) r.is_unbounded = r.id == region;
  diagram.unbounded_region = region;
  return diagram;
}

WirtingerPresentation wirtinger(const KnotDiagram& diagram) {
  WirtingerPresentation w;
  w.generator_count = static_cast<int>(diagram.arcs.size());
  for (const auto& cr : diagram.crossings) {
    int e = -cr.sign;
    w.relators.push_back(Word({{cr.under_out_arc, -1},
                               {cr.over_arc, e},
                               {cr.under_in_arc, 1},
                               {cr.over_arc, -e}}));
  }
  return w;
}

}  // namespace dehn
