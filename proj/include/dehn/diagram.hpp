#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehn/word.hpp"

namespace dehn {

// Planar-diagram code: per crossing, four edge labels counterclockwise
// starting at the incoming under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
  // Bracket form, "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]".
  std::string to_string() const;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Accepts bracket form or X-form ("X(1,4,2,5) X(3,6,4,1) ..."). Throws
// Error with kind PdSyntax, PdLabelCount, PdMultipleComponents or
// PdNotSequential.
PDCode parse_pd(std::string_view text);

// One side of a crossing: the sector between half-edge `position` and the
// next half-edge counterclockwise.
struct Corner {
  int crossing = 0;
  int position = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Crossing {
  int id = 0;
  std::array<int, 4> edges{};
  // Slot (1 or 3) where the over-strand enters.
  int over_in_slot = 1;
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  // +1 when the over-strand runs from slot 3 to slot 1.
  int sign = 1;
};

struct Arc {
  int id = 0;
  std::vector<int> edges;  // in traversal order
};

struct Region {
  int id = 0;
  std::vector<Corner> corners;  // cyclic, in face-tracing order
  bool is_unbounded = false;
};

// An edge of the underlying 4-valent graph with the faces on either side
// relative to the knot's orientation.
struct EdgeSides {
  int label = 0;
  int arc = 0;
  int left_region = 0;
  int right_region = 0;
};

struct KnotDiagram {
  PDCode pd;
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::vector<Region> regions;
  int unbounded_region = 0;
  // corner_region[c][pos] = region containing corner (c, pos)
  std::vector<std::array<int, 4>> corner_region;
  // Indexed by edge label - 1.
  std::vector<EdgeSides> edges;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int region_of(const Corner& c) const { return corner_region[c.crossing][c.position]; }
  std::vector<int> bounded_regions() const;
};

// Throws Error(NotPlanar) if face tracing does not give k+2 faces. The
// unbounded region is chosen by identify_unbounded unless outer_region is
// given (Error(NoSuchRegion) if out of range).
KnotDiagram build_diagram(const PDCode& pd, std::optional<int> outer_region = std::nullopt);

// Default choice of the unbounded face: most corners, lowest id on ties.
int identify_unbounded(const KnotDiagram& diagram);

// Same diagram with another face designated unbounded.
KnotDiagram with_outer_region(KnotDiagram diagram, int region);

struct WirtingerPresentation {
  int generator_count = 0;
  // One relator per crossing, in crossing order.
  std::vector<Word> relators;
};

// Relator at each crossing is z^-1 x^e y x^-e where x is the over arc, y the
// incoming and z the outgoing under arc, and e = -sign.
WirtingerPresentation wirtinger(const KnotDiagram& diagram);

}  // namespace dehn
