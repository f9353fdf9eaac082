#pragma once

// Surface schemas: building a Map from oriented polygon faces glued along
// named edges, plus the two validation layers.
//
//  - validate_structure: the map is a well-formed curve system (manifold
//    boundary, dividing set an embedded 1-manifold transverse to the
//    boundary, two-colorable complement, arcs locally embedded).
//  - validate_giroux: the configuration is admissible for tightness theory
//    (no contractible closed dividing component; none closed at all on a
//    disk; a closed surface carries a nonempty dividing set; every boundary
//    circle meets the dividing set).
//
// A bypass rewrite may legitimately break validate_giroux (that is what the
// obstruction detectors look for); it must never break validate_structure.

#include <map>
#include <string>

#include "pinwheels/core_map.hpp"

namespace pinwheels {

struct SurfaceSchema {
  struct EdgeRef {
    std::string name;
    bool reversed = false;
  };
  // Faces as ccw boundary walks; the face lies on the left of each directed
  // edge. Every edge name is referenced once (boundary edge) or twice with
  // opposite directions (interior edge).
  std::vector<std::vector<EdgeRef>> faces;
  // Labels by edge name. Unlabeled interior edges default to Skeleton;
  // once-referenced edges are Boundary automatically and may not be
  // labeled otherwise.
  std::map<std::string, EdgeInfo> labels;
};

struct SchemaResult {
  Map map;
  std::vector<std::string> edge_names;  // by edge id
  std::map<std::string, int> edge_ids;
};

// Glue the faces into a Map. Edge ids are assigned by first appearance in
// the face walks; vertices emerge from the gluing.
SchemaResult build_schema(const SurfaceSchema& s);

// allow_disconnected relaxes only the connectivity requirement (covering
// surfaces of a connected base are legitimately disjoint unions); every
// local check still runs.
void validate_structure(const Map& m, bool allow_disconnected = false);
void validate_giroux(const Map& m);

// Convenience: build + both validations.
SchemaResult build_and_validate(const SurfaceSchema& s);

// -(number of dividing-set endpoints on the boundary)/2; requires a
// nonempty boundary.
int tb(const Map& m);

}  // namespace pinwheels
