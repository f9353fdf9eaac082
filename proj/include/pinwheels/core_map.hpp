#pragma once

// Core representation: an oriented surface carrying an embedded curve system,
// encoded as a combinatorial map (rotation system on darts).
//
// Conventions (fixed project-wide):
//  - Each edge e owns darts 2e and 2e+1; opposite(d) = d ^ 1.
//  - sigma[d] = next dart counterclockwise around the origin vertex of d.
//  - face_next(d) = sigma_inv[d ^ 1] walks the face on the LEFT of d.
//  - Surfaces with boundary are capped: every boundary circle is closed off
//    by a "hole" face. hole_left[d] marks darts whose left face is a hole.
//    Euler characteristic of the surface = (V - E + F) - #holes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheels/errors.hpp"

namespace pinwheels {

using Dart = std::int32_t;
constexpr Dart kNoDart = -1;

enum class EdgeLabel : std::uint8_t {
  Boundary,  // edge of the surface boundary
  Dividing,  // edge of the dividing set
  Arc,       // edge of an attachment arc
  Skeleton,  // auxiliary cellulation edge carrying no curve
};

const char* edge_label_name(EdgeLabel l);

struct EdgeInfo {
  EdgeLabel label = EdgeLabel::Skeleton;
  std::int32_t arc = -1;      // attachment-arc id for Arc edges, else -1
  std::int32_t segment = -1;  // 0 or 1 for Arc edges, else -1

  friend bool operator==(const EdgeInfo&, const EdgeInfo&) = default;
};

struct Classification {
  bool connected = true;
  int genus = 0;
  int boundary_components = 0;
  int euler_characteristic = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Ordered embedding of one attachment arc, derived from edge labels.
// darts runs p1 -> p2 -> p3; the first seg1_len darts form segment 0.
struct ArcEmbedding {
  std::int32_t id = -1;
  std::vector<Dart> darts;
  int seg1_len = 0;

  int p1 = -1, p2 = -1, p3 = -1;  // vertex ids of the three crossing points

  // Darts of segment s oriented away from p2 is what predicates need often;
  // segment 0 stored p1->p2, segment 1 stored p2->p3.
  std::vector<Dart> segment(int s) const {
    if (s == 0) return {darts.begin(), darts.begin() + seg1_len};
    return {darts.begin() + seg1_len, darts.end()};
  }
};

// One dividing-set component, derived. Closed components are dart cycles;
// arc components run between two boundary endpoints.
struct DividingComponent {
  int id = -1;
  bool closed = false;
  // Darts in walk order. For closed components the walk starts at the
  // smallest dart; for arc components it starts at the endpoint vertex
  // with the smaller incident dart.
  std::vector<Dart> darts;
};

class Map {
 public:
  // ---- primary data ----
  std::vector<Dart> sigma, sigma_inv;
  std::vector<Dart> vertex_of;
  std::vector<EdgeInfo> edges;          // size n_edges()
  std::vector<std::uint8_t> hole_left;  // size n_darts()

  // ---- basic accessors ----
  int n_darts() const { return static_cast<int>(sigma.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_vertices() const { return n_vertices_; }
  static Dart opposite(Dart d) { return d ^ 1; }
  static int edge_of(Dart d) { return d >> 1; }
  static Dart dart_of(int edge, int side) { return 2 * edge + side; }
  Dart face_next(Dart d) const { return sigma_inv[d ^ 1]; }
  Dart face_prev(Dart d) const { return sigma[d] ^ 1; }
  int head(Dart d) const { return vertex_of[d ^ 1]; }
  const EdgeInfo& einfo(Dart d) const { return edges[d >> 1]; }

  // ---- derived data (filled by finalize) ----
  int n_faces = 0;
  std::vector<int> face_of;                  // per dart
  std::vector<std::vector<Dart>> face_darts;  // per face, orbit from min dart
  std::vector<std::uint8_t> face_is_hole;
  int n_real_faces = 0;
  int n_holes = 0;

  // Cells: real faces merged across Skeleton edges (arrangement faces of
  // the curve system). Regions: merged across Skeleton and Arc edges
  // (complement components of the dividing set).
  int n_cells = 0;
  std::vector<int> cell_of_face;  // -1 for holes
  int n_regions = 0;
  std::vector<int> region_of_face;  // -1 for holes
  std::vector<std::int8_t> region_sign;  // +1/-1; empty unless two_colorable
  bool two_colorable = false;

  int n_dividing_components = 0;
  std::vector<int> dividing_component_of_edge;  // -1 for non-dividing edges
  std::vector<DividingComponent> dividing_components;

  std::vector<ArcEmbedding> arcs;  // sorted by id
  std::vector<int> component_of_vertex;
  int n_components = 0;  // connected components of the map

  // ---- lifecycle ----
  // Recomputes every derived field and checks structural sanity
  // (permutations consistent, hole marks consistent, labels coherent).
  // Throws Error{Internal or a specific kind} on malformed data.
  void finalize();

  int cell_of_dart(Dart d) const { return cell_of_face[face_of[d]]; }
  int region_of_dart(Dart d) const { return region_of_face[face_of[d]]; }

  // Next dividing dart continuing through head(d); kNoDart at an endpoint.
  Dart dividing_next(Dart d) const;
  const ArcEmbedding* find_arc(int id) const;

  bool operator==(const Map& o) const {
    return sigma == o.sigma && vertex_of == o.vertex_of && edges == o.edges &&
           hole_left == o.hole_left;
  }

 private:
  int n_vertices_ = 0;
};

// ---- construction helper ----
// Accumulates vertices as explicit rotation lists, then builds a Map.
class MapBuilder {
 public:
  // Adds an edge, returns its id. Darts 2e (at u) and 2e+1 (at v).
  int add_edge(EdgeInfo info);
  void set_edge_info(int edge, EdgeInfo info);
  // Rotations: per vertex, the ccw-ordered list of darts originating there.
  void set_rotation(int vertex, std::vector<Dart> darts);
  int add_vertex();
  void set_hole_left(Dart d, bool v = true);

  int n_vertices() const { return static_cast<int>(rotations_.size()); }
  Map build();  // finalizes

 private:
  std::vector<EdgeInfo> edge_infos_;
  std::vector<std::vector<Dart>> rotations_;
  std::vector<Dart> hole_marks_;
};

// ---- topological utilities ----
Classification classify_surface(const Map& m);  // throws if disconnected
std::vector<Classification> classify_components(const Map& m);

// Subdivide edge e with a new degree-2 vertex. Labels are inherited by both
// halves. Returns the new map and reports the new vertex / edge ids.
struct SubdivideResult {
  Map map;
  int new_vertex;
  int edge_first;   // half incident to the old origin of dart 2e
  int edge_second;  // half incident to the old head
};
SubdivideResult subdivide_edge(const Map& m, int edge);

// Cut along an embedded closed dart cycle (head(c[i]) == tail(c[i+1]),
// wrapping). The cycle must avoid boundary vertices, repeat no vertex and
// no edge. Left bank keeps the original edge ids; the right bank receives
// fresh edges/vertices. Both banks become Boundary edges capped by holes.
struct CutResult {
  Map map;
  std::vector<Dart> cycle;          // the input cycle
  std::vector<int> right_edge_of;   // per cycle position: new edge id
  std::vector<int> right_vertex_of; // per cycle position: new vertex id
  std::vector<EdgeInfo> cut_infos;  // original labels of cycle edges
};
CutResult cut_along(const Map& m, const std::vector<Dart>& cycle);

// Exact inverse of cut_along: returns a map equal (dart-for-dart) to the
// original map that produced the CutResult.
Map reassemble(const CutResult& cut);

// True iff the embedded closed curve bounds a disk: cut and test whether a
// resulting component is a disk. Exact for embedded curves.
bool is_contractible(const Map& m, const std::vector<Dart>& cycle);

// Canonical encoding up to orientation-preserving isomorphism of the
// labeled map. anonymize_arcs renames arc ids by traversal order (used for
// corpus dedup); otherwise arc ids must match exactly.
std::string canonical_form(const Map& m, bool anonymize_arcs);

bool isomorphic(const Map& a, const Map& b, bool anonymize_arcs = false);

// Per-vertex ccw rotation lists, each starting at the vertex's smallest dart.
std::vector<std::vector<Dart>> vertex_rotations(const Map& m);

// Next dart along the boundary circle, walking with the surface interior on
// the left. d must be a boundary dart with the hole on its right.
Dart boundary_next(const Map& m, Dart d);

// All boundary circles as interior-on-left dart walks; each circle starts at
// its smallest dart, circles sorted by that dart.
std::vector<std::vector<Dart>> boundary_circles(const Map& m);

// Remove the given edges. Surviving edges and vertices are renumbered
// preserving relative order; vertices losing all incident darts are dropped.
// Hole-mark and face consistency of the result is re-validated by finalize.
struct DeleteResult {
  Map map;
  std::vector<Dart> new_dart_of;   // old dart -> new dart, or kNoDart
  std::vector<int> new_vertex_of;  // old vertex -> new vertex, or -1
};
DeleteResult delete_edges(const Map& m, std::vector<int> edges);

}  // namespace pinwheels
