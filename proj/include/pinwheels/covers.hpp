#pragma once

// Finite covers of a configuration via voltage assignments, lifts of the
// curve system to a cover, and the weight projection that turns a genuine
// pinwheel in a cover into a certified virtual pinwheel of the base.
//
// Construction: fix a finite abelian group G and assign every base edge a
// voltage, the group element gained by traversing the edge along its even
// dart (and lost along the odd dart). The derived cover has one vertex
// (v, s) per base vertex v and sheet s in G, and one edge per base edge and
// sheet, running from (tail, s) to (head, s + voltage). Rotations lift
// verbatim, so the sheet projection commutes with both next-around-vertex
// and opposite. An assignment is admissible when the net voltage around
// every real face is the identity: exactly then faces lift |G|-to-1 and the
// derived map is an honest unbranched covering of degree |G|. Boundary
// circles are unconstrained and may wrap (their lifts merge into longer
// circles).

#include <cstdint>
#include <optional>
#include <vector>

#include "pinwheels/core_map.hpp"
#include "pinwheels/polygons.hpp"

namespace pinwheels {

// Z/m1 x ... x Z/mk, elements encoded as mixed-radix indices in [0, order)
// with the first modulus least significant. The empty product is the
// trivial group (order 1).
struct AbelianGroup {
  std::vector<int> moduli;  // each >= 2

  int order() const;
  int encode(const std::vector<int>& element) const;
  std::vector<int> decode(int index) const;
  int add(int a, int b) const;
  int negate(int a) const;
  int scale(long long k, int a) const;  // k-fold sum of a
};

struct VoltageCover {
  Map base;
  AbelianGroup group;
  std::vector<std::vector<int>> voltages;  // one group element per base edge
  Map cover;

  // Dart-level projection. Cover edge ids are (base edge)*degree + sheet;
  // cover vertex ids are (base vertex)*degree + sheet.
  std::vector<Dart> base_dart_of;  // per cover dart
  std::vector<int> sheet_of;       // per cover dart: sheet of its origin vertex
  std::vector<int> base_cell_of_cell;  // per cover cell: the base cell below it

  // Lifted arcs are renumbered (base arc index)*degree + s, where s is the
  // sheet holding the lift of the arc's first stored dart.
  std::vector<std::int32_t> base_arc_of;  // per lifted arc id: base arc id
  std::vector<int> arc_sheet_of;          // per lifted arc id: starting sheet

  int degree() const { return group.order(); }
  // The cover dart over base_dart whose origin vertex lies in `sheet`.
  Dart lift_dart(Dart base_dart, int sheet) const;
};

// Derive the cover of a validated base configuration. Throws
// BadVoltageDomain when the assignment is not one valid group element per
// edge or some real face carries a nonidentity net voltage (the derived map
// would branch). The cover is re-validated before being returned.
VoltageCover build_cover(const Map& base, const AbelianGroup& group,
                         const std::vector<std::vector<int>>& voltages);

// The covering configuration itself (lifted dividing set and arcs).
const Map& lift_configuration(const VoltageCover& vc);

// Every admissible assignment for the group: the solutions, over G, of the
// real-face constraints with spanning-forest edges forced to the identity.
// Enumerated in the deterministic parameter order used by witness_cover
// (the all-identity assignment first).
std::vector<std::vector<std::vector<int>>> admissible_assignments(
    const Map& base, const AbelianGroup& group);

// Weight data of a cover pinwheel over the base. weight[c] counts the cover
// cells above base cell c that lie inside the pinwheel; every lift of every
// base arc is classified as outside / interior / boundary relative to the
// pinwheel. projected is the distinguished connected component (through arc
// edges) of the maximum-weight cells: a polygon of the base that the virtual
// predicate certifies.
struct CoverProjection {
  std::vector<int> weight;  // per base cell
  struct ArcCounts {
    std::int32_t arc = -1;
    int outside = 0, interior = 0, boundary = 0;
  };
  std::vector<ArcCounts> arc_counts;  // sorted by base arc id
  int max_weight = 0;
  Polygon projected;
};

// Computes the weight data for a pinwheel of the cover configuration and
// verifies the structural facts the projection rests on: across every arc
// side of the pinwheel the inside weight equals interior + boundary lift
// counts, the outside weight equals the interior count alone (hence inside
// strictly exceeds outside), and the maximum-weight component is a polygon
// of the base whose virtual-pinwheel verdict is not No. Throws
// NotAPinwheelUpstairs if p is not a pinwheel of the cover.
CoverProjection project_weights(const VoltageCover& vc, const Polygon& p);

// The projected polygon alone.
Polygon weight_project(const VoltageCover& vc, const Polygon& p);

// Searches abelian covers of degree <= max_degree for one in which the lift
// of p contains a genuine pinwheel (a pinwheel of the cover all of whose
// cells lie over cells of p); returns the first hit in a fixed deterministic
// order — degree ascending; invariant-factor groups of that order with
// fewer factors first, then lexicographically larger first factors; then
// admissible assignments in enumeration order — or nullopt when the bounded
// search is exhausted. p must satisfy is_virtual_pinwheel == Yes
// (NotVirtual otherwise). A genuine pinwheel is its own degree-1 witness.
std::optional<VoltageCover> witness_cover(const Map& base, const Polygon& p,
                                          int max_degree = 6);

}  // namespace pinwheels
