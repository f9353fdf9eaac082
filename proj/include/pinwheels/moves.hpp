// Bypass attachment: rewrites the dividing set inside a neighborhood of an
// attachment arc and consumes the arc.
//
// Orient the arc p1 -> p3.  The three dividing-set strands crossing it leave
// the neighborhood through six darts, one on each side of the arc at each
// crossing vertex: (L1, R1) at p1, (L2, R2) at p2, (L3, R3) at p3, where L is
// the left side of the oriented arc.  Before the rewrite the strands pair
// straight across: {L1-R1, L2-R2, L3-R3}.  Attaching replaces this pairing by
// one of the two one-click rotations of the matching:
//   RotateLeft:  {L1-L2, L3-R1, R3-R2}
//   RotateRight: {L2-L3, L1-R3, R1-R2}
// Exactly one of the two leaves the dividing set unchanged up to isotopy when
// attached along a trivial arc; that one is the library-wide default,
// kDefaultRotation, pinned by regression tests (the other direction creates a
// closed dividing component there).
//
// Mechanically the rewrite keeps every existing dart id stable:
//  - the arc's edges are relabeled to skeleton scaffolding (the curve stays in
//    the cell structure; it has no dividing-set meaning),
//  - each crossing vertex keeps the scaffolding darts and donates its two
//    dividing darts to two new "tip" vertices, re-tethered to the old vertex
//    by short skeleton edges so no face becomes an annulus,
//  - three new dividing strands connect the tips in the rotated pairing,
//    subdividing and crossing whatever skeleton edges lie in their way (the
//    crossed halves of old skeleton edges, one tether at p2, and the last
//    scaffolding edge before p3 for the strand that switches sides).
// Consequently darts outside the neighborhood are bit-identical before and
// after, and the surface itself is untouched (same classification).

#pragma once

#include <cstdint>
#include <vector>

#include "pinwheels/core_map.hpp"

namespace pinwheels {

enum class StrandRotation { RotateLeft, RotateRight };

// Pinned by the trivial-arc / closed-curve anchor tests.
inline constexpr StrandRotation kDefaultRotation = StrandRotation::RotateLeft;

// The six strand-end darts around an attachment arc, each originating at its
// crossing vertex and pointing away along a dividing edge.
struct AttachmentNeighborhood {
  Dart l1 = kNoDart, r1 = kNoDart;
  Dart l2 = kNoDart, r2 = kNoDart;
  Dart l3 = kNoDart, r3 = kNoDart;
};

// Locates the six strand ends of an arc.  Throws ArcNotPresent if the arc id
// does not exist, NeighborhoodObstructed if the local rotations are not the
// validated crossing pattern (cannot happen for validated configurations).
AttachmentNeighborhood find_neighborhood(const Map& m, std::int32_t arc_id);

// One bypass attachment with an explicit rotation direction.
Map attach_bypass_rotated(const Map& m, std::int32_t arc_id, StrandRotation rot);

// The default attachment (kDefaultRotation).
Map attach_bypass(const Map& m, std::int32_t arc_id);

// Attaches every arc in `arc_ids` (which must be distinct and present); the
// rewrites happen in disjoint neighborhoods, so the result is independent of
// order.  Processing is pinned to ascending id order to make the output map
// deterministic dart-for-dart.
Map attach_subset(const Map& m, std::vector<std::int32_t> arc_ids);

// True iff attaching the arc leaves the dividing set unchanged up to isotopy:
// two of its crossings cobound, with a piece of one dividing component, a
// half-disk that the arc enters middle crossing first and otherwise avoids.
// Throws ArcNotPresent for unknown ids.  (Implemented by the polygon search.)
bool is_trivial_arc(const Map& m, std::int32_t arc_id);

// True iff arc1 is one left-rotation away from arc2: some embedded strip is
// bounded by a run of each arc and two dividing runs, with arc2 crossing it
// endpoint -> middle, arc1 leaving it middle -> endpoint, and neither arc
// returning to the strip.  Attaching along arc1 then preserves tightness
// whenever attaching along arc2 does.  Throws ArcNotPresent for unknown or
// equal ids.  (Implemented by the polygon search.)
bool is_left_of(const Map& m, std::int32_t arc1, std::int32_t arc2);

}  // namespace pinwheels
