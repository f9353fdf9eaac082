#pragma once

// Polygon search: finding the convex polygons of a curve system whose sides
// alternate between the dividing set and the attachment arcs, and the
// pinwheel / virtual-pinwheel classification built on them.
//
// A polygon is the closure of a connected union of cells whose boundary is a
// single embedded circuit alternating between dividing-set runs and arc
// runs. Sides are listed counterclockwise (interior on the left) starting
// with the dividing side that contains the smallest dividing dart. With 2k
// sides the polygon "has k corners turned the same way" when every arc side
// leaves its own arc at the far crossing and lands on the middle crossing;
// that orientation pattern is what the predicates below test.

#include <cstdint>
#include <optional>
#include <vector>

#include "pinwheels/core_map.hpp"

namespace pinwheels {

struct PolygonSide {
  bool is_arc = false;
  std::int32_t arc = -1;    // arc id for arc sides, -1 for dividing sides
  std::vector<Dart> darts;  // walk order, interior on the left

  friend bool operator==(const PolygonSide&, const PolygonSide&) = default;
};

struct Polygon {
  std::vector<PolygonSide> sides;  // ccw, first side is a dividing side
  std::vector<int> cells;          // sorted cell ids
  std::vector<int> faces;          // sorted face ids of those cells
  int k = 0;                       // number of arc sides

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

enum class Tristate { No, Unknown, Yes };

// Every polygon on at most max_faces faces, sorted by (face count, face
// ids). Throws BoundExceeded if any connected cell union had to be pruned
// by the bound, so a normal return is an exhaustiveness certificate.
std::vector<Polygon> enumerate_polygons(const Map& m, int max_faces);

// True iff every arc side of p is oriented endpoint -> middle crossing and
// its arc stays off the closed polygon elsewhere. p must be a polygon of m
// (else throws NotAPolygonOfThisConfiguration).
bool is_pinwheel(const Map& m, const Polygon& p);

// True iff every arc side of p is oriented middle crossing -> endpoint (the
// mirror orientation pattern; no non-return requirement).
bool is_anti_pinwheel(const Map& m, const Polygon& p);

// Whether some finite cover lifts p to a pinwheel. Exact (Yes/No) whenever
// every arc-return loop has abelian ambient fundamental group; conservative
// Unknown when a null-homologous return lives on a surface where homology
// cannot certify null-homotopy.
Tristate is_virtual_pinwheel(const Map& m, const Polygon& p);

// All pinwheels / all certified virtual pinwheels (Tristate::Yes only),
// with the polygon bound set to the full face count.
std::vector<Polygon> find_pinwheels(const Map& m);
std::vector<Polygon> find_virtual_pinwheels(const Map& m);

// Overtwistedness certificate by the returning-arc criterion: a virtual
// pinwheel all of whose returning arcs come back along a cell that either
// is not a polygon or is a polygon with a dividing side not on the
// pinwheel's own boundary.
struct OvertwistedCheck {
  bool overtwisted = false;
  std::optional<Polygon> witness;
};
OvertwistedCheck prop_otcases_check(const Map& m);

}  // namespace pinwheels
