#pragma once

// Disk configurations: chord diagrams with marked attachment arcs.
//
// Boundary points are numbered 1..2n counterclockwise. Each chord is
// oriented from its smaller boundary point to its larger one; "left"/"right"
// of a chord refer to that orientation. Marks (arc crossing points) on a
// chord are ordered by index from the smaller endpoint toward the larger.

#include <utility>

#include "pinwheels/core_map.hpp"

namespace pinwheels {

struct DiskArcSpec {
  struct Mark {
    int chord = -1;  // 0-based index into the matching
    int index = -1;  // order along the chord; unique per (chord, index)
  };
  int id = -1;
  std::vector<Mark> marks;        // exactly three: p1, p2, p3 in arc order
  char first_segment_side = 'L';  // side of p1's chord the first segment leaves from
};

struct DiskSpec {
  int chords = 0;
  std::vector<std::pair<int, int>> matching;  // 1-based boundary points
  std::vector<DiskArcSpec> arcs;
};

// Build the disk configuration. The resulting map has boundary vertices
// 0..2n-1 (point p at vertex p-1), boundary edge i joining vertices i and
// i+1 mod 2n, chords subdivided at their marks.
Map build_disk(const DiskSpec& spec);

// The dividing set of a disk as a matching of its boundary feet, indexed
// 1..2k in boundary walk order from the canonical start (the boundary dart
// of the smallest boundary edge, interior on the left).
struct DiskMatching {
  std::vector<std::pair<int, int>> pairs;  // sorted, each (lo, hi)
  int closed_components = 0;

  friend bool operator==(const DiskMatching&, const DiskMatching&) = default;
};
DiskMatching boundary_matching(const Map& m);

// Exact comparison of two disk dividing sets up to isotopy fixing the
// boundary: equal foot matchings and equal closed-component counts.
bool isotopy_equal(const Map& a, const Map& b);

// True iff the dividing component (an arc of the disk) cuts off a half-disk
// containing no other dividing-set boundary points.
bool is_boundary_parallel(const Map& m, int component);

}  // namespace pinwheels
