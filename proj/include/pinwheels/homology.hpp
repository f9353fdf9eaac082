#pragma once

// Integral first homology of the surface carried by a map, with exact class
// computation for closed dart walks.
//
// Coordinates: a spanning forest of the vertex graph is fixed; every edge
// outside the forest gets one coordinate. The raw class of a closed walk is
// its signed traversal count per non-forest edge (dart 2e counts +1, dart
// 2e+1 counts -1); forest edges never matter because the projection that
// drops them is injective on cycles. Real-face boundaries span the lattice
// of null-homologous classes; raw vectors are reduced to the canonical
// representative modulo that lattice, so a walk bounds iff its reduced
// class is all zero. Holes are excluded from the lattice, which makes the
// classes those of the bounded surface, not of its capping.

#include <vector>

#include "pinwheels/core_map.hpp"

namespace pinwheels {

class Homology {
 public:
  explicit Homology(const Map& m);

  // Canonical representative of the walk's class modulo face boundaries.
  // The walk must be closed: head(walk[i]) == tail(walk[i+1]) cyclically.
  std::vector<long long> cycle_class(const std::vector<Dart>& walk) const;

  bool is_null_homologous(const std::vector<Dart>& walk) const;

  int n_coordinates() const { return n_coords_; }

 private:
  const Map* map_;
  std::vector<int> coord_of_edge_;  // -1 for forest edges
  int n_coords_ = 0;
  std::vector<std::vector<long long>> basis_;  // echelon rows of the lattice
  std::vector<int> pivot_col_;                 // pivot column per basis row

  std::vector<long long> raw_class(const std::vector<Dart>& walk) const;
  void reduce(std::vector<long long>& v) const;
};

}  // namespace pinwheels
