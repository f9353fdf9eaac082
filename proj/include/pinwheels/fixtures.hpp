#pragma once

// Named example configurations used across tests and bundled documents.
// Each returns a freshly built, validated map.

#include "pinwheels/core_map.hpp"

namespace pinwheels {

// One chord on the disk, no arcs.
Map fixture_f0();

// Two parallel chords, one arc: first crossing on chord 0, the other two on
// chord 1, hooked so the half-disk it cuts off has the mirror (trivial)
// orientation. The arc is trivial; there are no pinwheels.
Map fixture_f1();

// Mirror hook of fixture_f1: the half-disk is a one-cornered pinwheel.
// Attaching the arc produces one closed dividing component.
Map fixture_pw1();

// Rosette with k >= 2 chords around the disk and k arcs hopping from each
// chord to the next. The central 2k-gon is a pinwheel; each arc's hook cuts
// off a mirror-oriented half-disk, so every single arc is trivial while the
// full set is not.
Map fixture_pw(int k);

// fixture_pw(3) with one hook landing back on the central polygon's own
// boundary: the hexagon keeps the corner orientations but the rerouted arc
// returns to it, so it is neither a pinwheel nor virtually one (the return
// loop is contractible on the disk).
Map fixture_pw_rerouted();

// Two nested chords and two arcs crossing the strip between them, hooks
// pointing away from each other. Arc 0 is one left-rotation away from arc 1
// across the strip; arc 0's hook is mirror-oriented (trivial arc), arc 1's
// hook is a one-cornered pinwheel.
Map fixture_left_of_pair();

// One chord, one arc crossing it three times in order, first segment
// leaving to the chosen side ('L' or 'R'). Side 'L' gives two mirror
// half-disks (trivial arc); side 'R' gives two one-cornered pinwheels.
Map fixture_snake(char side);

// Annulus whose dividing set is two boundary-parallel arcs; one attachment
// arc crosses the upper dividing arc three times, its middle segment
// wrapping around the core. The cut-off half-disk has pinwheel orientation
// but the arc returns to it; the return loop generates the annulus's
// fundamental group, so the half-disk is a virtual pinwheel and the
// returning side runs along a non-polygonal region.
Map fixture_vp_annulus();

// Torus with two parallel essential dividing curves and no arcs.
Map fixture_torus_two_curves();

// Torus with two parallel essential dividing curves and two arcs crossing
// the two annuli so that each annulus splits into a two-cornered polygon
// with pinwheel orientations and one with the mirror orientations, each
// pinwheel's returning sides coming back along the mirror polygon whose
// dividing sides all lie on the pinwheel's boundary. Both polygons of
// pinwheel orientation are virtual pinwheels (their return loops are
// essential), no genuine pinwheel exists, and the overtwistedness
// criterion is inconclusive.
Map fixture_torus_anti_pair();

}  // namespace pinwheels
