#include "pinwheels/fixtures.hpp"

#include <utility>
#include <vector>

#include "pinwheels/disk_config.hpp"
#include "pinwheels/errors.hpp"

namespace pinwheels {

namespace {

DiskArcSpec arc3(int id, DiskArcSpec::Mark p1, DiskArcSpec::Mark p2,
                 DiskArcSpec::Mark p3, char side = 'L') {
  DiskArcSpec a;
  a.id = id;
  a.marks = {p1, p2, p3};
  a.first_segment_side = side;
  return a;
}

}  // namespace

Map fixture_f0() { return build_disk(DiskSpec{1, {{1, 2}}, {}}); }

Map fixture_f1() {
  return build_disk(
      DiskSpec{2, {{1, 2}, {3, 4}}, {arc3(0, {0, 0}, {1, 0}, {1, 1})}});
}

Map fixture_pw1() {
  return build_disk(
      DiskSpec{2, {{1, 2}, {3, 4}}, {arc3(0, {0, 0}, {1, 1}, {1, 0})}});
}

Map fixture_pw(int k) {
  require(k >= 2, "fixture_pw needs at least two chords");
  DiskSpec spec;
  spec.chords = k;
  for (int c = 0; c < k; ++c) spec.matching.emplace_back(2 * c + 1, 2 * c + 2);
  // Arc c runs from the middle mark of chord c to chord c+1, hooking over
  // that chord's first mark. Chord c thus carries, in index order, the
  // middle and far crossings of arc c-1 around the start of arc c.
  for (int c = 0; c < k; ++c) {
    int n = (c + 1) % k;
    spec.arcs.push_back(arc3(c, {c, 1}, {n, 0}, {n, 2}));
  }
  return build_disk(spec);
}

Map fixture_pw_rerouted() {
  DiskSpec spec;
  spec.chords = 3;
  spec.matching = {{1, 2}, {3, 4}, {5, 6}};
  // As fixture_pw(3), except arc 0's hook lands between its own middle
  // crossing and the start of arc 1, i.e. on the central polygon's boundary.
  spec.arcs = {arc3(0, {0, 1}, {1, 0}, {1, 1}), arc3(1, {1, 2}, {2, 0}, {2, 2}),
               arc3(2, {2, 1}, {0, 0}, {0, 2})};
  return build_disk(spec);
}

Map fixture_left_of_pair() {
  return build_disk(DiskSpec{
      2,
      {{1, 4}, {2, 3}},
      {arc3(0, {1, 0}, {0, 1}, {0, 0}), arc3(1, {1, 1}, {0, 2}, {0, 3})}});
}

Map fixture_snake(char side) {
  return build_disk(
      DiskSpec{1, {{1, 2}}, {arc3(0, {0, 0}, {0, 1}, {0, 2}, side)}});
}

Map fixture_vp_annulus() {
  const EdgeInfo kB{EdgeLabel::Boundary, -1, -1};
  const EdgeInfo kD{EdgeLabel::Dividing, -1, -1};
  const EdgeInfo kS{EdgeLabel::Skeleton, -1, -1};
  const EdgeInfo kA0{EdgeLabel::Arc, 0, 0};
  const EdgeInfo kA1{EdgeLabel::Arc, 0, 1};

  // Vertices: 0,1 on the upper boundary circle; 2,3,4 are the arc crossings
  // p2, p3, p1 on the upper dividing arc; 5,6 on the lower boundary circle;
  // 7 is a plain curve vertex between p2 and p3 anchoring the cellulation
  // chord of the core-wrapping region (crossing vertices stay clean).
  MapBuilder b;
  for (int v = 0; v < 8; ++v) b.add_vertex();

  b.add_edge(kB);   // e0: 0-1, upper boundary (darts 0,1)
  b.add_edge(kB);   // e1: 1-0, upper boundary (darts 2,3)
  b.add_edge(kB);   // e2: 5-6, lower boundary (darts 4,5)
  b.add_edge(kB);   // e3: 6-5, lower boundary (darts 6,7)
  b.add_edge(kD);   // e4: 0-2, upper dividing arc (darts 8,9)
  b.add_edge(kD);   // e5: 2-7 (darts 10,11)
  b.add_edge(kD);   // e6: 3-4 (darts 12,13)
  b.add_edge(kD);   // e7: 4-1 (darts 14,15)
  b.add_edge(kD);   // e8: 5-6, lower dividing arc (darts 16,17)
  b.add_edge(kA0);  // e9: 4-2, arc segment p1->p2 (darts 18,19)
  b.add_edge(kA1);  // e10: 2-3, arc segment p2->p3 (darts 20,21)
  b.add_edge(kS);   // e11: 7-6, cellulation of the core-wrapping region
                    //      (darts 22,23)
  b.add_edge(kD);   // e12: 7-3 (darts 24,25)

  b.set_rotation(0, {0, 3, 8});
  b.set_rotation(1, {2, 1, 15});
  b.set_rotation(2, {10, 19, 9, 20});
  b.set_rotation(3, {12, 25, 21});
  b.set_rotation(4, {14, 18, 13});
  b.set_rotation(5, {4, 16, 7});
  b.set_rotation(6, {6, 23, 17, 5});
  b.set_rotation(7, {11, 22, 24});

  b.set_hole_left(0);
  b.set_hole_left(2);
  b.set_hole_left(5);
  b.set_hole_left(7);
  return b.build();
}

Map fixture_torus_two_curves() {
  const EdgeInfo kD{EdgeLabel::Dividing, -1, -1};
  const EdgeInfo kS{EdgeLabel::Skeleton, -1, -1};

  MapBuilder b;
  b.add_vertex();
  b.add_vertex();
  b.add_edge(kD);  // e0: loop at vertex 0 (darts 0,1)
  b.add_edge(kD);  // e1: loop at vertex 1 (darts 2,3)
  b.add_edge(kS);  // e2: 0-1 (darts 4,5)
  b.add_edge(kS);  // e3: 0-1 (darts 6,7)
  b.set_rotation(0, {0, 6, 1, 4});
  b.set_rotation(1, {2, 5, 3, 7});
  return b.build();
}

Map fixture_torus_anti_pair() {
  const EdgeInfo kD{EdgeLabel::Dividing, -1, -1};
  const EdgeInfo kA00{EdgeLabel::Arc, 0, 0};
  const EdgeInfo kA01{EdgeLabel::Arc, 0, 1};
  const EdgeInfo kA10{EdgeLabel::Arc, 1, 0};
  const EdgeInfo kA11{EdgeLabel::Arc, 1, 1};

  // Flat-torus picture, two horizontal dividing curves. Vertices 0,1,2 on
  // the upper curve are arc 0's first and last crossings and arc 1's middle
  // one; vertices 3,4,5 on the lower curve are arc 0's middle crossing and
  // arc 1's last and first. Arc segments cross the middle band vertically
  // (e6, e8) and wrap through the other band with a sideways drift (e7, e9).
  MapBuilder b;
  for (int v = 0; v < 6; ++v) b.add_vertex();

  b.add_edge(kD);    // e0: 0-1 upper curve (darts 0,1)
  b.add_edge(kD);    // e1: 1-2 (darts 2,3)
  b.add_edge(kD);    // e2: 2-0, wrapping (darts 4,5)
  b.add_edge(kD);    // e3: 3-4 lower curve (darts 6,7)
  b.add_edge(kD);    // e4: 4-5 (darts 8,9)
  b.add_edge(kD);    // e5: 5-3, wrapping (darts 10,11)
  b.add_edge(kA00);  // e6: 0-3, arc 0 first segment (darts 12,13)
  b.add_edge(kA01);  // e7: 3-1, arc 0 second segment (darts 14,15)
  b.add_edge(kA10);  // e8: 5-2, arc 1 first segment (darts 16,17)
  b.add_edge(kA11);  // e9: 2-4, arc 1 second segment (darts 18,19)

  b.set_rotation(0, {0, 5, 12});
  b.set_rotation(1, {2, 15, 1});
  b.set_rotation(2, {4, 18, 3, 17});
  b.set_rotation(3, {6, 13, 11, 14});
  b.set_rotation(4, {8, 7, 19});
  b.set_rotation(5, {10, 16, 9});
  return b.build();
}

}  // namespace pinwheels
