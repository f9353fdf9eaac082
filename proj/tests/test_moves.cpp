#include <doctest.h>

#include <algorithm>

#include "pinwheels/disk_config.hpp"
#include "pinwheels/moves.hpp"
#include "pinwheels/schema.hpp"

using namespace pinwheels;

namespace {

template <class F>
ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  REQUIRE_MESSAGE(false, "expected an Error to be thrown");
  return ErrorKind::Internal;
}

// One chord with a back-and-forth arc crossing it three times in a row.
Map snake_disk(char side) {
  DiskSpec s;
  s.chords = 1;
  s.matching = {{1, 2}};
  DiskArcSpec arc;
  arc.id = 7;
  arc.marks = {{0, 0}, {0, 1}, {0, 2}};
  arc.first_segment_side = side;
  s.arcs = {arc};
  return build_disk(s);
}

// Three nested chords with one arc running straight across all of them.
Map fan_disk() {
  DiskSpec s;
  s.chords = 3;
  s.matching = {{1, 6}, {2, 5}, {3, 4}};
  DiskArcSpec arc;
  arc.id = 0;
  arc.marks = {{0, 0}, {1, 0}, {2, 0}};
  arc.first_segment_side = 'R';
  s.arcs = {arc};
  return build_disk(s);
}

int closed_component_count(const Map& m) {
  int n = 0;
  for (const DividingComponent& c : m.dividing_components)
    if (c.closed) ++n;
  return n;
}

// A disk with one dividing chord (left), one scaffolding chord (right), and
// a left-sided back-and-forth arc whose second segment crosses the
// scaffolding chord twice on its way out and back.
//
//   boundary ccw: gS(0) -> sS(1) -> sN(2) -> gN(3)
//   dividing:  gS -p1- p2 -p3- gN   (vertical, edges g0..g3 = 4..7)
//   skeleton:  sS -u1- u2 - sN      (vertical, edges s0..s2 = 8..10)
//   arc 7:     p1 ~west~ p2 -> u1 ~east~ u2 -> p3   (edges 11..14)
Map skeleton_crossing_disk() {
  MapBuilder b;
  const EdgeInfo bd{EdgeLabel::Boundary, -1, -1};
  const EdgeInfo dv{EdgeLabel::Dividing, -1, -1};
  const EdgeInfo sk{EdgeLabel::Skeleton, -1, -1};
  for (int i = 0; i < 4; ++i) b.add_edge(bd);  // 0..3: gS-sS, sS-sN, sN-gN, gN-gS
  for (int i = 0; i < 4; ++i) b.add_edge(dv);  // 4..7: gS-p1, p1-p2, p2-p3, p3-gN
  for (int i = 0; i < 3; ++i) b.add_edge(sk);  // 8..10: sS-u1, u1-u2, u2-sN
  b.add_edge({EdgeLabel::Arc, 7, 0});                              // 11: p1-p2
  for (int i = 0; i < 3; ++i) b.add_edge({EdgeLabel::Arc, 7, 1});  // 12..14
  for (int i = 0; i < 9; ++i) b.add_vertex();
  b.set_rotation(0, {0, 8, 7});             // gS
  b.set_rotation(1, {2, 16, 1});            // sS
  b.set_rotation(2, {4, 21, 3});            // sN
  b.set_rotation(3, {6, 15, 5});            // gN
  b.set_rotation(4, {10, 22, 9});           // p1
  b.set_rotation(5, {12, 23, 11, 24});      // p2
  b.set_rotation(6, {14, 13, 29});          // p3
  b.set_rotation(7, {18, 25, 17, 26});      // u1
  b.set_rotation(8, {27, 20, 28, 19});      // u2
  for (Dart d : {1, 3, 5, 7}) b.set_hole_left(d);
  return b.build();
}

}  // namespace

TEST_CASE("attach: preserving rotation depends on the arc's handedness") {
  // Attaching along the back-and-forth arc either reconnects the chord into
  // an isotopic copy of itself or pinches off two closed loops; which rotation
  // does which is determined by the side the arc first leaves from.
  struct Case {
    char side;
    StrandRotation preserving;
  };
  for (Case cs : {Case{'L', StrandRotation::RotateLeft},
                  Case{'R', StrandRotation::RotateRight}}) {
    CAPTURE(cs.side);
    Map m = snake_disk(cs.side);
    REQUIRE(m.arcs.size() == 1);
    REQUIRE(boundary_matching(m).closed_components == 0);

    Map good = attach_bypass_rotated(m, 7, cs.preserving);
    CHECK(isotopy_equal(m, good));
    CHECK(good.arcs.empty());
    CHECK(tb(good) == tb(m));

    StrandRotation anti = cs.preserving == StrandRotation::RotateLeft
                              ? StrandRotation::RotateRight
                              : StrandRotation::RotateLeft;
    Map bad = attach_bypass_rotated(m, 7, anti);
    DiskMatching bm = boundary_matching(bad);
    CHECK(bm.pairs == boundary_matching(m).pairs);
    CHECK(bm.closed_components == 2);
    CHECK(!isotopy_equal(m, bad));
    int verified = 0;
    for (const DividingComponent& c : bad.dividing_components)
      if (c.closed) {
        CHECK(is_contractible(bad, c.darts));
        ++verified;
      }
    CHECK(verified == 2);
  }
}

TEST_CASE("attach: the default rotation is the left-handed preserving one") {
  // Pins the library-wide convention: a left-sided back-and-forth arc is the
  // trivial attachment under attach_bypass.
  Map m = snake_disk('L');
  Map out = attach_bypass(m, 7);
  CHECK(isotopy_equal(m, out));
  CHECK(closed_component_count(out) == 0);
}

TEST_CASE("attach: fan across three nested chords rotates the matching") {
  Map m = fan_disk();
  REQUIRE(boundary_matching(m).pairs ==
          std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}});

  Map left = attach_bypass_rotated(m, 0, StrandRotation::RotateLeft);
  DiskMatching lm = boundary_matching(left);
  CHECK(lm.pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {5, 6}});
  CHECK(lm.closed_components == 0);
  CHECK(tb(left) == tb(m));

  Map right = attach_bypass_rotated(m, 0, StrandRotation::RotateRight);
  DiskMatching rm = boundary_matching(right);
  CHECK(rm.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}});
  CHECK(rm.closed_components == 0);
}

TEST_CASE("attach: untouched darts are bit-identical") {
  Map m = snake_disk('L');
  Map out = attach_bypass(m, 7);
  REQUIRE(out.n_darts() > m.n_darts());

  // Darts that are not on the arc, not on the subdivided scaffolding piece,
  // and not at the three crossing points keep their entire record.
  const ArcEmbedding& arc = m.arcs[0];
  auto touched_vertex = [&](int v) { return v == arc.p1 || v == arc.p2 || v == arc.p3; };
  std::vector<char> touched_edge(static_cast<std::size_t>(m.n_edges()), 0);
  for (Dart d : arc.darts) touched_edge[static_cast<std::size_t>(d >> 1)] = 1;
  int checked = 0;
  for (Dart d = 0; d < m.n_darts(); ++d) {
    if (touched_edge[static_cast<std::size_t>(d >> 1)]) continue;
    if (touched_vertex(m.vertex_of[d]) || touched_vertex(m.head(d))) continue;
    CHECK(out.sigma[d] == m.sigma[d]);
    CHECK(out.sigma_inv[d] == m.sigma_inv[d]);
    CHECK(out.vertex_of[d] == m.vertex_of[d]);
    CHECK(out.einfo(d) == m.einfo(d));
    CHECK(out.hole_left[d] == m.hole_left[d]);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("attach: two independent arcs commute up to relabeling") {
  DiskSpec s;
  s.chords = 2;
  s.matching = {{1, 2}, {3, 4}};
  DiskArcSpec a0, a1;
  a0.id = 0;
  a0.marks = {{0, 0}, {0, 1}, {0, 2}};
  a0.first_segment_side = 'L';
  a1.id = 1;
  a1.marks = {{1, 0}, {1, 1}, {1, 2}};
  a1.first_segment_side = 'L';
  s.arcs = {a0, a1};
  Map m = build_disk(s);
  REQUIRE(m.arcs.size() == 2);

  Map ab = attach_bypass(attach_bypass(m, 0), 1);
  Map ba = attach_bypass(attach_bypass(m, 1), 0);
  CHECK(canonical_form(ab, false) == canonical_form(ba, false));

  Map sub = attach_subset(m, {1, 0});
  CHECK(sub == ab);  // ascending order internally, so bit-equal to 0-then-1

  CHECK(attach_subset(m, {}) == m);
  CHECK(isotopy_equal(ab, m));
}

TEST_CASE("attach: strands thread through crossed scaffolding edges") {
  Map m = skeleton_crossing_disk();
  validate_structure(m);
  Classification c = classify_surface(m);
  CHECK(c.genus == 0);
  CHECK(c.boundary_components == 1);
  REQUIRE(m.arcs.size() == 1);
  REQUIRE(m.arcs[0].darts.size() == 4);
  REQUIRE(m.arcs[0].seg1_len == 1);
  DiskMatching before = boundary_matching(m);
  REQUIRE(before.pairs == std::vector<std::pair<int, int>>{{1, 2}});
  REQUIRE(before.closed_components == 0);

  // The arc has the left-sided handedness, so the default rotation preserves
  // the dividing set while weaving its strands through four subdivision
  // points on the scaffolding chord plus the two crossings of its own track.
  Map good = attach_bypass(m, 7);
  CHECK(isotopy_equal(m, good));
  CHECK(good.n_vertices() == m.n_vertices() + 12);  // 6 tips + 4 midpoints + 2 crossings
  CHECK(good.n_edges() == m.n_edges() + 21);        // 5 subdivisions + 7 tethers + 9 strand pieces
  CHECK(tb(good) == tb(m));

  Map bad = attach_bypass_rotated(m, 7, StrandRotation::RotateRight);
  DiskMatching bm = boundary_matching(bad);
  CHECK(bm.pairs == before.pairs);
  CHECK(bm.closed_components == 2);
  for (const DividingComponent& comp : bad.dividing_components)
    if (comp.closed) CHECK(is_contractible(bad, comp.darts));
}

TEST_CASE("attach: error reporting") {
  Map m = snake_disk('L');
  CHECK(thrown_kind([&] { attach_bypass(m, 3); }) == ErrorKind::ArcNotPresent);
  CHECK(thrown_kind([&] { attach_subset(m, {7, 7}); }) == ErrorKind::ArcNotPresent);
  CHECK(thrown_kind([&] { find_neighborhood(m, 12); }) == ErrorKind::ArcNotPresent);
}

TEST_CASE("attach: neighborhood darts are the six flanking strand ends") {
  Map m = snake_disk('L');
  AttachmentNeighborhood nb = find_neighborhood(m, 7);
  for (Dart d : {nb.l1, nb.r1, nb.l2, nb.r2, nb.l3, nb.r3}) {
    REQUIRE(d != kNoDart);
    CHECK(m.einfo(d).label == EdgeLabel::Dividing);
  }
  const ArcEmbedding& arc = m.arcs[0];
  CHECK(m.vertex_of[nb.l1] == arc.p1);
  CHECK(m.vertex_of[nb.r1] == arc.p1);
  CHECK(m.vertex_of[nb.l2] == arc.p2);
  CHECK(m.vertex_of[nb.r2] == arc.p2);
  CHECK(m.vertex_of[nb.l3] == arc.p3);
  CHECK(m.vertex_of[nb.r3] == arc.p3);
}
