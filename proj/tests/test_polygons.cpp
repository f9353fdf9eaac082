#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pinwheels/disk_config.hpp"
#include "pinwheels/fixtures.hpp"
#include "pinwheels/homology.hpp"
#include "pinwheels/moves.hpp"
#include "pinwheels/polygons.hpp"
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

std::vector<Polygon> all_polygons(const Map& m) {
  return enumerate_polygons(m, m.n_real_faces);
}

// The number of polygons with k arc sides.
int count_k(const std::vector<Polygon>& ps, int k) {
  return static_cast<int>(std::count_if(
      ps.begin(), ps.end(), [&](const Polygon& p) { return p.k == k; }));
}

const Polygon& only_with_k(const std::vector<Polygon>& ps, int k) {
  const Polygon* found = nullptr;
  for (const Polygon& p : ps) {
    if (p.k != k) continue;
    REQUIRE(found == nullptr);
    found = &p;
  }
  REQUIRE(found != nullptr);
  return *found;
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

void check_polygon_invariants(const Map& m, const std::vector<Polygon>& ps) {
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const auto a = std::make_pair(ps[i - 1].faces.size(), ps[i - 1].faces);
    const auto b = std::make_pair(ps[i].faces.size(), ps[i].faces);
    CHECK(a < b);  // canonical output order
  }
  for (const Polygon& p : ps) {
    REQUIRE(!p.sides.empty());
    CHECK(static_cast<int>(p.sides.size()) == 2 * p.k);
    CHECK_FALSE(p.sides.front().is_arc);
    for (std::size_t i = 0; i < p.sides.size(); ++i) {
      CHECK(p.sides[i].is_arc == (i % 2 == 1));  // strict alternation
      REQUIRE(!p.sides[i].darts.empty());
    }
    // A polygon never straddles the dividing set: one region, one sign.
    REQUIRE(!p.faces.empty());
    int region = m.region_of_face[p.faces[0]];
    for (int f : p.faces) CHECK(m.region_of_face[f] == region);
    // Pinwheels are in particular virtual pinwheels.
    if (is_pinwheel(m, p)) CHECK(is_virtual_pinwheel(m, p) == Tristate::Yes);
  }
}

}  // namespace

TEST_CASE("homology: torus with two curves") {
  Map m = fixture_torus_two_curves();
  Homology h(m);
  // Each dividing loop is essential.
  CHECK_FALSE(h.is_null_homologous({0}));
  CHECK_FALSE(h.is_null_homologous({2}));
  // A skeleton loop through both vertices is essential too.
  CHECK_FALSE(h.is_null_homologous({4, 7}));
  // Face boundaries bound.
  for (int f = 0; f < m.n_faces; ++f) {
    if (!m.face_is_hole[f]) CHECK(h.is_null_homologous(m.face_darts[f]));
  }
  // Non-closed walks are rejected.
  CHECK(thrown_kind([&] { h.cycle_class({0, 4}); }) == ErrorKind::Internal);
}

TEST_CASE("homology: disk and annulus") {
  Map d = fixture_f1();
  Homology hd(d);
  for (const auto& circle : boundary_circles(d)) {
    CHECK(hd.is_null_homologous(circle));
  }

  Map a = fixture_vp_annulus();
  Homology ha(a);
  // Walking once around the core (an arc segment plus two dividing edges).
  CHECK_FALSE(ha.is_null_homologous({20, 25, 11}));
  // Doubling back along one edge bounds.
  CHECK(ha.is_null_homologous({10, 11}));
  // A face boundary bounds.
  CHECK(ha.is_null_homologous({18, 10, 24, 12}));
}

TEST_CASE("no arcs, no polygons") {
  Map m = fixture_f0();
  CHECK(all_polygons(m).empty());
  CHECK(find_pinwheels(m).empty());
  CHECK(find_virtual_pinwheels(m).empty());
  OvertwistedCheck oc = prop_otcases_check(m);
  CHECK_FALSE(oc.overtwisted);
}

TEST_CASE("trivial hook: one mirror-oriented half-disk") {
  Map m = fixture_f1();
  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 1);
  const Polygon& lens = ps[0];
  CHECK(lens.k == 1);
  CHECK(lens.sides.size() == 2);
  CHECK(lens.sides[1].is_arc);
  CHECK(lens.sides[1].arc == 0);
  CHECK_FALSE(is_pinwheel(m, lens));
  CHECK(is_anti_pinwheel(m, lens));
  CHECK(is_virtual_pinwheel(m, lens) == Tristate::No);
  CHECK(find_pinwheels(m).empty());
  CHECK(find_virtual_pinwheels(m).empty());
  CHECK(is_trivial_arc(m, 0));
  CHECK_FALSE(prop_otcases_check(m).overtwisted);
  check_polygon_invariants(m, ps);
}

TEST_CASE("pinwheel hook: one-cornered pinwheel and a closed curve") {
  Map m = fixture_pw1();
  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 1);
  const Polygon& lens = ps[0];
  CHECK(lens.k == 1);
  CHECK(is_pinwheel(m, lens));
  CHECK_FALSE(is_anti_pinwheel(m, lens));
  CHECK(is_virtual_pinwheel(m, lens) == Tristate::Yes);
  REQUIRE(find_pinwheels(m).size() == 1);
  CHECK(find_pinwheels(m)[0] == lens);
  CHECK(find_virtual_pinwheels(m).size() == 1);
  CHECK_FALSE(is_trivial_arc(m, 0));
  // No returning sides anywhere, so the overtwistedness criterion is silent.
  CHECK_FALSE(prop_otcases_check(m).overtwisted);
  // Attaching the pinwheel's arc creates a closed dividing curve.
  CHECK(boundary_matching(attach_bypass(m, 0)).closed_components == 1);
  check_polygon_invariants(m, ps);
}

TEST_CASE("snake arcs: mirror side is trivial, pinwheel side is not") {
  Map l = fixture_snake('L');
  auto pl = all_polygons(l);
  REQUIRE(pl.size() == 2);
  for (const Polygon& p : pl) {
    CHECK(p.k == 1);
    CHECK(is_anti_pinwheel(l, p));
    CHECK_FALSE(is_pinwheel(l, p));
  }
  CHECK(is_trivial_arc(l, 0));
  CHECK(find_pinwheels(l).empty());
  CHECK(isotopy_equal(l, attach_bypass(l, 0)));

  Map r = fixture_snake('R');
  auto pr = all_polygons(r);
  REQUIRE(pr.size() == 2);
  for (const Polygon& p : pr) {
    CHECK(p.k == 1);
    CHECK(is_pinwheel(r, p));
    CHECK_FALSE(is_anti_pinwheel(r, p));
  }
  CHECK_FALSE(is_trivial_arc(r, 0));
  CHECK(find_pinwheels(r).size() == 2);
  CHECK(boundary_matching(attach_bypass(r, 0)).closed_components == 2);
  check_polygon_invariants(l, pl);
  check_polygon_invariants(r, pr);
}

TEST_CASE("rosette: central polygon is the only pinwheel") {
  Map m = fixture_pw(3);
  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 4);
  CHECK(count_k(ps, 1) == 3);
  CHECK(count_k(ps, 3) == 1);

  const Polygon& hexagon = only_with_k(ps, 3);
  CHECK(hexagon.faces.size() == 1);
  CHECK(is_pinwheel(m, hexagon));
  CHECK_FALSE(is_anti_pinwheel(m, hexagon));
  CHECK(is_virtual_pinwheel(m, hexagon) == Tristate::Yes);
  for (const Polygon& p : ps) {
    if (p.k == 1) {
      CHECK(is_anti_pinwheel(m, p));
      CHECK_FALSE(is_pinwheel(m, p));
    }
  }

  auto pws = find_pinwheels(m);
  REQUIRE(pws.size() == 1);
  CHECK(pws[0] == hexagon);
  CHECK(find_virtual_pinwheels(m).size() == 1);

  // Every arc alone is trivial: the obstruction needs the full set.
  for (int a = 0; a < 3; ++a) CHECK(is_trivial_arc(m, a));
  CHECK_FALSE(prop_otcases_check(m).overtwisted);
  check_polygon_invariants(m, ps);
}

TEST_CASE("rosette sizes two and four") {
  for (int k : {2, 4}) {
    Map m = fixture_pw(k);
    auto ps = all_polygons(m);
    REQUIRE(static_cast<int>(ps.size()) == k + 1);
    CHECK(count_k(ps, 1) == k);
    CHECK(count_k(ps, k) == 1);
    auto pws = find_pinwheels(m);
    REQUIRE(pws.size() == 1);
    CHECK(pws[0].k == k);
    for (int a = 0; a < k; ++a) CHECK(is_trivial_arc(m, a));
    check_polygon_invariants(m, ps);
  }
  // Neither arc of the two-rosette is a left-rotation of the other: the
  // strip between them has both corners turned the pinwheel way.
  Map m2 = fixture_pw(2);
  CHECK_FALSE(is_left_of(m2, 0, 1));
  CHECK_FALSE(is_left_of(m2, 1, 0));
}

TEST_CASE("rerouted rosette: hook landing on the central polygon") {
  Map m = fixture_pw_rerouted();
  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 4);
  const Polygon& hexagon = only_with_k(ps, 3);
  // Corner orientations survive the rerouting but the arc now returns to
  // the polygon, and on a disk no return can be unwound by a cover.
  CHECK_FALSE(is_pinwheel(m, hexagon));
  CHECK(is_virtual_pinwheel(m, hexagon) == Tristate::No);
  CHECK(find_pinwheels(m).empty());
  CHECK(find_virtual_pinwheels(m).empty());
  for (int a = 0; a < 3; ++a) CHECK(is_trivial_arc(m, a));
  CHECK_FALSE(prop_otcases_check(m).overtwisted);
  check_polygon_invariants(m, ps);
}

TEST_CASE("left rotation of arcs across a strip") {
  Map m = fixture_left_of_pair();
  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 3);
  CHECK(count_k(ps, 1) == 2);
  CHECK(count_k(ps, 2) == 1);

  CHECK(is_left_of(m, 0, 1));
  CHECK_FALSE(is_left_of(m, 1, 0));
  CHECK(is_trivial_arc(m, 0));
  CHECK_FALSE(is_trivial_arc(m, 1));
  auto pws = find_pinwheels(m);
  REQUIRE(pws.size() == 1);
  CHECK(pws[0].k == 1);
  REQUIRE(pws[0].sides.size() == 2);
  CHECK(pws[0].sides[1].arc == 1);

  CHECK(thrown_kind([&] { is_left_of(m, 0, 5); }) == ErrorKind::ArcNotPresent);
  CHECK(thrown_kind([&] { is_left_of(m, 1, 1); }) == ErrorKind::ArcNotPresent);
  CHECK(thrown_kind([&] { is_trivial_arc(m, 3); }) == ErrorKind::ArcNotPresent);
  check_polygon_invariants(m, ps);
}

TEST_CASE("arc across three components bounds nothing") {
  Map m = fan_disk();
  CHECK(all_polygons(m).empty());
  CHECK_FALSE(is_trivial_arc(m, 0));
}

TEST_CASE("enumeration bound is strict") {
  Map m = fixture_pw(3);
  CHECK(thrown_kind([&] { enumerate_polygons(m, 1); }) ==
        ErrorKind::BoundExceeded);
  // The bound equal to the largest polygon is enough.
  CHECK(enumerate_polygons(m, m.n_real_faces).size() == 4);
}

TEST_CASE("foreign polygons are rejected") {
  Map m = fixture_pw(3);
  auto ps = all_polygons(m);
  const Polygon& hexagon = only_with_k(ps, 3);

  Polygon wrong_cells = hexagon;
  wrong_cells.cells.push_back(99);
  CHECK(thrown_kind([&] { is_pinwheel(m, wrong_cells); }) ==
        ErrorKind::NotAPolygonOfThisConfiguration);

  Polygon shuffled = hexagon;
  std::rotate(shuffled.sides.begin(), shuffled.sides.begin() + 2,
              shuffled.sides.end());
  CHECK(thrown_kind([&] { is_virtual_pinwheel(m, shuffled); }) ==
        ErrorKind::NotAPolygonOfThisConfiguration);

  // A polygon of one configuration is foreign to another.
  Map other = fixture_f1();
  CHECK(thrown_kind([&] { is_pinwheel(other, hexagon); }) ==
        ErrorKind::NotAPolygonOfThisConfiguration);
}

TEST_CASE("annulus with a core-wrapping return: virtual pinwheel") {
  Map m = fixture_vp_annulus();
  validate_structure(m);
  validate_giroux(m);
  Classification c = classify_surface(m);
  CHECK(c.genus == 0);
  CHECK(c.boundary_components == 2);
  CHECK(c.euler_characteristic == 0);
  CHECK(m.n_cells == 5);
  CHECK(m.n_regions == 3);
  CHECK(m.two_colorable);
  REQUIRE(m.arcs.size() == 1);
  CHECK(m.arcs[0].p1 == 4);
  CHECK(m.arcs[0].p2 == 2);
  CHECK(m.arcs[0].p3 == 3);

  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 1);
  const Polygon& lens = ps[0];
  CHECK(lens.k == 1);
  CHECK(lens.faces.size() == 1);
  // The far crossing lies on the lens boundary, so it is not a pinwheel;
  // but the return loop wraps the core, which a double cover unwinds.
  CHECK_FALSE(is_pinwheel(m, lens));
  CHECK_FALSE(is_anti_pinwheel(m, lens));
  CHECK(is_virtual_pinwheel(m, lens) == Tristate::Yes);
  CHECK(find_pinwheels(m).empty());
  auto vps = find_virtual_pinwheels(m);
  REQUIRE(vps.size() == 1);
  CHECK(vps[0] == lens);

  // The returning side comes back along the region that touches the other
  // boundary circle; that region is not a polygon, which certifies an
  // overtwisted disk after the attachment.
  OvertwistedCheck oc = prop_otcases_check(m);
  CHECK(oc.overtwisted);
  REQUIRE(oc.witness.has_value());
  CHECK(*oc.witness == lens);
  check_polygon_invariants(m, ps);
}

TEST_CASE("torus with two essential curves and no arcs") {
  Map m = fixture_torus_two_curves();
  validate_structure(m);
  validate_giroux(m);
  Classification c = classify_surface(m);
  CHECK(c.genus == 1);
  CHECK(c.boundary_components == 0);
  CHECK(m.n_regions == 2);
  CHECK(m.two_colorable);
  CHECK(all_polygons(m).empty());
  CHECK_FALSE(prop_otcases_check(m).overtwisted);
}

TEST_CASE("torus pinwheel/mirror pairs: inconclusive return") {
  Map m = fixture_torus_anti_pair();
  validate_structure(m);
  validate_giroux(m);
  Classification c = classify_surface(m);
  CHECK(c.genus == 1);
  CHECK(c.boundary_components == 0);
  CHECK(m.n_cells == 4);
  CHECK(m.n_regions == 2);
  CHECK(m.two_colorable);
  REQUIRE(m.arcs.size() == 2);
  CHECK(m.arcs[0].p1 == 0);
  CHECK(m.arcs[0].p2 == 3);
  CHECK(m.arcs[0].p3 == 1);
  CHECK(m.arcs[1].p1 == 5);
  CHECK(m.arcs[1].p2 == 2);
  CHECK(m.arcs[1].p3 == 4);

  Homology h(m);
  CHECK_FALSE(h.is_null_homologous({0, 2, 4}));   // along one curve
  CHECK_FALSE(h.is_null_homologous({12, 14, 1}));  // across both bands
  for (int f = 0; f < m.n_faces; ++f) {
    CHECK(h.is_null_homologous(m.face_darts[f]));
  }

  auto ps = all_polygons(m);
  REQUIRE(ps.size() == 4);
  for (const Polygon& p : ps) {
    CHECK(p.k == 2);
    CHECK(p.faces.size() == 1);
  }

  // Both bands split into one polygon of each orientation pattern.
  int n_anti = 0, n_virtual = 0;
  for (const Polygon& p : ps) {
    bool anti = is_anti_pinwheel(m, p);
    Tristate v = is_virtual_pinwheel(m, p);
    CHECK_FALSE(is_pinwheel(m, p));
    if (anti) {
      ++n_anti;
      CHECK(v == Tristate::No);
    } else {
      CHECK(v == Tristate::Yes);
      ++n_virtual;
    }
  }
  CHECK(n_anti == 2);
  CHECK(n_virtual == 2);
  CHECK(find_pinwheels(m).empty());
  CHECK(find_virtual_pinwheels(m).size() == 2);

  // Every returning side comes back along a mirror-oriented polygon whose
  // dividing sides all lie on the virtual pinwheel's own boundary, so the
  // criterion certifies nothing.
  OvertwistedCheck oc = prop_otcases_check(m);
  CHECK_FALSE(oc.overtwisted);
  CHECK_FALSE(oc.witness.has_value());

  CHECK_FALSE(is_trivial_arc(m, 0));
  CHECK_FALSE(is_trivial_arc(m, 1));
  CHECK_FALSE(is_left_of(m, 0, 1));
  CHECK_FALSE(is_left_of(m, 1, 0));
  check_polygon_invariants(m, ps);
}
