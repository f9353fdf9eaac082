#include "pinwheels/disk_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "pinwheels/schema.hpp"

namespace pinwheels {

namespace {

struct ChordLayout {
  int lo = 0, hi = 0;               // 1-based boundary points, lo < hi
  std::vector<int> mark_indices;    // sorted user indices
  std::vector<int> mark_vertex;     // vertex id per mark (sorted order)
  std::vector<int> edge_ids;        // subdivided edges, lo side first
};

// Position of vertex v in the face walk of face f (faces of a disk cut
// along chords are simple).
int face_position(const Map& m, int f, int v) {
  const auto& walk = m.face_darts[f];
  int pos = -1;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (m.vertex_of[walk[i]] == v) {
      require(pos == -1, "vertex repeats along a face walk");
      pos = static_cast<int>(i);
    }
  }
  require(pos != -1, "vertex missing from face walk");
  return pos;
}

bool cyclic_interleaved(int a, int b, int c, int d, int len) {
  auto shift = [&](int x) { return (x - a + len) % len; };
  int bb = shift(b), cc = shift(c), dd = shift(d);
  bool c_in = 0 < cc && cc < bb;
  bool d_in = 0 < dd && dd < bb;
  return c_in != d_in;
}

}  // namespace

Map build_disk(const DiskSpec& spec) {
  int n = spec.chords;
  if (n < 1) fail(ErrorKind::InvalidDividingSet, "a disk configuration needs at least one chord");
  if (static_cast<int>(spec.matching.size()) != n)
    fail(ErrorKind::InvalidDividingSet, "matching must list exactly one pair per chord");
  std::vector<ChordLayout> chords(n);
  {
    std::vector<int> used(2 * n + 1, 0);
    for (int c = 0; c < n; ++c) {
      auto [a, b] = spec.matching[c];
      if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
        fail(ErrorKind::InvalidDividingSet,
             "chord " + std::to_string(c) + " must join two distinct points in 1..2n");
      used[a]++;
      used[b]++;
      chords[c].lo = std::min(a, b);
      chords[c].hi = std::max(a, b);
    }
    for (int p = 1; p <= 2 * n; ++p)
      if (used[p] != 1)
        fail(ErrorKind::InvalidDividingSet,
             "boundary point " + std::to_string(p) + " must belong to exactly one chord");
  }
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      auto& u = chords[c1];
      auto& v = chords[c2];
      bool v_lo_in = u.lo < v.lo && v.lo < u.hi;
      bool v_hi_in = u.lo < v.hi && v.hi < u.hi;
      if (v_lo_in != v_hi_in)
        fail(ErrorKind::CrossingChords, "chords " + std::to_string(c1) + " and " +
                                            std::to_string(c2) + " cross");
    }

  // Collect marks.
  struct MarkRef {
    int arc_pos;   // index into spec.arcs
    int point;     // 0..2 within the arc
  };
  std::map<std::pair<int, int>, MarkRef> mark_owner;  // (chord, index) -> owner
  {
    std::set<int> arc_ids;
    for (size_t ai = 0; ai < spec.arcs.size(); ++ai) {
      const DiskArcSpec& a = spec.arcs[ai];
      if (a.id < 0 || !arc_ids.insert(a.id).second)
        fail(ErrorKind::InvalidComplex,
             "arc ids must be distinct and nonnegative (arc " + std::to_string(a.id) + ")");
      if (a.marks.size() != 3)
        fail(ErrorKind::ArcCrossingCountNotThree,
             "arc " + std::to_string(a.id) + " lists " + std::to_string(a.marks.size()) +
                 " crossings; an attachment arc meets the dividing set in exactly three points");
      if (a.first_segment_side != 'L' && a.first_segment_side != 'R')
        fail(ErrorKind::InvalidComplex, "arc " + std::to_string(a.id) +
                                            ": first_segment_side must be 'L' or 'R'");
      for (int k = 0; k < 3; ++k) {
        const auto& mk = a.marks[k];
        if (mk.chord < 0 || mk.chord >= n)
          fail(ErrorKind::InvalidComplex,
               "arc " + std::to_string(a.id) + " references unknown chord " +
                   std::to_string(mk.chord));
        if (!mark_owner.emplace(std::make_pair(mk.chord, mk.index),
                                MarkRef{static_cast<int>(ai), k})
                 .second)
          fail(ErrorKind::ArcsNotDisjoint,
               "two arc crossing points coincide on chord " + std::to_string(mk.chord) +
                   " at index " + std::to_string(mk.index));
        chords[mk.chord].mark_indices.push_back(mk.index);
      }
    }
  }

  // Allocate vertices and edges.
  int next_vertex = 2 * n;
  int next_edge = 2 * n;
  for (auto& ch : chords) {
    std::sort(ch.mark_indices.begin(), ch.mark_indices.end());
    for (size_t i = 0; i < ch.mark_indices.size(); ++i) ch.mark_vertex.push_back(next_vertex++);
    for (size_t i = 0; i <= ch.mark_indices.size(); ++i) ch.edge_ids.push_back(next_edge++);
  }
  auto mark_vertex_of = [&](int chord, int index) {
    const auto& ch = chords[chord];
    auto it = std::lower_bound(ch.mark_indices.begin(), ch.mark_indices.end(), index);
    require(it != ch.mark_indices.end() && *it == index, "mark lookup failed");
    return ch.mark_vertex[it - ch.mark_indices.begin()];
  };
  // Chord-direction darts at a mark vertex: u points back toward lo, w toward hi.
  auto chord_darts_at = [&](int chord, int index) {
    const auto& ch = chords[chord];
    auto it = std::lower_bound(ch.mark_indices.begin(), ch.mark_indices.end(), index);
    size_t k = it - ch.mark_indices.begin();
    Dart u = 2 * ch.edge_ids[k] + 1;
    Dart w = 2 * ch.edge_ids[k + 1];
    return std::make_pair(w, u);
  };

  // Scaffold rotations (no arcs yet).
  auto scaffold_rotations = [&](MapBuilder& b) {
    for (int i = 0; i < 2 * n; ++i) {
      int point = i + 1;
      Dart chord_end = kNoDart;
      for (int c = 0; c < n; ++c) {
        if (chords[c].lo == point) chord_end = 2 * chords[c].edge_ids.front();
        if (chords[c].hi == point) chord_end = 2 * chords[c].edge_ids.back() + 1;
      }
      require(chord_end != kNoDart, "boundary point without chord end");
      b.set_rotation(i, {2 * i, chord_end, 2 * ((i - 1 + 2 * n) % (2 * n)) + 1});
    }
  };
  auto add_scaffold_edges = [&](MapBuilder& b) {
    for (int i = 0; i < 2 * n; ++i) {
      b.add_edge(EdgeInfo{EdgeLabel::Boundary, -1, -1});
      b.set_hole_left(2 * i + 1, true);
    }
    for (auto& ch : chords)
      for (size_t i = 0; i < ch.edge_ids.size(); ++i) b.add_edge(EdgeInfo{EdgeLabel::Dividing, -1, -1});
  };

  Map scaffold;
  {
    MapBuilder b;
    add_scaffold_edges(b);
    scaffold_rotations(b);
    for (auto& ch : chords) {
      for (size_t k = 0; k < ch.mark_vertex.size(); ++k) {
        Dart u = 2 * ch.edge_ids[k] + 1;
        Dart w = 2 * ch.edge_ids[k + 1];
        b.set_rotation(ch.mark_vertex[k], {w, u});
      }
    }
    scaffold = b.build();
  }
  require(classify_surface(scaffold).euler_characteristic == 1, "scaffold is not a disk");

  // Route the arc segments through scaffold faces.
  struct Seg {
    int face;                 // scaffold face the segment crosses
    int from_v, to_v;         // mark vertices
    char from_side, to_side;  // side of the respective chord ('L' or 'R')
    int arc_id, seg_index;
  };
  std::vector<Seg> segs;
  for (const DiskArcSpec& a : spec.arcs) {
    auto face_on = [&](int point, char side) {
      auto [w, u] = chord_darts_at(a.marks[point].chord, a.marks[point].index);
      return scaffold.face_of[side == 'L' ? w : u];
    };
    std::string tag = "arc " + std::to_string(a.id);
    char side1 = a.first_segment_side;
    int f1 = face_on(0, side1);
    // Which side of p2's chord borders f1?
    auto [w2, u2] = chord_darts_at(a.marks[1].chord, a.marks[1].index);
    char p2_enter;
    if (scaffold.face_of[w2] == f1)
      p2_enter = 'L';
    else if (scaffold.face_of[u2] == f1)
      p2_enter = 'R';
    else
      fail(ErrorKind::ArcsNotDisjoint,
           tag + ": first segment cannot reach its crossing point within one face");
    char p2_exit = p2_enter == 'L' ? 'R' : 'L';
    int f2 = face_on(1, p2_exit);
    auto [w3, u3] = chord_darts_at(a.marks[2].chord, a.marks[2].index);
    char p3_side;
    if (scaffold.face_of[w3] == f2)
      p3_side = 'L';
    else if (scaffold.face_of[u3] == f2)
      p3_side = 'R';
    else
      fail(ErrorKind::ArcsNotDisjoint,
           tag + ": second segment cannot reach its endpoint within one face");
    int v1 = mark_vertex_of(a.marks[0].chord, a.marks[0].index);
    int v2 = mark_vertex_of(a.marks[1].chord, a.marks[1].index);
    int v3 = mark_vertex_of(a.marks[2].chord, a.marks[2].index);
    segs.push_back(Seg{f1, v1, v2, side1, p2_enter, a.id, 0});
    segs.push_back(Seg{f2, v2, v3, p2_exit, p3_side, a.id, 1});
  }

  // Embedded disjointness: endpoint pairs of segments sharing a face must
  // not interleave in the face's cyclic boundary order.
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].face != segs[j].face) continue;
      int len = static_cast<int>(scaffold.face_darts[segs[i].face].size());
      int a = face_position(scaffold, segs[i].face, segs[i].from_v);
      int b = face_position(scaffold, segs[i].face, segs[i].to_v);
      int c = face_position(scaffold, segs[j].face, segs[j].from_v);
      int d = face_position(scaffold, segs[j].face, segs[j].to_v);
      if (cyclic_interleaved(a, b, c, d, len))
        fail(ErrorKind::ArcsNotDisjoint,
             "arcs " + std::to_string(segs[i].arc_id) + " and " + std::to_string(segs[j].arc_id) +
                 " cross inside a face");
    }

  // Full build: scaffold plus one arc edge per segment.
  MapBuilder b;
  add_scaffold_edges(b);
  std::map<std::pair<int, char>, Dart> arc_dart_at;  // (mark vertex, side) -> dart
  for (const Seg& s : segs) {
    int e = b.add_edge(EdgeInfo{EdgeLabel::Arc, s.arc_id, s.seg_index});
    require(arc_dart_at.emplace(std::make_pair(s.from_v, s.from_side), Dart(2 * e)).second,
            "two segments on one side of a mark");
    require(arc_dart_at.emplace(std::make_pair(s.to_v, s.to_side), Dart(2 * e + 1)).second,
            "two segments on one side of a mark");
  }
  scaffold_rotations(b);
  for (auto& ch : chords) {
    for (size_t k = 0; k < ch.mark_vertex.size(); ++k) {
      int x = ch.mark_vertex[k];
      Dart u = 2 * ch.edge_ids[k] + 1;
      Dart w = 2 * ch.edge_ids[k + 1];
      std::vector<Dart> rot{w};
      if (auto it = arc_dart_at.find({x, 'L'}); it != arc_dart_at.end()) rot.push_back(it->second);
      rot.push_back(u);
      if (auto it = arc_dart_at.find({x, 'R'}); it != arc_dart_at.end()) rot.push_back(it->second);
      b.set_rotation(x, rot);
    }
  }
  Map m = b.build();

  Classification cl = classify_surface(m);
  require(cl.genus == 0 && cl.boundary_components == 1, "disk build left the plane");
  require(static_cast<int>(m.arcs.size()) == static_cast<int>(spec.arcs.size()),
          "arc reconstruction lost arcs");
  for (const DiskArcSpec& a : spec.arcs) {
    const ArcEmbedding* emb = m.find_arc(a.id);
    require(emb != nullptr, "arc reconstruction lost an arc id");
    require(emb->p1 == mark_vertex_of(a.marks[0].chord, a.marks[0].index) &&
                emb->p2 == mark_vertex_of(a.marks[1].chord, a.marks[1].index) &&
                emb->p3 == mark_vertex_of(a.marks[2].chord, a.marks[2].index),
            "arc reconstruction scrambled crossing points");
  }
  validate_structure(m);
  validate_giroux(m);
  require(tb(m) == -n, "tb mismatch");
  return m;
}

DiskMatching boundary_matching(const Map& m) {
  Classification cl = classify_surface(m);
  if (cl.genus != 0 || cl.boundary_components != 1)
    fail(ErrorKind::NotADisk, "boundary matching is defined for disks");
  auto circles = boundary_circles(m);
  require(circles.size() == 1, "disk with multiple boundary circles");

  std::vector<std::uint8_t> has_div(m.n_vertices(), 0);
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (m.einfo(d).label == EdgeLabel::Dividing) has_div[m.vertex_of[d]] = 1;

  std::map<int, int> foot_pos;  // vertex -> 1-based walk position
  for (Dart d : circles[0]) {
    int v = m.vertex_of[d];
    if (has_div[v]) {
      int pos = static_cast<int>(foot_pos.size()) + 1;
      require(foot_pos.emplace(v, pos).second, "boundary walk revisits a foot");
    }
  }

  DiskMatching out;
  for (const DividingComponent& c : m.dividing_components) {
    if (c.closed) {
      out.closed_components++;
      continue;
    }
    int va = m.vertex_of[c.darts.front()];
    int vb = m.head(c.darts.back());
    auto ia = foot_pos.find(va), ib = foot_pos.find(vb);
    require(ia != foot_pos.end() && ib != foot_pos.end(), "component foot off the boundary");
    out.pairs.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

bool isotopy_equal(const Map& a, const Map& b) {
  DiskMatching ma = boundary_matching(a), mb = boundary_matching(b);
  if (2 * ma.pairs.size() != 2 * mb.pairs.size())
    fail(ErrorKind::MismatchedBoundaryData,
         "configurations have different numbers of dividing endpoints");
  return ma == mb;
}

bool is_boundary_parallel(const Map& m, int component) {
  if (component < 0 || component >= m.n_dividing_components)
    fail(ErrorKind::NotAnArc, "no dividing component " + std::to_string(component));
  const DividingComponent& c = m.dividing_components[component];
  if (c.closed)
    fail(ErrorKind::NotAnArc,
         "dividing component " + std::to_string(component) + " is closed, not an arc");
  DiskMatching dm = boundary_matching(m);
  int feet = 2 * static_cast<int>(dm.pairs.size());
  // Recover this component's feet positions the same way boundary_matching does.
  auto circles = boundary_circles(m);
  std::vector<std::uint8_t> has_div(m.n_vertices(), 0);
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (m.einfo(d).label == EdgeLabel::Dividing) has_div[m.vertex_of[d]] = 1;
  std::map<int, int> foot_pos;
  for (Dart d : circles[0]) {
    int v = m.vertex_of[d];
    if (has_div[v]) foot_pos.emplace(v, static_cast<int>(foot_pos.size()) + 1);
  }
  int pa = foot_pos.at(m.vertex_of[c.darts.front()]);
  int pb = foot_pos.at(m.head(c.darts.back()));
  int gap = std::abs(pa - pb);
  return gap == 1 || gap == feet - 1;
}

}  // namespace pinwheels
