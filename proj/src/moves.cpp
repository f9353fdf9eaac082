#include "pinwheels/moves.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pinwheels/errors.hpp"
#include "pinwheels/schema.hpp"

namespace pinwheels {

namespace {

// ---------------------------------------------------------------------------
// Neighborhood extraction
// ---------------------------------------------------------------------------

AttachmentNeighborhood neighborhood_of(const Map& m, const ArcEmbedding& arc) {
  // The four path darts that touch the three crossing points:
  //   a: leaves p1 (start of segment 0)
  //   b: leaves p2 (start of segment 1)
  //   c: arrives-reversed at p2 (opposite of segment 0's last dart)
  //   d: arrives-reversed at p3 (opposite of segment 1's last dart)
  Dart a = arc.darts.front();
  Dart b = arc.darts[static_cast<std::size_t>(arc.seg1_len)];
  Dart c = m.opposite(arc.darts[static_cast<std::size_t>(arc.seg1_len) - 1]);
  Dart d = m.opposite(arc.darts.back());

  AttachmentNeighborhood nb;
  nb.l1 = m.sigma[a];
  nb.r1 = m.sigma_inv[a];
  nb.l2 = m.sigma[b];
  nb.r2 = m.sigma[c];
  nb.l3 = m.sigma_inv[d];
  nb.r3 = m.sigma[d];

  auto dividing = [&](Dart x) {
    return x != kNoDart && m.einfo(x).label == EdgeLabel::Dividing;
  };
  for (Dart x : {nb.l1, nb.r1, nb.l2, nb.r2, nb.l3, nb.r3}) {
    if (!dividing(x))
      fail(ErrorKind::NeighborhoodObstructed,
           "attachment arc endpoint is not flanked by dividing-curve strands");
  }
  // Pin the exact local pictures: degree 3 at the endpoints (arc between the
  // two strand ends), degree 4 alternating at the middle crossing.
  if (m.sigma[nb.l1] != nb.r1 || m.sigma[nb.r1] != a)
    fail(ErrorKind::NeighborhoodObstructed, "unexpected extra edges at the arc start");
  if (m.sigma[nb.l2] != c || m.sigma[nb.r2] != b)
    fail(ErrorKind::NeighborhoodObstructed, "unexpected extra edges at the arc midpoint");
  if (m.sigma[nb.r3] != nb.l3 || m.sigma[nb.l3] != d)
    fail(ErrorKind::NeighborhoodObstructed, "unexpected extra edges at the arc end");
  return nb;
}

// ---------------------------------------------------------------------------
// Skeleton threading
// ---------------------------------------------------------------------------

// An interior vertex of the attachment arc, where it crosses a dividing curve
// that continues as two transverse skeleton half-edges.
struct Crossing {
  int vertex = -1;
  Dart left = kNoDart;   // skeleton dart extending left of the arc's direction
  Dart right = kNoDart;  // skeleton dart extending right
};

std::vector<Crossing> segment_crossings(const Map& m, const std::vector<Dart>& seg) {
  std::vector<Crossing> out;
  for (std::size_t i = 1; i < seg.size(); ++i) {
    Dart fwd = seg[i];
    Dart bwd = m.opposite(seg[i - 1]);
    Crossing cr;
    cr.vertex = m.vertex_of[fwd];
    cr.left = m.sigma[fwd];
    cr.right = m.sigma_inv[fwd];
    bool plain = m.einfo(cr.left).label == EdgeLabel::Skeleton &&
                 m.einfo(cr.right).label == EdgeLabel::Skeleton &&
                 m.sigma[cr.left] == bwd && m.sigma[bwd] == cr.right;
    if (!plain)
      fail(ErrorKind::NeighborhoodObstructed,
           "attachment arc does not cross a plain transverse edge");
    out.push_back(cr);
  }
  return out;
}

// Result of subdividing the half-edge that `away` points along, seen from the
// vertex `away` originates at (the "crossing" end of that half-edge).
struct Threaded {
  int vertex = -1;              // the new midpoint vertex
  Dart toward_crossing = kNoDart;  // dart at the midpoint, back toward the crossing
  Dart toward_far = kNoDart;       // dart at the midpoint, on toward the far end
  Dart new_away = kNoDart;         // dart now playing `away`'s role at the crossing
  Dart moved = kNoDart;            // pre-existing dart whose origin relocated...
  Dart moved_replacement = kNoDart;  // ...and the dart that took over at the far end
};

Threaded thread_half(Map& m, Dart away) {
  SubdivideResult r = subdivide_edge(m, away >> 1);
  Threaded t;
  t.vertex = r.new_vertex;
  Dart mid_new = 2 * r.edge_second;  // dart at the midpoint along the far piece
  if ((away & 1) == 0) {
    // `away` keeps its origin; its opposite relocated from the far end.
    t.toward_crossing = m.opposite(away);
    t.toward_far = mid_new;
    t.new_away = away;
    t.moved = m.opposite(away);
    t.moved_replacement = mid_new ^ 1;
  } else {
    // `away` itself relocated to the midpoint; the crossing got a fresh dart.
    t.toward_crossing = mid_new;
    t.toward_far = away;
    t.new_away = mid_new ^ 1;
  }
  m = std::move(r.map);
  return t;
}

// A point along a new dividing strand: either a threaded midpoint or a
// crossing of a scaffolding edge.  `left`/`right` are the transverse darts
// relative to the strand's direction of travel.
struct Station {
  int vertex = -1;
  Dart left = kNoDart;
  Dart right = kNoDart;
};

Station station_from(const Threaded& t, bool away_extends_left) {
  Station s;
  s.vertex = t.vertex;
  if (away_extends_left) {
    s.left = t.toward_far;
    s.right = t.toward_crossing;
  } else {
    s.left = t.toward_crossing;
    s.right = t.toward_far;
  }
  return s;
}

int count_dividing_feet(const Map& m) {
  std::vector<unsigned char> has_b(static_cast<std::size_t>(m.n_vertices()), 0);
  std::vector<unsigned char> has_d(static_cast<std::size_t>(m.n_vertices()), 0);
  for (Dart d = 0; d < 2 * m.n_edges(); ++d) {
    EdgeLabel l = m.einfo(d).label;
    if (l == EdgeLabel::Boundary) has_b[static_cast<std::size_t>(m.vertex_of[d])] = 1;
    if (l == EdgeLabel::Dividing) has_d[static_cast<std::size_t>(m.vertex_of[d])] = 1;
  }
  int n = 0;
  for (int v = 0; v < m.n_vertices(); ++v)
    if (has_b[static_cast<std::size_t>(v)] && has_d[static_cast<std::size_t>(v)]) ++n;
  return n;
}

}  // namespace

AttachmentNeighborhood find_neighborhood(const Map& m, std::int32_t arc_id) {
  const ArcEmbedding* arc = m.find_arc(arc_id);
  if (!arc) fail(ErrorKind::ArcNotPresent, "no attachment arc with this id");
  return neighborhood_of(m, *arc);
}

Map attach_bypass_rotated(const Map& m0, std::int32_t arc_id, StrandRotation rot) {
  const ArcEmbedding* arc_ptr = m0.find_arc(arc_id);
  if (!arc_ptr) fail(ErrorKind::ArcNotPresent, "no attachment arc with this id");
  const ArcEmbedding arc = *arc_ptr;
  const AttachmentNeighborhood nb = neighborhood_of(m0, arc);
  const bool left_rot = rot == StrandRotation::RotateLeft;

  const auto old_classes = classify_components(m0);
  const int old_feet = count_dividing_feet(m0);
  const std::size_t old_arc_count = m0.arcs.size();

  Map m = m0;
  auto cross0 = segment_crossings(m, arc.segment(0));
  auto cross1 = segment_crossings(m, arc.segment(1));

  // --- phase 1: thread every crossed transverse half-edge -----------------
  // Each new strand runs parallel to one side of the consumed arc and crosses
  // the same transverse edges the arc crossed, on that side.  Subdividing one
  // half-edge can relocate a dart another pending record still points at; the
  // fixup below keeps every stored dart current.
  std::vector<Station> st_s1, st_s2, st_conn0, st_conn1;

  auto fixup = [&](const Threaded& t) {
    if (t.moved == kNoDart) return;
    auto patch = [&](Dart& x) {
      if (x == t.moved) x = t.moved_replacement;
    };
    for (auto* cv : {&cross0, &cross1})
      for (Crossing& cr : *cv) {
        patch(cr.left);
        patch(cr.right);
      }
    for (auto* sv : {&st_s1, &st_s2, &st_conn0, &st_conn1})
      for (Station& st : *sv) {
        patch(st.left);
        patch(st.right);
      }
  };

  Dart last_new_away = kNoDart;
  auto thread_station = [&](Dart away, bool away_extends_left) {
    Threaded t = thread_half(m, away);
    Station s = station_from(t, away_extends_left);
    fixup(t);  // patches stored records only; `s` joins a vector afterwards
    last_new_away = t.new_away;
    return s;
  };

  // Segment 0: the side strand takes one half, the connector the other.
  for (Crossing& cr : cross0) {
    if (left_rot) {
      st_s1.push_back(thread_station(cr.left, true));
      st_conn0.push_back(thread_station(cr.right, false));
    } else {
      st_s1.push_back(thread_station(cr.right, false));
      st_conn0.push_back(thread_station(cr.left, true));
    }
  }
  // Segment 1: both strands run on the same side; the side strand stays
  // outermost, the connector threads the inner piece next to the scaffolding.
  for (Crossing& cr : cross1) {
    Dart away = left_rot ? cr.right : cr.left;
    st_s2.push_back(thread_station(away, !left_rot));
    // The inner thread re-subdivides the piece between the arc and the outer
    // midpoint; the matching `away` dart was recorded by the outer thread.
    Dart inner_away = last_new_away;
    st_conn1.push_back(thread_station(inner_away, !left_rot));
  }

  // --- phase 2: the connector crosses the last scaffolding edge ------------
  // Switching sides happens just before the arc's far endpoint: the connector
  // cuts across the final piece of the consumed arc.
  // Seen from the connector's heading as it cuts across toward its final tip,
  // the scaffolding dart running back along the arc body is on its left for
  // the left rotation and on its right for the right rotation.
  Threaded wf = thread_half(m, m.opposite(arc.darts.back()));
  fixup(wf);
  Station wf_st = station_from(wf, left_rot);

  // --- phase 3: rebuild with tips, tethers and strands ---------------------
  auto rots = vertex_rotations(m);
  const int nv = m.n_vertices();
  const int P1p = nv, P1pp = nv + 1, P2p = nv + 2, P2pp = nv + 3;
  const int P3p = nv + 4, P3pp = nv + 5, WT = nv + 6;

  MapBuilder bld;
  for (int e = 0; e < m.n_edges(); ++e) {
    EdgeInfo info = m.edges[static_cast<std::size_t>(e)];
    if (info.label == EdgeLabel::Arc && info.arc == arc_id)
      info = EdgeInfo{EdgeLabel::Skeleton, -1, -1};
    bld.add_edge(info);
  }
  const EdgeInfo skel{EdgeLabel::Skeleton, -1, -1};
  const EdgeInfo divd{EdgeLabel::Dividing, -1, -1};

  // Tethers anchor each new tip vertex to the stub it split off from.  The
  // tether on the connector's near side at p2 is built in two pieces around
  // the crossing vertex WT.
  const int T1p = bld.add_edge(skel);   // p1  - p1'
  const int T1pp = bld.add_edge(skel);  // p1  - p1''
  int T2p_stub, T2p_tip, T2pp_stub, T2pp_tip;
  if (left_rot) {
    T2p_stub = T2p_tip = bld.add_edge(skel);  // p2 - p2'
    T2pp_stub = bld.add_edge(skel);           // p2 - WT
    T2pp_tip = bld.add_edge(skel);            // WT - p2''
  } else {
    T2p_stub = bld.add_edge(skel);            // p2 - WT
    T2p_tip = bld.add_edge(skel);             // WT - p2'
    T2pp_stub = T2pp_tip = bld.add_edge(skel);  // p2 - p2''
  }
  const int T3p = bld.add_edge(skel);   // p3  - p3'
  const int T3pp = bld.add_edge(skel);  // p3  - p3''

  Station wt_st;
  wt_st.vertex = WT;
  if (left_rot) {
    wt_st.left = 2 * T2pp_stub + 1;  // back toward the stub
    wt_st.right = 2 * T2pp_tip;      // on toward the tip
  } else {
    wt_st.left = 2 * T2p_tip;
    wt_st.right = 2 * T2p_stub + 1;
  }

  // Strand vertex paths, in travel order.
  std::vector<Station> conn_sts;
  conn_sts.reserve(st_conn0.size() + 1 + st_conn1.size() + 1);
  conn_sts.insert(conn_sts.end(), st_conn0.begin(), st_conn0.end());
  conn_sts.push_back(wt_st);
  conn_sts.insert(conn_sts.end(), st_conn1.begin(), st_conn1.end());
  conn_sts.push_back(wf_st);

  struct StrandPlan {
    int start, end;
    const std::vector<Station>* sts;
    std::vector<int> eids;
  };
  StrandPlan s1{left_rot ? P1p : P1pp, left_rot ? P2p : P2pp, &st_s1, {}};
  StrandPlan s2{left_rot ? P2pp : P2p, left_rot ? P3pp : P3p, &st_s2, {}};
  StrandPlan conn{left_rot ? P1pp : P1p, left_rot ? P3p : P3pp, &conn_sts, {}};
  for (StrandPlan* sp : {&s1, &s2, &conn}) {
    std::size_t pieces = sp->sts->size() + 1;
    for (std::size_t i = 0; i < pieces; ++i) sp->eids.push_back(bld.add_edge(divd));
  }

  // Rotations at threaded midpoints and scaffolding crossings: counterclockwise
  // [forward, left-of-travel, backward, right-of-travel].
  rots.resize(static_cast<std::size_t>(nv) + 7);
  for (const StrandPlan* sp : {&s1, &s2, &conn}) {
    const auto& sts = *sp->sts;
    for (std::size_t j = 0; j < sts.size(); ++j) {
      Dart bwd = 2 * sp->eids[j] + 1;
      Dart fwd = 2 * sp->eids[j + 1];
      rots[static_cast<std::size_t>(sts[j].vertex)] = {fwd, sts[j].left, bwd, sts[j].right};
    }
  }

  auto first_dart = [](const StrandPlan& sp) { return Dart(2 * sp.eids.front()); };
  auto last_dart = [](const StrandPlan& sp) { return Dart(2 * sp.eids.back() + 1); };

  // Tip-vertex rotations.  Each tip carries: its inherited dividing strand
  // end, its tether, and one new strand end, in the counterclockwise order
  // forced by the side it split toward.
  const Dart t1p = 2 * T1p + 1, t1pp = 2 * T1pp + 1;
  const Dart t2p = 2 * T2p_tip + 1, t2pp = 2 * T2pp_tip + 1;
  const Dart t3p = 2 * T3p + 1, t3pp = 2 * T3pp + 1;
  if (left_rot) {
    rots[static_cast<std::size_t>(P1p)] = {first_dart(s1), nb.l1, t1p};
    rots[static_cast<std::size_t>(P2p)] = {nb.l2, last_dart(s1), t2p};
    rots[static_cast<std::size_t>(P2pp)] = {first_dart(s2), t2pp, nb.r2};
    rots[static_cast<std::size_t>(P3pp)] = {t3pp, last_dart(s2), nb.r3};
    rots[static_cast<std::size_t>(P1pp)] = {first_dart(conn), t1pp, nb.r1};
    rots[static_cast<std::size_t>(P3p)] = {nb.l3, last_dart(conn), t3p};
  } else {
    rots[static_cast<std::size_t>(P1pp)] = {first_dart(s1), t1pp, nb.r1};
    rots[static_cast<std::size_t>(P2pp)] = {t2pp, last_dart(s1), nb.r2};
    rots[static_cast<std::size_t>(P2p)] = {first_dart(s2), nb.l2, t2p};
    rots[static_cast<std::size_t>(P3p)] = {nb.l3, last_dart(s2), t3p};
    rots[static_cast<std::size_t>(P1p)] = {first_dart(conn), nb.l1, t1p};
    rots[static_cast<std::size_t>(P3pp)] = {t3pp, last_dart(conn), nb.r3};
  }

  // Stubs keep their scaffolding darts; their dividing darts are replaced by
  // the tether ends, in place, preserving the cyclic order.
  auto restub = [&](int v, Dart old_dart, int tether_edge) {
    auto& r = rots[static_cast<std::size_t>(v)];
    std::replace(r.begin(), r.end(), old_dart, Dart(2 * tether_edge));
  };
  restub(arc.p1, nb.l1, T1p);
  restub(arc.p1, nb.r1, T1pp);
  restub(arc.p2, nb.l2, T2p_stub);
  restub(arc.p2, nb.r2, T2pp_stub);
  restub(arc.p3, nb.l3, T3p);
  restub(arc.p3, nb.r3, T3pp);

  for (std::size_t v = 0; v < rots.size(); ++v) {
    bld.add_vertex();
    bld.set_rotation(static_cast<int>(v), rots[v]);
  }
  for (Dart d = 0; d < 2 * m.n_edges(); ++d)
    if (m.hole_left[static_cast<std::size_t>(d)]) bld.set_hole_left(d);

  Map out = bld.build();

  // The move never changes the underlying surface, never detaches anything,
  // consumes exactly the requested arc, and keeps every dividing-set foot on
  // the boundary.
  require(out.find_arc(arc_id) == nullptr, "attachment must consume the arc");
  require(out.arcs.size() + 1 == old_arc_count, "attachment must only consume its own arc");
  require(classify_components(out) == old_classes, "attachment must not change the surface");
  require(count_dividing_feet(out) == old_feet, "attachment must preserve boundary feet");
  validate_structure(out);
  return out;
}

Map attach_bypass(const Map& m, std::int32_t arc_id) {
  return attach_bypass_rotated(m, arc_id, kDefaultRotation);
}

Map attach_subset(const Map& m, std::vector<std::int32_t> arc_ids) {
  std::sort(arc_ids.begin(), arc_ids.end());
  if (std::adjacent_find(arc_ids.begin(), arc_ids.end()) != arc_ids.end())
    fail(ErrorKind::ArcNotPresent, "duplicate arc id in attachment subset");
  Map cur = m;
  for (std::int32_t id : arc_ids) cur = attach_bypass(cur, id);
  return cur;
}

}  // namespace pinwheels
