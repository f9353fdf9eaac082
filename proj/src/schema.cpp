#include "pinwheels/schema.hpp"

#include <algorithm>

namespace pinwheels {

SchemaResult build_schema(const SurfaceSchema& s) {
  if (s.faces.empty()) fail(ErrorKind::InvalidComplex, "no faces given");
  SchemaResult res;
  auto edge_id = [&](const std::string& name) {
    if (name.empty()) fail(ErrorKind::InvalidComplex, "empty edge name");
    auto it = res.edge_ids.find(name);
    if (it != res.edge_ids.end()) return it->second;
    int id = static_cast<int>(res.edge_names.size());
    res.edge_ids.emplace(name, id);
    res.edge_names.push_back(name);
    return id;
  };

  // First pass: assign ids, count references.
  std::vector<int> fwd_refs, bwd_refs;
  for (const auto& face : s.faces) {
    if (face.empty()) fail(ErrorKind::InvalidComplex, "empty face walk");
    for (const auto& ref : face) {
      int e = edge_id(ref.name);
      fwd_refs.resize(res.edge_names.size(), 0);
      bwd_refs.resize(res.edge_names.size(), 0);
      (ref.reversed ? bwd_refs : fwd_refs)[e] += 1;
    }
  }
  int ne = static_cast<int>(res.edge_names.size());
  for (int e = 0; e < ne; ++e) {
    int total = fwd_refs[e] + bwd_refs[e];
    if (total > 2)
      fail(ErrorKind::InvalidComplex, "edge '" + res.edge_names[e] + "' referenced " +
                                          std::to_string(total) + " times");
    if (fwd_refs[e] == 2 || bwd_refs[e] == 2)
      fail(ErrorKind::NonOrientable, "edge '" + res.edge_names[e] +
                                         "' glued twice with the same orientation; "
                                         "the gluing is not orientable");
  }

  // Resolve labels.
  std::vector<EdgeInfo> infos(ne);
  for (const auto& [name, info] : s.labels) {
    auto it = res.edge_ids.find(name);
    if (it == res.edge_ids.end())
      fail(ErrorKind::InvalidComplex, "label for unknown edge '" + name + "'");
    infos[it->second] = info;
  }
  for (int e = 0; e < ne; ++e) {
    bool interior = fwd_refs[e] + bwd_refs[e] == 2;
    if (interior && infos[e].label == EdgeLabel::Boundary)
      fail(ErrorKind::InvalidComplex,
           "edge '" + res.edge_names[e] + "' is labeled boundary but glued on both sides");
    if (!interior) {
      if (infos[e].label != EdgeLabel::Boundary && infos[e].label != EdgeLabel::Skeleton)
        fail(ErrorKind::InvalidComplex,
             "edge '" + res.edge_names[e] + "' is open on one side and must be boundary, not " +
                 edge_label_name(infos[e].label));
      infos[e] = EdgeInfo{EdgeLabel::Boundary, -1, -1};
    }
  }

  // Second pass: sigma from face walks (consecutive darts d -> d' give
  // sigma[d'] = opposite(d)); heads of walks must chain.
  int nd = 2 * ne;
  std::vector<Dart> sigma(nd, kNoDart), sigma_inv(nd, kNoDart);
  std::vector<std::uint8_t> covered(nd, 0);
  for (const auto& face : s.faces) {
    std::vector<Dart> walk;
    for (const auto& ref : face)
      walk.push_back(2 * res.edge_ids[ref.name] + (ref.reversed ? 1 : 0));
    for (size_t i = 0; i < walk.size(); ++i) {
      Dart d = walk[i], dn = walk[(i + 1) % walk.size()];
      if (covered[d]) fail(ErrorKind::InvalidComplex, "face walks reuse a directed edge");
      covered[d] = 1;
      require(sigma[dn] == kNoDart, "conflicting gluing");
      sigma[dn] = d ^ 1;
      sigma_inv[d ^ 1] = dn;
    }
  }
  // Close the rotation at boundary corners: darts never walked are the hole
  // sides; each ends a sigma-chain whose start it must point back to.
  std::vector<std::uint8_t> hole(nd, 0);
  for (Dart h = 0; h < nd; ++h) {
    if (covered[h]) continue;
    hole[h] = 1;
    if (sigma[h] != kNoDart) continue;  // already closed via another pass? impossible
    Dart s0 = h;
    int guard = 0;
    while (sigma_inv[s0] != kNoDart) {
      s0 = sigma_inv[s0];
      require(++guard <= nd, "rotation closure loop");
    }
    sigma[h] = s0;
    sigma_inv[s0] = h;
  }
  for (Dart d = 0; d < nd; ++d)
    require(sigma[d] != kNoDart, "gluing left an open corner");

  // Vertices: sigma orbits, numbered by smallest dart.
  std::vector<int> vertex_of(nd, -1);
  int nv = 0;
  for (Dart d = 0; d < nd; ++d) {
    if (vertex_of[d] != -1) continue;
    Dart e = d;
    do {
      vertex_of[e] = nv;
      e = sigma[e];
    } while (e != d);
    ++nv;
  }

  Map m;
  m.sigma = std::move(sigma);
  m.vertex_of = std::move(vertex_of);
  m.edges = std::move(infos);
  m.hole_left.assign(nd, 0);
  for (Dart d = 0; d < nd; ++d) m.hole_left[d] = hole[d];
  m.finalize();
  res.map = std::move(m);
  return res;
}

namespace {

struct VertexProfile {
  int boundary = 0, dividing = 0, skeleton = 0;
  std::vector<Dart> arc_darts;
};

std::vector<VertexProfile> profiles(const Map& m) {
  std::vector<VertexProfile> p(m.n_vertices());
  for (Dart d = 0; d < m.n_darts(); ++d) {
    VertexProfile& v = p[m.vertex_of[d]];
    switch (m.einfo(d).label) {
      case EdgeLabel::Boundary: v.boundary++; break;
      case EdgeLabel::Dividing: v.dividing++; break;
      case EdgeLabel::Skeleton: v.skeleton++; break;
      case EdgeLabel::Arc: v.arc_darts.push_back(d); break;
    }
  }
  return p;
}

}  // namespace

void validate_structure(const Map& m, bool allow_disconnected) {
  if (!allow_disconnected) classify_surface(m);  // throws Disconnected
  if (!m.two_colorable)
    fail(ErrorKind::InvalidDividingSet,
         "the complement of the dividing set is not two-colorable");

  auto prof = profiles(m);
  for (int v = 0; v < m.n_vertices(); ++v) {
    const VertexProfile& p = prof[v];
    if (p.boundary != 0 && p.boundary != 2)
      fail(ErrorKind::InvalidComplex,
           "vertex " + std::to_string(v) + " has " + std::to_string(p.boundary) +
               " boundary edge ends (boundary must be a 1-manifold)");
    if (p.boundary > 0 && p.dividing > 1)
      fail(ErrorKind::InvalidDividingSet,
           "dividing set is tangent to the boundary at vertex " + std::to_string(v));
    if (p.dividing == 1 && p.boundary == 0)
      fail(ErrorKind::InvalidDividingSet,
           "dividing component ends at interior vertex " + std::to_string(v) +
               " (endpoints must lie on the boundary)");
    // Arc ids present at this vertex must agree.
    for (Dart d : p.arc_darts)
      if (m.einfo(d).arc != m.einfo(p.arc_darts[0]).arc)
        fail(ErrorKind::ArcsNotDisjoint,
             "two attachment arcs meet at vertex " + std::to_string(v));
    if (!p.arc_darts.empty() && p.boundary > 0)
      fail(ErrorKind::NotAnArc,
           "attachment arc touches the surface boundary at vertex " + std::to_string(v));
  }

  // Per-arc local structure.
  auto rot = vertex_rotations(m);
  auto label_at = [&](int v, int i) {
    return m.einfo(rot[v][(i + rot[v].size()) % rot[v].size()]).label;
  };
  for (const ArcEmbedding& a : m.arcs) {
    std::string tag = "arc " + std::to_string(a.id);
    auto endpoint_ok = [&](int v) {
      return prof[v].arc_darts.size() == 1 && prof[v].dividing == 2 && prof[v].skeleton == 0 &&
             prof[v].boundary == 0;
    };
    if (!endpoint_ok(a.p1) || !endpoint_ok(a.p3))
      fail(ErrorKind::NotAnArc,
           tag + ": endpoints must lie on the dividing set with exactly one arc end and two "
                 "dividing ends");
    // p2: transverse crossing, degree 4 alternating arc/dividing.
    {
      const VertexProfile& p = prof[a.p2];
      bool ok = p.arc_darts.size() == 2 && p.dividing == 2 && p.skeleton == 0 &&
                p.boundary == 0 && rot[a.p2].size() == 4;
      if (ok)
        for (int i = 0; i < 4; ++i)
          if ((label_at(a.p2, i) == EdgeLabel::Arc) == (label_at(a.p2, i + 1) == EdgeLabel::Arc))
            ok = false;
      if (!ok)
        fail(ErrorKind::NotAnArc,
             tag + ": interior crossing must meet the dividing set transversally");
    }
    // Interior vertices: degree 4 alternating arc/skeleton.
    std::vector<int> interior;
    for (size_t i = 1; i < a.darts.size(); ++i) {
      int v = m.vertex_of[a.darts[i]];
      if (v != a.p2) interior.push_back(v);
    }
    for (int v : interior) {
      const VertexProfile& p = prof[v];
      bool ok = p.arc_darts.size() == 2 && p.skeleton == 2 && p.dividing == 0 &&
                p.boundary == 0 && rot[v].size() == 4;
      if (ok)
        for (int i = 0; i < 4; ++i)
          if ((label_at(v, i) == EdgeLabel::Arc) == (label_at(v, i + 1) == EdgeLabel::Arc))
            ok = false;
      if (!ok)
        fail(ErrorKind::ArcNotEmbedded,
             tag + ": interior vertex " + std::to_string(v) +
                 " must cross exactly one skeleton edge transversally");
    }
  }

  // Boundary circles must cover every boundary edge exactly once.
  size_t covered = 0;
  for (const auto& c : boundary_circles(m)) covered += c.size();
  size_t boundary_edges = 0;
  for (int e = 0; e < m.n_edges(); ++e)
    if (m.edges[e].label == EdgeLabel::Boundary) ++boundary_edges;
  require(covered == boundary_edges, "boundary circles do not cover the boundary");
}

void validate_giroux(const Map& m) {
  bool closed_surface = m.n_holes == 0;
  bool has_dividing = false;
  for (int e = 0; e < m.n_edges(); ++e)
    if (m.edges[e].label == EdgeLabel::Dividing) has_dividing = true;
  if (closed_surface && !has_dividing)
    fail(ErrorKind::InvalidDividingSet, "a closed surface needs a nonempty dividing set");

  auto comps = classify_components(m);
  for (const DividingComponent& c : m.dividing_components) {
    if (!c.closed) continue;
    int surf = m.component_of_vertex[m.vertex_of[c.darts[0]]];
    const Classification& cl = comps[surf];
    bool on_disk = cl.genus == 0 && cl.boundary_components == 1;
    if (on_disk)
      fail(ErrorKind::ContractibleDividingCurve,
           "closed dividing component " + std::to_string(c.id) + " on a disk");
    if (is_contractible(m, c.darts))
      fail(ErrorKind::ContractibleDividingCurve,
           "dividing component " + std::to_string(c.id) + " bounds a disk");
  }

  auto prof = profiles(m);
  for (const auto& circle : boundary_circles(m)) {
    bool meets = false;
    for (Dart d : circle)
      if (prof[m.vertex_of[d]].dividing > 0) meets = true;
    if (!meets)
      fail(ErrorKind::InvalidDividingSet,
           "a boundary circle does not meet the dividing set");
  }
}

SchemaResult build_and_validate(const SurfaceSchema& s) {
  SchemaResult r = build_schema(s);
  validate_structure(r.map);
  validate_giroux(r.map);
  return r;
}

int tb(const Map& m) {
  if (m.n_holes == 0)
    fail(ErrorKind::MismatchedBoundaryData, "tb is defined only for surfaces with boundary");
  auto prof = profiles(m);
  int feet = 0;
  for (int v = 0; v < m.n_vertices(); ++v)
    if (prof[v].boundary > 0 && prof[v].dividing > 0) ++feet;
  require(feet % 2 == 0, "odd number of dividing endpoints on the boundary");
  return -feet / 2;
}

}  // namespace pinwheels
