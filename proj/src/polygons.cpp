#include "pinwheels/polygons.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "pinwheels/errors.hpp"
#include "pinwheels/homology.hpp"
#include "pinwheels/moves.hpp"

namespace pinwheels {

namespace {

// Everything analyze_region learns about the closure of a union of cells.
// polygon == false means the union fails some disk/alternation requirement;
// the other fields are only meaningful when polygon is true.
struct RegionShape {
  bool polygon = false;
  std::vector<PolygonSide> sides;       // canonical rotation, ccw
  std::vector<int> faces;               // sorted
  std::vector<char> in_face;            // by face id
  std::vector<char> in_closure_edge;    // edge has a side face in the union
  std::vector<int> rim_vertices;        // sorted
  std::vector<int> rim_dividing_edges;  // sorted
};

// Decides whether the closure of the given cells is a polygon: a disk whose
// boundary is one embedded circuit alternating dividing and arc runs.
// `cells` must be sorted, unique and in range.
RegionShape analyze_region(const Map& m, const std::vector<int>& cells) {
  RegionShape rs;
  rs.in_face.assign(static_cast<size_t>(m.n_faces), 0);
  rs.in_closure_edge.assign(static_cast<size_t>(m.n_edges()), 0);
  std::vector<char> in_cell(static_cast<size_t>(m.n_cells), 0);
  for (int c : cells) in_cell[static_cast<size_t>(c)] = 1;
  for (int f = 0; f < m.n_faces; ++f) {
    const int c = m.cell_of_face[static_cast<size_t>(f)];
    if (c >= 0 && in_cell[static_cast<size_t>(c)]) {
      rs.in_face[static_cast<size_t>(f)] = 1;
      rs.faces.push_back(f);
    }
  }
  if (rs.faces.empty()) return rs;

  // The union must be connected through shared edges.
  {
    std::vector<char> vis(static_cast<size_t>(m.n_faces), 0);
    std::vector<int> stack{rs.faces[0]};
    vis[static_cast<size_t>(rs.faces[0])] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (Dart d : m.face_darts[static_cast<size_t>(f)]) {
        const int g = m.face_of[static_cast<size_t>(d ^ 1)];
        if (rs.in_face[static_cast<size_t>(g)] && !vis[static_cast<size_t>(g)]) {
          vis[static_cast<size_t>(g)] = 1;
          ++cnt;
          stack.push_back(g);
        }
      }
    }
    if (cnt != rs.faces.size()) return rs;
  }

  // Rim darts keep the union on their left. A dividing edge interior to the
  // union, or a boundary/skeleton edge on the rim, disqualifies.
  std::vector<char> is_rim(static_cast<size_t>(m.n_darts()), 0);
  int rim_count = 0;
  for (int e = 0; e < m.n_edges(); ++e) {
    const Dart a = Map::dart_of(e, 0), b = Map::dart_of(e, 1);
    const bool ina = rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(a)])] != 0;
    const bool inb = rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(b)])] != 0;
    if (ina || inb) rs.in_closure_edge[static_cast<size_t>(e)] = 1;
    if (ina && inb) {
      if (m.edges[static_cast<size_t>(e)].label == EdgeLabel::Dividing) return rs;
    } else if (ina || inb) {
      const EdgeLabel l = m.edges[static_cast<size_t>(e)].label;
      if (l != EdgeLabel::Dividing && l != EdgeLabel::Arc) return rs;
      is_rim[static_cast<size_t>(ina ? a : b)] = 1;
      ++rim_count;
    }
  }
  if (rim_count == 0) return rs;

  // Euler characteristic of the closure must be a disk's.
  {
    long long ne = 0;
    std::vector<char> vtx(static_cast<size_t>(m.n_vertices()), 0);
    for (int e = 0; e < m.n_edges(); ++e) {
      if (!rs.in_closure_edge[static_cast<size_t>(e)]) continue;
      ++ne;
      vtx[static_cast<size_t>(m.vertex_of[static_cast<size_t>(Map::dart_of(e, 0))])] = 1;
      vtx[static_cast<size_t>(m.vertex_of[static_cast<size_t>(Map::dart_of(e, 1))])] = 1;
    }
    long long nv = 0;
    for (char c : vtx) nv += c;
    if (nv - ne + static_cast<long long>(rs.faces.size()) != 1) return rs;
  }

  // One embedded rim circuit covering every rim dart. The successor of a rim
  // dart rotates clockwise around its head, skipping edges interior to the
  // union; every candidate met on the way keeps the union on its left.
  Dart start = kNoDart;
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (is_rim[static_cast<size_t>(d)]) {
      start = d;
      break;
    }
  std::vector<Dart> walk;
  {
    std::vector<char> seen_vertex(static_cast<size_t>(m.n_vertices()), 0);
    Dart d = start;
    for (;;) {
      walk.push_back(d);
      const int v = m.vertex_of[static_cast<size_t>(d)];
      if (seen_vertex[static_cast<size_t>(v)]) return rs;
      seen_vertex[static_cast<size_t>(v)] = 1;
      Dart n = m.sigma_inv[static_cast<size_t>(d ^ 1)];
      int guard = 0;
      while (!is_rim[static_cast<size_t>(n)]) {
        n = m.sigma_inv[static_cast<size_t>(n)];
        require(++guard <= m.n_darts(), "rim walk stuck at a vertex");
      }
      if (n == start) break;
      d = n;
      if (static_cast<int>(walk.size()) > rim_count) return rs;
    }
    if (static_cast<int>(walk.size()) != rim_count) return rs;
  }

  // Split the circuit into maximal label runs; with only two labels present
  // the runs alternate, and both labels must occur.
  const size_t nrim = walk.size();
  auto arc_dart = [&](Dart d) { return m.einfo(d).label == EdgeLabel::Arc; };
  size_t s0 = nrim;
  for (size_t i = 0; i < nrim; ++i)
    if (arc_dart(walk[i]) != arc_dart(walk[(i + nrim - 1) % nrim])) {
      s0 = i;
      break;
    }
  if (s0 == nrim) return rs;  // a single run cannot alternate
  std::vector<std::pair<bool, std::vector<Dart>>> runs;
  for (size_t i = 0; i < nrim; ++i) {
    const Dart d = walk[(s0 + i) % nrim];
    const bool a = arc_dart(d);
    if (runs.empty() || runs.back().first != a) runs.emplace_back(a, std::vector<Dart>{});
    runs.back().second.push_back(d);
  }
  for (const auto& r : runs)
    if (r.first)
      for (Dart d : r.second)
        require(m.einfo(d).arc == m.einfo(r.second[0]).arc, "arc run mixes arc ids");

  // Canonical rotation: start at the dividing run holding the smallest
  // dividing dart.
  size_t best_run = runs.size();
  Dart best = kNoDart;
  for (size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].first) continue;
    for (Dart d : runs[r].second)
      if (best == kNoDart || d < best) {
        best = d;
        best_run = r;
      }
  }
  for (size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[(best_run + i) % runs.size()];
    PolygonSide s;
    s.is_arc = r.first;
    s.arc = r.first ? m.einfo(r.second[0]).arc : -1;
    s.darts = r.second;
    rs.sides.push_back(std::move(s));
  }

  for (Dart d : walk) rs.rim_vertices.push_back(m.vertex_of[static_cast<size_t>(d)]);
  std::sort(rs.rim_vertices.begin(), rs.rim_vertices.end());
  for (Dart d : walk)
    if (!arc_dart(d)) rs.rim_dividing_edges.push_back(Map::edge_of(d));
  std::sort(rs.rim_dividing_edges.begin(), rs.rim_dividing_edges.end());

  rs.polygon = true;
  return rs;
}

Polygon to_polygon(const Map& m, const RegionShape& rs, std::vector<int> cells) {
  Polygon p;
  p.sides = rs.sides;
  p.cells = std::move(cells);
  p.faces = rs.faces;
  for (const auto& s : p.sides)
    if (s.is_arc) ++p.k;
  const int reg = m.region_of_face[static_cast<size_t>(rs.faces[0])];
  for (int f : rs.faces)
    require(m.region_of_face[static_cast<size_t>(f)] == reg,
            "polygon spans dividing-set regions");
  return p;
}

// Re-derives the polygon from its cells and demands an exact match.
RegionShape verify_polygon(const Map& m, const Polygon& p) {
  if (p.cells.empty())
    fail(ErrorKind::NotAPolygonOfThisConfiguration, "polygon has no cells");
  std::vector<int> cells = p.cells;
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end() || cells.front() < 0 ||
      cells.back() >= m.n_cells)
    fail(ErrorKind::NotAPolygonOfThisConfiguration, "polygon cell ids invalid");
  RegionShape rs = analyze_region(m, cells);
  if (!rs.polygon)
    fail(ErrorKind::NotAPolygonOfThisConfiguration, "cell union is not a polygon");
  if (!(to_polygon(m, rs, std::move(cells)) == p))
    fail(ErrorKind::NotAPolygonOfThisConfiguration,
         "polygon data does not match its cell union");
  return rs;
}

struct SideGeometry {
  const ArcEmbedding* arc = nullptr;
  int initial = -1;  // origin vertex of the side
  int final = -1;    // head vertex of the side
  int segment = -1;  // 0/1 when the side is one segment, -1 when it spans p2
};

SideGeometry side_geometry(const Map& m, const PolygonSide& s) {
  SideGeometry g;
  g.arc = m.find_arc(s.arc);
  require(g.arc != nullptr, "polygon side on unknown arc");
  require(!s.darts.empty(), "empty polygon side");
  g.initial = m.vertex_of[static_cast<size_t>(s.darts.front())];
  g.final = m.head(s.darts.back());
  g.segment = m.einfo(s.darts.front()).segment;
  for (Dart d : s.darts)
    if (m.einfo(d).segment != g.segment) {
      g.segment = -1;
      break;
    }
  return g;
}

bool oriented_toward_middle(const SideGeometry& g) {
  return (g.initial == g.arc->p1 || g.initial == g.arc->p3) && g.final == g.arc->p2;
}

// The arc's other segment as darts from the middle crossing outward.
std::vector<Dart> outward_other_segment(const ArcEmbedding& a, int seg) {
  if (seg == 0) return a.segment(1);  // stored p2 -> p3 already
  std::vector<Dart> s0 = a.segment(0);  // stored p1 -> p2
  std::vector<Dart> out;
  out.reserve(s0.size());
  for (auto it = s0.rbegin(); it != s0.rend(); ++it) out.push_back(*it ^ 1);
  return out;
}

int far_endpoint(const SideGeometry& g) {
  return g.segment == 0 ? g.arc->p3 : g.arc->p1;
}

// True iff the rest of the side's arc stays off the closed polygon: none of
// its edges has a side face inside and its far endpoint misses the rim.
bool side_nonreturning(const Map& m, const RegionShape& rs, const SideGeometry& g) {
  require(g.segment == 0 || g.segment == 1, "non-return test on a spanning side");
  for (Dart d : outward_other_segment(*g.arc, g.segment)) {
    if (rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(d)])] ||
        rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(d ^ 1)])])
      return false;
  }
  return !std::binary_search(rs.rim_vertices.begin(), rs.rim_vertices.end(),
                             far_endpoint(g));
}

// Shortest dart path between two vertices inside the polygon's closure.
std::vector<Dart> path_in_closure(const Map& m, const RegionShape& rs,
                                  const std::vector<std::vector<Dart>>& rot, int from,
                                  int to) {
  std::vector<Dart> parent(static_cast<size_t>(m.n_vertices()), kNoDart);
  std::vector<char> vis(static_cast<size_t>(m.n_vertices()), 0);
  std::queue<int> q;
  q.push(from);
  vis[static_cast<size_t>(from)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == to) break;
    for (Dart d : rot[static_cast<size_t>(v)]) {
      if (!rs.in_closure_edge[static_cast<size_t>(Map::edge_of(d))]) continue;
      const int u = m.head(d);
      if (!vis[static_cast<size_t>(u)]) {
        vis[static_cast<size_t>(u)] = 1;
        parent[static_cast<size_t>(u)] = d;
        q.push(u);
      }
    }
  }
  require(vis[static_cast<size_t>(to)] != 0, "polygon closure is not connected");
  std::vector<Dart> path;
  for (int v = to; v != from;) {
    const Dart d = parent[static_cast<size_t>(v)];
    path.push_back(d);
    v = m.vertex_of[static_cast<size_t>(d)];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Polygon> enumerate_polygons(const Map& m, int max_faces) {
  require(max_faces >= 0, "polygon face bound must be nonnegative");
  const int nc = m.n_cells;
  std::vector<std::vector<int>> nbrs(static_cast<size_t>(nc));
  std::vector<int> cell_faces(static_cast<size_t>(nc), 0);
  for (int f = 0; f < m.n_faces; ++f) {
    const int c = m.cell_of_face[static_cast<size_t>(f)];
    if (c >= 0) ++cell_faces[static_cast<size_t>(c)];
  }
  for (int e = 0; e < m.n_edges(); ++e) {
    if (m.edges[static_cast<size_t>(e)].label != EdgeLabel::Arc) continue;
    const int a = m.cell_of_dart(Map::dart_of(e, 0));
    const int b = m.cell_of_dart(Map::dart_of(e, 1));
    if (a >= 0 && b >= 0 && a != b) {
      nbrs[static_cast<size_t>(a)].push_back(b);
      nbrs[static_cast<size_t>(b)].push_back(a);
    }
  }
  for (auto& v : nbrs) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  bool truncated = false;
  std::vector<Polygon> out;
  std::vector<std::uint8_t> state(static_cast<size_t>(nc), 0);  // 0 free, 1 in, 2 shut
  std::vector<int> cur;
  int cur_faces = 0;
  int seed = 0;

  const auto consider = [&]() {
    std::vector<int> cells = cur;
    std::sort(cells.begin(), cells.end());
    RegionShape rs = analyze_region(m, cells);
    if (rs.polygon) out.push_back(to_polygon(m, rs, std::move(cells)));
  };

  // Connected-subset enumeration: each subset is grown exactly once, from
  // its smallest cell, extending only through free cells above the seed.
  std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& ext) {
    consider();
    std::vector<int> shut_here;
    for (size_t i = 0; i < ext.size(); ++i) {
      const int v = ext[i];
      if (state[static_cast<size_t>(v)] != 0) continue;
      if (cur_faces + cell_faces[static_cast<size_t>(v)] > max_faces) {
        truncated = true;
        state[static_cast<size_t>(v)] = 2;
        shut_here.push_back(v);
        continue;
      }
      state[static_cast<size_t>(v)] = 1;
      std::vector<int> child;
      std::vector<char> in_child(static_cast<size_t>(nc), 0);
      for (size_t j = i + 1; j < ext.size(); ++j)
        if (state[static_cast<size_t>(ext[j])] == 0 && !in_child[static_cast<size_t>(ext[j])]) {
          in_child[static_cast<size_t>(ext[j])] = 1;
          child.push_back(ext[j]);
        }
      for (int w : nbrs[static_cast<size_t>(v)])
        if (w > seed && state[static_cast<size_t>(w)] == 0 && !in_child[static_cast<size_t>(w)]) {
          in_child[static_cast<size_t>(w)] = 1;
          child.push_back(w);
        }
      cur.push_back(v);
      cur_faces += cell_faces[static_cast<size_t>(v)];
      grow(child);
      cur.pop_back();
      cur_faces -= cell_faces[static_cast<size_t>(v)];
      state[static_cast<size_t>(v)] = 2;
      shut_here.push_back(v);
    }
    for (int v : shut_here) state[static_cast<size_t>(v)] = 0;
  };

  for (seed = 0; seed < nc; ++seed) {
    if (cell_faces[static_cast<size_t>(seed)] > max_faces) {
      truncated = true;
      continue;
    }
    state[static_cast<size_t>(seed)] = 1;
    cur.assign(1, seed);
    cur_faces = cell_faces[static_cast<size_t>(seed)];
    std::vector<int> ext;
    for (int w : nbrs[static_cast<size_t>(seed)])
      if (w > seed) ext.push_back(w);
    grow(ext);
    cur.clear();
    cur_faces = 0;
    state[static_cast<size_t>(seed)] = 0;
  }

  if (truncated)
    fail(ErrorKind::BoundExceeded,
         "polygon enumeration pruned at " + std::to_string(max_faces) +
             " faces; raise the bound for an exhaustive search");

  std::sort(out.begin(), out.end(), [](const Polygon& a, const Polygon& b) {
    if (a.faces.size() != b.faces.size()) return a.faces.size() < b.faces.size();
    return a.faces < b.faces;
  });
  return out;
}

bool is_pinwheel(const Map& m, const Polygon& p) {
  const RegionShape rs = verify_polygon(m, p);
  for (const auto& s : p.sides) {
    if (!s.is_arc) continue;
    const SideGeometry g = side_geometry(m, s);
    if (!oriented_toward_middle(g)) return false;
    if (!side_nonreturning(m, rs, g)) return false;
  }
  return true;
}

bool is_anti_pinwheel(const Map& m, const Polygon& p) {
  verify_polygon(m, p);
  for (const auto& s : p.sides) {
    if (!s.is_arc) continue;
    const SideGeometry g = side_geometry(m, s);
    if (g.initial != g.arc->p2) return false;
  }
  return true;
}

Tristate is_virtual_pinwheel(const Map& m, const Polygon& p) {
  const RegionShape rs = verify_polygon(m, p);

  std::vector<SideGeometry> geos;
  for (const auto& s : p.sides) {
    if (!s.is_arc) continue;
    SideGeometry g = side_geometry(m, s);
    // The orientation pattern survives every cover, so its failure is final.
    if (!oriented_toward_middle(g)) return Tristate::No;
    geos.push_back(g);
  }

  const auto comps = classify_components(m);
  const int comp = m.component_of_vertex[static_cast<size_t>(
      m.vertex_of[static_cast<size_t>(p.sides[0].darts[0])])];
  const Classification& cl = comps[static_cast<size_t>(comp)];
  // Surfaces whose fundamental group is abelian: homology decides exactly.
  const bool abelian = (cl.genus == 0 && cl.boundary_components <= 2) ||
                       (cl.genus == 1 && cl.boundary_components == 0);

  bool unknown = false;
  std::optional<Homology> hom;
  std::vector<std::vector<Dart>> rot;
  const auto judge = [&](std::vector<Dart> loop) -> Tristate {
    if (!hom) hom.emplace(m);
    if (!hom->is_null_homologous(loop)) return Tristate::Yes;
    return abelian ? Tristate::No : Tristate::Unknown;
  };

  for (const SideGeometry& g : geos) {
    const std::vector<Dart> outw = outward_other_segment(*g.arc, g.segment);
    require(!outw.empty(), "attachment arc with an empty segment");
    std::vector<char> touching(outw.size(), 0);
    bool any = false;
    for (size_t i = 0; i < outw.size(); ++i) {
      const Dart d = outw[i];
      touching[i] =
          (rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(d)])] ||
           rs.in_face[static_cast<size_t>(m.face_of[static_cast<size_t>(d ^ 1)])])
              ? 1
              : 0;
      any = any || touching[i] != 0;
    }
    const int far = far_endpoint(g);
    const bool far_on_rim =
        std::binary_search(rs.rim_vertices.begin(), rs.rim_vertices.end(), far);
    if (!any && !far_on_rim) continue;  // this side never returns

    // A contact starting at the middle crossing itself cannot be unwound in
    // any cover: the return loop is constant.
    if (touching[0]) return Tristate::No;
    if (rot.empty()) rot = vertex_rotations(m);

    const auto check_contact = [&](size_t prefix_len, int entry) -> Tristate {
      std::vector<Dart> loop(outw.begin(), outw.begin() + static_cast<long>(prefix_len));
      std::vector<Dart> back = path_in_closure(m, rs, rot, entry, g.arc->p2);
      loop.insert(loop.end(), back.begin(), back.end());
      return judge(std::move(loop));
    };

    for (size_t i = 1; i < outw.size(); ++i) {
      if (touching[i] && !touching[i - 1]) {
        const Tristate t =
            check_contact(i, m.vertex_of[static_cast<size_t>(outw[i])]);
        if (t == Tristate::No) return Tristate::No;
        if (t == Tristate::Unknown) unknown = true;
      }
    }
    if (far_on_rim && !touching.back()) {
      const Tristate t = check_contact(outw.size(), far);
      if (t == Tristate::No) return Tristate::No;
      if (t == Tristate::Unknown) unknown = true;
    }
  }
  return unknown ? Tristate::Unknown : Tristate::Yes;
}

std::vector<Polygon> find_pinwheels(const Map& m) {
  std::vector<Polygon> out;
  for (auto& p : enumerate_polygons(m, m.n_real_faces))
    if (is_pinwheel(m, p)) out.push_back(std::move(p));
  return out;
}

std::vector<Polygon> find_virtual_pinwheels(const Map& m) {
  std::vector<Polygon> out;
  for (auto& p : enumerate_polygons(m, m.n_real_faces))
    if (is_virtual_pinwheel(m, p) == Tristate::Yes) out.push_back(std::move(p));
  return out;
}

OvertwistedCheck prop_otcases_check(const Map& m) {
  OvertwistedCheck res;
  for (const Polygon& p : enumerate_polygons(m, m.n_real_faces)) {
    if (is_virtual_pinwheel(m, p) != Tristate::Yes) continue;
    const RegionShape rs = analyze_region(m, p.cells);
    require(rs.polygon, "enumerated polygon fails re-analysis");

    bool any_returning = false;
    bool all_pass = true;
    for (const auto& s : p.sides) {
      if (!s.is_arc) continue;
      const SideGeometry g = side_geometry(m, s);
      if (side_nonreturning(m, rs, g)) continue;
      any_returning = true;

      // The returning part must run along a single cell on its left...
      const std::vector<Dart> outw = outward_other_segment(*g.arc, g.segment);
      const int q = m.cell_of_dart(outw[0]);
      require(q >= 0, "attachment arc bordering a hole");
      bool constant = true;
      for (Dart d : outw)
        if (m.cell_of_dart(d) != q) {
          constant = false;
          break;
        }
      if (!constant) {
        all_pass = false;
        break;
      }
      // ...which either is not a polygon, or is one with a dividing side
      // not on the pinwheel's own boundary.
      const std::vector<int> qc{q};
      const RegionShape qs = analyze_region(m, qc);
      if (!qs.polygon) continue;
      bool extra = false;
      for (int e : qs.rim_dividing_edges)
        if (!std::binary_search(rs.rim_dividing_edges.begin(),
                                rs.rim_dividing_edges.end(), e)) {
          extra = true;
          break;
        }
      if (!extra) {
        all_pass = false;
        break;
      }
    }
    if (any_returning && all_pass) {
      res.overtwisted = true;
      res.witness = p;
      return res;
    }
  }
  return res;
}

// Defined here because both predicates are answered by the polygon search.
bool is_trivial_arc(const Map& m, std::int32_t arc_id) {
  const ArcEmbedding* a = m.find_arc(arc_id);
  if (a == nullptr)
    fail(ErrorKind::ArcNotPresent, "no arc with id " + std::to_string(arc_id),
         "is_trivial_arc");
  for (const Polygon& p : enumerate_polygons(m, m.n_real_faces)) {
    if (p.k != 1) continue;
    for (const auto& s : p.sides) {
      if (!s.is_arc || s.arc != arc_id) continue;
      const SideGeometry g = side_geometry(m, s);
      if (g.initial != a->p2) continue;  // need the middle -> endpoint orientation
      const RegionShape rs = analyze_region(m, p.cells);
      require(rs.polygon, "enumerated polygon fails re-analysis");
      if (side_nonreturning(m, rs, g)) return true;
    }
  }
  return false;
}

bool is_left_of(const Map& m, std::int32_t arc1, std::int32_t arc2) {
  const ArcEmbedding* a1 = m.find_arc(arc1);
  if (a1 == nullptr)
    fail(ErrorKind::ArcNotPresent, "no arc with id " + std::to_string(arc1),
         "is_left_of");
  const ArcEmbedding* a2 = m.find_arc(arc2);
  if (a2 == nullptr)
    fail(ErrorKind::ArcNotPresent, "no arc with id " + std::to_string(arc2),
         "is_left_of");
  if (arc1 == arc2)
    fail(ErrorKind::ArcNotPresent, "arcs must be distinct", "is_left_of");

  for (const Polygon& p : enumerate_polygons(m, m.n_real_faces)) {
    if (p.k != 2) continue;
    const PolygonSide* s1 = nullptr;
    const PolygonSide* s2 = nullptr;
    for (const auto& s : p.sides) {
      if (!s.is_arc) continue;
      if (s.arc == arc1) s1 = &s;
      if (s.arc == arc2) s2 = &s;
    }
    if (s1 == nullptr || s2 == nullptr) continue;
    const SideGeometry g1 = side_geometry(m, *s1);
    const SideGeometry g2 = side_geometry(m, *s2);
    // The right arc crosses the strip endpoint -> middle; the left arc
    // leaves it middle -> endpoint; neither may come back to the strip.
    if (!oriented_toward_middle(g2)) continue;
    if (g1.initial != a1->p2) continue;
    const RegionShape rs = analyze_region(m, p.cells);
    require(rs.polygon, "enumerated polygon fails re-analysis");
    if (side_nonreturning(m, rs, g1) && side_nonreturning(m, rs, g2)) return true;
  }
  return false;
}

}  // namespace pinwheels
