#include "pinwheels/core_map.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace pinwheels {

const char* edge_label_name(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Boundary: return "boundary";
    case EdgeLabel::Dividing: return "dividing";
    case EdgeLabel::Arc: return "arc";
    case EdgeLabel::Skeleton: return "skeleton";
  }
  return "?";
}

namespace {

// Rotation lists per vertex, each starting at its smallest dart.
std::vector<std::vector<Dart>> rotations_of(const Map& m) {
  std::vector<Dart> min_dart(m.n_vertices(), kNoDart);
  for (Dart d = 0; d < m.n_darts(); ++d) {
    int v = m.vertex_of[d];
    if (min_dart[v] == kNoDart || d < min_dart[v]) min_dart[v] = d;
  }
  std::vector<std::vector<Dart>> rot(m.n_vertices());
  for (int v = 0; v < m.n_vertices(); ++v) {
    require(min_dart[v] != kNoDart, "vertex with no darts");
    Dart d = min_dart[v];
    do {
      rot[v].push_back(d);
      d = m.sigma[d];
    } while (d != min_dart[v]);
  }
  return rot;
}

}  // namespace

// ---------------------------------------------------------------------------
// MapBuilder

int MapBuilder::add_edge(EdgeInfo info) {
  edge_infos_.push_back(info);
  hole_marks_.resize(2 * edge_infos_.size(), 0);
  return static_cast<int>(edge_infos_.size()) - 1;
}

void MapBuilder::set_edge_info(int edge, EdgeInfo info) {
  require(edge >= 0 && edge < static_cast<int>(edge_infos_.size()), "set_edge_info: bad edge");
  edge_infos_[edge] = info;
}

int MapBuilder::add_vertex() {
  rotations_.emplace_back();
  return static_cast<int>(rotations_.size()) - 1;
}

void MapBuilder::set_rotation(int vertex, std::vector<Dart> darts) {
  while (vertex >= static_cast<int>(rotations_.size())) rotations_.emplace_back();
  rotations_[vertex] = std::move(darts);
}

void MapBuilder::set_hole_left(Dart d, bool v) {
  if (d >= static_cast<int>(hole_marks_.size())) hole_marks_.resize(d + 1, 0);
  hole_marks_[d] = v ? 1 : 0;
}

Map MapBuilder::build() {
  Map m;
  int nd = 2 * static_cast<int>(edge_infos_.size());
  m.edges = edge_infos_;
  m.sigma.assign(nd, kNoDart);
  m.sigma_inv.assign(nd, kNoDart);
  m.vertex_of.assign(nd, -1);
  m.hole_left.assign(nd, 0);
  for (int d = 0; d < nd && d < static_cast<int>(hole_marks_.size()); ++d)
    m.hole_left[d] = hole_marks_[d];
  for (int v = 0; v < static_cast<int>(rotations_.size()); ++v) {
    const auto& rot = rotations_[v];
    if (rot.empty())
      fail(ErrorKind::InvalidComplex, "vertex " + std::to_string(v) + " has no incident darts");
    for (size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0 || d >= nd)
        fail(ErrorKind::InvalidComplex, "rotation references unknown dart " + std::to_string(d));
      if (m.vertex_of[d] != -1)
        fail(ErrorKind::InvalidComplex, "dart " + std::to_string(d) + " appears in two rotations");
      m.vertex_of[d] = v;
      m.sigma[d] = rot[(i + 1) % rot.size()];
    }
  }
  for (Dart d = 0; d < nd; ++d) {
    if (m.vertex_of[d] == -1)
      fail(ErrorKind::InvalidComplex, "dart " + std::to_string(d) + " missing from all rotations");
  }
  m.finalize();
  return m;
}

// ---------------------------------------------------------------------------
// finalize

void Map::finalize() {
  int nd = n_darts();
  require(static_cast<int>(sigma.size()) == nd && static_cast<int>(vertex_of.size()) == nd &&
              static_cast<int>(hole_left.size()) == nd && nd == 2 * n_edges(),
          "array sizes inconsistent");
  // sigma is a permutation; rebuild sigma_inv.
  sigma_inv.assign(nd, kNoDart);
  for (Dart d = 0; d < nd; ++d) {
    require(sigma[d] >= 0 && sigma[d] < nd, "sigma out of range");
    require(sigma_inv[sigma[d]] == kNoDart, "sigma not a permutation");
    sigma_inv[sigma[d]] = d;
  }
  // Vertices are exactly the sigma orbits.
  n_vertices_ = 0;
  for (Dart d = 0; d < nd; ++d) n_vertices_ = std::max(n_vertices_, vertex_of[d] + 1);
  {
    for (Dart d = 0; d < nd; ++d) {
      require(vertex_of[d] >= 0, "dart without vertex");
      require(vertex_of[sigma[d]] == vertex_of[d], "sigma crosses vertices");
    }
    std::vector<int> rep(n_vertices_, -1);
    std::vector<std::uint8_t> seen(nd, 0);
    for (Dart d = 0; d < nd; ++d) {
      if (seen[d]) continue;
      int v = vertex_of[d];
      require(rep[v] == -1, "vertex darts form multiple sigma orbits");
      rep[v] = d;
      Dart e = d;
      do {
        seen[e] = 1;
        e = sigma[e];
      } while (e != d);
    }
    for (int v = 0; v < n_vertices_; ++v) require(rep[v] != -1, "vertex id gap");
  }

  // Faces (left-of-dart orbits), ids ordered by smallest dart.
  face_of.assign(nd, -1);
  face_darts.clear();
  for (Dart d = 0; d < nd; ++d) {
    if (face_of[d] != -1) continue;
    int f = static_cast<int>(face_darts.size());
    face_darts.emplace_back();
    Dart e = d;
    do {
      face_of[e] = f;
      face_darts[f].push_back(e);
      e = face_next(e);
    } while (e != d);
  }
  n_faces = static_cast<int>(face_darts.size());

  // Hole faces: hole_left constant on faces; holes are bounded by Boundary
  // edges only, and every Boundary edge has exactly one hole side.
  face_is_hole.assign(n_faces, 0);
  for (int f = 0; f < n_faces; ++f) {
    bool h0 = hole_left[face_darts[f][0]];
    for (Dart d : face_darts[f])
      if (static_cast<bool>(hole_left[d]) != h0)
        fail(ErrorKind::InvalidComplex, "hole marks do not cover whole faces");
    face_is_hole[f] = h0 ? 1 : 0;
  }
  n_holes = 0;
  for (int f = 0; f < n_faces; ++f) n_holes += face_is_hole[f];
  n_real_faces = n_faces - n_holes;
  for (int e = 0; e < n_edges(); ++e) {
    bool hl = hole_left[2 * e], hr = hole_left[2 * e + 1];
    if (edges[e].label == EdgeLabel::Boundary) {
      if (hl == hr)
        fail(ErrorKind::InvalidComplex,
             "boundary edge " + std::to_string(e) + " must have exactly one hole side");
    } else if (hl || hr) {
      fail(ErrorKind::InvalidComplex,
           std::string(edge_label_name(edges[e].label)) + " edge " + std::to_string(e) +
               " touches a hole face");
    }
    if (edges[e].label == EdgeLabel::Arc &&
        (edges[e].arc < 0 || (edges[e].segment != 0 && edges[e].segment != 1)))
      fail(ErrorKind::NotAnArc, "arc edge " + std::to_string(e) + " lacks arc id / segment");
  }

  // Cells (real faces merged across Skeleton) and regions (across
  // Skeleton + Arc).
  auto merge_faces = [&](bool merge_arcs) {
    std::vector<int> parent(n_faces);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < n_edges(); ++e) {
      EdgeLabel l = edges[e].label;
      if (l == EdgeLabel::Skeleton || (merge_arcs && l == EdgeLabel::Arc))
        parent[find(face_of[2 * e])] = find(face_of[2 * e + 1]);
    }
    std::vector<int> id(n_faces, -1);
    int next = 0;
    for (int f = 0; f < n_faces; ++f) {
      if (face_is_hole[f]) continue;
      if (id[find(f)] == -1) id[find(f)] = next++;
    }
    std::vector<int> out(n_faces, -1);
    for (int f = 0; f < n_faces; ++f)
      if (!face_is_hole[f]) out[f] = id[find(f)];
    return std::pair<int, std::vector<int>>(next, std::move(out));
  };
  std::tie(n_cells, cell_of_face) = merge_faces(false);
  std::tie(n_regions, region_of_face) = merge_faces(true);

  // Two-coloring of regions across Dividing edges; anchor: the region left of
  // the smallest dividing dart is positive.
  two_colorable = true;
  region_sign.assign(n_regions, 0);
  {
    std::vector<std::vector<int>> adj(n_regions);
    for (int e = 0; e < n_edges(); ++e) {
      if (edges[e].label != EdgeLabel::Dividing) continue;
      int ra = region_of_face[face_of[2 * e]];
      int rb = region_of_face[face_of[2 * e + 1]];
      if (ra == rb) two_colorable = false;
      adj[ra].push_back(rb);
      adj[rb].push_back(ra);
    }
    std::vector<int> rcomp(n_regions, -1);
    int n_rcomp = 0;
    for (int r0 = 0; r0 < n_regions && two_colorable; ++r0) {
      if (region_sign[r0] != 0) continue;
      region_sign[r0] = 1;
      rcomp[r0] = n_rcomp++;
      std::queue<int> q;
      q.push(r0);
      while (!q.empty() && two_colorable) {
        int r = q.front();
        q.pop();
        for (int s : adj[r]) {
          if (region_sign[s] == 0) {
            region_sign[s] = static_cast<std::int8_t>(-region_sign[r]);
            rcomp[s] = rcomp[r];
            q.push(s);
          } else if (region_sign[s] != -region_sign[r]) {
            two_colorable = false;
            break;
          }
        }
      }
    }
    if (two_colorable) {
      // Anchor each coloring component: its smallest dividing dart must see a
      // positive region on its left.
      std::vector<std::uint8_t> anchored(n_rcomp, 0);
      for (int e = 0; e < n_edges(); ++e) {
        if (edges[e].label != EdgeLabel::Dividing) continue;
        int r = region_of_face[face_of[2 * e]];
        if (anchored[rcomp[r]]) continue;
        anchored[rcomp[r]] = 1;
        if (region_sign[r] < 0)
          for (int s = 0; s < n_regions; ++s)
            if (rcomp[s] == rcomp[r]) region_sign[s] = static_cast<std::int8_t>(-region_sign[s]);
      }
    } else {
      region_sign.clear();
    }
  }

  // Connected components over vertices.
  component_of_vertex.assign(n_vertices_, -1);
  n_components = 0;
  {
    std::vector<std::vector<int>> vadj(n_vertices_);
    for (int e = 0; e < n_edges(); ++e) {
      int u = vertex_of[2 * e], v = vertex_of[2 * e + 1];
      vadj[u].push_back(v);
      vadj[v].push_back(u);
    }
    for (int v0 = 0; v0 < n_vertices_; ++v0) {
      if (component_of_vertex[v0] != -1) continue;
      int c = n_components++;
      std::queue<int> q;
      component_of_vertex[v0] = c;
      q.push(v0);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : vadj[v])
          if (component_of_vertex[w] == -1) {
            component_of_vertex[w] = c;
            q.push(w);
          }
      }
    }
  }

  // Dividing components.
  dividing_component_of_edge.assign(n_edges(), -1);
  dividing_components.clear();
  {
    std::vector<std::vector<Dart>> div_at(n_vertices_);
    for (Dart d = 0; d < nd; ++d)
      if (einfo(d).label == EdgeLabel::Dividing) div_at[vertex_of[d]].push_back(d);
    for (int v = 0; v < n_vertices_; ++v)
      if (div_at[v].size() > 2)
        fail(ErrorKind::CrossingCurves,
             "vertex " + std::to_string(v) + " has " + std::to_string(div_at[v].size()) +
                 " dividing edge ends (dividing components must be disjoint and embedded)");
    std::vector<std::uint8_t> edge_seen(n_edges(), 0);
    auto walk = [&](Dart start) {
      std::vector<Dart> path;
      Dart d = start;
      while (true) {
        path.push_back(d);
        edge_seen[edge_of(d)] = 1;
        Dart nx = kNoDart;
        for (Dart c : div_at[head(d)])
          if (c != (d ^ 1)) nx = c;
        if (nx == kNoDart) break;
        if (edge_seen[edge_of(nx)]) break;
        d = nx;
      }
      return path;
    };
    auto push_component = [&](std::vector<Dart> path, bool closed) {
      DividingComponent comp;
      comp.closed = closed;
      if (closed) {
        require(head(path.back()) == vertex_of[path.front()], "closed dividing walk broken");
        // canonical: direction and rotation such that the walk starts at the
        // smallest dart present among both directions.
        std::vector<Dart> rev;
        for (auto it = path.rbegin(); it != path.rend(); ++it) rev.push_back(*it ^ 1);
        auto rotate_to_min = [](std::vector<Dart>& p) {
          size_t bi = 0;
          for (size_t i = 1; i < p.size(); ++i)
            if (p[i] < p[bi]) bi = i;
          std::rotate(p.begin(), p.begin() + bi, p.end());
        };
        rotate_to_min(path);
        rotate_to_min(rev);
        comp.darts = (rev.front() < path.front()) ? std::move(rev) : std::move(path);
      } else {
        Dart fwd = path.front();
        Dart bwd = path.back() ^ 1;
        if (bwd < fwd) {
          std::vector<Dart> rev;
          for (auto it = path.rbegin(); it != path.rend(); ++it) rev.push_back(*it ^ 1);
          path = std::move(rev);
        }
        comp.darts = std::move(path);
      }
      dividing_components.push_back(std::move(comp));
    };
    // open components start at endpoint vertices (exactly one dividing dart)
    for (int v = 0; v < n_vertices_; ++v) {
      if (div_at[v].size() != 1) continue;
      Dart s = div_at[v][0];
      if (edge_seen[edge_of(s)]) continue;
      push_component(walk(s), false);
    }
    for (int e = 0; e < n_edges(); ++e) {
      if (edges[e].label != EdgeLabel::Dividing || edge_seen[e]) continue;
      push_component(walk(2 * e), true);
    }
    std::sort(dividing_components.begin(), dividing_components.end(),
              [](const DividingComponent& a, const DividingComponent& b) {
                int ea = edge_of(*std::min_element(a.darts.begin(), a.darts.end()));
                int eb = edge_of(*std::min_element(b.darts.begin(), b.darts.end()));
                return ea < eb;
              });
    n_dividing_components = static_cast<int>(dividing_components.size());
    for (int i = 0; i < n_dividing_components; ++i) {
      dividing_components[i].id = i;
      for (Dart d : dividing_components[i].darts)
        dividing_component_of_edge[edge_of(d)] = i;
    }
  }

  // Arcs from labels.
  arcs.clear();
  {
    std::map<int, std::array<std::vector<int>, 2>> arc_edges;
    for (int e = 0; e < n_edges(); ++e)
      if (edges[e].label == EdgeLabel::Arc) arc_edges[edges[e].arc][edges[e].segment].push_back(e);
    for (auto& [id, segs] : arc_edges) {
      std::string label = "arc " + std::to_string(id);
      if (segs[0].empty() || segs[1].empty())
        fail(ErrorKind::NotAnArc, label + " is missing a segment");
      auto path_ends = [&](const std::vector<int>& es) {
        std::map<int, std::vector<Dart>> at;
        for (int e : es) {
          at[vertex_of[2 * e]].push_back(2 * e);
          at[vertex_of[2 * e + 1]].push_back(2 * e + 1);
        }
        std::vector<int> ends;
        for (auto& [v, ds] : at) {
          if (ds.size() == 1) ends.push_back(v);
          else if (ds.size() != 2)
            fail(ErrorKind::NotAnArc, label + ": segment is not a simple path");
        }
        if (ends.size() != 2) fail(ErrorKind::NotAnArc, label + ": segment is not a simple path");
        return std::pair(std::move(ends), std::move(at));
      };
      auto [ends0, at0] = path_ends(segs[0]);
      auto [ends1, at1] = path_ends(segs[1]);
      std::vector<int> shared;
      for (int v : ends0)
        for (int w : ends1)
          if (v == w) shared.push_back(v);
      if (shared.size() != 1)
        fail(ErrorKind::NotAnArc, label + ": segments must share exactly one endpoint");
      int p2 = shared[0];
      int p1 = (ends0[0] == p2) ? ends0[1] : ends0[0];
      int p3 = (ends1[0] == p2) ? ends1[1] : ends1[0];
      if (p1 == p3) fail(ErrorKind::NotAnArc, label + ": crossing points must be distinct");
      auto walk_path = [&](std::map<int, std::vector<Dart>>& at, int from, int to) {
        std::vector<Dart> out;
        int v = from;
        int prev_edge = -1;
        while (v != to) {
          Dart step = kNoDart;
          for (Dart d : at[v])
            if (edge_of(d) != prev_edge) step = d;
          require(step != kNoDart, "arc path walk failed");
          out.push_back(step);
          prev_edge = edge_of(step);
          v = head(step);
        }
        return out;
      };
      ArcEmbedding emb;
      emb.id = id;
      emb.p1 = p1;
      emb.p2 = p2;
      emb.p3 = p3;
      auto d0 = walk_path(at0, p1, p2);
      auto d1 = walk_path(at1, p2, p3);
      emb.seg1_len = static_cast<int>(d0.size());
      emb.darts = std::move(d0);
      emb.darts.insert(emb.darts.end(), d1.begin(), d1.end());
      arcs.push_back(std::move(emb));
    }
    std::sort(arcs.begin(), arcs.end(),
              [](const ArcEmbedding& a, const ArcEmbedding& b) { return a.id < b.id; });
  }
}

Dart Map::dividing_next(Dart d) const {
  Dart h = d ^ 1;  // the reversal, at head(d)
  Dart out = kNoDart;
  for (Dart c = sigma[h]; c != h; c = sigma[c]) {
    if (einfo(c).label == EdgeLabel::Dividing) {
      require(out == kNoDart, "more than two dividing darts at a vertex");
      out = c;
    }
  }
  return out;
}

const ArcEmbedding* Map::find_arc(int id) const {
  for (const auto& a : arcs)
    if (a.id == id) return &a;
  return nullptr;
}

// ---------------------------------------------------------------------------
// classification

namespace {
Classification classify_counts(int V, int E, int F_all, int holes, bool connected) {
  Classification c;
  c.connected = connected;
  int chi_capped = V - E + F_all;
  require((2 - chi_capped) % 2 == 0, "odd capped Euler characteristic");
  c.genus = (2 - chi_capped) / 2;
  require(c.genus >= 0, "negative genus");
  c.boundary_components = holes;
  c.euler_characteristic = chi_capped - holes;
  return c;
}
}  // namespace

Classification classify_surface(const Map& m) {
  if (m.n_components != 1)
    fail(ErrorKind::Disconnected,
         "surface is disconnected (" + std::to_string(m.n_components) + " components)");
  return classify_counts(m.n_vertices(), m.n_edges(), m.n_faces, m.n_holes, true);
}

std::vector<Classification> classify_components(const Map& m) {
  std::vector<Classification> out;
  for (int c = 0; c < m.n_components; ++c) {
    int V = 0, E = 0, F = 0, H = 0;
    for (int v = 0; v < m.n_vertices(); ++v)
      if (m.component_of_vertex[v] == c) ++V;
    for (int e = 0; e < m.n_edges(); ++e)
      if (m.component_of_vertex[m.vertex_of[2 * e]] == c) ++E;
    for (int f = 0; f < m.n_faces; ++f) {
      if (m.component_of_vertex[m.vertex_of[m.face_darts[f][0]]] != c) continue;
      ++F;
      if (m.face_is_hole[f]) ++H;
    }
    out.push_back(classify_counts(V, E, F, H, m.n_components == 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// subdivide_edge

SubdivideResult subdivide_edge(const Map& m, int edge) {
  require(edge >= 0 && edge < m.n_edges(), "subdivide: bad edge");
  Map r = m;
  Dart a = 2 * edge, b = 2 * edge + 1;
  int v = m.vertex_of[b];
  int w = m.n_vertices();
  int f = r.n_edges();
  Dart fa = 2 * f, fb = 2 * f + 1;  // fa at w (toward v), fb at v
  r.edges.push_back(m.edges[edge]);
  r.sigma.resize(2 * f + 2, kNoDart);
  r.vertex_of.resize(2 * f + 2, -1);
  r.hole_left.resize(2 * f + 2, 0);
  Dart b_pred = m.sigma_inv[b], b_succ = m.sigma[b];
  if (b_pred == b) {
    r.sigma[fb] = fb;  // v had degree 1
  } else {
    r.sigma[b_pred] = fb;
    r.sigma[fb] = b_succ;
  }
  r.vertex_of[fb] = v;
  r.sigma[b] = fa;
  r.sigma[fa] = b;
  r.vertex_of[b] = w;
  r.vertex_of[fa] = w;
  r.hole_left[fa] = m.hole_left[a];
  r.hole_left[fb] = m.hole_left[b];
  r.finalize();
  return SubdivideResult{std::move(r), w, edge, f};
}

// ---------------------------------------------------------------------------
// cut / reassemble / contractibility

CutResult cut_along(const Map& m, const std::vector<Dart>& cycle) {
  int k = static_cast<int>(cycle.size());
  if (k == 0) fail(ErrorKind::NotClosed, "empty cycle");
  for (int i = 0; i < k; ++i) {
    Dart d = cycle[i];
    require(d >= 0 && d < m.n_darts(), "cut: dart out of range");
    if (m.head(d) != m.vertex_of[cycle[(i + 1) % k]])
      fail(ErrorKind::NotClosed, "cut path is not a closed dart cycle");
  }
  {
    std::vector<int> es, vs;
    for (Dart d : cycle) {
      es.push_back(Map::edge_of(d));
      vs.push_back(m.vertex_of[d]);
    }
    std::sort(es.begin(), es.end());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      fail(ErrorKind::NotEmbedded, "cut cycle repeats an edge");
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      fail(ErrorKind::NotEmbedded, "cut cycle repeats a vertex");
  }
  for (Dart d = 0; d < m.n_darts(); ++d) {
    if (m.einfo(d).label != EdgeLabel::Boundary) continue;
    for (Dart c : cycle)
      if (m.vertex_of[c] == m.vertex_of[d])
        fail(ErrorKind::NotEmbedded, "cut cycle touches the surface boundary");
  }

  auto rot = rotations_of(m);
  int nv = m.n_vertices();
  int ne = m.n_edges();
  CutResult res;
  res.cycle = cycle;
  std::vector<int> pos_of_vertex(nv, -1);
  for (int i = 0; i < k; ++i) pos_of_vertex[m.vertex_of[cycle[i]]] = i;

  MapBuilder b;
  for (int e = 0; e < ne; ++e) b.add_edge(m.edges[e]);
  res.right_edge_of.resize(k);
  res.right_vertex_of.resize(k);
  for (int i = 0; i < k; ++i) {
    res.cut_infos.push_back(m.edges[Map::edge_of(cycle[i])]);
    res.right_edge_of[i] = b.add_edge(EdgeInfo{EdgeLabel::Boundary, -1, -1});
    b.set_edge_info(Map::edge_of(cycle[i]), EdgeInfo{EdgeLabel::Boundary, -1, -1});
  }
  auto rfwd = [&](int i) { return 2 * res.right_edge_of[i]; };
  auto rbwd = [&](int i) { return 2 * res.right_edge_of[i] + 1; };

  std::vector<std::vector<Dart>> right_rot(k);
  for (int v = 0; v < nv; ++v) {
    int i = pos_of_vertex[v];
    if (i < 0) {
      b.set_rotation(v, rot[v]);
      continue;
    }
    Dart out = cycle[i];
    Dart in_rev = cycle[(i - 1 + k) % k] ^ 1;
    std::vector<Dart> r = rot[v];
    auto it = std::find(r.begin(), r.end(), out);
    require(it != r.end(), "cut: cycle dart missing from rotation");
    std::rotate(r.begin(), it, r.end());
    auto jt = std::find(r.begin(), r.end(), in_rev);
    require(jt != r.end(), "cut: reverse cycle dart missing from rotation");
    size_t j = static_cast<size_t>(jt - r.begin());
    std::vector<Dart> left(r.begin(), r.begin() + j + 1);
    std::vector<Dart> right;
    right.push_back(rfwd(i));
    right.push_back(rbwd((i - 1 + k) % k));
    right.insert(right.end(), r.begin() + j + 1, r.end());
    b.set_rotation(v, left);
    right_rot[i] = std::move(right);
  }
  for (int i = 0; i < k; ++i) {
    res.right_vertex_of[i] = nv + i;
    b.set_rotation(nv + i, right_rot[i]);
  }

  for (Dart d = 0; d < m.n_darts(); ++d)
    if (m.hole_left[d]) b.set_hole_left(d, true);
  for (int i = 0; i < k; ++i) {
    b.set_hole_left(cycle[i] ^ 1, true);
    b.set_hole_left(rfwd(i), true);
  }

  res.map = b.build();
  return res;
}

Map reassemble(const CutResult& cut) {
  const Map& c = cut.map;
  int k = static_cast<int>(cut.cycle.size());
  int ne = c.n_edges() - k;
  int nv = c.n_vertices() - k;
  auto rot = rotations_of(c);
  std::vector<int> pos_of_vertex(c.n_vertices(), -1);
  for (int i = 0; i < k; ++i) pos_of_vertex[c.vertex_of[cut.cycle[i]]] = i;

  MapBuilder b;
  for (int e = 0; e < ne; ++e) b.add_edge(c.edges[e]);
  for (int i = 0; i < k; ++i)
    b.set_edge_info(Map::edge_of(cut.cycle[i]), cut.cut_infos[i]);

  for (int v = 0; v < nv; ++v) {
    int i = pos_of_vertex[v];
    if (i < 0) {
      b.set_rotation(v, rot[v]);
      continue;
    }
    Dart out = cut.cycle[i];
    std::vector<Dart> left = rot[v];
    auto it = std::find(left.begin(), left.end(), out);
    require(it != left.end(), "reassemble: rotation lost the cycle dart");
    std::rotate(left.begin(), it, left.end());
    const std::vector<Dart>& rright = rot[cut.right_vertex_of[i]];
    Dart rf = 2 * cut.right_edge_of[i];
    Dart rb = 2 * cut.right_edge_of[(i - 1 + k) % k] + 1;
    std::vector<Dart> rr = rright;
    auto f = std::find(rr.begin(), rr.end(), rf);
    require(f != rr.end(), "reassemble: right rotation malformed");
    std::rotate(rr.begin(), f, rr.end());
    require(rr.size() >= 2 && rr[1] == rb, "reassemble: right rotation malformed");
    left.insert(left.end(), rr.begin() + 2, rr.end());
    b.set_rotation(v, left);
  }

  for (Dart d = 0; d < 2 * ne; ++d) {
    bool h = c.hole_left[d];
    for (int i = 0; i < k; ++i)
      if (d == (cut.cycle[i] ^ 1)) h = false;
    if (h) b.set_hole_left(d, true);
  }
  return b.build();
}

bool is_contractible(const Map& m, const std::vector<Dart>& cycle) {
  // Cutting would sever any attachment arc crossing the cycle, leaving its
  // segments parted over the two banks; arcs do not affect the topology, so
  // flatten them to scaffolding first. The cycle itself must stay off them.
  for (Dart d : cycle)
    require(m.einfo(d).label != EdgeLabel::Arc,
            "is_contractible: cycle runs along an attachment arc");
  bool had_arcs = false;
  for (const EdgeInfo& e : m.edges) had_arcs |= e.label == EdgeLabel::Arc;
  CutResult cr;
  if (had_arcs) {
    Map plain = m;
    for (EdgeInfo& e : plain.edges)
      if (e.label == EdgeLabel::Arc) e = EdgeInfo{EdgeLabel::Skeleton, -1, -1};
    plain.finalize();
    cr = cut_along(plain, cycle);
  } else {
    cr = cut_along(m, cycle);
  }
  for (const auto& c : classify_components(cr.map))
    if (c.genus == 0 && c.boundary_components == 1 && c.euler_characteristic == 1) return true;
  return false;
}

// ---------------------------------------------------------------------------
// canonical form / isomorphism

namespace {

std::string canon_component(const Map& m, Dart start, bool anonymize_arcs) {
  int nd = m.n_darts();
  std::vector<int> newid(nd, -1);
  std::vector<Dart> order;
  order.reserve(nd);
  newid[start] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    Dart d = order[qi];
    for (Dart n : {m.sigma[d], Map::opposite(d)}) {
      if (newid[n] == -1) {
        newid[n] = static_cast<int>(order.size());
        order.push_back(n);
      }
    }
  }
  std::map<int, int> arc_rename;
  std::ostringstream os;
  for (Dart d : order) {
    const EdgeInfo& e = m.einfo(d);
    int arc = e.arc;
    if (e.label == EdgeLabel::Arc && anonymize_arcs)
      arc = arc_rename.try_emplace(arc, static_cast<int>(arc_rename.size())).first->second;
    os << newid[m.sigma[d]] << ',' << newid[Map::opposite(d)] << ','
       << static_cast<int>(e.label) << ',' << arc << ',' << e.segment << ','
       << static_cast<int>(m.hole_left[d]) << ';';
  }
  return os.str();
}

}  // namespace

std::string canonical_form(const Map& m, bool anonymize_arcs) {
  std::vector<std::string> comps;
  for (int c = 0; c < m.n_components; ++c) {
    std::string best;
    for (Dart d = 0; d < m.n_darts(); ++d) {
      if (m.component_of_vertex[m.vertex_of[d]] != c) continue;
      std::string s = canon_component(m, d, anonymize_arcs);
      if (best.empty() || s < best) best = std::move(s);
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (auto& s : comps) {
    out += s;
    out += '|';
  }
  return out;
}

bool isomorphic(const Map& a, const Map& b, bool anonymize_arcs) {
  if (a.n_darts() != b.n_darts()) return false;
  return canonical_form(a, anonymize_arcs) == canonical_form(b, anonymize_arcs);
}

std::vector<std::vector<Dart>> vertex_rotations(const Map& m) { return rotations_of(m); }

Dart boundary_next(const Map& m, Dart d) {
  require(m.einfo(d).label == EdgeLabel::Boundary && !m.hole_left[d],
          "boundary_next: not an interior-on-left boundary dart");
  Dart n = m.face_prev(d ^ 1) ^ 1;
  require(m.einfo(n).label == EdgeLabel::Boundary && !m.hole_left[n],
          "boundary walk left the boundary");
  return n;
}

std::vector<std::vector<Dart>> boundary_circles(const Map& m) {
  std::vector<std::vector<Dart>> out;
  std::vector<std::uint8_t> seen(m.n_darts(), 0);
  for (Dart d = 0; d < m.n_darts(); ++d) {
    if (seen[d] || m.einfo(d).label != EdgeLabel::Boundary || m.hole_left[d]) continue;
    std::vector<Dart> circle;
    Dart e = d;
    do {
      require(!seen[e], "boundary circles overlap");
      seen[e] = 1;
      circle.push_back(e);
      e = boundary_next(m, e);
    } while (e != d);
    out.push_back(std::move(circle));
  }
  return out;
}

DeleteResult delete_edges(const Map& m, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::uint8_t> drop(m.n_edges(), 0);
  for (int e : edges) {
    require(e >= 0 && e < m.n_edges(), "delete_edges: bad edge id");
    drop[e] = 1;
  }
  DeleteResult res;
  std::vector<int> new_edge_of(m.n_edges(), -1);
  int ne = 0;
  for (int e = 0; e < m.n_edges(); ++e)
    if (!drop[e]) new_edge_of[e] = ne++;
  res.new_dart_of.assign(m.n_darts(), kNoDart);
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (!drop[Map::edge_of(d)]) res.new_dart_of[d] = 2 * new_edge_of[Map::edge_of(d)] + (d & 1);

  auto rot = rotations_of(m);
  res.new_vertex_of.assign(m.n_vertices(), -1);
  MapBuilder b;
  for (int e = 0; e < m.n_edges(); ++e)
    if (!drop[e]) b.add_edge(m.edges[e]);
  int nv = 0;
  for (int v = 0; v < m.n_vertices(); ++v) {
    std::vector<Dart> r;
    for (Dart d : rot[v])
      if (res.new_dart_of[d] != kNoDart) r.push_back(res.new_dart_of[d]);
    if (r.empty()) continue;
    res.new_vertex_of[v] = nv;
    b.set_rotation(nv, std::move(r));
    ++nv;
  }
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (m.hole_left[d] && res.new_dart_of[d] != kNoDart) b.set_hole_left(res.new_dart_of[d], true);
  res.map = b.build();
  return res;
}

}  // namespace pinwheels
