#include "pinwheels/covers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "pinwheels/errors.hpp"
#include "pinwheels/schema.hpp"

namespace pinwheels {

// ---- group arithmetic on mixed-radix indices ----

int AbelianGroup::order() const {
  long long n = 1;
  for (int m : moduli) {
    require(m >= 2, "group moduli must be at least 2");
    n *= m;
    if (n > 1'000'000)
      fail(ErrorKind::BoundExceeded, "group order out of supported range");
  }
  return static_cast<int>(n);
}

int AbelianGroup::encode(const std::vector<int>& element) const {
  require(element.size() == moduli.size(),
          "group element has the wrong number of components");
  int idx = 0, mult = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    require(element[i] >= 0 && element[i] < moduli[i],
            "group element component out of range");
    idx += mult * element[i];
    mult *= moduli[i];
  }
  return idx;
}

std::vector<int> AbelianGroup::decode(int index) const {
  require(index >= 0, "group element index out of range");
  std::vector<int> el(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    el[i] = index % moduli[i];
    index /= moduli[i];
  }
  require(index == 0, "group element index out of range");
  return el;
}

int AbelianGroup::add(int a, int b) const {
  int out = 0, mult = 1;
  for (int m : moduli) {
    out += mult * ((a % m + b % m) % m);
    a /= m;
    b /= m;
    mult *= m;
  }
  return out;
}

int AbelianGroup::negate(int a) const {
  int out = 0, mult = 1;
  for (int m : moduli) {
    out += mult * ((m - a % m) % m);
    a /= m;
    mult *= m;
  }
  return out;
}

int AbelianGroup::scale(long long k, int a) const {
  int out = 0, mult = 1;
  for (int m : moduli) {
    long long km = ((k % m) + m) % m;
    out += mult * static_cast<int>((km * (a % m)) % m);
    a /= m;
    mult *= m;
  }
  return out;
}

Dart VoltageCover::lift_dart(Dart base_dart, int sheet) const {
  const int n = group.order();
  require(base_dart >= 0 && base_dart < base.n_darts(), "dart out of range");
  require(sheet >= 0 && sheet < n, "sheet out of range");
  const int e = base_dart >> 1;
  if ((base_dart & 1) == 0) return 2 * (e * n + sheet);
  // The odd dart of edge-copy (e, g) originates in sheet g + voltage, so the
  // copy whose odd dart starts in `sheet` is g = sheet - voltage.
  const int g = group.add(sheet, group.negate(group.encode(voltages[e])));
  return 2 * (e * n + g) + 1;
}

// ---- derived cover ----

VoltageCover build_cover(const Map& base, const AbelianGroup& group,
                         const std::vector<std::vector<int>>& voltages) {
  for (int m : group.moduli)
    if (m < 2) fail(ErrorKind::BadVoltageDomain, "group moduli must be at least 2");
  const int n = group.order();
  if (static_cast<int>(voltages.size()) != base.n_edges())
    fail(ErrorKind::BadVoltageDomain, "need exactly one voltage per base edge");
  std::vector<int> venc(base.n_edges());
  for (int e = 0; e < base.n_edges(); ++e) {
    const std::vector<int>& el = voltages[e];
    if (el.size() != group.moduli.size())
      fail(ErrorKind::BadVoltageDomain, "voltage on edge " + std::to_string(e) +
                                            " has the wrong number of components");
    for (std::size_t i = 0; i < el.size(); ++i)
      if (el[i] < 0 || el[i] >= group.moduli[i])
        fail(ErrorKind::BadVoltageDomain,
             "voltage on edge " + std::to_string(e) + " is out of range");
    venc[e] = group.encode(el);
  }
  const auto dvolt = [&](Dart d) {
    const int v = venc[d >> 1];
    return (d & 1) ? group.negate(v) : v;
  };
  for (int f = 0; f < base.n_faces; ++f) {
    if (base.face_is_hole[f]) continue;
    int s = 0;
    for (Dart d : base.face_darts[f]) s = group.add(s, dvolt(d));
    if (s != 0)
      fail(ErrorKind::BadVoltageDomain,
           "face " + std::to_string(f) +
               " has nonidentity boundary voltage; the derived map would branch");
  }

  VoltageCover vc;
  vc.base = base;
  vc.group = group;
  vc.voltages = voltages;

  const auto lift = [&](Dart d, int sheet) -> Dart {
    const int e = d >> 1;
    if ((d & 1) == 0) return 2 * (e * n + sheet);
    return 2 * (e * n + group.add(sheet, group.negate(venc[e]))) + 1;
  };

  MapBuilder b;
  for (int e = 0; e < base.n_edges(); ++e)
    for (int g = 0; g < n; ++g) b.add_edge(base.edges[e]);

  // Lifted arcs get fresh ids (base arc index)*degree + starting sheet; the
  // sheet is tracked along the stored dart walk, gaining each dart's voltage.
  for (std::size_t ia = 0; ia < base.arcs.size(); ++ia) {
    const ArcEmbedding& emb = base.arcs[ia];
    for (int g = 0; g < n; ++g) {
      const std::int32_t lifted_id = static_cast<std::int32_t>(ia) * n + g;
      int h = g;
      for (Dart d : emb.darts) {
        const Dart ld = lift(d, h);
        EdgeInfo info = base.einfo(d);
        info.arc = lifted_id;
        b.set_edge_info(ld >> 1, info);
        h = group.add(h, dvolt(d));
      }
      vc.base_arc_of.push_back(emb.id);
      vc.arc_sheet_of.push_back(g);
    }
  }

  const std::vector<std::vector<Dart>> rots = vertex_rotations(base);
  for (int v = 0; v < base.n_vertices(); ++v)
    for (int g = 0; g < n; ++g) {
      std::vector<Dart> lr;
      lr.reserve(rots[v].size());
      for (Dart d : rots[v]) lr.push_back(lift(d, g));
      b.set_rotation(v * n + g, std::move(lr));
    }
  for (int e = 0; e < base.n_edges(); ++e)
    for (int g = 0; g < n; ++g)
      for (int s = 0; s < 2; ++s)
        if (base.hole_left[2 * e + s]) b.set_hole_left(2 * (e * n + g) + s);
  vc.cover = b.build();

  const Map& cm = vc.cover;
  require(cm.n_darts() == base.n_darts() * n,
          "cover must have degree times the base dart count");
  vc.base_dart_of.resize(cm.n_darts());
  vc.sheet_of.resize(cm.n_darts());
  for (Dart cd = 0; cd < cm.n_darts(); ++cd) {
    vc.base_dart_of[cd] = 2 * ((cd >> 1) / n) + (cd & 1);
    vc.sheet_of[cd] = cm.vertex_of[cd] % n;
  }
  for (Dart cd = 0; cd < cm.n_darts(); ++cd) {
    require(vc.base_dart_of[cm.sigma[cd]] == base.sigma[vc.base_dart_of[cd]],
            "projection must commute with next-around-vertex");
    require(vc.base_dart_of[cd ^ 1] == (vc.base_dart_of[cd] ^ 1),
            "projection must commute with opposite");
    require(cm.einfo(cd).label == base.einfo(vc.base_dart_of[cd]).label,
            "labels must lift");
    require((cm.hole_left[cd] != 0) == (base.hole_left[vc.base_dart_of[cd]] != 0),
            "hole marks must lift");
    require(vc.lift_dart(vc.base_dart_of[cd], vc.sheet_of[cd]) == cd,
            "lift must invert the projection sheet by sheet");
  }

  long long chi_base = 0, chi_cover = 0;
  for (const Classification& c : classify_components(base))
    chi_base += c.euler_characteristic;
  for (const Classification& c : classify_components(cm))
    chi_cover += c.euler_characteristic;
  require(chi_cover == chi_base * n,
          "cover Euler characteristic must be degree times the base's");

  vc.base_cell_of_cell.assign(cm.n_cells, -1);
  for (int f = 0; f < cm.n_faces; ++f) {
    if (cm.face_is_hole[f]) continue;
    const int bc = base.cell_of_dart(vc.base_dart_of[cm.face_darts[f][0]]);
    int& slot = vc.base_cell_of_cell[cm.cell_of_face[f]];
    if (slot == -1) slot = bc;
    else require(slot == bc, "a cover cell must sit over a single base cell");
  }
  for (int c : vc.base_cell_of_cell) require(c >= 0, "every cover cell projects");

  validate_structure(cm, /*allow_disconnected=*/true);
  validate_giroux(cm);
  return vc;
}

const Map& lift_configuration(const VoltageCover& vc) { return vc.cover; }

// ---- admissible assignments ----

namespace {

// Spanning forest over edges in ascending id order (breadth-first from the
// smallest unvisited vertex). Forcing forest edges to the identity loses no
// covers: sheet-relabeling over each tree makes any assignment equivalent to
// one that is trivial on the forest.
std::vector<char> spanning_forest(const Map& m) {
  std::vector<std::vector<std::pair<int, int>>> adj(m.n_vertices());
  for (int e = 0; e < m.n_edges(); ++e) {
    const int u = m.vertex_of[2 * e], v = m.vertex_of[2 * e + 1];
    adj[u].push_back({e, v});
    adj[v].push_back({e, u});
  }
  std::vector<char> in_tree(m.n_edges(), 0), seen(m.n_vertices(), 0);
  for (int root = 0; root < m.n_vertices(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> queue = {root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const auto& [e, w] : adj[queue[qi]]) {
        if (seen[w]) continue;
        seen[w] = 1;
        in_tree[e] = 1;
        queue.push_back(w);
      }
  }
  return in_tree;
}

struct VoltageParam {
  std::vector<int> col_of_edge;              // -1 on forest edges
  int n_cols = 0;
  std::vector<std::vector<long long>> gens;  // kernel generators, length n_cols
};

// Integer kernel of the real-face constraint matrix over the forest
// complement. Diagonalizing with row and column operations (columns mirrored
// on an accumulator) yields unit pivots — the face-boundary lattice is a
// direct summand of the edge lattice on an oriented surface — so the
// trailing accumulator columns generate all solutions over every abelian
// group, each exactly once.
VoltageParam voltage_parameters(const Map& m) {
  VoltageParam vp;
  vp.col_of_edge.assign(m.n_edges(), -1);
  const std::vector<char> in_tree = spanning_forest(m);
  for (int e = 0; e < m.n_edges(); ++e)
    if (!in_tree[e]) vp.col_of_edge[e] = vp.n_cols++;

  std::vector<std::vector<long long>> M;
  for (int f = 0; f < m.n_faces; ++f) {
    if (m.face_is_hole[f]) continue;
    std::vector<long long> row(vp.n_cols, 0);
    for (Dart d : m.face_darts[f]) {
      const int c = vp.col_of_edge[d >> 1];
      if (c >= 0) row[c] += (d & 1) ? -1 : +1;
    }
    M.push_back(std::move(row));
  }
  const int n_rows = static_cast<int>(M.size());
  const int n_cols = vp.n_cols;
  std::vector<std::vector<long long>> V(n_cols,
                                        std::vector<long long>(n_cols, 0));
  for (int i = 0; i < n_cols; ++i) V[i][i] = 1;

  int t = 0;
  while (t < n_rows && t < n_cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < n_rows; ++i)
      for (int j = t; j < n_cols; ++j)
        if (M[i][j] != 0 &&
            (pi < 0 || std::llabs(M[i][j]) < std::llabs(M[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(M[t], M[pi]);
    if (pj != t) {
      for (std::vector<long long>& row : M) std::swap(row[t], row[pj]);
      for (std::vector<long long>& row : V) std::swap(row[t], row[pj]);
    }
    bool reduced = true;
    for (int i = t + 1; i < n_rows; ++i) {
      if (M[i][t] == 0) continue;
      const long long q = M[i][t] / M[t][t];
      for (int j = t; j < n_cols; ++j) M[i][j] -= q * M[t][j];
      if (M[i][t] != 0) reduced = false;
    }
    for (int j = t + 1; j < n_cols; ++j) {
      if (M[t][j] == 0) continue;
      const long long q = M[t][j] / M[t][t];
      for (int i = t; i < n_rows; ++i) M[i][j] -= q * M[i][t];
      for (int r = 0; r < n_cols; ++r) V[r][j] -= q * V[r][t];
      if (M[t][j] != 0) reduced = false;
    }
    if (!reduced) continue;
    ++t;
  }
  for (int i = 0; i < t; ++i)
    require(std::llabs(M[i][i]) == 1,
            "face constraints must reduce with unit pivots");
  for (int j = t; j < n_cols; ++j) {
    std::vector<long long> g(n_cols);
    for (int r = 0; r < n_cols; ++r) g[r] = V[r][j];
    vp.gens.push_back(std::move(g));
  }
  return vp;
}

// Invariant-factor sequences (each entry at least 2 and dividing the one
// before it) with the given product.
void chains_into(int d, int prev, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (d == 1) {
    out.push_back(cur);
    return;
  }
  for (int m = d; m >= 2; --m) {
    if (d % m) continue;
    if (prev > 0 && prev % m) continue;
    cur.push_back(m);
    chains_into(d / m, m, cur, out);
    cur.pop_back();
  }
}

std::vector<AbelianGroup> groups_of_order(int d) {
  if (d == 1) return {AbelianGroup{{}}};
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  chains_into(d, 0, cur, chains);
  std::sort(chains.begin(), chains.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a > b;
            });
  std::vector<AbelianGroup> out;
  out.reserve(chains.size());
  for (std::vector<int>& c : chains) out.push_back(AbelianGroup{std::move(c)});
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> admissible_assignments(
    const Map& base, const AbelianGroup& group) {
  const VoltageParam vp = voltage_parameters(base);
  const int r = static_cast<int>(vp.gens.size());
  const int n = group.order();
  long long total = 1;
  for (int j = 0; j < r; ++j) {
    total *= n;
    if (total > 200'000)
      fail(ErrorKind::BoundExceeded,
           "too many admissible assignments to enumerate");
  }
  std::vector<std::vector<std::vector<int>>> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> y(r, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int j = r - 1; j >= 0; --j) {  // y[0] is the most significant digit
      y[j] = static_cast<int>(rest % n);
      rest /= n;
    }
    std::vector<std::vector<int>> volts(base.n_edges(), group.decode(0));
    for (int e = 0; e < base.n_edges(); ++e) {
      const int c = vp.col_of_edge[e];
      if (c < 0) continue;
      int acc = 0;
      for (int j = 0; j < r; ++j)
        acc = group.add(acc, group.scale(vp.gens[j][c], y[j]));
      volts[e] = group.decode(acc);
    }
    out.push_back(std::move(volts));
  }
  return out;
}

// ---- weight projection ----

CoverProjection project_weights(const VoltageCover& vc, const Polygon& p) {
  const Map& cm = vc.cover;
  const Map& bm = vc.base;
  {
    bool pin = false;
    try {
      pin = is_pinwheel(cm, p);
    } catch (const Error& err) {
      if (err.kind == ErrorKind::NotAPolygonOfThisConfiguration)
        fail(ErrorKind::NotAPinwheelUpstairs,
             "not a polygon of the cover configuration");
      throw;
    }
    if (!pin)
      fail(ErrorKind::NotAPinwheelUpstairs,
           "the polygon is not a pinwheel of the cover");
  }

  CoverProjection out;
  const int deg = vc.degree();

  // Weight of a base cell: the covering degree over it of the part of the
  // pinwheel above it, counted as pinwheel faces over one representative
  // face of the cell (the count is the same over every face of the cell).
  std::vector<int> rep_face(bm.n_cells, -1);
  for (int f = 0; f < bm.n_faces; ++f) {
    if (bm.face_is_hole[f]) continue;
    if (rep_face[bm.cell_of_face[f]] < 0) rep_face[bm.cell_of_face[f]] = f;
  }
  std::vector<char> face_in_p(cm.n_faces, 0);
  for (int f : p.faces) face_in_p[f] = 1;
  out.weight.assign(bm.n_cells, 0);
  for (int cf = 0; cf < cm.n_faces; ++cf) {
    if (cm.face_is_hole[cf] || !face_in_p[cf]) continue;
    const int bf = bm.face_of[vc.base_dart_of[cm.face_darts[cf][0]]];
    if (bf == rep_face[bm.cell_of_face[bf]]) out.weight[bm.cell_of_face[bf]] += 1;
  }
  out.max_weight = *std::max_element(out.weight.begin(), out.weight.end());
  require(out.max_weight > 0, "a pinwheel covers at least one base cell");

  // Classify the boundary sides once per (base arc, base subarc): all sides
  // over one subarc must see the same flanking base cells.
  std::vector<char> cell_in_p(cm.n_cells, 0);
  for (int c : p.cells) cell_in_p[c] = 1;
  std::set<std::int32_t> boundary_ids;
  std::map<std::pair<std::int32_t, int>, std::tuple<int, int, int>> seg_sides;
  for (const PolygonSide& s : p.sides) {
    if (!s.is_arc) continue;
    boundary_ids.insert(s.arc);
    const Dart bd = vc.base_dart_of[s.darts[0]];
    const std::int32_t ba = vc.base_arc_of[s.arc];
    const int seg = bm.einfo(bd).segment;
    const int r1 = bm.cell_of_dart(bd);
    const int r2 = bm.cell_of_dart(bd ^ 1);
    const auto key = std::make_pair(ba, seg);
    auto it = seg_sides.find(key);
    if (it == seg_sides.end()) {
      seg_sides.emplace(key, std::make_tuple(r1, r2, 1));
    } else {
      require(std::get<0>(it->second) == r1 && std::get<1>(it->second) == r2,
              "boundary lifts over one subarc must flank the same base cells");
      std::get<2>(it->second) += 1;
    }
  }

  for (std::size_t ia = 0; ia < bm.arcs.size(); ++ia) {
    CoverProjection::ArcCounts ac;
    ac.arc = bm.arcs[ia].id;
    for (int g = 0; g < deg; ++g) {
      const std::int32_t lid = static_cast<std::int32_t>(ia) * deg + g;
      if (boundary_ids.count(lid)) {
        ac.boundary += 1;
        continue;
      }
      const ArcEmbedding* emb = cm.find_arc(lid);
      require(emb != nullptr, "every lifted arc exists in the cover");
      bool any_in = false, any_out = false;
      for (Dart d : emb->darts)
        for (Dart side : {d, static_cast<Dart>(d ^ 1)})
          (cell_in_p[cm.cell_of_dart(side)] ? any_in : any_out) = true;
      require(!(any_in && any_out),
              "an arc lift off the pinwheel boundary cannot touch both sides");
      (any_in ? ac.interior : ac.outside) += 1;
    }
    out.arc_counts.push_back(ac);
  }

  // Across every boundary subarc the inside weight is the interior count
  // plus the boundary lifts of that subarc, the outside weight is the
  // interior count alone; in particular weights drop strictly.
  std::map<std::int32_t, int> interior_of;
  for (const CoverProjection::ArcCounts& ac : out.arc_counts)
    interior_of[ac.arc] = ac.interior;
  for (const auto& [key, val] : seg_sides) {
    const auto& [r1, r2, bseg] = val;
    const int i = interior_of.at(key.first);
    require(out.weight[r1] == i + bseg,
            "inside weight must equal interior plus boundary lift counts");
    require(out.weight[r2] == i,
            "outside weight must equal the interior lift count");
    require(out.weight[r1] > out.weight[r2],
            "weight must drop strictly across the pinwheel boundary");
  }

  // The distinguished maximum-weight component: connect max-weight base
  // cells across arc edges, starting from the smallest such cell.
  std::vector<std::vector<int>> cell_adj(bm.n_cells);
  for (int e = 0; e < bm.n_edges(); ++e) {
    if (bm.edges[e].label != EdgeLabel::Arc) continue;
    const int a = bm.cell_of_dart(2 * e), b = bm.cell_of_dart(2 * e + 1);
    if (a != b) {
      cell_adj[a].push_back(b);
      cell_adj[b].push_back(a);
    }
  }
  int seed = -1;
  for (int c = 0; c < bm.n_cells && seed < 0; ++c)
    if (out.weight[c] == out.max_weight) seed = c;
  std::vector<char> comp(bm.n_cells, 0);
  comp[seed] = 1;
  std::vector<int> stack = {seed};
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int d : cell_adj[c])
      if (!comp[d] && out.weight[d] == out.max_weight) {
        comp[d] = 1;
        stack.push_back(d);
      }
  }
  std::vector<int> comp_cells;
  for (int c = 0; c < bm.n_cells; ++c)
    if (comp[c]) comp_cells.push_back(c);

  bool found = false;
  for (const Polygon& q : enumerate_polygons(bm, bm.n_real_faces))
    if (q.cells == comp_cells) {
      out.projected = q;
      found = true;
      break;
    }
  require(found, "the maximum-weight component must form a polygon of the base");
  require(is_virtual_pinwheel(bm, out.projected) != Tristate::No,
          "the projected polygon must pass the virtual-pinwheel test");
  return out;
}

Polygon weight_project(const VoltageCover& vc, const Polygon& p) {
  return project_weights(vc, p).projected;
}

// ---- bounded witness search ----

std::optional<VoltageCover> witness_cover(const Map& base, const Polygon& p,
                                          int max_degree) {
  if (is_virtual_pinwheel(base, p) != Tristate::Yes)
    fail(ErrorKind::NotVirtual,
         "witness search requires a polygon certified as a virtual pinwheel");
  require(max_degree >= 1, "max_degree must be at least 1");
  std::vector<char> base_cell_in_p(base.n_cells, 0);
  for (int c : p.cells) base_cell_in_p[c] = 1;
  for (int deg = 1; deg <= max_degree; ++deg)
    for (const AbelianGroup& g : groups_of_order(deg))
      for (const std::vector<std::vector<int>>& volts :
           admissible_assignments(base, g)) {
        VoltageCover vc = build_cover(base, g, volts);
        for (const Polygon& q : find_pinwheels(vc.cover)) {
          bool over_p = true;
          for (int c : q.cells)
            if (!base_cell_in_p[vc.base_cell_of_cell[c]]) {
              over_p = false;
              break;
            }
          if (over_p) return vc;
        }
      }
  return std::nullopt;
}

}  // namespace pinwheels
