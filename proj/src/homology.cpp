#include "pinwheels/homology.hpp"

#include <cstdlib>
#include <queue>
#include <utility>

#include "pinwheels/errors.hpp"

namespace pinwheels {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  long long r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

Homology::Homology(const Map& m) : map_(&m) {
  const int ne = m.n_edges();
  coord_of_edge_.assign(static_cast<size_t>(ne), -1);
  std::vector<char> in_forest(static_cast<size_t>(ne), 0);
  std::vector<char> seen(static_cast<size_t>(m.n_vertices()), 0);
  const auto rot = vertex_rotations(m);
  for (int root = 0; root < m.n_vertices(); ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    seen[static_cast<size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Dart d : rot[static_cast<size_t>(v)]) {
        const int u = m.head(d);
        if (seen[static_cast<size_t>(u)]) continue;
        seen[static_cast<size_t>(u)] = 1;
        in_forest[static_cast<size_t>(Map::edge_of(d))] = 1;
        q.push(u);
      }
    }
  }
  for (int e = 0; e < ne; ++e)
    if (!in_forest[static_cast<size_t>(e)]) coord_of_edge_[static_cast<size_t>(e)] = n_coords_++;

  // One lattice generator per real face; holes contribute nothing.
  std::vector<std::vector<long long>> rows;
  for (int f = 0; f < m.n_faces; ++f) {
    if (m.face_is_hole[static_cast<size_t>(f)]) continue;
    std::vector<long long> row(static_cast<size_t>(n_coords_), 0);
    for (Dart d : m.face_darts[static_cast<size_t>(f)]) {
      const int c = coord_of_edge_[static_cast<size_t>(Map::edge_of(d))];
      if (c >= 0) row[static_cast<size_t>(c)] += (d & 1) ? -1 : 1;
    }
    rows.push_back(std::move(row));
  }

  // Integer echelon form, column by column: Euclidean elimination until one
  // row carries the column, then that row leaves the pool as a basis row.
  for (int col = 0; col < n_coords_; ++col) {
    for (;;) {
      int pivot = -1;
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i][static_cast<size_t>(col)] != 0 &&
            (pivot < 0 || std::llabs(rows[i][static_cast<size_t>(col)]) <
                              std::llabs(rows[static_cast<size_t>(pivot)][static_cast<size_t>(col)])))
          pivot = static_cast<int>(i);
      if (pivot < 0) break;
      auto& pr = rows[static_cast<size_t>(pivot)];
      bool others = false;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == pivot || rows[i][static_cast<size_t>(col)] == 0) continue;
        const long long q = rows[i][static_cast<size_t>(col)] / pr[static_cast<size_t>(col)];
        if (q != 0)
          for (int c = 0; c < n_coords_; ++c)
            rows[i][static_cast<size_t>(c)] -= q * pr[static_cast<size_t>(c)];
        if (rows[i][static_cast<size_t>(col)] != 0) others = true;
      }
      if (!others) {
        std::vector<long long> r = pr;
        if (r[static_cast<size_t>(col)] < 0)
          for (auto& x : r) x = -x;
        basis_.push_back(std::move(r));
        pivot_col_.push_back(col);
        rows.erase(rows.begin() + pivot);
        break;
      }
    }
  }
}

std::vector<long long> Homology::raw_class(const std::vector<Dart>& walk) const {
  const Map& m = *map_;
  require(!walk.empty(), "homology class of an empty walk");
  std::vector<long long> v(static_cast<size_t>(n_coords_), 0);
  for (size_t i = 0; i < walk.size(); ++i) {
    const Dart d = walk[i];
    require(d >= 0 && d < m.n_darts(), "walk dart out of range");
    const Dart next = walk[(i + 1) % walk.size()];
    require(next >= 0 && next < m.n_darts(), "walk dart out of range");
    require(m.head(d) == m.vertex_of[static_cast<size_t>(next)], "walk is not closed");
    const int c = coord_of_edge_[static_cast<size_t>(Map::edge_of(d))];
    if (c >= 0) v[static_cast<size_t>(c)] += (d & 1) ? -1 : 1;
  }
  return v;
}

void Homology::reduce(std::vector<long long>& v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const long long p = basis_[i][static_cast<size_t>(pivot_col_[i])];
    const long long q = floor_div(v[static_cast<size_t>(pivot_col_[i])], p);
    if (q != 0)
      for (int c = 0; c < n_coords_; ++c)
        v[static_cast<size_t>(c)] -= q * basis_[i][static_cast<size_t>(c)];
  }
}

std::vector<long long> Homology::cycle_class(const std::vector<Dart>& walk) const {
  std::vector<long long> v = raw_class(walk);
  reduce(v);
  return v;
}

bool Homology::is_null_homologous(const std::vector<Dart>& walk) const {
  const std::vector<long long> v = cycle_class(walk);
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace pinwheels
