#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dbe/errors.hpp"

namespace dbe {

using vertex = int;

/// Unordered edge, normalized so that first < second.
using edge = std::pair<vertex, vertex>;

inline edge make_edge(vertex u, vertex v) {
  return u < v ? edge{u, v} : edge{v, u};
}

/// Simple undirected graph on dense vertex ids 0..n-1. Adjacency lists are
/// kept sorted; self-loops and duplicate edges are rejected at insertion.
class graph {
 public:
  graph() = default;

  explicit graph(int n) {
    if (n < 0) throw bad_parameter("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
  }

  graph(int n, const std::vector<edge>& edges) : graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  bool has_vertex(vertex v) const { return v >= 0 && v < n(); }

  void check_vertex(vertex v) const {
    if (!has_vertex(v)) throw vertex_out_of_range(v);
  }

  bool has_edge(vertex u, vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void add_edge(vertex u, vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw self_loop(u);
    if (has_edge(u, v)) throw duplicate_edge(std::min(u, v), std::max(u, v));
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++m_;
  }

  const std::vector<vertex>& neighbors(vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(vertex v) const {
    return static_cast<int>(neighbors(v).size());
  }

  /// All edges in ascending (u, v) order with u < v.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (vertex u = 0; u < n(); ++u)
      for (vertex v : adj_[static_cast<std::size_t>(u)])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  /// N[v] = N(v) together with v, ascending.
  std::vector<vertex> closed_neighborhood(vertex v) const {
    std::vector<vertex> out = neighbors(v);
    insert_sorted(out, v);
    return out;
  }

  friend bool operator==(const graph& a, const graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  static void insert_sorted(std::vector<vertex>& xs, vertex v) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
  }

  std::vector<std::vector<vertex>> adj_;
  int m_ = 0;
};

/// All-pairs hop counts. Entries between different components hold the
/// `unreachable` sentinel; it never takes part in arithmetic.
class distance_matrix {
 public:
  static constexpr int unreachable = -1;

  distance_matrix() = default;

  distance_matrix(int n, std::vector<int> cells) : n_(n), d_(std::move(cells)) {
    if (d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw bad_parameter("distance matrix cell count does not match n*n");
  }

  int n() const { return n_; }

  int operator()(vertex u, vertex v) const {
    check(u);
    check(v);
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }

  bool reachable(vertex u, vertex v) const {
    return (*this)(u, v) != unreachable;
  }

 private:
  void check(vertex v) const {
    if (v < 0 || v >= n_) throw vertex_out_of_range(v);
  }

  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every source.
inline distance_matrix apsp(const graph& g) {
  const int n = g.n();
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                         distance_matrix::unreachable);
  std::vector<vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (vertex s = 0; s < n; ++s) {
    int* row = cells.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
    queue.clear();
    queue.push_back(s);
    row[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex u = queue[head];
      for (vertex v : g.neighbors(u)) {
        if (row[v] == distance_matrix::unreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return distance_matrix(n, std::move(cells));
}

/// Disjoint vertex blocks covering 0..n-1, each internally connected and
/// pairwise non-adjacent.
using component_partition = std::vector<std::vector<vertex>>;

/// Connected components, ordered by their minimum vertex id, members
/// ascending.
inline component_partition components(const graph& g) {
  const int n = g.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  component_partition blocks;
  std::vector<vertex> queue;
  for (vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.clear();
    queue.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (vertex v : g.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    blocks.push_back(queue);
  }
  return blocks;
}

inline bool is_connected(const graph& g) {
  return components(g).size() <= 1;
}

/// Proper 2-coloring (values 0/1) when the graph is bipartite, absent
/// otherwise.
inline std::optional<std::vector<int>> bipartition(const graph& g) {
  const int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<vertex> queue;
  for (vertex s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    queue.clear();
    queue.push_back(s);
    color[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex u = queue[head];
      for (vertex v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] =
              1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace dbe
