#pragma once

// Shared test helpers: small named graphs, seeded random families, and
// oracles that stay independent of the code paths they check.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dbe/graph.hpp"
#include "dbe/twins.hpp"

namespace testsupport {

using dbe::edge;
using dbe::graph;
using dbe::vertex;

inline graph path_graph(int n) {
  graph g(n);
  for (vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline graph cycle_graph(int n) {
  graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline graph complete_graph(int n) {
  graph g(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline graph complete_bipartite(int a, int b) {
  graph g(a + b);
  for (vertex u = 0; u < a; ++u)
    for (vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

// Vertices of h are shifted past those of g.
inline graph disjoint_union(const graph& g, const graph& h) {
  graph out(g.n() + h.n());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(g.n() + u, g.n() + v);
  return out;
}

// Two disjoint edges.
inline graph two_k2() { return graph(4, {{0, 1}, {2, 3}}); }

// K4 minus one edge, realized as the middle vertex of a path split into
// adjacent twins: vertices 1 and 3 are the twin pair.
inline graph diamond_graph() {
  return graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// 14-vertex reference instance: a 7-vertex bipartite base with five of its
// vertices split into blobs of sizes 3,2,2,3,2 and two left trivial.
// Blob layout: {0,1,2} {3,4} {5} {6} {7,8} {9,10,11} {12,13}.
inline graph split14_graph() {
  return graph(
      14,
      {
          {0, 1},   {0, 2},   {1, 2},                                  // blob A clique
          {0, 3},   {0, 4},   {1, 3},  {1, 4},  {2, 3},  {2, 4},       // A - B
          {0, 6},   {1, 6},   {2, 6},                                  // A - v1
          {3, 4},                                                      // blob B clique
          {3, 5},   {4, 5},                                            // B - u3
          {3, 7},   {3, 8},   {4, 7},  {4, 8},                         // B - C
          {3, 12},  {3, 13},  {4, 12}, {4, 13},                        // B - E
          {5, 9},   {5, 10},  {5, 11},                                 // u3 - D
          {6, 7},   {6, 8},                                            // v1 - C
          {7, 8},                                                      // blob C clique
          {7, 9},   {7, 10},  {7, 11}, {8, 9},  {8, 10}, {8, 11},      // C - D
          {9, 10},  {9, 11},  {10, 11},                                // blob D clique
          {9, 12},  {9, 13},  {10, 12}, {10, 13}, {11, 12}, {11, 13},  // D - E
          {12, 13},                                                    // blob E clique
      });
}

// Erdos-Renyi draw with deterministic pair order.
inline graph random_graph(int n, double edge_prob, dbe::det_rng& rng) {
  graph g(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
  return g;
}

// Connected bipartite graph: a random spanning tree grown by attaching each
// new vertex to an already placed vertex of the opposite side, plus extra
// cross edges.
inline graph random_connected_bipartite(int left, int right, double extra_prob,
                                        dbe::det_rng& rng) {
  graph g(left + right);
  g.add_edge(0, left);
  int nl = 1, nr = 1;
  while (nl < left || nr < right) {
    if (nl < left) {
      g.add_edge(nl, left + rng.below(nr));
      ++nl;
    }
    if (nr < right) {
      g.add_edge(rng.below(nl), left + nr);
      ++nr;
    }
  }
  for (vertex i = 0; i < left; ++i)
    for (vertex j = 0; j < right; ++j)
      if (!g.has_edge(i, left + j) && rng.bernoulli(extra_prob))
        g.add_edge(i, left + j);
  return g;
}

// Exhaustive simple-cycle search; independent of the BFS 2-coloring used by
// bipartition(). Only intended for small n.
inline bool odd_cycle_dfs(const graph& g, vertex start, vertex cur,
                          std::vector<char>& on_path, int path_edges) {
  for (vertex nxt : g.neighbors(cur)) {
    if (nxt == start) {
      const int cycle_len = path_edges + 1;
      if (cycle_len >= 3 && cycle_len % 2 == 1) return true;
      continue;
    }
    if (nxt < start || on_path[static_cast<std::size_t>(nxt)]) continue;
    on_path[static_cast<std::size_t>(nxt)] = 1;
    if (odd_cycle_dfs(g, start, nxt, on_path, path_edges + 1)) return true;
    on_path[static_cast<std::size_t>(nxt)] = 0;
  }
  return false;
}

inline bool has_odd_cycle_bruteforce(const graph& g) {
  for (vertex s = 0; s < g.n(); ++s) {
    std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
    on_path[static_cast<std::size_t>(s)] = 1;
    if (odd_cycle_dfs(g, s, s, on_path, 0)) return true;
  }
  return false;
}

// Number of blobs a vertex set meets partially (neither skips nor swallows).
inline int partially_met_blobs(const std::vector<vertex>& members,
                               const dbe::blob_partition& bp) {
  std::vector<int> hit(bp.blobs.size(), 0);
  for (vertex v : members) ++hit[static_cast<std::size_t>(bp.to_base[static_cast<std::size_t>(v)])];
  int partial = 0;
  for (std::size_t b = 0; b < bp.blobs.size(); ++b)
    if (hit[b] > 0 && hit[b] < static_cast<int>(bp.blobs[b].size())) ++partial;
  return partial;
}

struct cli_result {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs the CLI binary and captures stdout; stderr goes to a scratch file so
// usage errors stay quiet in test logs.
inline cli_result run_cli(const std::string& args) {
#ifndef DBE_CLI_PATH
#error "DBE_CLI_PATH must point at the built CLI binary"
#endif
  const std::string cmd = std::string(DBE_CLI_PATH) + " " + args + " 2>/dev/null";
  cli_result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace testsupport
