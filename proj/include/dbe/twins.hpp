#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dbe/graph.hpp"
#include "dbe/lines.hpp"

namespace dbe {

/// Split v into two adjacent true twins: the new vertex v' gets id n and
/// N(v') = N(v) plus v itself.
inline graph split_vertex(const graph& g, vertex v) {
  g.check_vertex(v);
  graph out(g.n() + 1);
  for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
  const vertex twin = g.n();
  for (vertex u : g.neighbors(v)) out.add_edge(twin, u);
  out.add_edge(v, twin);
  return out;
}

/// Equivalence classes of N[u] = N[v]. Every class is a clique. Classes are
/// ordered by minimum member, members ascending.
inline std::vector<std::vector<vertex>> true_twin_classes(const graph& g) {
  std::map<std::vector<vertex>, std::vector<vertex>> by_nbhd;
  for (vertex v = 0; v < g.n(); ++v)
    by_nbhd[g.closed_neighborhood(v)].push_back(v);
  std::vector<std::vector<vertex>> classes;
  classes.reserve(by_nbhd.size());
  for (auto& [_, members] : by_nbhd) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

struct quotient_result {
  graph base;
  std::vector<vertex> to_base;  // composed vertex map, original -> fixpoint
};

/// Contract every non-singleton true-twin class to one vertex, all classes
/// of a round at once, and repeat until every class is a singleton.
inline quotient_result twin_quotient(const graph& g) {
  graph cur = g;
  std::vector<vertex> to_base(static_cast<std::size_t>(g.n()));
  std::iota(to_base.begin(), to_base.end(), 0);
  for (;;) {
    const auto classes = true_twin_classes(cur);
    if (static_cast<int>(classes.size()) == cur.n()) break;
    std::vector<vertex> remap(static_cast<std::size_t>(cur.n()));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (vertex v : classes[i]) remap[static_cast<std::size_t>(v)] = static_cast<vertex>(i);
    graph next(static_cast<int>(classes.size()));
    for (const auto& [u, v] : cur.edges()) {
      const vertex a = remap[static_cast<std::size_t>(u)];
      const vertex b = remap[static_cast<std::size_t>(v)];
      if (a != b && !next.has_edge(a, b)) next.add_edge(a, b);
    }
    for (vertex& f : to_base) f = remap[static_cast<std::size_t>(f)];
    cur = std::move(next);
  }
  return {std::move(cur), std::move(to_base)};
}

/// Surjection f from graph vertices onto base vertices whose preimages
/// (blobs) are cliques of pairwise true twins, with all-or-nothing adjacency
/// between blobs mirrored by base edges. A blob is rich when it has at least
/// two members, trivial when it is a singleton.
struct blob_partition {
  std::vector<vertex> to_base;             // f
  std::vector<std::vector<vertex>> blobs;  // preimages, indexed by base vertex
  graph base;
  std::vector<bool> rich;                  // per blob: size >= 2
};

inline blob_partition make_blob_partition(graph base, std::vector<vertex> to_base) {
  blob_partition bp;
  bp.base = std::move(base);
  bp.to_base = std::move(to_base);
  bp.blobs.assign(static_cast<std::size_t>(bp.base.n()), {});
  for (vertex v = 0; v < static_cast<vertex>(bp.to_base.size()); ++v) {
    bp.base.check_vertex(bp.to_base[static_cast<std::size_t>(v)]);
    bp.blobs[static_cast<std::size_t>(bp.to_base[static_cast<std::size_t>(v)])].push_back(v);
  }
  bp.rich.resize(bp.blobs.size());
  for (std::size_t b = 0; b < bp.blobs.size(); ++b)
    bp.rich[b] = bp.blobs[b].size() >= 2;
  return bp;
}

/// Full check of the blob_partition contract against g.
inline bool validate_blob_partition(const graph& g, const blob_partition& bp) {
  if (static_cast<int>(bp.to_base.size()) != g.n()) return false;
  if (static_cast<int>(bp.blobs.size()) != bp.base.n()) return false;
  if (bp.rich.size() != bp.blobs.size()) return false;
  std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t b = 0; b < bp.blobs.size(); ++b) {
    const auto& blob = bp.blobs[b];
    if (blob.empty()) return false;  // f must be surjective
    if (bp.rich[b] != (blob.size() >= 2)) return false;
    for (vertex v : blob) {
      if (!g.has_vertex(v)) return false;
      if (bp.to_base[static_cast<std::size_t>(v)] != static_cast<vertex>(b)) return false;
      if (covered[static_cast<std::size_t>(v)]) return false;
      covered[static_cast<std::size_t>(v)] = 1;
    }
    // clique of pairwise true twins
    const auto nbhd = g.closed_neighborhood(blob.front());
    for (vertex v : blob)
      if (g.closed_neighborhood(v) != nbhd) return false;
  }
  for (char c : covered)
    if (!c) return false;
  // blockwise adjacency mirrors base edges, all-or-nothing
  for (std::size_t x = 0; x < bp.blobs.size(); ++x) {
    for (std::size_t y = x + 1; y < bp.blobs.size(); ++y) {
      int present = 0, absent = 0;
      for (vertex u : bp.blobs[x])
        for (vertex v : bp.blobs[y])
          (g.has_edge(u, v) ? present : absent)++;
      if (present && absent) return false;
      if ((present > 0) != bp.base.has_edge(static_cast<vertex>(x), static_cast<vertex>(y)))
        return false;
    }
  }
  return true;
}

/// Present iff the twin-quotient fixpoint is bipartite; the partition then
/// uses the fixpoint as base and the composed map as f. The recovered base
/// may be smaller than any particular generating base.
inline std::optional<blob_partition> recognize_split_of_bipartite(const graph& g) {
  if (g.n() < 1) throw too_small("recognition needs at least 1 vertex");
  auto q = twin_quotient(g);
  if (!bipartition(q.base)) return std::nullopt;
  return make_blob_partition(std::move(q.base), std::move(q.to_base));
}

/// Counting statistics of a blob partition: rich_vertex_count (p) and
/// flagged_blob_count (k, rich blobs with at least one trivial neighbour
/// blob) drive the line lower bound.
struct blob_stats {
  long long rich_vertex_count = 0;
  long long flagged_blob_count = 0;
  long long max_trivial_neighbors = 0;   // over rich blobs
  std::optional<int> chosen_blob;        // lowest rich blob attaining the max
};

inline blob_stats compute_blob_stats(const graph& g, const blob_partition& bp) {
  if (!validate_blob_partition(g, bp))
    throw invalid_partition("blob partition does not match the graph");
  blob_stats s;
  for (std::size_t b = 0; b < bp.blobs.size(); ++b) {
    if (!bp.rich[b]) continue;
    s.rich_vertex_count += static_cast<long long>(bp.blobs[b].size());
    long long trivial_neighbors = 0;
    for (vertex nb : bp.base.neighbors(static_cast<vertex>(b)))
      if (!bp.rich[static_cast<std::size_t>(nb)]) ++trivial_neighbors;
    if (trivial_neighbors > 0) ++s.flagged_blob_count;
    // blobs are scanned in ascending id order, so a strict > keeps the
    // lowest maximizer
    if (!s.chosen_blob.has_value() ||
        trivial_neighbors > s.max_trivial_neighbors) {
      s.max_trivial_neighbors = trivial_neighbors;
      s.chosen_blob = static_cast<int>(b);
    }
  }
  return s;
}

/// Lift a base line through the blob map: {u, v} plus every vertex whose
/// image lies on the base line but differs from both endpoint images.
inline std::vector<vertex> pullback_line(const std::vector<vertex>& base_line,
                                         const blob_partition& bp,
                                         vertex u, vertex v) {
  const vertex fu = bp.to_base.at(static_cast<std::size_t>(u));
  const vertex fv = bp.to_base.at(static_cast<std::size_t>(v));
  if (fu == fv)
    throw same_blob("pullback endpoints map to the same base vertex " +
                    std::to_string(fu));
  std::vector<char> on_line(static_cast<std::size_t>(bp.base.n()), 0);
  for (vertex x : base_line) on_line[static_cast<std::size_t>(x)] = 1;
  std::vector<vertex> out;
  for (vertex z = 0; z < static_cast<vertex>(bp.to_base.size()); ++z) {
    const vertex fz = bp.to_base[static_cast<std::size_t>(z)];
    if (z == u || z == v ||
        (on_line[static_cast<std::size_t>(fz)] && fz != fu && fz != fv))
      out.push_back(z);
  }
  return out;
}

/// Replayable construction record: a bipartite base plus the sequence of
/// split vertices.
struct split_trace {
  graph base;
  std::vector<vertex> steps;
  std::uint64_t seed = 0;
};

inline graph replay_trace(const split_trace& t) {
  graph g = t.base;
  for (vertex v : t.steps) g = split_vertex(g, v);
  return g;
}

/// Deterministic RNG helpers on top of mt19937_64; only the fully specified
/// engine output is consumed, so a seed reproduces byte-identical instances.
class det_rng {
 public:
  explicit det_rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  int below(int bound) {  // uniform over [0, bound)
    if (bound <= 0) throw bad_parameter("rng bound must be positive");
    return static_cast<int>(eng_() % static_cast<std::uint64_t>(bound));
  }

  bool bernoulli(double p) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 eng_;
};

struct instance {
  graph g;
  split_trace trace;
  blob_partition blobs;  // ground truth induced by the trace
};

/// Random bipartite base (left ids 0..left-1, right ids left..left+right-1,
/// each cross pair an edge with probability edge_prob) followed by `splits`
/// uniformly random vertex splits. Deterministic for a fixed seed.
/// Disconnected bases are kept as-is.
inline instance generate_instance(int left, int right, double edge_prob,
                                  int splits, std::uint64_t seed) {
  if (left < 1 || right < 1)
    throw bad_parameter("generate_instance needs left >= 1 and right >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw bad_parameter("edge probability must lie in [0, 1]");
  if (splits < 0) throw bad_parameter("split count must be non-negative");

  det_rng rng(seed);
  graph base(left + right);
  for (vertex i = 0; i < left; ++i)
    for (vertex j = 0; j < right; ++j)
      if (rng.bernoulli(edge_prob)) base.add_edge(i, left + j);

  instance out;
  out.trace.base = base;
  out.trace.seed = seed;
  out.g = base;
  std::vector<vertex> origin(static_cast<std::size_t>(base.n()));
  std::iota(origin.begin(), origin.end(), 0);
  for (int s = 0; s < splits; ++s) {
    const vertex v = rng.below(out.g.n());
    out.trace.steps.push_back(v);
    origin.push_back(origin[static_cast<std::size_t>(v)]);
    out.g = split_vertex(out.g, v);
  }
  out.blobs = make_blob_partition(std::move(base), std::move(origin));
  return out;
}

}  // namespace dbe
