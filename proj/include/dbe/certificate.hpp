#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dbe/graph.hpp"
#include "dbe/lines.hpp"
#include "dbe/twins.hpp"

namespace dbe {

enum class certificate_kind { universal, disconnected, families };

inline const char* to_string(certificate_kind k) {
  switch (k) {
    case certificate_kind::universal: return "universal";
    case certificate_kind::disconnected: return "disconnected";
    default: return "families";
  }
}

inline std::optional<certificate_kind> certificate_kind_from(const std::string& s) {
  if (s == "universal") return certificate_kind::universal;
  if (s == "disconnected") return certificate_kind::disconnected;
  if (s == "families") return certificate_kind::families;
  return std::nullopt;
}

/// Independently checkable witness that a graph has the de Bruijn-Erdos
/// property: either one universal line or at least n distinct lines, all
/// listed explicitly as member sets. `universal_pair` and `family_sizes`
/// are advisory (not serialized, not needed by the checker).
struct certificate {
  certificate_kind kind = certificate_kind::families;
  int n = 0;
  std::optional<edge> universal_pair;
  std::vector<std::vector<vertex>> lines;  // member sets, construction order
  // families: rich-pair / trivial-pair / rich-to-trivial counts;
  // disconnected: cross-component / extra counts
  std::array<std::size_t, 3> family_sizes{0, 0, 0};
  long long claimed_count = 0;

  void recount() {
    std::set<std::vector<vertex>> distinct(lines.begin(), lines.end());
    claimed_count = static_cast<long long>(distinct.size());
  }
};

/// Run the decision procedure for graphs built from a bipartite base by twin
/// splits and emit a certificate:
///   n = 2              -> the only pair generates the whole set (universal)
///   disconnected       -> all cross-component two-point lines, plus the line
///                         of the lowest pair inside a non-singleton
///                         component when those alone fall short of n
///   adjacent trivial blobs (covers the unsplit, p = 0 case)
///                      -> universal line through the lowest such pair
///   p = n              -> lines of all C(n,2) pairs
///   otherwise          -> three families: all rich-blob pairs, all pairs of
///                         trivial blobs around the rich blob with the most
///                         trivial neighbours, and one line per rich vertex
///                         of a flagged blob towards its lowest trivial
///                         neighbour blob
inline certificate certify(const graph& g) {
  if (g.n() < 2) throw too_small("certification needs at least 2 vertices");
  const auto bp = recognize_split_of_bipartite(g);
  if (!bp)
    throw not_in_class(
        "twin-quotient fixpoint is not bipartite; graph is not a split of a "
        "bipartite graph");

  const auto d = apsp(g);
  certificate c;
  c.n = g.n();

  const auto full_line = [&](vertex a, vertex b) {
    return line_of(g, d, a, b).members;
  };

  if (g.n() == 2) {
    // the line of the unique pair always contains both vertices
    c.kind = certificate_kind::universal;
    c.universal_pair = edge{0, 1};
    c.lines.push_back(full_line(0, 1));
    c.recount();
    return c;
  }

  const auto comps = components(g);
  if (comps.size() > 1) {
    c.kind = certificate_kind::disconnected;
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (vertex v : comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (vertex u = 0; u < g.n(); ++u)
      for (vertex v = u + 1; v < g.n(); ++v)
        if (comp_of[static_cast<std::size_t>(u)] != comp_of[static_cast<std::size_t>(v)])
          c.lines.push_back(full_line(u, v));
    c.family_sizes[0] = c.lines.size();
    if (static_cast<long long>(c.lines.size()) < g.n()) {
      // exactly the two-component case with a singleton side: add one line
      // from inside the other component
      for (const auto& comp : comps) {
        if (comp.size() >= 2) {
          c.lines.push_back(full_line(comp[0], comp[1]));
          c.family_sizes[1] = 1;
          break;
        }
      }
    }
    c.recount();
    return c;
  }

  // connected from here on; look for an adjacent pair of trivial blobs
  for (vertex u = 0; u < g.n(); ++u) {
    if (bp->rich[static_cast<std::size_t>(bp->to_base[static_cast<std::size_t>(u)])]) continue;
    for (vertex v = u + 1; v < g.n(); ++v) {
      if (bp->rich[static_cast<std::size_t>(bp->to_base[static_cast<std::size_t>(v)])]) continue;
      if (!g.has_edge(u, v)) continue;
      c.kind = certificate_kind::universal;
      c.universal_pair = edge{u, v};
      c.lines.push_back(full_line(u, v));
      assert(static_cast<int>(c.lines.back().size()) == g.n());
      c.recount();
      return c;
    }
  }

  const auto stats = compute_blob_stats(g, *bp);
  const long long p = stats.rich_vertex_count;
  c.kind = certificate_kind::families;

  if (p == g.n()) {
    for (vertex u = 0; u < g.n(); ++u)
      for (vertex v = u + 1; v < g.n(); ++v)
        c.lines.push_back(full_line(u, v));
    c.family_sizes[0] = c.lines.size();
    c.recount();
    return c;
  }

  // 2 <= p <= n-1 and trivial blobs are independent, so every trivial blob
  // hangs off a rich one and k >= 1
  assert(p >= 2 && stats.flagged_blob_count >= 1 && stats.chosen_blob.has_value());

  std::vector<vertex> rich_vertices;
  for (vertex v = 0; v < g.n(); ++v)
    if (bp->rich[static_cast<std::size_t>(bp->to_base[static_cast<std::size_t>(v)])])
      rich_vertices.push_back(v);
  for (std::size_t i = 0; i < rich_vertices.size(); ++i)
    for (std::size_t j = i + 1; j < rich_vertices.size(); ++j)
      c.lines.push_back(full_line(rich_vertices[i], rich_vertices[j]));
  c.family_sizes[0] = c.lines.size();

  const int big = *stats.chosen_blob;
  std::vector<vertex> around_big;  // trivial-blob vertices adjacent to it
  for (vertex nb : bp->base.neighbors(big))
    if (!bp->rich[static_cast<std::size_t>(nb)])
      around_big.push_back(bp->blobs[static_cast<std::size_t>(nb)].front());
  std::sort(around_big.begin(), around_big.end());
  for (std::size_t i = 0; i < around_big.size(); ++i)
    for (std::size_t j = i + 1; j < around_big.size(); ++j)
      c.lines.push_back(full_line(around_big[i], around_big[j]));
  c.family_sizes[1] = c.lines.size() - c.family_sizes[0];

  for (int b = 0; b < bp->base.n(); ++b) {
    if (!bp->rich[static_cast<std::size_t>(b)]) continue;
    vertex anchor = -1;  // lowest trivial neighbour blob
    for (vertex nb : bp->base.neighbors(b)) {
      if (!bp->rich[static_cast<std::size_t>(nb)]) {
        anchor = bp->blobs[static_cast<std::size_t>(nb)].front();
        break;
      }
    }
    if (anchor < 0) continue;  // not a flagged blob
    for (vertex u : bp->blobs[static_cast<std::size_t>(b)])
      c.lines.push_back(full_line(u, anchor));
  }
  c.family_sizes[2] = c.lines.size() - c.family_sizes[0] - c.family_sizes[1];

  c.recount();
  assert(c.claimed_count == static_cast<long long>(c.lines.size()));
  return c;
}

/// Independent checker: every listed member set must be a line of g, the
/// sets must be pairwise distinct and match claimed_count, and the verdict
/// needs either a verified universal line or at least n of them. Pure
/// function of g and the certificate; returns false on any violation.
inline bool verify_certificate(const graph& g, const certificate& c) {
  if (c.n != g.n() || g.n() < 2) return false;
  if (c.lines.empty()) return false;

  std::set<std::vector<vertex>> genuine;
  for (const line& l : all_lines(g)) genuine.insert(l.members);

  std::set<std::vector<vertex>> listed;
  for (const auto& members : c.lines) {
    if (!genuine.count(members)) return false;
    if (!listed.insert(members).second) return false;  // duplicate
  }
  if (c.claimed_count != static_cast<long long>(listed.size())) return false;

  if (c.kind == certificate_kind::universal) {
    if (c.lines.size() != 1) return false;
    return static_cast<int>(c.lines.front().size()) == g.n();
  }
  return c.claimed_count >= static_cast<long long>(g.n());
}

}  // namespace dbe
