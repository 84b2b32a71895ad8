#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dbe/graph.hpp"

namespace dbe {

/// b lies between a and c when dist(a,b) + dist(b,c) = dist(a,c).
/// A triple with an unreachable pairwise distance is never a betweenness
/// witness, so cross-component pairs generate two-point lines.
inline bool is_between(const distance_matrix& d, vertex a, vertex b, vertex c) {
  const int ab = d(a, b);
  const int bc = d(b, c);
  const int ac = d(a, c);
  if (ab == distance_matrix::unreachable ||
      bc == distance_matrix::unreachable ||
      ac == distance_matrix::unreachable)
    return false;
  return ab + bc == ac;
}

/// a, b, c are collinear when pairwise distinct and one of them lies between
/// the other two.
inline bool is_collinear(const distance_matrix& d, vertex a, vertex b, vertex c) {
  if (a == b || a == c || b == c) return false;
  return is_between(d, a, b, c) || is_between(d, b, a, c) ||
         is_between(d, a, c, b);
}

/// The line through a and b: {a, b} plus every vertex collinear with them.
/// Equality and deduplication consider only `members`; `generator` is the
/// lowest pair known to generate the set and is advisory metadata.
struct line {
  std::vector<vertex> members;  // ascending
  edge generator;

  friend bool operator==(const line& x, const line& y) {
    return x.members == y.members;
  }
};

inline line line_of(const graph& g, const distance_matrix& d, vertex a, vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw equal_endpoints(a);
  line out;
  out.generator = make_edge(a, b);
  for (vertex c = 0; c < g.n(); ++c)
    if (c == a || c == b || is_collinear(d, a, b, c)) out.members.push_back(c);
  return out;
}

inline line line_of(const graph& g, vertex a, vertex b) {
  return line_of(g, apsp(g), a, b);
}

/// Distinct lines over all vertex pairs, deduplicated by member set and
/// ordered lexicographically by members. Each line keeps the first generator
/// pair in (a, b) lexicographic order.
inline std::vector<line> all_lines(const graph& g, const distance_matrix& d) {
  if (g.n() < 2) throw too_small("line enumeration needs at least 2 vertices");
  std::map<std::vector<vertex>, edge> seen;
  for (vertex a = 0; a < g.n(); ++a)
    for (vertex b = a + 1; b < g.n(); ++b)
      seen.emplace(line_of(g, d, a, b).members, edge{a, b});
  std::vector<line> out;
  out.reserve(seen.size());
  for (auto& [members, gen] : seen) out.push_back(line{members, gen});
  return out;
}

inline std::vector<line> all_lines(const graph& g) {
  return all_lines(g, apsp(g));
}

/// Lowest pair (lexicographic) whose line covers every vertex, if any.
inline std::optional<edge> find_universal_line(const graph& g,
                                               const distance_matrix& d) {
  if (g.n() < 2) throw too_small("universal line needs at least 2 vertices");
  for (vertex a = 0; a < g.n(); ++a)
    for (vertex b = a + 1; b < g.n(); ++b)
      if (static_cast<int>(line_of(g, d, a, b).members.size()) == g.n())
        return edge{a, b};
  return std::nullopt;
}

inline std::optional<edge> find_universal_line(const graph& g) {
  return find_universal_line(g, apsp(g));
}

/// Outcome of the de Bruijn-Erdos check: the metric space either admits a
/// universal line or determines at least n distinct lines.
struct dbe_verdict {
  int n = 0;
  std::optional<edge> universal_pair;
  long long distinct_line_count = 0;
  bool holds = false;
};

inline dbe_verdict check_dbe(const graph& g) {
  const auto d = apsp(g);
  const auto lines = all_lines(g, d);
  dbe_verdict v;
  v.n = g.n();
  v.distinct_line_count = static_cast<long long>(lines.size());
  for (const line& l : lines)
    if (static_cast<int>(l.members.size()) == g.n()) {
      v.universal_pair = l.generator;
      break;
    }
  v.holds = v.universal_pair.has_value() || v.distinct_line_count >= v.n;
  return v;
}

}  // namespace dbe
