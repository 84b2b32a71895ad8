#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dbe/bound.hpp"
#include "dbe/twins.hpp"
#include "support.hpp"

using namespace dbe;
using namespace testsupport;

namespace {

// fresh instances drawn from a small seeded family
std::vector<instance> sample_instances(int count, std::uint64_t seed_base) {
  std::vector<instance> out;
  dbe::det_rng rng(seed_base);
  while (static_cast<int>(out.size()) < count) {
    const int left = 1 + rng.below(4);
    const int right = 1 + rng.below(4);
    const int splits = rng.below(6);
    const double prob = 0.25 + 0.25 * rng.below(4);
    out.push_back(generate_instance(left, right, prob, splits, rng.raw()));
  }
  return out;
}

}  // namespace

TEST_CASE("split_vertex creates an adjacent true twin", "[twins]") {
  CHECK(split_vertex(graph(1), 0) == complete_graph(2));
  CHECK(split_vertex(complete_graph(2), 0) == complete_graph(3));
  CHECK(split_vertex(path_graph(3), 1) == diamond_graph());
  CHECK_THROWS_AS(split_vertex(graph(2), 5), vertex_out_of_range);

  // the split vertex and its copy share a closed neighborhood
  dbe::det_rng rng(0x731701);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + rng.below(9);
    const graph g = random_graph(n, 0.3, rng);
    const vertex v = rng.below(n);
    const graph h = split_vertex(g, v);
    CHECK(h.n() == n + 1);
    CHECK(h.closed_neighborhood(v) == h.closed_neighborhood(n));
    const auto classes = true_twin_classes(h);
    for (const auto& cls : classes)
      if (std::binary_search(cls.begin(), cls.end(), v))
        CHECK(std::binary_search(cls.begin(), cls.end(), n));
  }
}

TEST_CASE("true_twin_classes groups identical closed neighborhoods", "[twins]") {
  CHECK(true_twin_classes(complete_graph(3)) ==
        std::vector<std::vector<vertex>>{{0, 1, 2}});
  CHECK(true_twin_classes(cycle_graph(4)) ==
        std::vector<std::vector<vertex>>{{0}, {1}, {2}, {3}});
  CHECK(true_twin_classes(diamond_graph()) ==
        std::vector<std::vector<vertex>>{{0}, {1, 3}, {2}});
}

TEST_CASE("twin_quotient contracts to a twin-free fixpoint", "[twins]") {
  const auto k3 = twin_quotient(complete_graph(3));
  CHECK(k3.base.n() == 1);
  CHECK(k3.to_base == std::vector<vertex>{0, 0, 0});

  const auto dia = twin_quotient(diamond_graph());
  CHECK(dia.base == path_graph(3));
  CHECK(dia.to_base == std::vector<vertex>{0, 1, 2, 1});

  const auto c5 = twin_quotient(cycle_graph(5));
  CHECK(c5.base == cycle_graph(5));
  CHECK(c5.to_base == std::vector<vertex>{0, 1, 2, 3, 4});

  // fixpoint means singleton classes only
  dbe::det_rng rng(0x731702);
  for (int trial = 0; trial < 30; ++trial) {
    const graph g = random_graph(2 + rng.below(9), 0.4, rng);
    const auto q = twin_quotient(g);
    CHECK(static_cast<int>(true_twin_classes(q.base).size()) == q.base.n());
  }
}

TEST_CASE("recognition accepts exactly bipartite fixpoints", "[twins]") {
  const auto dia = recognize_split_of_bipartite(diamond_graph());
  REQUIRE(dia.has_value());
  CHECK(dia->base == path_graph(3));
  CHECK(dia->blobs == std::vector<std::vector<vertex>>{{0}, {1, 3}, {2}});
  CHECK(dia->rich == std::vector<bool>{false, true, false});
  CHECK(validate_blob_partition(diamond_graph(), *dia));

  CHECK_FALSE(recognize_split_of_bipartite(cycle_graph(5)).has_value());
  CHECK_FALSE(recognize_split_of_bipartite(cycle_graph(7)).has_value());

  const auto c4 = recognize_split_of_bipartite(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->base == cycle_graph(4));
  for (bool r : c4->rich) CHECK_FALSE(r);

  CHECK_THROWS_AS(recognize_split_of_bipartite(graph(0)), too_small);
}

TEST_CASE("blob statistics count rich vertices and flagged blobs", "[twins]") {
  const graph dia = diamond_graph();
  const auto bp = recognize_split_of_bipartite(dia);
  REQUIRE(bp.has_value());
  const auto s = compute_blob_stats(dia, *bp);
  CHECK(s.rich_vertex_count == 2);
  CHECK(s.flagged_blob_count == 1);
  CHECK(s.max_trivial_neighbors == 2);
  CHECK(s.chosen_blob == 1);

  const graph c4 = cycle_graph(4);
  const auto s4 = compute_blob_stats(c4, *recognize_split_of_bipartite(c4));
  CHECK(s4.rich_vertex_count == 0);
  CHECK(s4.flagged_blob_count == 0);
  CHECK_FALSE(s4.chosen_blob.has_value());

  // tampered partition is rejected
  auto broken = *bp;
  broken.rich[0] = true;
  CHECK_THROWS_AS(compute_blob_stats(dia, broken), invalid_partition);
}

TEST_CASE("the 14-vertex reference instance has p = 12 and k = 4", "[twins]") {
  const graph g = split14_graph();
  CHECK(g.m() == 45);
  const auto bp = recognize_split_of_bipartite(g);
  REQUIRE(bp.has_value());
  CHECK(bp->base.n() == 7);
  CHECK(bp->base.m() == 9);
  CHECK(bp->blobs == std::vector<std::vector<vertex>>{
                         {0, 1, 2}, {3, 4}, {5}, {6}, {7, 8}, {9, 10, 11}, {12, 13}});
  const auto s = compute_blob_stats(g, *bp);
  CHECK(s.rich_vertex_count == 12);
  CHECK(s.flagged_blob_count == 4);
  CHECK(s.max_trivial_neighbors == 1);
  CHECK(s.chosen_blob == 0);
}

TEST_CASE("pullback lifts base lines through the blob map", "[twins]") {
  const graph dia = diamond_graph();
  const auto bp = recognize_split_of_bipartite(dia);
  REQUIRE(bp.has_value());
  const auto base_d = apsp(bp->base);

  // base line of (f(0), f(2)) = (0, 2) in the path covers all of it
  const auto base_line = line_of(bp->base, base_d, 0, 2).members;
  CHECK(base_line == std::vector<vertex>{0, 1, 2});
  CHECK(pullback_line(base_line, *bp, 0, 2) == std::vector<vertex>{0, 1, 2, 3});

  // an endpoint's own blob contributes nothing beyond the endpoint
  const auto base_line2 = line_of(bp->base, base_d, 1, 0).members;
  CHECK(pullback_line(base_line2, *bp, 1, 0) == std::vector<vertex>{0, 1, 2});

  CHECK_THROWS_AS(pullback_line(base_line, *bp, 1, 3), same_blob);
}

TEST_CASE("generate_instance is deterministic and replayable", "[twins]") {
  const auto forced = generate_instance(1, 1, 1.0, 1, 99);
  CHECK(forced.g == complete_graph(3));
  CHECK(forced.trace.base == complete_graph(2));
  CHECK(forced.trace.steps.size() == 1);

  CHECK(generate_instance(2, 2, 1.0, 0, 5).g == complete_bipartite(2, 2));

  const auto a = generate_instance(3, 3, 0.5, 5, 7);
  const auto b = generate_instance(3, 3, 0.5, 5, 7);
  CHECK(a.g.n() == 11);
  CHECK(a.g == b.g);
  CHECK(a.trace.steps == b.trace.steps);
  CHECK(replay_trace(a.trace) == a.g);

  CHECK_THROWS_AS(generate_instance(0, 1, 0.5, 0, 1), bad_parameter);
  CHECK_THROWS_AS(generate_instance(1, 1, 1.5, 0, 1), bad_parameter);
  CHECK_THROWS_AS(generate_instance(1, 1, 0.5, -2, 1), bad_parameter);
}

TEST_CASE("trace partitions satisfy the blob contract", "[twins]") {
  for (const auto& inst : sample_instances(40, 0x731703)) {
    CHECK(validate_blob_partition(inst.g, inst.blobs));
    CHECK(replay_trace(inst.trace) == inst.g);

    // every blob sits inside one true-twin class (classes may be coarser)
    const auto classes = true_twin_classes(inst.g);
    std::vector<int> class_of(static_cast<std::size_t>(inst.g.n()));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (vertex v : classes[i]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (const auto& blob : inst.blobs.blobs)
      for (vertex v : blob)
        CHECK(class_of[static_cast<std::size_t>(v)] ==
              class_of[static_cast<std::size_t>(blob.front())]);

    // recognition round-trip: some bipartite base is recovered
    const auto rec = recognize_split_of_bipartite(inst.g);
    REQUIRE(rec.has_value());
    CHECK(bipartition(rec->base).has_value());
    CHECK(validate_blob_partition(inst.g, *rec));

    // statistics of both partitions observe p >= 2k
    for (const auto* bp : {&inst.blobs, &*rec}) {
      const auto s = compute_blob_stats(inst.g, *bp);
      CHECK(s.rich_vertex_count >= 2 * s.flagged_blob_count);
    }
  }
}

TEST_CASE("some flagged blob carries ceil((n-p)/k) trivial neighbours", "[twins]") {
  // pigeonhole step of the counting argument; needs a connected instance
  // whose trivial blobs are independent
  int applicable = 0;
  for (const auto& inst : sample_instances(250, 0x731707)) {
    if (!is_connected(inst.g)) continue;
    const auto& bp = inst.blobs;
    bool trivial_adjacent = false;
    for (int x = 0; x < bp.base.n() && !trivial_adjacent; ++x)
      if (!bp.rich[static_cast<std::size_t>(x)])
        for (vertex y : bp.base.neighbors(x))
          if (y > x && !bp.rich[static_cast<std::size_t>(y)]) trivial_adjacent = true;
    if (trivial_adjacent) continue;
    const auto s = compute_blob_stats(inst.g, bp);
    if (s.rich_vertex_count < 2 || s.rich_vertex_count > inst.g.n() - 1) continue;
    REQUIRE(s.flagged_blob_count >= 1);
    CHECK(s.max_trivial_neighbors >=
          dbe::ceil_div(inst.g.n() - s.rich_vertex_count, s.flagged_blob_count));
    ++applicable;
  }
  CHECK(applicable > 10);
}

TEST_CASE("blob maps preserve the metric", "[twins]") {
  for (const auto& inst : sample_instances(25, 0x731704)) {
    const auto d = apsp(inst.g);
    const auto bd = apsp(inst.blobs.base);
    for (vertex u = 0; u < inst.g.n(); ++u) {
      for (vertex v = u + 1; v < inst.g.n(); ++v) {
        const vertex fu = inst.blobs.to_base[static_cast<std::size_t>(u)];
        const vertex fv = inst.blobs.to_base[static_cast<std::size_t>(v)];
        if (fu == fv)
          CHECK(d(u, v) == 1);
        else
          CHECK(d(u, v) == bd(fu, fv));
      }
    }
  }
}

TEST_CASE("cross-blob lines equal the pullback of their base line", "[twins]") {
  int checked = 0;
  for (const auto& inst : sample_instances(40, 0x731705)) {
    const auto d = apsp(inst.g);
    const auto bd = apsp(inst.blobs.base);
    for (vertex u = 0; u < inst.g.n(); ++u) {
      for (vertex v = u + 1; v < inst.g.n(); ++v) {
        const vertex fu = inst.blobs.to_base[static_cast<std::size_t>(u)];
        const vertex fv = inst.blobs.to_base[static_cast<std::size_t>(v)];
        if (fu == fv) continue;
        const auto base_line = line_of(inst.blobs.base, bd, fu, fv).members;
        CHECK(line_of(inst.g, d, u, v).members ==
              pullback_line(base_line, inst.blobs, u, v));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("line families have the shapes the counting argument needs", "[twins]") {
  int rich_cross = 0, trivial_pairs = 0, rich_trivial = 0, dist2 = 0;
  for (const auto& inst : sample_instances(60, 0x731706)) {
    const auto& bp = inst.blobs;
    const auto d = apsp(inst.g);
    const auto is_rich_vertex = [&](vertex v) {
      return bp.rich[static_cast<std::size_t>(bp.to_base[static_cast<std::size_t>(v)])];
    };
    for (vertex u = 0; u < inst.g.n(); ++u) {
      for (vertex v = u + 1; v < inst.g.n(); ++v) {
        const vertex fu = bp.to_base[static_cast<std::size_t>(u)];
        const vertex fv = bp.to_base[static_cast<std::size_t>(v)];
        if (fu == fv) continue;
        if (!d.reachable(u, v)) continue;
        const auto members = line_of(inst.g, d, u, v).members;
        const int partial = partially_met_blobs(members, bp);
        if (is_rich_vertex(u) && is_rich_vertex(v)) {
          CHECK(partial == 2);
          ++rich_cross;
        } else if (!is_rich_vertex(u) && !is_rich_vertex(v)) {
          CHECK(partial == 0);
          ++trivial_pairs;
        } else if (bp.base.has_edge(fu, fv)) {
          CHECK(partial == 1);
          ++rich_trivial;
        }
      }
    }
    // trivial blobs hanging off one rich blob, mutually non-adjacent, sit at
    // distance two
    for (int b = 0; b < bp.base.n(); ++b) {
      if (!bp.rich[static_cast<std::size_t>(b)]) continue;
      std::vector<vertex> trivial_nb;
      for (vertex nb : bp.base.neighbors(b))
        if (!bp.rich[static_cast<std::size_t>(nb)])
          trivial_nb.push_back(bp.blobs[static_cast<std::size_t>(nb)].front());
      for (std::size_t i = 0; i < trivial_nb.size(); ++i)
        for (std::size_t j = i + 1; j < trivial_nb.size(); ++j)
          if (!inst.g.has_edge(trivial_nb[i], trivial_nb[j])) {
            CHECK(d(trivial_nb[i], trivial_nb[j]) == 2);
            ++dist2;
          }
    }
  }
  CHECK(rich_cross > 100);
  CHECK(trivial_pairs > 50);
  CHECK(rich_trivial > 20);
  CHECK(dist2 > 10);
}
