#include <numeric>

#include "doctest.h"
#include "distapx/generators.hpp"
#include "distapx/oracle.hpp"
#include "distapx/primitives.hpp"
#include "support.hpp"

using namespace distapx;

namespace {

std::vector<std::int64_t> depths(const BfsResult& r) {
  std::vector<std::int64_t> out;
  for (const auto& t : r.tree) out.push_back(t.depth.is_inf() ? -1 : t.depth.value());
  return out;
}

EngineConfig seeded(std::uint64_t s) {
  EngineConfig c;
  c.seed = s;
  return c;
}

}  // namespace

TEST_SUITE("bfs_aggregate") {
  TEST_CASE("bfs on a path of five") {
    const auto r = bfs(path_graph(5), 0, {});
    CHECK(depths(r) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
    CHECK(r.tree[3].parent == 2);
    CHECK(r.tree[0].parent == -1);
    CHECK(r.report.rounds <= 2 * 5);
  }

  TEST_CASE("bfs on K4 from every root") {
    for (NodeId root = 0; root < 4; ++root) {
      const auto r = bfs(clique(4), root, {});
      for (const auto& t : r.tree) CHECK(t.depth <= Distance(1));
    }
  }

  TEST_CASE("bfs matches hop distances on random graphs; parents are smallest-id") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
      Rng rng(s);
      const Graph g = gnp(50, 0.08, rng);
      const auto r = bfs(g, 0, seeded(s));
      const auto exact = sssp_exact(g, 0).dist;
      for (NodeId v = 0; v < 50; ++v) {
        REQUIRE(r.tree[v].depth == exact[v]);
        if (v == 0) continue;
        NodeId want = -1;
        for (const Arc& a : g.out(v))
          if (exact[a.to].value() + 1 == exact[v].value() && (want < 0 || a.to < want)) want = a.to;
        CHECK(r.tree[v].parent == want);
      }
      CHECK_NOTHROW(require_spanning(r.tree));
    }
  }

  TEST_CASE("unreachable nodes keep INF and no parent") {
    const Graph g(4, {false, false}, std::vector<Edge>{{0, 1, 1}, {2, 3, 1}});
    const auto r = bfs(g, 0, {});
    CHECK(r.tree[2].depth.is_inf());
    CHECK(r.tree[3].parent == -1);
    CHECK_THROWS_AS(require_spanning(r.tree), AggregationError);
  }

  TEST_CASE("broadcast and aggregate examples") {
    const Graph s = star(6);
    const auto ts = bfs(s, 0, {}).tree;
    std::vector<std::int64_t> ids(7);
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(broadcast_and_aggregate(s, ts, AggOp::max, ids, {}).value.value == 6);

    const Graph p = path_graph(4);
    const auto tp = bfs(p, 0, {}).tree;
    CHECK(broadcast_and_aggregate(p, tp, AggOp::sum, {1, 1, 1, 1}, {}).value.value == 4);

    Rng rng(5);
    const Graph t = random_tree(20, rng);
    const auto tt = bfs(t, 0, {}).tree;
    std::vector<std::int64_t> vals;
    for (int i = 0; i < 20; ++i) vals.push_back(rng.range(0, 19));
    const auto r = broadcast_and_aggregate(t, tt, AggOp::min, vals, {});
    CHECK(r.value.value == *std::min_element(vals.begin(), vals.end()));
  }

  TEST_CASE("aggregate ties prefer the smaller id and absent inputs are skipped") {
    const Graph p = path_graph(5);
    const auto tree = bfs(p, 2, {}).tree;
    std::vector<std::vector<AggValue>> in(5, std::vector<AggValue>(3));
    for (NodeId v = 0; v < 5; ++v) {
      in[v][0] = AggValue::of(7, v);
      if (v % 2) in[v][1] = AggValue::of(v, v);
    }
    const AggOp ops[] = {AggOp::max, AggOp::sum, AggOp::min};
    const auto r = aggregate(p, tree, ops, in, {});
    const auto& out = r.agreed();
    CHECK(out[0] == AggValue::of(7, 0));
    CHECK(out[1].value == 4);
    CHECK_FALSE(out[2].present);
  }

  TEST_CASE("aggregation on a disconnected graph fails") {
    const Graph g(3, {false, false}, std::vector<Edge>{{0, 1, 1}});
    const auto tree = bfs(g, 0, {}).tree;
    CHECK_THROWS_AS(broadcast_and_aggregate(g, tree, AggOp::sum, {1, 1, 1}, {}), AggregationError);
  }

  TEST_CASE("bootstrap reports D' = 2 * depth") {
    Accounting acct;
    const auto b = bootstrap(path_graph(9), acct, {{1, 0, 0, 0, 0, 0, 0, 0, 1}});
    CHECK(b.depth == 8);
    CHECK(b.d_prime == 16);
    CHECK(b.sums == std::vector<std::int64_t>{2});
    CHECK(acct.phases().size() == 2);
  }
}

TEST_SUITE("multi_bfs") {
  TEST_CASE("all sources of K3") {
    const std::vector<NodeId> src = {0, 1, 2};
    const auto r = multi_bfs(clique(3), src, {});
    for (NodeId v = 0; v < 3; ++v)
      for (int i = 0; i < 3; ++i) CHECK(r.result.dist[v][i] == Distance(v == i ? 0 : 1));
    CHECK(r.pipeline_rounds <= 4 * (3 + 1));
  }

  TEST_CASE("path of ten from both ends") {
    const Graph g = path_graph(10);
    const std::vector<NodeId> src = {9, 0, 9};
    const auto r = multi_bfs(g, src, {});
    REQUIRE(r.result.sources == std::vector<NodeId>{0, 9});
    CHECK(r.result.index_of(9) == 1);
    CHECK(r.result.index_of(4) == -1);
    for (NodeId v = 0; v < 10; ++v) {
      CHECK(r.result.dist[v][0] == Distance(v));
      CHECK(r.result.dist[v][1] == Distance(9 - v));
    }
  }

  TEST_CASE("100 nodes, 10 sources: exact and within 4(|S| + D)") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
      Rng rng(s);
      const Graph g = gnp(100, 0.04, rng);
      std::vector<NodeId> src;
      while (src.size() < 10) {
        const NodeId v = static_cast<NodeId>(rng.range(0, 99));
        if (std::find(src.begin(), src.end(), v) == src.end()) src.push_back(v);
      }
      const auto r = multi_bfs(g, src, seeded(s));
      const auto hop = ref::hops(g);
      for (NodeId v = 0; v < 100; ++v)
        for (std::size_t i = 0; i < r.result.sources.size(); ++i)
          REQUIRE(r.result.dist[v][i].value() == hop[r.result.sources[i]][v]);
      const auto d = diameter(g).value();
      CHECK(r.pipeline_rounds <= 4 * (10 + d));
    }
  }

  TEST_CASE("tags travel with their source") {
    const Graph g = path_graph(6);
    std::vector<char> is_src(6, 0);
    std::vector<Word> tags(6, 0);
    is_src[1] = is_src[4] = 1;
    tags[1] = 3;
    tags[4] = 5;
    const auto r = multi_bfs_phase(g, is_src, tags, 2, 10, {});
    for (NodeId v = 0; v < 6; ++v) {
      CHECK(r.tag[v][0] == 3);
      CHECK(r.tag[v][1] == 5);
    }
  }

  TEST_CASE("multi_bfs refuses weighted graphs") {
    const Graph g(2, {false, true}, std::vector<Edge>{{0, 1, 3}});
    const std::vector<NodeId> src = {0};
    CHECK_THROWS_AS(multi_bfs(g, src, {}), std::invalid_argument);
  }
}

TEST_SUITE("elect_select") {
  TEST_CASE("elect on a path") {
    const std::vector<NodeId> m = {0};
    const auto r = elect_farthest(path_graph(3), m, {}).result;
    CHECK(r.winner == 2);
    CHECK(r.distance == 2);
  }

  TEST_CASE("elect with every node marked") {
    const std::vector<NodeId> m = {3, 1, 0, 2, 4};
    const auto r = elect_farthest(path_graph(5), m, {}).result;
    CHECK(r.winner == 0);
    CHECK(r.distance == 0);
  }

  TEST_CASE("elect with an empty marked set is refused") {
    CHECK_THROWS_AS(elect_farthest(path_graph(3), std::vector<NodeId>{}, {}), std::invalid_argument);
  }

  TEST_CASE("elect matches the sequential argmax") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
      Rng rng(s);
      const Graph g = gnp(60, 0.06, rng);
      std::vector<NodeId> marked;
      for (NodeId v = 0; v < 60; ++v)
        if (rng.coin(0.1)) marked.push_back(v);
      if (marked.empty()) marked.push_back(7);
      const auto hop = ref::hops(g);
      std::int64_t best = -1;
      NodeId arg = -1;
      for (NodeId v = 0; v < 60; ++v) {
        std::int64_t d = ref::kInf;
        for (NodeId m : marked) d = std::min(d, hop[m][v]);
        if (d > best) best = d, arg = v;
      }
      const auto r = elect_farthest(g, marked, seeded(s)).result;
      CHECK(r.distance == best);
      CHECK(r.winner == arg);
    }
  }

  TEST_CASE("select on a star") {
    const auto r = select_closest_set(star(5), 0, 3, {}).result;
    CHECK(r.member == std::vector<char>{1, 1, 1, 0, 0, 0});
    CHECK(r.j_star == 0);
  }

  TEST_CASE("select everything") {
    Rng rng(3);
    const Graph g = gnp(30, 0.1, rng);
    const auto r = select_closest_set(g, 5, 30, {}).result;
    CHECK(std::count(r.member.begin(), r.member.end(), 1) == 30);
    CHECK_THROWS_AS(select_closest_set(g, 5, 31, {}), std::invalid_argument);
    CHECK_THROWS_AS(select_closest_set(g, 5, 0, {}), std::invalid_argument);
  }

  TEST_CASE("select is distance-monotone with exact size") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
      Rng rng(s);
      const Graph t = random_tree(40, rng);
      const NodeId root = static_cast<NodeId>(rng.range(0, 39));
      const auto r = select_closest_set(t, root, 20, seeded(s)).result;
      const auto hop = ref::hops(t);
      CHECK(std::count(r.member.begin(), r.member.end(), 1) == 20);
      std::int64_t max_in = 0, min_out = ref::kInf;
      for (NodeId v = 0; v < 40; ++v) {
        if (r.member[v]) max_in = std::max(max_in, hop[root][v]);
        else min_out = std::min(min_out, hop[root][v]);
      }
      CHECK(min_out >= max_in);
      CHECK(r.j_star < min_out);
    }
  }

  TEST_CASE("select fills the boundary quota with preferred nodes first") {
    const Graph s = star(5);
    const auto tree = bfs(s, 0, {}).tree;
    std::vector<char> prefer(6, 0), counted(6, 0);
    prefer[4] = prefer[5] = 1;
    const auto r = select_closest_set_phase(s, tree, 3, prefer, counted, {});
    CHECK(r.member == std::vector<char>{1, 0, 0, 0, 1, 1});
    CHECK(r.pass);
  }
}

TEST_SUITE("sssp") {
  const Graph tri(3, {false, true}, std::vector<Edge>{{0, 1, 2}, {1, 2, 3}, {0, 2, 9}});

  TEST_CASE("oracle_exact equals the sequential oracle") {
    const auto r = sssp(SsspEngine{}, tri, 0, Direction::outward, 4, {});
    CHECK(r.dv.dist == sssp_exact(tri, 0).dist);
    CHECK_FALSE(r.measured);
    CHECK(r.rounds == SsspEngine{}.charged_rounds(3, 4));
  }

  TEST_CASE("perturbed oracle stays within [d, (1+eps) d]") {
    Rng rng(8);
    const Graph g = gnp(60, 0.1, rng, true, {1, 50});
    SsspEngine e{SsspKind::oracle_perturbed, 0.1};
    for (NodeId src : {0, 17, 42}) {
      const auto exact = sssp_exact(g, src).dist;
      const auto r = sssp(e, g, src, Direction::outward, 10, seeded(src));
      for (NodeId v = 0; v < 60; ++v) {
        CHECK(r.dv.dist[v] >= exact[v]);
        CHECK(double(r.dv.dist[v].value()) <= 1.1 * double(exact[v].value()));
      }
    }
  }

  TEST_CASE("perturbed oracle at eps = 0 is exact") {
    Rng rng(9);
    const Graph g = gnp(40, 0.1, rng, true, {1, 50});
    const auto r = sssp(SsspEngine{SsspKind::oracle_perturbed, 0.0}, g, 3, Direction::inward, 10, seeded(1));
    CHECK(r.dv.dist == sssp_exact(g, 3, Direction::inward).dist);
  }

  TEST_CASE("negative epsilon is refused") {
    CHECK_THROWS_AS(sssp(SsspEngine{SsspKind::oracle_perturbed, -0.1}, tri, 0, Direction::outward, 4, {}),
                    std::invalid_argument);
  }

  TEST_CASE("distributed Bellman-Ford on a weighted digraph") {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      Rng rng(s);
      const Graph g = gnp(30, 0.15, rng, true, {1, 20});
      for (Direction dir : {Direction::outward, Direction::inward}) {
        const auto r = sssp(SsspEngine{SsspKind::distributed_bellman_ford}, g, 0, dir, 10, seeded(s));
        CHECK(r.measured);
        CHECK(r.dv.dist == sssp_exact(g, 0, dir).dist);
        CHECK(r.rounds <= 2 * 30);
        CHECK(r.report.violations.empty());
      }
    }
  }

  TEST_CASE("lightest crossing edge") {
    const Graph g(4, {false, true}, std::vector<Edge>{{0, 1, 5}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
    const std::vector<char> in_s = {1, 1, 0, 0};
    const auto r = min_crossing_edge(g, in_s, 4, {});
    CHECK(r.found);
    CHECK(r.w == 2);
    CHECK(r.s == 0);
    CHECK(r.t == 3);
    CHECK(r.report.rounds == 4 + 2);
  }
}
