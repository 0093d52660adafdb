#include <stdexcept>
#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "trigroup/error.hpp"
#include "trigroup/fast_paths.hpp"

using namespace trigroup;

namespace {

// Random tree with maximum degree 3, grown by attaching to a random vertex
// that still has room.
Tree random_tree(int vertex_count, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(vertex_count, 0);
  std::vector<int> open{0};
  for (int v = 1; v < vertex_count; ++v) {
    const std::size_t i = rng() % open.size();
    const int u = open[i];
    edges.emplace_back(u, v);
    if (++deg[u] == 3) {
      open[i] = open.back();
      open.pop_back();
    }
    ++deg[v];
    open.push_back(v);
  }
  return Tree(vertex_count, edges);
}

// Component sizes after removing each edge, by flood fill.
int edge_worse(int vertex_count, const std::vector<std::pair<int, int>>& edges, std::size_t removed) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == removed) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{edges[removed].first};
  seen[edges[removed].first] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::max(count, vertex_count - count);
}

std::vector<std::pair<int, int>> edges_of(const Tree& t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < t.vertex_count(); ++v) {
    for (const int* u = t.neighbors_begin(v); u != t.neighbors_end(v); ++u) {
      if (v < *u) edges.emplace_back(v, *u);
    }
  }
  return edges;
}

}  // namespace

TEST_SUITE_BEGIN("fast-paths");

TEST_CASE("split edge of a star") {
  const Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
  const SplitResult r = find_split_edge(star);
  CHECK(r.worse() == 3);
  CHECK(r.root_side_size == 3);
  CHECK(r.child_side_size == 1);
  CHECK(r.root_side == 0);
}

TEST_CASE("split edge of a caterpillar matches brute force") {
  // Spine 0..9 with one pendant leaf per spine vertex 1..8.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < 10; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i <= 8; ++i) edges.emplace_back(i, 9 + i);
  const Tree t(18, edges);
  int best = 18;
  for (std::size_t e = 0; e < edges.size(); ++e) best = std::min(best, edge_worse(18, edges, e));
  const SplitResult r = find_split_edge(t);
  CHECK(r.worse() == best);
  CHECK(r.root_side_size + r.child_side_size == 18);
}

TEST_CASE("balanced split bounds on random trees") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 500; ++iter) {
    const int v = 2 + static_cast<int>(rng() % 200);
    const Tree t = random_tree(v, rng);
    const SplitResult r = find_split_edge(t, static_cast<int>(rng() % v));
    CHECK(r.root_side_size + r.child_side_size == v);
    CHECK(3 * r.worse() <= 2 * v + 1);
    if (v <= 60) {
      const auto edges = edges_of(t);
      int best = v;
      for (std::size_t e = 0; e < edges.size(); ++e) best = std::min(best, edge_worse(v, edges, e));
      CHECK(r.worse() == best);
    }
    if (v >= 3) {
      const LemmaDiagnostic d = lemma_vertex_diagnostic(t);
      CHECK(d.n_max + d.n_med + d.n_min + 1 == v);
      CHECK(3 * d.n_max >= v - 1);
      CHECK(3 * d.n_max <= 2 * v + 3);
    }
  }
}

TEST_CASE("vertex diagnostic on small trees") {
  SUBCASE("star") {
    const LemmaDiagnostic d = lemma_vertex_diagnostic(Tree(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(d.vertex == 0);
    CHECK(d.n_max == 1);
    CHECK(d.n_med == 1);
    CHECK(d.n_min == 1);
  }
  SUBCASE("balanced binary tree on 22 vertices") {
    // Root 0 with children 1, 2, 3 and a full binary tree of depth 2 under
    // each: 1 + 3 * 7 = 22.
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int c = 0; c < 3; ++c) {
      const int top = next++;
      edges.emplace_back(0, top);
      for (int k = 0; k < 2; ++k) {
        const int mid = next++;
        edges.emplace_back(top, mid);
        for (int j = 0; j < 2; ++j) edges.emplace_back(mid, next++);
      }
    }
    const LemmaDiagnostic d = lemma_vertex_diagnostic(Tree(22, edges));
    CHECK(d.vertex == 0);
    CHECK(d.n_max == 7);
    CHECK(d.n_min == 7);
  }
  SUBCASE("path of two vertices has no interior vertex") {
    try {
      (void)lemma_vertex_diagnostic(Tree(2, {{0, 1}}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoInteriorVertex);
    }
  }
  SUBCASE("degree four is rejected") {
    CHECK_THROWS_AS(lemma_vertex_diagnostic(Tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), std::invalid_argument);
  }
  SUBCASE("brute force on random trees") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 100; ++iter) {
      const int v = 3 + static_cast<int>(rng() % 40);
      const Tree t = random_tree(v, rng);
      const auto edges = edges_of(t);
      int best = v;
      for (int x = 0; x < v; ++x) {
        if (t.degree(x) < 2) continue;
        // Largest component after deleting x.
        std::vector<std::pair<int, int>> kept;
        for (const auto& e : edges) {
          if (e.first != x && e.second != x) kept.push_back(e);
        }
        std::vector<int> comp(v, -1);
        int worst = 0;
        for (int s = 0; s < v; ++s) {
          if (s == x || comp[s] >= 0) continue;
          int size = 0;
          std::vector<int> st{s};
          comp[s] = s;
          while (!st.empty()) {
            const int a = st.back();
            st.pop_back();
            ++size;
            for (const auto& e : kept) {
              const int b = e.first == a ? e.second : (e.second == a ? e.first : -1);
              if (b >= 0 && comp[b] < 0) {
                comp[b] = s;
                st.push_back(b);
              }
            }
          }
          worst = std::max(worst, size);
        }
        best = std::min(best, worst);
      }
      CHECK(lemma_vertex_diagnostic(t).n_max == best);
    }
  }
}

TEST_CASE("leaf tables agree with their words") {
  const Pipeline p = testing::random_pipeline(60, 12);
  CutTree cuts(p.tree);
  const int n = p.tree.interior_count();
  // Cut the edge at the root leaf and tabulate the rest of the tree.
  const int leaf_dart = p.tree.leaf_dart(n);
  cuts.cut(leaf_dart);
  const int x = p.tree.neighbor(leaf_dart);
  const int x_dart = p.tree.mate(leaf_dart);
  const LeafTable table = cuts.leaf_table(x, x_dart);
  CHECK(table.vertices().size() == static_cast<std::size_t>(p.tree.vertex_count() - 1));
  CHECK(table.leaves().size() == static_cast<std::size_t>(p.tree.leaf_count() - 1));
  CHECK_FALSE(table.contains(n));
  for (int v : table.vertices()) {
    CHECK(table.up_matrix(v) == mat_of_word(table.up_word(v)));
    CHECK(table.down_matrix(v) == mat_of_word(table.down_word(v)));
  }
  // Leaving the root leaf and walking to its twin reproduces the naive word.
  const Generator g = path_word(p.tree, n, n + 1);
  CHECK(table.down_word(n + 1) == g.word);
  CHECK(table.down_matrix(n + 1) == g.matrix);
}

TEST_CASE("fast generators equal naive generators") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 50);
    const Pipeline p = testing::random_pipeline(n, seed + 300);
    WorkCounters counters;
    const GeneratorSet fast = all_generators_fast(p.tree, &counters);
    CHECK(fast == all_generators_naive(p.tree));
    const double bound = std::log(static_cast<double>(p.tree.vertex_count())) / std::log(1.5) + 2;
    CHECK(counters.depth <= bound);
  }
  for (const char* name : {"sphere.tri", "torus.tri", "loop.tri"}) {
    const Pipeline p = testing::load_fixture(name);
    CHECK(all_generators_fast(p.tree) == all_generators_naive(p.tree));
  }
}

TEST_CASE("fast multiplication count grows near-linearly") {
  std::uint64_t previous = 0;
  for (int n = 256; n <= 4096; n *= 2) {
    const Pipeline p = testing::random_pipeline(n, 77);
    WorkCounters counters;
    (void)all_generators_fast(p.tree, &counters);
    if (previous) CHECK(static_cast<double>(counters.multiplications) / previous <= 2.5);
    previous = counters.multiplications;
  }
}

TEST_SUITE_END();
