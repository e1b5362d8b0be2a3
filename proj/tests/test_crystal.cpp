#include <doctest.h>

#include "crystal_checks.hpp"
#include "spinblock/crystal.hpp"

using namespace spinblock;

namespace {

PStrictPartition p5(std::vector<int> parts) { return PStrictPartition(std::move(parts), 5); }

} // namespace

TEST_CASE("removable and addable node groups") {
  CHECK(i_removable_nodes(p5({2}), 1) ==
        std::vector<NodeGroup>{NodeGroup{{{1, 2}}}});
  CHECK(i_removable_nodes(PStrictPartition(5), 0).empty());
  CHECK(i_removable_nodes(PStrictPartition(5), 2).empty());

  // (6,5): the row-1 pair fails because removing both boxes breaks the
  // shape; the two singles survive
  CHECK(i_removable_nodes(p5({6, 5}), 0) ==
        std::vector<NodeGroup>{NodeGroup{{{2, 5}}}, NodeGroup{{{1, 6}}}});

  // (6): the single at the row end plus the pair anchored one box in
  CHECK(i_removable_nodes(p5({6}), 0) ==
        std::vector<NodeGroup>{NodeGroup{{{1, 5}, {1, 6}}}, NodeGroup{{{1, 6}}}});

  CHECK(i_addable_nodes(PStrictPartition(5), 0) ==
        std::vector<NodeGroup>{NodeGroup{{{1, 1}}}});
  CHECK(i_addable_nodes(p5({1}), 1) == std::vector<NodeGroup>{NodeGroup{{{1, 2}}}});
  CHECK(i_addable_nodes(p5({2, 1}), 2) == std::vector<NodeGroup>{NodeGroup{{{1, 3}}}});
  // (4): adding box 5 alone or the residue-0 pair reaching to 6
  CHECK(i_addable_nodes(p5({4}), 0) ==
        std::vector<NodeGroup>{NodeGroup{{{2, 1}}}, NodeGroup{{{1, 5}}},
                               NodeGroup{{{1, 5}, {1, 6}}}});
  CHECK_THROWS_AS(i_addable_nodes(p5({2}), 3), DomainError);
}

TEST_CASE("reduced signatures") {
  ReducedSignature empty0 = reduced_signature(PStrictPartition(5), 0);
  CHECK(empty0.normals.empty());
  CHECK(empty0.conormals == std::vector<NodeGroup>{NodeGroup{{{1, 1}}}});

  ReducedSignature two1 = reduced_signature(p5({2}), 1);
  CHECK(two1.normals == std::vector<NodeGroup>{NodeGroup{{{1, 2}}}});
  CHECK(two1.conormals.empty());

  // (5): plus at the new row cancels against the row-1 minus
  ReducedSignature five0 = reduced_signature(p5({5}), 0);
  CHECK(five0.normals.empty());
  CHECK(five0.conormals == std::vector<NodeGroup>{NodeGroup{{{1, 6}}}});
}

TEST_CASE("single operator steps") {
  CHECK(apply_e(p5({1}), 0) == PStrictPartition(5));
  CHECK(apply_f(PStrictPartition(5), 0) == p5({1}));
  CHECK(apply_e(p5({2}), 1) == p5({1}));
  CHECK_FALSE(apply_e(PStrictPartition(5), 0).has_value());
  CHECK_FALSE(apply_f(p5({1}), 0).has_value());
}

TEST_CASE("block labels") {
  BlockLabel b = block_of(p5({12, 11, 7, 6, 4, 2, 1}));
  CHECK(b.core == StrictPartition({12, 7, 6, 2, 1}));
  CHECK(b.weight == 3);
  CHECK(b.rank() == 43);
  CHECK(block_of(p5({12, 7, 6, 2, 1})).weight == 0);
  CHECK(block_of(p5({10})) == BlockLabel{5, StrictPartition(), 2});
}

TEST_CASE("crystal operators cohere at small rank") {
  for (auto [p, max_rank] : {std::pair{3, 10}, std::pair{5, 10}, std::pair{7, 9}}) {
    auto res = checks::check_crystal_operators(p, max_rank);
    for (const auto& e : res.errors) FAIL_CHECK(e);
    CHECK(res.ok());
    CHECK(res.checked > 0);
  }
}

TEST_CASE("block graph construction") {
  BlockGraph g = block_reduced_graph(5, 1, 1000);
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0] == BlockLabel{5, StrictPartition(), 0});
  CHECK(g.vertices[1] == BlockLabel{5, StrictPartition({1}), 0});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == BlockGraph::Edge{0, 1, 0});

  BlockGraph g0 = block_reduced_graph(5, 0, 1000);
  CHECK(g0.vertices.size() == 1);
  CHECK(g0.edges.empty());

  // rebuilding gives identical bytes of structure
  BlockGraph again = block_reduced_graph(5, 12, 100000);
  BlockGraph once = block_reduced_graph(5, 12, 100000);
  CHECK(again.vertices == once.vertices);
  CHECK(again.edges == once.edges);

  // no block of rank above the window
  for (const auto& v : again.vertices) CHECK(v.rank() <= 12);

  CHECK_THROWS_AS(block_reduced_graph(5, 20, 10), BudgetError);
}

TEST_CASE("maximal strings") {
  BlockGraph g = block_reduced_graph(5, 8, 100000);
  BlockLabel origin{5, StrictPartition(), 0};
  IString s = maximal_i_string(origin, 0, g);
  CHECK(s.blocks.front() == origin);
  CHECK(s.blocks.size() >= 2);
  for (std::size_t k = 1; k < s.blocks.size(); ++k)
    CHECK(s.blocks[k].rank() == s.blocks[k - 1].rank() + 1);

  CHECK_THROWS_AS(maximal_i_string(BlockLabel{5, StrictPartition({4, 1}), 9}, 0, g),
                  DomainError);

  // a defect-0 vertex with at most one neighbor in a direction is an end of
  // its string there
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].weight != 0) continue;
    for (int i = 0; i <= 2; ++i) {
      bool one_sided = g.down[v][i] == -1 || g.up[v][i] == -1;
      if (!one_sided) continue;
      IString str = maximal_i_string(g.vertices[v], i, g);
      CHECK((str.blocks.front() == g.vertices[v] || str.blocks.back() == g.vertices[v]));
    }
  }
}

TEST_CASE("string ends match involution thresholds at small rank") {
  for (auto [p, max_rank] : {std::pair{3, 12}, std::pair{5, 10}}) {
    BlockGraph g = block_reduced_graph(p, max_rank, 1000000);
    auto res = checks::check_string_extremality(g);
    for (const auto& e : res.errors) FAIL_CHECK(e);
    CHECK(res.ok());
  }
}
