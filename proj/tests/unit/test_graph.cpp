#include <doctest.h>

#include "support/helpers.hpp"
#include "zsplines/errors.hpp"
#include "zsplines/graph.hpp"
#include "zsplines/lattice.hpp"

using namespace zsplines;
using ztest::make_p3;

TEST_CASE("validate accepts the worked path graph") {
  CHECK_FALSE(validate(make_p3()));
}

TEST_CASE("validate reports the first violation") {
  LabeledGraph dup;
  dup.vertices = {{"v1", 2}, {"v1", 3}};
  auto err = validate(dup);
  REQUIRE(err);
  CHECK(err->message.find("duplicate") != std::string::npos);

  LabeledGraph bad_index = make_p3();
  bad_index.edges.push_back(Edge{0, 5, 3});
  err = validate(bad_index);
  REQUIRE(err);
  CHECK(err->message.find("out of range") != std::string::npos);

  LabeledGraph negative = make_p3();
  negative.vertices[1].m = -15;
  err = validate(negative);
  REQUIRE(err);
  CHECK(err->message.find("negative") != std::string::npos);

  LabeledGraph empty_id;
  empty_id.vertices = {{"", 2}};
  CHECK(validate(empty_id));
}

TEST_CASE("normalize merges parallel edges by lcm") {
  LabeledGraph g;
  g.vertices = {{"u", 1}, {"v", 1}};
  g.edges = {{0, 1, 8}, {1, 0, 12}};
  auto [normalized, merges] = normalize(g);
  REQUIRE(normalized.edges.size() == 1);
  CHECK(normalized.edges[0].r == 24);
  REQUIRE(merges.size() == 1);
  CHECK(merges[0].merged_labels == std::vector<Integer>{8, 12});
  CHECK(merges[0].result_label == 24);
}

TEST_CASE("normalize drops unit edges and self-loops, keeps zero edges") {
  LabeledGraph g;
  g.vertices = {{"u", 2}, {"v", 3}};
  g.edges = {{0, 1, 1}, {1, 1, 7}, {0, 1, 0}};
  auto [normalized, merges] = normalize(g);
  CHECK(merges.empty());
  REQUIRE(normalized.edges.size() == 1);
  CHECK(normalized.edges[0].r == 0);
}

TEST_CASE("normalize is idempotent on random messy graphs") {
  ztest::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph g = ztest::random_messy_graph(rng, 4, 0, 12);
    LabeledGraph once = normalize(g).graph;
    LabeledGraph twice = normalize(once).graph;
    CHECK(once == twice);
  }
}

TEST_CASE("normalize preserves the oracle lattice") {
  ztest::Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    LabeledGraph g = ztest::random_messy_graph(rng, 4, 1, 30);
    IntegerLattice before = spline_lattice_kernel(g);
    IntegerLattice after = spline_lattice_kernel(normalize(g).graph);
    CHECK(lattice_equal(before, after));
  }
}

TEST_CASE("induced subgraph keeps inherited order and labels") {
  LabeledGraph g = make_p3();
  std::vector<std::size_t> tail{1, 2};
  LabeledGraph sub = induced_subgraph(g, tail);
  REQUIRE(sub.size() == 2);
  CHECK(sub.vertices[0].id == "v2");
  CHECK(sub.vertices[0].m == 15);
  CHECK(sub.vertices[1].m == 21);
  REQUIRE(sub.edges.size() == 1);
  CHECK(sub.edges[0].r == 12);

  std::vector<std::size_t> all{0, 1, 2};
  CHECK(induced_subgraph(g, all) == g);

  std::vector<std::size_t> lone{0};
  LabeledGraph single = induced_subgraph(g, lone);
  CHECK(single.size() == 1);
  CHECK(single.vertices[0].m == 10);
  CHECK(single.edges.empty());

  CHECK_THROWS_AS(induced_subgraph(g, std::vector<std::size_t>{}), InvalidArgumentError);
}

TEST_CASE("disjoint union concatenates and shifts") {
  LabeledGraph single;
  single.vertices = {{"w", 5}};
  LabeledGraph joined = disjoint_union(make_p3(), single);
  CHECK(joined.size() == 4);
  CHECK(joined.edges.size() == 2);
  CHECK(joined.vertices[3].id == "w");

  LabeledGraph empty;
  CHECK(disjoint_union(make_p3(), empty) == make_p3());

  LabeledGraph doubled = disjoint_union(make_p3(), make_p3());
  CHECK(doubled.size() == 6);
  CHECK(doubled.edges.size() == 4);
  CHECK(doubled.vertices[0].id == "a:v1");
  CHECK(doubled.vertices[3].id == "b:v1");
  CHECK(doubled.edges[2].u == 3);
  CHECK_FALSE(validate(doubled));
}
