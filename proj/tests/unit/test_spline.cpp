#include <doctest.h>

#include "support/helpers.hpp"
#include "zsplines/errors.hpp"
#include "zsplines/lattice.hpp"
#include "zsplines/spline.hpp"

using namespace zsplines;
using ztest::make_p3;

TEST_CASE("is_spline on the worked basis rows") {
  LabeledGraph g = make_p3();
  CHECK(is_spline(g, {10, 90, 42}));
  CHECK(is_spline(g, {0, 120, 0}));
  CHECK(is_spline(g, {0, 0, 84}));

  auto violation = spline_violation(g, {1, 0, 0});
  REQUIRE(violation);
  CHECK(violation->kind == SplineViolation::Kind::Vertex);
  CHECK(violation->index == 0);
  CHECK(violation->message.find("v1") != std::string::npos);

  CHECK_THROWS_AS(spline_violation(g, {1, 2}), InvalidArgumentError);
}

TEST_CASE("violation reporting prefers the lowest index, vertices first") {
  LabeledGraph g = make_p3();
  // Vertex v2 fails and so does the first edge; the vertex wins.
  auto violation = spline_violation(g, {10, 7, 0});
  REQUIRE(violation);
  CHECK(violation->kind == SplineViolation::Kind::Vertex);
  CHECK(violation->index == 1);

  // All vertex conditions hold, the first edge fails.
  violation = spline_violation(g, {10, 15, 0});
  REQUIRE(violation);
  CHECK(violation->kind == SplineViolation::Kind::Edge);
  CHECK(violation->index == 0);
}

TEST_CASE("zero labels read as exact equations") {
  LabeledGraph g;
  g.vertices = {{"u", 0}, {"v", 3}};
  g.edges = {{0, 1, 0}};
  CHECK(is_spline(g, {0, 0}));
  CHECK_FALSE(is_spline(g, {0, 3}));   // edge 0 forces equality
  CHECK_FALSE(is_spline(g, {3, 3}));   // vertex module 0 pins to 0
}

TEST_CASE("flow_up_info finds the first nonzero entry") {
  FlowUpInfo info = flow_up_info({0, 120, 0});
  CHECK(info.leading_index == 2);
  CHECK(info.leading_term == 120);

  CHECK_FALSE(flow_up_info({0, 0, 0}).leading_index);

  info = flow_up_info({10, 90, 42});
  CHECK(info.leading_index == 1);
  CHECK(info.leading_term == 10);
}

TEST_CASE("extend_from_subgraph multiplies by the boundary product") {
  LabeledGraph g = make_p3();
  std::vector<std::size_t> tail{1, 2};
  Spline extended = extend_from_subgraph(g, tail, {105, 21});
  CHECK(extended == Spline{0, 840, 168});
  CHECK(is_spline(g, extended));

  std::vector<std::size_t> all{0, 1, 2};
  CHECK(extend_from_subgraph(g, all, {10, 90, 42}) == Spline{10, 90, 42});

  CHECK(extend_from_subgraph(g, tail, {0, 0}) == Spline{0, 0, 0});

  CHECK_THROWS_AS(extend_from_subgraph(g, tail, {1, 1}), InvalidArgumentError);
}

TEST_CASE("extend_from_subgraph always lands in the spline set") {
  ztest::Rng rng(41);
  std::uniform_int_distribution<std::size_t> size_dist(2, 5);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph g = ztest::random_connected_graph(rng, size_dist(rng), 1, 20);

    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) subset.push_back(i);
    }
    if (subset.empty()) subset.push_back(0);

    // Random subgraph spline: a small integer combination of the oracle
    // lattice generators of the induced subgraph.
    LabeledGraph sub = induced_subgraph(g, subset);
    IntegerLattice lattice = spline_lattice_kernel(sub);
    Spline f(sub.size(), 0);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& row : lattice.hermite_form()) {
      int c = coeff(rng);
      for (std::size_t k = 0; k < row.size(); ++k) f[k] += c * row[k];
    }
    REQUIRE(is_spline(sub, f));
    CHECK(is_spline(g, extend_from_subgraph(g, subset, f)));
  }
}

TEST_CASE("splines form a module") {
  LabeledGraph g = make_p3();
  Spline f{10, 90, 42}, h{0, 120, 0};
  Spline sum(3), scaled(3);
  for (std::size_t i = 0; i < 3; ++i) {
    sum[i] = f[i] + h[i];
    scaled[i] = Integer(-7) * f[i];
  }
  CHECK(is_spline(g, sum));
  CHECK(is_spline(g, scaled));
}

TEST_CASE("project truncates and lift_to_supergraph restores") {
  LabeledGraph g = make_p3();
  CHECK(project(g, 2, {10, 90, 42}) == Spline{10, 90});
  CHECK(project(g, 2, {0, 0, 84}) == Spline{0, 0});
  CHECK(project(g, 3, {10, 90, 42}) == Spline{10, 90, 42});
  CHECK_THROWS_AS(project(g, 0, {10, 90, 42}), InvalidArgumentError);

  SupergraphLift lifted = lift_to_supergraph(g, {10, 90});
  REQUIRE(lifted.spline);
  CHECK(*lifted.spline == Spline{10, 90, 42});
}

TEST_CASE("lift_to_supergraph handles isolated and obstructed vertices") {
  LabeledGraph isolated = make_p3();
  isolated.vertices.push_back(Vertex{"v4", 5});
  SupergraphLift lifted = lift_to_supergraph(isolated, {10, 90, 42});
  REQUIRE(lifted.spline);
  CHECK(*lifted.spline == Spline{10, 90, 42, 0});

  LabeledGraph obstructed;
  obstructed.vertices = {{"v1", 1}, {"v2", 3}, {"v3", 0}};
  obstructed.edges = {{1, 2, 2}};
  SupergraphLift blocked = lift_to_supergraph(obstructed, {0, 3});
  CHECK_FALSE(blocked.spline);
  REQUIRE(blocked.obstruction);
  // x = 0 (vertex module 0) collides with x = 3 mod 2.
  CHECK(blocked.obstruction->i == 0);
  CHECK(blocked.obstruction->j == 1);
}

TEST_CASE("project after a successful lift is the identity") {
  ztest::Rng rng(43);
  std::uniform_int_distribution<std::size_t> size_dist(2, 5);
  int lifted_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph g = ztest::random_connected_graph(rng, size_dist(rng), 1, 12);
    std::vector<std::size_t> head(g.size() - 1);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) head[i] = i;
    LabeledGraph sub = induced_subgraph(g, head);

    IntegerLattice lattice = spline_lattice_kernel(sub);
    Spline f(sub.size(), 0);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const auto& row : lattice.hermite_form()) {
      int c = coeff(rng);
      for (std::size_t k = 0; k < row.size(); ++k) f[k] += c * row[k];
    }
    REQUIRE(is_spline(sub, f));

    SupergraphLift lifted = lift_to_supergraph(g, f);
    if (lifted.spline) {
      ++lifted_count;
      CHECK(is_spline(g, *lifted.spline));
      CHECK(project(g, g.size() - 1, *lifted.spline) == f);
    }
  }
  CHECK(lifted_count > 0);
}
