#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromix/chromatic.hpp"
#include "support.hpp"

using namespace chromix;
using testsupport::mixed_triangle;

namespace {
const Polynomial kMixedTrianglePoly({0, Rational(-2, 3), Rational(1, 2), Rational(1, 6)});
}

TEST_CASE("weak chromatic polynomial by deletion-contraction") {
  ChromaticEngine engine;
  REQUIRE(engine.weak(mixed_triangle()) == kMixedTrianglePoly);
  REQUIRE(engine.weak(testsupport::two_cycle()) == Polynomial::variable());
  REQUIRE(engine.weak(testsupport::single_arc()) ==
          Polynomial({0, Rational(1, 2), Rational(1, 2)}));

  SECTION("a loop edge zeroes the polynomial") {
    MixedGraph loop;
    loop.add_vertex("v");
    loop.add_edge("v", "v");
    REQUIRE(engine.weak(loop).is_zero());
  }
  SECTION("an empty graph has the constant polynomial 1") {
    REQUIRE(engine.weak(MixedGraph()) == Polynomial::constant(1));
  }
}

TEST_CASE("strong chromatic polynomial via the doubling reduction") {
  ChromaticEngine engine;
  REQUIRE(engine.strong(testsupport::single_arc()) ==
          Polynomial({0, Rational(-1, 2), Rational(1, 2)}));
  REQUIRE(engine.strong(testsupport::single_edge()) == Polynomial({0, -1, 1}));

  MixedGraph both;
  both.add_arc("u", "v");
  both.add_arc("v", "u");
  REQUIRE(engine.strong(both).is_zero());

  SECTION("pointwise agreement with the strong counting oracle") {
    for (int n = 1; n <= 3; ++n) {
      for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
        Polynomial chi = engine.strong(g);
        for (long k = 1; k <= 4; ++k)
          REQUIRE(chi.at(k) == Rational(static_cast<long>(count_strong_colorings(g, k))));
      });
    }
  }
}

TEST_CASE("the interpolation witness path") {
  ChromaticEngine engine;
  REQUIRE(weak_chromatic_via_oracle(mixed_triangle()) == engine.weak(mixed_triangle()));

  MixedGraph point;
  point.add_vertex("v");
  REQUIRE(weak_chromatic_via_oracle(point) == Polynomial::variable());

  MixedGraph three;
  three.add_vertex("a");
  three.add_vertex("b");
  three.add_vertex("c");
  REQUIRE(weak_chromatic_via_oracle(three) == Polynomial({0, 0, 0, 1}));

  MixedGraph big;
  for (int i = 1; i <= 9; ++i) big.add_vertex("a" + std::to_string(i));
  REQUIRE_THROWS_AS(weak_chromatic_via_oracle(big), BoundError);
}

TEST_CASE("engine equals oracle across the n<=3 universe") {
  ChromaticEngine engine;
  for (int n = 1; n <= 3; ++n) {
    for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
      REQUIRE(engine.weak(g) == weak_chromatic_via_oracle(g));
    });
  }
}

TEST_CASE("edge deletion-contraction identity") {
  ChromaticEngine engine;
  REQUIRE(engine.check_edge_deletion_contraction(mixed_triangle(), "u", "v").verdict);
  REQUIRE(engine.check_edge_deletion_contraction(testsupport::single_edge(), "u", "v")
              .verdict);
  REQUIRE_THROWS_AS(
      engine.check_edge_deletion_contraction(testsupport::single_arc(), "u", "v"),
      GraphError);

  std::mt19937 rng(4242);
  for (int i = 0; i < 20; ++i) {
    MixedGraph g = random_mixed_graph(4, rng);
    for (const auto& [a, b] : g.edges())
      REQUIRE(engine.check_edge_deletion_contraction(g, a, b).verdict);
  }
}

TEST_CASE("arc reversal identity") {
  ChromaticEngine engine;
  SECTION("single arc: both sides are k^2 + k") {
    auto report = engine.check_arc_reversal_identity(testsupport::single_arc(), "u", "v");
    REQUIRE(report.verdict);
    Polynomial lhs = engine.weak(testsupport::single_arc()) +
                     engine.weak(reverse_arc(testsupport::single_arc(), "u", "v"));
    REQUIRE(lhs == Polynomial({0, 1, 1}));
  }
  REQUIRE(engine.check_arc_reversal_identity(mixed_triangle(), "v", "w").verdict);
  REQUIRE(engine.check_arc_reversal_identity(testsupport::two_cycle(), "x", "w").verdict);
  REQUIRE_THROWS_AS(engine.check_arc_reversal_identity(mixed_triangle(), "w", "v"),
                    GraphError);
}

TEST_CASE("strongly connected contraction invariance") {
  ChromaticEngine engine;
  SECTION("the contracted 2-cycle collapses to k on both sides") {
    const auto cycle = testsupport::two_cycle();
    ArcSubgraph whole{{"x", "w"}, {{"x", "w"}, {"w", "x"}}};
    auto report = engine.check_scc_contraction(cycle, whole);
    REQUIRE(report.verdict);
    REQUIRE(engine.weak(cycle) == Polynomial::variable());
  }
  SECTION("2-cycle with a tail contracts to a single weak arc") {
    MixedGraph g;
    g.add_arc("a", "b");
    g.add_arc("b", "a");
    g.add_arc("b", "c");
    ArcSubgraph s{{"a", "b"}, {{"a", "b"}, {"b", "a"}}};
    REQUIRE(engine.check_scc_contraction(g, s).verdict);
    REQUIRE(engine.weak(g) == Polynomial({0, Rational(1, 2), Rational(1, 2)}));
  }
  SECTION("a single vertex is trivially strongly connected") {
    const auto g = mixed_triangle();
    REQUIRE(engine.check_scc_contraction(g, ArcSubgraph{{"w"}, {}}).verdict);
  }
  SECTION("subgraphs that are not strongly connected are refused") {
    MixedGraph g;
    g.add_arc("a", "b");
    g.add_arc("b", "c");
    REQUIRE_THROWS_AS(
        engine.check_scc_contraction(g, ArcSubgraph{{"a", "b"}, {{"a", "b"}}}),
        GraphError);
  }
}

TEST_CASE("weak reciprocity on acyclic mixed graphs") {
  ChromaticEngine engine;
  auto report = engine.verify_weak_reciprocity(testsupport::single_arc(), 3);
  REQUIRE(report.verdict);
  REQUIRE(report.rows[1].k == 2);
  REQUIRE(report.rows[1].lhs == 1);
  REQUIRE(report.rows[1].rhs == 1);

  REQUIRE(engine.verify_weak_reciprocity(testsupport::edge_arc_path(), 3).verdict);

  SECTION("cyclic mixed graphs are refused without force") {
    REQUIRE_THROWS_AS(engine.verify_weak_reciprocity(mixed_triangle(), 2),
                      GraphError);
  }
  SECTION("forcing the counterexample shows the failure") {
    auto forced = engine.verify_weak_reciprocity(mixed_triangle(), 2, true);
    REQUIRE_FALSE(forced.verdict);
    REQUIRE(forced.rows[1].k == 2);
    REQUIRE(forced.rows[1].lhs == -2);
    REQUIRE(forced.rows[1].rhs == 0);
    REQUIRE_FALSE(forced.rows[1].pass);
  }
}

TEST_CASE("strong reciprocity holds with no acyclicity condition") {
  ChromaticEngine engine;
  REQUIRE(engine.verify_strong_reciprocity(mixed_triangle(), 3).verdict);
  REQUIRE(engine.verify_strong_reciprocity(testsupport::pure_triangle(), 2).verdict);

  MixedGraph point;
  point.add_vertex("v");
  auto report = engine.verify_strong_reciprocity(point, 3);
  REQUIRE(report.verdict);
  for (const auto& row : report.rows) REQUIRE(row.lhs == row.k);
}

TEST_CASE("pure-graph reciprocity") {
  ChromaticEngine engine;
  SECTION("triangle: chi = k(k-1)(k-2) and six acyclic orientations") {
    const auto tri = testsupport::pure_triangle();
    REQUIRE(engine.weak(tri) == Polynomial({0, 2, -3, 1}));
    auto report = engine.verify_stanley_graph(tri, 3);
    REQUIRE(report.verdict);
    REQUIRE(report.rows.back().rhs == 6);  // the k=1 specialization
  }
  SECTION("single edge at k=2") {
    auto report = engine.verify_stanley_graph(testsupport::single_edge(), 2);
    REQUIRE(report.verdict);
    REQUIRE(report.rows[1].lhs == 6);
  }
  SECTION("edgeless graphs evaluate to k^|V| on both sides") {
    MixedGraph bare;
    bare.add_vertex("a");
    bare.add_vertex("b");
    auto report = engine.verify_stanley_graph(bare, 3);
    REQUIRE(report.verdict);
    REQUIRE(report.rows[1].lhs == 4);
  }
  SECTION("graphs with arcs are refused") {
    REQUIRE_THROWS_AS(engine.verify_stanley_graph(testsupport::single_arc(), 2),
                      GraphError);
  }
}

TEST_CASE("orientation sums reproduce the weak polynomial") {
  ChromaticEngine engine;
  REQUIRE(engine.verify_orientation_sum(testsupport::edge_arc_path(), 3).verdict);
  REQUIRE_THROWS_AS(engine.verify_orientation_sum(mixed_triangle(), 3), GraphError);
}

TEST_CASE("exhaustive sweeps at n=3") {
  ChromaticEngine engine;
  SECTION("weak reciprocity over every acyclic mixed graph") {
    auto summary = engine.exhaustive_verify(3, 3, Theorem::weak_reciprocity);
    REQUIRE(summary.universe == 64);
    REQUIRE(summary.failures.empty());
    REQUIRE(summary.checked == summary.passed);
    REQUIRE(summary.checked == 49);  // the acyclic mixed graphs among the 64
  }
  SECTION("strong reciprocity over all 64 graphs") {
    auto summary = engine.exhaustive_verify(3, 3, Theorem::strong_reciprocity);
    REQUIRE(summary.universe == 64);
    REQUIRE(summary.checked == 64);
    REQUIRE(summary.failures.empty());
  }
  SECTION("edge deletion-contraction for every edge of every graph") {
    auto summary = engine.exhaustive_verify(3, 3, Theorem::edge_deletion_contraction);
    REQUIRE(summary.universe == 64);
    REQUIRE(summary.failures.empty());
    REQUIRE(summary.checked > 0);
  }
  SECTION("sweep bounds") {
    REQUIRE_THROWS_AS(engine.exhaustive_verify(5, 3, Theorem::weak_reciprocity),
                      BoundError);
  }
}

TEST_CASE("strongly connected digraphs collapse to k") {
  ChromaticEngine engine;
  auto summary = engine.exhaustive_verify(3, 3, Theorem::strongly_connected_collapse);
  REQUIRE(summary.universe == 27);
  REQUIRE(summary.failures.empty());

  MixedGraph dense;  // two overlapping 3-cycles
  dense.add_arc("a", "b");
  dense.add_arc("b", "c");
  dense.add_arc("c", "a");
  dense.add_arc("b", "a");
  REQUIRE(engine.weak(dense) == Polynomial::variable());
}

TEST_CASE("theorem names round-trip through the parser") {
  REQUIRE(parse_theorem("weak") == Theorem::weak_reciprocity);
  REQUIRE(parse_theorem("strong") == Theorem::strong_reciprocity);
  REQUIRE(parse_theorem("stanley-order") == Theorem::stanley_order);
  REQUIRE(parse_theorem("edge-dc") == Theorem::edge_deletion_contraction);
  for (Theorem t :
       {Theorem::weak_reciprocity, Theorem::strong_reciprocity,
        Theorem::stanley_graph, Theorem::stanley_order,
        Theorem::edge_deletion_contraction, Theorem::arc_reversal_identity,
        Theorem::strongly_connected_collapse, Theorem::scc_contraction,
        Theorem::orientation_sum, Theorem::orientation_labeling})
    REQUIRE(parse_theorem(theorem_name(t)) == t);
  REQUIRE_THROWS_AS(parse_theorem("nonsense"), Error);
}

TEST_CASE("integer-valuedness of engine polynomials at integer arguments") {
  ChromaticEngine engine;
  for_each_mixed_graph(3, GraphFilter::all, [&](const MixedGraph& g) {
    Polynomial chi = engine.weak(g);
    for (long k = -10; k <= 10; ++k) {
      Rational value = chi.at(k);
      REQUIRE(value.get_den() == 1);
    }
  });
}
