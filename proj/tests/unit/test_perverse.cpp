#include <doctest.h>

#include <random>

#include "cellcat/error.hpp"
#include "cellcat/perverse.hpp"
#include "cellcat/recovery.hpp"

using namespace cellcat;

TEST_CASE("perverse degrees") {
  CHECK(perverse_degree_of({0, 0, 0}) == 0);
  CHECK(perverse_degree_of({0, -1, 0}) == 1);
  CHECK(perverse_degree_of({0, 1, 1}) == 0);
}

TEST_CASE("pH and the top degree") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto g = CellGraph::build(A2, 0);
  auto u = unit_complex(g, 0);
  CHECK(top_perverse_degree(u) == 0);
  CHECK(fingerprint(pH(u, 0)) == fingerprint(u));
  CHECK(pH(u, 3).empty());
  auto f = minimize(tensor_F(0, u));
  CHECK(top_perverse_degree(f) == 1);
  auto p = pH(f, 1);
  REQUIRE(p.size() == 1);
  CHECK(p.object(0).vertex == 0);
  CHECK(p.object(0).degree == p.object(0).shift);
  CHECK_THROWS_AS(top_perverse_degree(ZComplex(g)), Error);
  CHECK_THROWS_AS(pH(tensor_F(0, u), 0), Error);
}

TEST_CASE("anchors") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto g = CellGraph::build(A2, 0);
  for (int v = 0; v < g.size(); ++v) CHECK(anchors(unit_complex(g, v)) == std::set<int>{v});
  auto c = act_positive(g, {0});
  CHECK(anchors(c) == std::set<int>{0});
  CHECK(top_perverse_degree(c) == 1);
}

TEST_CASE("anchor criteria agree on random positive braids") {
  std::mt19937 rng(99);
  for (const char* type : {"A3", "B3", "H3", "I2:5"}) {
    CoxeterSystem sys(CoxeterMatrix::named(type));
    auto g = CellGraph::build(sys, CellGraph::default_base(sys.matrix()));
    std::uniform_int_distribution<int> len(0, 8), gen(0, sys.rank() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      PositiveWord w(len(rng));
      for (Gen& x : w) x = gen(rng);
      auto c = act_positive(g, w);
      std::set<Gen> by_null;
      for (int v : anchors(c)) by_null.insert(g.color(v));
      CHECK(by_null == anchor_colors_by_F(c));
    }
  }
}

TEST_CASE("table rendering") {
  CoxeterSystem I8(CoxeterMatrix::named("I2:8"));
  auto g = CellGraph::build(I8, 0);
  PerverseTable t(dihedral_wave(g, 4, 3));
  CHECK(t.entries().size() == 2);
  CHECK(t.entries().at({0, 0}).size() == 4);
  CHECK(t.entries().at({1, 1}).size() == 3);
  CHECK(t.ascii().find("[") != std::string::npos);
  CHECK(t.json().find("\"shift\":1") != std::string::npos);
}
