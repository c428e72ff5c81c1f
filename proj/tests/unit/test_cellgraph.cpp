#include <doctest.h>

#include <set>

#include "cellcat/cellgraph.hpp"
#include "cellcat/error.hpp"
#include "cellcat/hecke.hpp"

using namespace cellcat;

namespace {

std::vector<std::string> labels(const CellGraph& g) {
  std::vector<std::string> out;
  for (int i = 0; i < g.size(); ++i) out.push_back(g.label(i));
  return out;
}

bool connected(const CellGraph& g) {
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : g.neighbors(i))
      if (seen.insert(j).second) stack.push_back(j);
  }
  return static_cast<int>(seen.size()) == g.size();
}

}  // namespace

TEST_CASE("A3 cell graph is the Coxeter graph") {
  CoxeterSystem A3(CoxeterMatrix::named("A3"));
  auto g = CellGraph::build(A3, 0);
  CHECK(labels(g) == std::vector<std::string>{"s", "t s", "u t s"});
  CHECK(g.color(0) == 0);
  CHECK(g.color(1) == 1);
  CHECK(g.color(2) == 2);
  CHECK(g.edges().size() == 2);
  for (auto [a, b] : g.edges()) CHECK(A3.matrix().m(g.color(a), g.color(b)) == 3);
  CHECK(g.radius_complete());
}

TEST_CASE("forced base reproduces the non-smooth example") {
  CoxeterSystem B3(CoxeterMatrix::named("B3"));
  CHECK_THROWS_AS(CellGraph::build(B3, 0), Error);
  auto g = CellGraph::build(B3, 0, CellGraph::kDefaultRadius, true);
  CHECK(g.forced());
  CHECK(labels(g) == std::vector<std::string>{"s", "t s", "u t s", "t u t s", "s t u t s"});
  CHECK(g.edges().size() == 4);
  CHECK(CellGraph::default_base(B3.matrix()) == 1);
  CHECK_THROWS_AS(CellGraph::build(B3, 1, 0), Error);
}

TEST_CASE("dihedral cell graphs are alternating paths") {
  for (int m = 3; m <= 9; ++m) {
    CoxeterSystem I(CoxeterMatrix::named("I2:" + std::to_string(m)));
    auto g = CellGraph::build(I, 0);
    REQUIRE(g.size() == m - 1);
    for (int i = 0; i < g.size(); ++i) {
      CHECK(I.length(g.vertex(i)) == i + 1);
      CHECK(g.color(i) == i % 2);
      if (i > 0) CHECK(g.adjacent(i - 1, i));
    }
  }
}

TEST_CASE("structural invariants") {
  for (const char* type : {"A1", "A4", "B3", "B4", "D4", "H3", "H4", "F4", "I2:5"}) {
    CoxeterSystem sys(CoxeterMatrix::named(type));
    Hecke H(sys);
    auto g = CellGraph::build(sys, CellGraph::default_base(sys.matrix()));
    CHECK(g.radius_complete());
    CHECK(static_cast<int>(g.edges().size()) == g.size() - 1);
    CHECK(connected(g));
    for (int i = 0; i < g.size(); ++i) {
      CHECK(sys.reduced_words(g.vertex(i)).size() == 1);
      CHECK(sys.descents(g.vertex(i), Side::Right) == gen_bit(g.base()));
      CHECK(sys.descents(g.vertex(i), Side::Left) == gen_bit(g.color(i)));
      for (int j : g.neighbors(i)) CHECK(g.color(i) != g.color(j));
    }
    if (sys.rank() <= 4 && std::string(type) != "H4") CHECK(check_mu_edges(g, H));
  }
}

TEST_CASE("mu edge check") {
  CoxeterSystem I5(CoxeterMatrix::named("I2:5"));
  Hecke H(I5);
  auto g = CellGraph::build(I5, 0);
  CHECK(check_mu_edges(g, H));
  auto corrupted = g.edges();
  corrupted.pop_back();
  corrupted.emplace_back(0, 3);
  CHECK_FALSE(edges_match_mu(g, H, corrupted));

  CoxeterSystem A3(CoxeterMatrix::named("A3"));
  Hecke H3(A3);
  CHECK(check_mu_edges(CellGraph::build(A3, 1), H3));
}

TEST_CASE("affine A2 truncation") {
  CoxeterSystem sys(CoxeterMatrix::named("~A2"));
  auto g = CellGraph::build(sys, 0, 12);
  CHECK_FALSE(g.radius_complete());
  CHECK(g.size() == 23);
  CHECK(static_cast<int>(g.edges().size()) == g.size() - 1);
  int boundary = 0;
  for (int i = 0; i < g.size(); ++i) {
    CHECK(g.neighbors(i).size() <= 2);
    if (g.outside_colors(i)) {
      ++boundary;
      CHECK(sys.length(g.vertex(i)) == 12);
      CHECK(g.boundary_distance(i) == 0);
    }
  }
  CHECK(boundary == 2);
  CHECK_THROWS_AS(g.index_of(sys.generator(1)), Error);
  CHECK(g.to_json().find("\"radius_complete\": false") != std::string::npos);
}
