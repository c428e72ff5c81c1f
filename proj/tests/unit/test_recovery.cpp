#include <doctest.h>

#include <random>

#include "cellcat/error.hpp"
#include "cellcat/perverse.hpp"
#include "cellcat/recovery.hpp"

using namespace cellcat;

namespace {

PositiveWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1);
  PositiveWord w(len(rng));
  for (Gen& g : w) g = gen(rng);
  return w;
}

}  // namespace

TEST_CASE("recovering A2 normal forms") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto g = CellGraph::build(A2, 0);
  auto r = recover(g, parse_positive_word(A2, "s t s"));
  CHECK(format_normal_form(A2, r.nf) == "(s t s)");
  CHECK(r.trace.front().top == 1);
  CHECK(r.trace.back().factor_closed);
  CHECK(format_normal_form(A2, recover(g, parse_positive_word(A2, "t s t s")).nf) == "(t)(s t s)");
  CHECK(recover(g, {}).nf.factors.empty());
  CHECK(is_unit_sum(act_positive(g, {})));
}

TEST_CASE("recovery matches the combinatorial normal form") {
  std::mt19937 rng(5);
  for (const char* type : {"A2", "A3", "B3", "H3", "I2:5", "I2:8"}) {
    CoxeterSystem sys(CoxeterMatrix::named(type));
    auto g = CellGraph::build(sys, CellGraph::default_base(sys.matrix()));
    for (int trial = 0; trial < 40; ++trial) {
      auto w = random_word(rng, sys.rank(), 8);
      auto nf = normal_form(sys, w);
      CHECK_MESSAGE(recover(g, w).nf == nf, type, " ", sys.format_word(w));
      CHECK(check_garside_theorem(g, w).pass);
    }
  }
}

TEST_CASE("serial and parallel actions agree") {
  CoxeterSystem sys(CoxeterMatrix::named("H3"));
  auto g = CellGraph::build(sys, CellGraph::default_base(sys.matrix()));
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = random_word(rng, 3, 8);
    CHECK(fingerprints(act_positive(g, w, Exec::Serial)) == fingerprints(act_positive(g, w, Exec::Parallel)));
  }
}

TEST_CASE("anchor choice does not matter") {
  CoxeterSystem A3(CoxeterMatrix::named("A3"));
  auto g = CellGraph::build(A3, 0);
  for (int len = 0; len <= 5; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      PositiveWord w;
      for (int i = 0, c = code; i < len; ++i, c /= 3) w.push_back(c % 3);
      auto all = recover_all_choices(A3, act_positive(g, w));
      CHECK(all == std::set<NormalForm>{normal_form(A3, w)});
    }
  }
}

TEST_CASE("negative control and monoid separation") {
  CoxeterSystem A3(CoxeterMatrix::named("A3"));
  auto g = CellGraph::build(A3, 0);
  auto a = parse_positive_word(A3, "s t u");
  auto b = parse_positive_word(A3, "s t u s t");
  CHECK_FALSE(check_garside_against(g, a, normal_form(A3, b)).pass);
  std::mt19937 rng(1);
  int compared = 0;
  while (compared < 40) {
    auto x = random_word(rng, 3, 7), y = random_word(rng, 3, 7);
    if (monoid_equal(A3, x, y)) continue;
    ++compared;
    CHECK(fingerprints(act_positive(g, x)) != fingerprints(act_positive(g, y)));
  }
}

TEST_CASE("affine A2 on a bounded graph") {
  CoxeterSystem sys(CoxeterMatrix::named("~A2"));
  auto g = CellGraph::build(sys, 0, 12);
  auto start = start_vertices(g, 8);
  std::set<Gen> colors;
  for (int v : start) colors.insert(g.color(v));
  CHECK(colors.size() == 3);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = random_word(rng, 3, 8);
    CHECK(recover(g, w).nf == normal_form(sys, w));
  }
  CHECK_THROWS_AS(start_vertices(g, 20), Error);
}
