#include <doctest.h>

#include <random>

#include "cellcat/braid.hpp"
#include "cellcat/error.hpp"

using namespace cellcat;

namespace {

PositiveWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1);
  PositiveWord w(len(rng));
  for (Gen& g : w) g = gen(rng);
  return w;
}

}  // namespace

TEST_CASE("normal forms in A2") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto nf = [&](const char* w) { return format_normal_form(A2, normal_form(A2, parse_positive_word(A2, w))); };
  CHECK(nf("s t s") == "(s t s)");
  CHECK(nf("s s") == "(s)(s)");
  CHECK(nf("t s t s") == "(t)(s t s)");
  CHECK(nf("") == "()");
  CHECK(nf("s t s t") == "(s)(s t s)");
  auto oracle = oracle_normal_form(A2, parse_positive_word(A2, "s t s t"));
  CHECK(format_normal_form(A2, oracle) == "(s)(s t s)");
  CHECK(format_normal_form(A2, oracle_normal_form(A2, {0})) == "(s)");
}

TEST_CASE("normal pairs") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto E = [&](const char* w) { return A2.canonicalize(A2.parse_word(w)); };
  CHECK(is_normal_pair(A2, E("s t"), E("t s")));
  CHECK_FALSE(is_normal_pair(A2, E("s"), E("t")));
  CHECK(is_normal_pair(A2, E("t s"), E("s t s")));
}

TEST_CASE("monoid equality") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  CHECK(monoid_equal(A2, {0, 1, 0}, {1, 0, 1}));
  CHECK_FALSE(monoid_equal(A2, {0, 1}, {1, 0}));
  CHECK(monoid_equal(A2, {0, 0, 1}, {0, 0, 1}));
}

TEST_CASE("oracle agrees on every A2 word up to length 6") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  for (int len = 0; len <= 6; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      PositiveWord w;
      for (int i = 0; i < len; ++i) w.push_back(mask >> i & 1);
      CHECK(normal_form(A2, w) == oracle_normal_form(A2, w));
    }
}

TEST_CASE("random words: invariants, oracle and confluence") {
  std::mt19937 rng(2024);
  for (const char* type : {"A2", "A3", "B3", "I2:5", "~A2"}) {
    CoxeterSystem sys(CoxeterMatrix::named(type));
    const int max_len = std::string(type) == "~A2" ? 8 : 10;
    for (int trial = 0; trial < 200; ++trial) {
      PositiveWord w = random_word(rng, sys.rank(), max_len);
      NormalForm nf = normal_form(sys, w);
      CHECK(is_normal(sys, nf));
      CHECK(monoid_equal(sys, to_word(sys, nf), w));
      std::size_t total = 0;
      for (CoxElt f : nf.factors) total += sys.length(f);
      CHECK(total == w.size());
      CHECK(normal_form_shuffled(sys, w, rng) == nf);
      CHECK_MESSAGE(oracle_normal_form(sys, w) == nf, type, " ", sys.format_word(w));
    }
  }
}

TEST_CASE("signed words") {
  CoxeterSystem A2(CoxeterMatrix::named("A2"));
  auto w = parse_signed_word(A2, "s -t s");
  CHECK(w == SignedWord{{0, 1}, {1, -1}, {0, 1}});
  CHECK(format_signed_word(A2, w) == "s -t s");
  CHECK_THROWS_AS(parse_positive_word(A2, "s -t"), Error);
  CHECK_THROWS_AS(parse_signed_word(A2, "s q"), Error);
}
