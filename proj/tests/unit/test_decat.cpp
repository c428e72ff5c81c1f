#include <doctest.h>

#include <random>

#include "cellcat/decat.hpp"
#include "cellcat/error.hpp"

using namespace cellcat;

namespace {

LaurentPoly P(const char* t) { return LaurentPoly::parse(t); }

LaurentMatrix identity(int d) {
  LaurentMatrix m(d, std::vector<LaurentPoly>(d));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

// Standard reduced Burau matrix of σ_i (1-based) in dimension n−1, variable t = v⁻².
LaurentMatrix reduced_burau(int n, int i) {
  const LaurentPoly t = LaurentPoly::monomial(-2);
  LaurentMatrix m = identity(n - 1);
  const int c = i - 1;
  m[c][c] = -t;
  if (c > 0) m[c - 1][c] = t;
  if (c + 1 < n - 1) m[c + 1][c] = 1;
  return m;
}

LaurentMatrix transpose(const LaurentMatrix& a) {
  LaurentMatrix t(a[0].size(), std::vector<LaurentPoly>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

TEST_CASE("classes of simple complexes") {
  CoxeterSystem A3(CoxeterMatrix::named("A3"));
  Hecke H(A3);
  auto g = CellGraph::build(A3, 0);
  CHECK(decat_class(unit_complex(g, 1)) == GrothClass::basis(g.vertex(1)));
  auto raw = tensor_F(2, unit_complex(g, 0));
  CHECK(decat_class(raw) == GrothClass::basis(g.vertex(0), P("-v")));
  CHECK(decat_class(raw) == H.cell_action_std(2, 1, CellVector::basis(g.vertex(0)), g));
  CHECK(decat_class(minimize(raw)) == decat_class(raw));
  CHECK(verify_decat(g, H, {}));
  CHECK(verify_decat(g, H, {{1, -1}}));
  auto e = minimize(tensor_E(1, unit_complex(g, 0)));
  CHECK(decat_class(e) == H.cell_action_std(1, -1, CellVector::basis(g.vertex(0)), g));
}

TEST_CASE("random signed words decategorify to the Hecke action") {
  std::mt19937 rng(17);
  for (const char* type : {"A3", "B3", "H3", "I2:8"}) {
    CoxeterSystem sys(CoxeterMatrix::named(type));
    Hecke H(sys);
    auto g = CellGraph::build(sys, CellGraph::default_base(sys.matrix()));
    std::uniform_int_distribution<int> len(0, 8), gen(0, sys.rank() - 1), coin(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
      SignedWord w(len(rng));
      for (auto& l : w) l = {gen(rng), coin(rng) ? 1 : -1};
      CHECK_MESSAGE(verify_decat(g, H, w), type, " ", format_signed_word(sys, w));
    }
    // homotopy invariance of the class through minimization
    ZComplex c = unit_complex(g, 0);
    for (int i = 0; i < 5; ++i) {
      auto raw = tensor_F(static_cast<Gen>(i % sys.rank()), c);
      c = minimize(raw);
      CHECK(decat_class(c) == decat_class(raw));
    }
  }
}

TEST_CASE("Burau example") {
  for (int i = 1; i <= 4; ++i) {
    auto m = burau_matrix(5, i);
    LaurentMatrix expect = identity(4);
    const int c = i - 1;
    expect[c][c] = P("-v^-2");
    if (c > 0) expect[c][c - 1] = P("v^-2");
    if (c + 1 < 4) expect[c][c + 1] = 1;
    CHECK(m.twisted == expect);
    CHECK(m.twisted == transpose(reduced_burau(5, i)));
  }
  CHECK(burau_matrix(5, 2).scaling[1] == P("-v^2"));
  CHECK_THROWS_AS(burau_matrix(5, 5), Error);
  CHECK_THROWS_AS(burau_matrix(5, 0), Error);
}

TEST_CASE("Burau matrices satisfy the braid relations") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        auto a = burau_matrix(n, i).twisted, b = burau_matrix(n, j).twisted;
        if (j == i + 1)
          CHECK(mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b));
        else
          CHECK(mat_mul(a, b) == mat_mul(b, a));
        auto ra = burau_matrix(n, i).raw, rb = burau_matrix(n, j).raw;
        if (j == i + 1) CHECK(mat_mul(mat_mul(ra, rb), ra) == mat_mul(mat_mul(rb, ra), rb));
      }
}
