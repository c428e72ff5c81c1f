#include "cellcat/decat.hpp"

#include "cellcat/error.hpp"

namespace cellcat {

GrothClass decat_class(const ZComplex& c) {
  GrothClass out;
  const CellGraph& g = c.graph();
  for (const ZObject& o : c.objects())
    out.add(g.vertex(o.vertex), LaurentPoly::monomial(o.shift, o.degree % 2 == 0 ? 1 : -1));
  return out;
}

bool verify_decat(const CellGraph& graph, Hecke& hecke, const SignedWord& word) {
  const auto start = start_vertices(graph, static_cast<int>(word.size()));
  const SumComplex action = act_signed(graph, word, start);
  for (std::size_t i = 0; i < start.size(); ++i) {
    CellVector expect = CellVector::basis(graph.vertex(start[i]));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      expect = hecke.cell_action_std(it->gen, it->sign, expect, graph);
    if (decat_class(action[i]) != expect) return false;
  }
  return true;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  LaurentMatrix out(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

BurauMatrices burau_matrix(int n, int i) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "Burau needs n >= 2");
  if (i < 1 || i > n - 1)
    throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  CoxeterSystem sys(CoxeterMatrix::named("A" + std::to_string(n - 1)));
  const CellGraph g = CellGraph::build(sys, 0);
  const int d = n - 1;
  // vertex j-1 is [j] = s_j…s_1
  std::vector<int> pos(d);
  for (int v = 0; v < g.size(); ++v) pos[sys.length(g.vertex(v)) - 1] = v;

  BurauMatrices out;
  out.raw.assign(d, std::vector<LaurentPoly>(d));
  out.twisted.assign(d, std::vector<LaurentPoly>(d));
  const LaurentPoly factor = LaurentPoly::monomial(-1, -1);
  for (int col = 0; col < d; ++col) {
    GrothClass cls = decat_class(minimize(tensor_F(i - 1, unit_complex(g, pos[col]))));
    for (int row = 0; row < d; ++row) out.raw[row][col] = cls.coeff(g.vertex(pos[row])) * factor;
  }
  for (int j = 1; j <= d; ++j) out.scaling.push_back(LaurentPoly::monomial(j, j % 2 == 1 ? 1 : -1));
  // twisted = D⁻¹ · raw · D, D = diag(scaling); D⁻¹ is diag(±v^{−j}) with the same sign.
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) {
      const int sign = ((row + col) % 2 == 0) ? 1 : -1;
      out.twisted[row][col] = out.raw[row][col] * LaurentPoly::monomial(col - row, sign);
    }
  return out;
}

}  // namespace cellcat
