#pragma once

// Grothendieck classes of complexes in the cell module and the Burau example.

#include <vector>

#include "cellcat/braid.hpp"
#include "cellcat/hecke.hpp"
#include "cellcat/recovery.hpp"
#include "cellcat/zigzag.hpp"

namespace cellcat {

using GrothClass = CellVector;
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Σ (−1)^n v^m 𝐻̲_w over the objects (w, m, n).
GrothClass decat_class(const ZComplex& c);

/// For every start vertex w: [F_word(B_w)] equals the Hecke action of the word
/// on 𝐻̲_w (+r ↦ H_r, −r ↦ H_r⁻¹).
bool verify_decat(const CellGraph& graph, Hecke& hecke, const SignedWord& word);

struct BurauMatrices {
  LaurentMatrix raw;       // on the basis [B_[j]], columns are images
  LaurentMatrix twisted;   // on the basis (−1)^{j−1} v^j [B_[j]]
  std::vector<LaurentPoly> scaling;  // the diagonal (−1)^{j−1} v^j
};

/// Operator of σ_i on the cell module of A_{n−1} (base s_1, [j] = s_j…s_1),
/// acting as −v⁻¹·[F_{s_i}]. IndexOutOfRange unless 1 ≤ i ≤ n−1.
BurauMatrices burau_matrix(int n, int i);

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace cellcat
