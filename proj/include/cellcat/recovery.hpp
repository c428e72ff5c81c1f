#pragma once

// Reading the Garside normal form of a positive braid off the categorical
// action on ⊕_w B_w.

#include <set>
#include <string>
#include <vector>

#include "cellcat/braid.hpp"
#include "cellcat/parallel.hpp"
#include "cellcat/zigzag.hpp"

namespace cellcat {

/// ⊕_w B_w kept as independent per-vertex summands.
using SumComplex = std::vector<ZComplex>;

/// Vertices to start from for words of length ≤ max_len: all of them on a
/// complete graph, else those at distance > max_len from the truncation.
std::vector<int> start_vertices(const CellGraph& graph, int max_len);
SumComplex unit_sum(const CellGraph& graph, const std::vector<int>& vertices);

/// F_σ(⊕ B_w), σ = a_1…a_L acting with a_L first; minimized after every letter.
SumComplex act_positive(const CellGraph& graph, const PositiveWord& word, Exec exec = Exec::Parallel);
/// Letters +r act by F_r, −r by E_r.
SumComplex act_signed(const CellGraph& graph, const SignedWord& word, const std::vector<int>& start,
                      Exec exec = Exec::Parallel);
/// Applies F_r (sign +1) or E_r (sign −1) to every summand and minimizes.
SumComplex apply_letter(const SumComplex& c, Gen r, int sign, Exec exec = Exec::Parallel);

bool is_unit_sum(const SumComplex& c);
std::vector<Fingerprint> fingerprints(const SumComplex& c);

struct RecoveryStep {
  int top = 0;
  std::set<int> anchors;
  Gen letter = 0;
  bool factor_closed = false;
};

struct Recovery {
  NormalForm nf;
  std::vector<RecoveryStep> trace;
};

/// Peels the normal form off the complex alone: read k, take the anchor color
/// of least index, apply E and minimize; a drop of k closes the current factor.
/// NoAnchorFound if the top diagonal has no anchor before reaching ⊕ units.
Recovery recover_from(CoxeterSystem& sys, SumComplex complex, Exec exec = Exec::Parallel);
Recovery recover(const CellGraph& graph, const PositiveWord& word, Exec exec = Exec::Parallel);

/// Every normal form reachable by branching over all anchor colors at every step.
std::set<NormalForm> recover_all_choices(CoxeterSystem& sys, const SumComplex& complex);

struct GarsideReport {
  bool pass = false;
  int top = 0;
  int factors = 0;
  std::set<Gen> anchor_colors;
  GenSet expected_colors = 0;     // D_L(w_m)
  bool bijectivity_checked = false;
  bool bijective = false;
  std::string detail;
};

/// Categorical invariants of F_word(⊕ B_w) against the combinatorial normal form `nf`.
GarsideReport check_garside_against(const CellGraph& graph, const PositiveWord& word, const NormalForm& nf);
GarsideReport check_garside_theorem(const CellGraph& graph, const PositiveWord& word);

}  // namespace cellcat
