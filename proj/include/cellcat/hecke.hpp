#pragma once

// Hecke algebra of (W,S) in Soergel's normalization, KL basis and the
// left cell module on Γ_s.

#include <map>
#include <mutex>
#include <unordered_map>

#include "cellcat/coxeter.hpp"
#include "cellcat/ring.hpp"

namespace cellcat {

class CellGraph;

/// Sparse element of the Hecke algebra; coordinates on {H_w} or on a KL basis,
/// depending on context.
class HeckeElt {
 public:
  using Terms = std::map<CoxElt, LaurentPoly>;

  HeckeElt() = default;
  static HeckeElt basis(CoxElt w, LaurentPoly coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(CoxElt w) const;
  void add(CoxElt w, const LaurentPoly& p);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt scaled(const LaurentPoly& p) const;

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  Terms terms_;
};

/// Coordinates of an element of the cell module on the images of 𝐻̲_w, w ∈ 𝒞_s.
using CellVector = HeckeElt;

class Hecke {
 public:
  explicit Hecke(CoxeterSystem& system) : sys_(system) {}

  CoxeterSystem& system() { return sys_; }

  /// H_s·h (Side::Left) or h·H_s (Side::Right) in the standard basis.
  HeckeElt mul_std_gen(Gen s, const HeckeElt& h, Side side);
  /// Product in the standard basis.
  HeckeElt mul_std(const HeckeElt& a, const HeckeElt& b);
  /// Bar involution on standard coordinates, using H_s⁻¹ = H_s + (v − v⁻¹).
  HeckeElt bar(const HeckeElt& h);

  /// 𝐻̲_w in the standard basis. Memoized.
  HeckeElt kl_basis(CoxElt w);
  /// h_{y,w}; zero unless y ≤ w.
  LaurentPoly h(CoxElt y, CoxElt w);
  /// Coefficient of v in h_{y,x}, extended symmetrically, 0 for incomparable pairs.
  long mu(CoxElt y, CoxElt x);
  /// Graded rank of Hom(B_x, B_y): Σ_{z ≤ x,y} h_{z,x} h_{z,y}.
  LaurentPoly hom_rank(CoxElt x, CoxElt y);

  /// 𝐻̲_r · vec in the cell module, through the left multiplication formula.
  CellVector cell_action_kl(Gen r, const CellVector& vec, const CellGraph& graph);
  /// H_r·vec (sign = +1) or H_r⁻¹·vec (sign = −1).
  CellVector cell_action_std(Gen r, int sign, const CellVector& vec, const CellGraph& graph);

 private:
  const HeckeElt& kl_locked(CoxElt w);

  CoxeterSystem& sys_;
  std::recursive_mutex mutex_;
  std::unordered_map<CoxElt, HeckeElt, CoxEltHash> kl_memo_;
};

}  // namespace cellcat
