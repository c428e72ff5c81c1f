#include "cellcat/hecke.hpp"

#include "cellcat/cellgraph.hpp"
#include "cellcat/error.hpp"

namespace cellcat {

HeckeElt HeckeElt::basis(CoxElt w, LaurentPoly coeff) {
  HeckeElt h;
  h.add(w, coeff);
  return h;
}

LaurentPoly HeckeElt::coeff(CoxElt w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(CoxElt w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  for (const auto& [w, p] : other.terms_) add(w, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  for (const auto& [w, p] : other.terms_) add(w, -p);
  return *this;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& p) const {
  HeckeElt out;
  if (p.is_zero()) return out;
  for (const auto& [w, q] : terms_) out.add(w, q * p);
  return out;
}

HeckeElt Hecke::mul_std_gen(Gen s, const HeckeElt& h, Side side) {
  static const LaurentPoly kQuad = LaurentPoly::monomial(-1) - LaurentPoly::v();
  HeckeElt out;
  for (const auto& [w, p] : h.terms()) {
    CoxElt sw = side == Side::Left ? sys_.lmul(s, w) : sys_.rmul(w, s);
    if (sys_.length(sw) > sys_.length(w)) {
      out.add(sw, p);
    } else {
      out.add(w, p * kQuad);
      out.add(sw, p);
    }
  }
  return out;
}

HeckeElt Hecke::mul_std(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (const auto& [w, p] : b.terms()) {
    HeckeElt acc = a;
    for (Gen s : sys_.word(w)) acc = mul_std_gen(s, acc, Side::Right);
    out += acc.scaled(p);
  }
  return out;
}

HeckeElt Hecke::bar(const HeckeElt& h) {
  const LaurentPoly shift = LaurentPoly::v() - LaurentPoly::monomial(-1);
  HeckeElt out;
  for (const auto& [w, p] : h.terms()) {
    HeckeElt acc = HeckeElt::basis(sys_.identity(), p.bar());
    for (Gen s : sys_.word(w)) {
      HeckeElt next = mul_std_gen(s, acc, Side::Right);
      next += acc.scaled(shift);
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

const HeckeElt& Hecke::kl_locked(CoxElt w) {
  if (auto it = kl_memo_.find(w); it != kl_memo_.end()) return it->second;
  HeckeElt result;
  if (w == sys_.identity()) {
    result = HeckeElt::basis(w);
  } else {
    Gen s = 0;
    const GenSet left = sys_.descents(w, Side::Left);
    while (!has_gen(left, s)) ++s;
    const CoxElt sw = sys_.lmul(s, w);
    const HeckeElt prev = kl_locked(sw);
    result = mul_std_gen(s, prev, Side::Left);
    result += prev.scaled(LaurentPoly::v());
    for (const auto& [z, p] : prev.terms()) {
      if (z == sw || !has_gen(sys_.descents(z, Side::Left), s)) continue;
      mpz_class m = p.coeff(1);
      if (m != 0) result -= kl_locked(z).scaled(LaurentPoly(m.get_si()));
    }
  }
  return kl_memo_.emplace(w, std::move(result)).first->second;
}

HeckeElt Hecke::kl_basis(CoxElt w) {
  std::lock_guard lock(mutex_);
  return kl_locked(w);
}

LaurentPoly Hecke::h(CoxElt y, CoxElt w) {
  std::lock_guard lock(mutex_);
  return kl_locked(w).coeff(y);
}

long Hecke::mu(CoxElt y, CoxElt x) {
  if (y == x) return 0;
  std::lock_guard lock(mutex_);
  if (sys_.length(y) > sys_.length(x)) std::swap(x, y);
  return kl_locked(x).coeff(y).coeff(1).get_si();
}

LaurentPoly Hecke::hom_rank(CoxElt x, CoxElt y) {
  std::lock_guard lock(mutex_);
  const HeckeElt& cx = kl_locked(x);
  const HeckeElt& cy = kl_locked(y);
  LaurentPoly out;
  for (const auto& [z, p] : cx.terms()) {
    auto it = cy.terms().find(z);
    if (it != cy.terms().end()) out += p * it->second;
  }
  return out;
}

CellVector Hecke::cell_action_kl(Gen r, const CellVector& vec, const CellGraph& graph) {
  CellVector out;
  for (const auto& [w, p] : vec.terms()) {
    graph.index_of(w);
    if (has_gen(sys_.descents(w, Side::Left), r)) {
      out.add(w, p * LaurentPoly::quantum_two());
      continue;
    }
    // 𝐻̲_r𝐻̲_w = 𝐻̲_{rw} + Σ_{z<w, rz<z} μ(z,w)𝐻̲_z, then drop everything outside the cell.
    const CoxElt rw = sys_.lmul(r, w);
    if (graph.find(rw)) out.add(rw, p);
    const HeckeElt cw = kl_basis(w);
    for (const auto& [z, hz] : cw.terms()) {
      if (z == w || !graph.find(z) || !has_gen(sys_.descents(z, Side::Left), r)) continue;
      mpz_class m = hz.coeff(1);
      if (m != 0) out.add(z, p * LaurentPoly(m.get_si()));
    }
  }
  return out;
}

CellVector Hecke::cell_action_std(Gen r, int sign, const CellVector& vec, const CellGraph& graph) {
  CellVector out = cell_action_kl(r, vec, graph);
  out -= vec.scaled(LaurentPoly::monomial(sign > 0 ? 1 : -1));
  return out;
}

}  // namespace cellcat
