#include "cellcat/recovery.hpp"

#include <sstream>

#include "cellcat/error.hpp"
#include "cellcat/perverse.hpp"

namespace cellcat {

std::vector<int> start_vertices(const CellGraph& graph, int max_len) {
  std::vector<int> out;
  for (int i = 0; i < graph.size(); ++i)
    if (graph.radius_complete() || graph.boundary_distance(i) > max_len) out.push_back(i);
  if (out.empty())
    throw Error(ErrorKind::WavefrontOutOfRadius,
                "no vertex lies more than " + std::to_string(max_len) + " steps inside the truncation");
  return out;
}

SumComplex unit_sum(const CellGraph& graph, const std::vector<int>& vertices) {
  SumComplex out;
  for (int v : vertices) out.push_back(unit_complex(graph, v));
  return out;
}

SumComplex apply_letter(const SumComplex& c, Gen r, int sign, Exec exec) {
  SumComplex out(c.size(), ZComplex(c.front().graph()));
  for_each_index(static_cast<int>(c.size()), exec, [&](int i) {
    out[i] = minimize(sign > 0 ? tensor_F(r, c[i]) : tensor_E(r, c[i]));
  });
  return out;
}

SumComplex act_signed(const CellGraph& graph, const SignedWord& word, const std::vector<int>& start, Exec exec) {
  SumComplex out(start.size(), ZComplex(graph));
  // summands never interact, so each one runs its whole letter stream independently
  for_each_index(static_cast<int>(start.size()), exec, [&](int i) {
    ZComplex c = unit_complex(graph, start[i]);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      c = minimize(it->sign > 0 ? tensor_F(it->gen, c) : tensor_E(it->gen, c));
    out[i] = std::move(c);
  });
  return out;
}

SumComplex act_positive(const CellGraph& graph, const PositiveWord& word, Exec exec) {
  SignedWord signed_word;
  for (Gen g : word) signed_word.push_back({g, 1});
  return act_signed(graph, signed_word, start_vertices(graph, static_cast<int>(word.size())), exec);
}

bool is_unit_sum(const SumComplex& c) {
  for (const ZComplex& z : c) {
    if (z.size() != 1) return false;
    const ZObject& o = z.object(0);
    if (o.shift != 0 || o.degree != 0) return false;
  }
  return true;
}

std::vector<Fingerprint> fingerprints(const SumComplex& c) {
  std::vector<Fingerprint> out;
  for (const ZComplex& z : c) out.push_back(fingerprint(z));
  return out;
}

namespace {

constexpr int kMaxSteps = 4096;

std::set<Gen> colors_of(const CellGraph& g, const std::set<int>& vertices) {
  std::set<Gen> out;
  for (int v : vertices) out.insert(g.color(v));
  return out;
}

CoxElt factor_of(CoxeterSystem& sys, const std::vector<Gen>& letters) { return sys.canonicalize(letters); }

}  // namespace

Recovery recover_from(CoxeterSystem& sys, SumComplex complex, Exec exec) {
  Recovery result;
  if (complex.empty()) return result;
  const CellGraph& g = complex.front().graph();
  std::vector<Gen> current;
  for (int step = 0; !is_unit_sum(complex); ++step) {
    if (step >= kMaxSteps) throw Error(ErrorKind::NoAnchorFound, "recovery did not terminate");
    RecoveryStep rs;
    rs.top = top_perverse_degree(complex);
    rs.anchors = anchors(complex);
    if (rs.top <= 0 || rs.anchors.empty())
      throw Error(ErrorKind::NoAnchorFound, "no anchor at top perverse degree " + std::to_string(rs.top) +
                                                " after " + std::to_string(step) + " steps");
    rs.letter = *colors_of(g, rs.anchors).begin();
    complex = apply_letter(complex, rs.letter, -1, exec);
    current.push_back(rs.letter);
    if (top_perverse_degree(complex) < rs.top) {
      rs.factor_closed = true;
      result.nf.factors.push_back(factor_of(sys, current));
      current.clear();
    }
    result.trace.push_back(std::move(rs));
  }
  if (!current.empty()) result.nf.factors.push_back(factor_of(sys, current));
  return result;
}

Recovery recover(const CellGraph& graph, const PositiveWord& word, Exec exec) {
  return recover_from(graph.system(), act_positive(graph, word, exec), exec);
}

namespace {

void explore(CoxeterSystem& sys, const SumComplex& complex, std::vector<CoxElt>& done, std::vector<Gen>& current,
             std::set<NormalForm>& out, int depth) {
  if (depth > kMaxSteps) throw Error(ErrorKind::NoAnchorFound, "recovery did not terminate");
  if (is_unit_sum(complex)) {
    NormalForm nf{done};
    if (!current.empty()) nf.factors.push_back(factor_of(sys, current));
    out.insert(nf);
    return;
  }
  const int k = top_perverse_degree(complex);
  const auto a = anchors(complex);
  if (k <= 0 || a.empty()) throw Error(ErrorKind::NoAnchorFound, "no anchor while branching");
  for (Gen t : colors_of(complex.front().graph(), a)) {
    SumComplex next = apply_letter(complex, t, -1, Exec::Serial);
    current.push_back(t);
    if (top_perverse_degree(next) < k) {
      std::vector<Gen> saved = current;
      done.push_back(factor_of(sys, current));
      current.clear();
      explore(sys, next, done, current, out, depth + 1);
      current = saved;
      done.pop_back();
    } else {
      explore(sys, next, done, current, out, depth + 1);
    }
    current.pop_back();
  }
}

}  // namespace

std::set<NormalForm> recover_all_choices(CoxeterSystem& sys, const SumComplex& complex) {
  std::set<NormalForm> out;
  std::vector<CoxElt> done;
  std::vector<Gen> current;
  explore(sys, complex, done, current, out, 0);
  return out;
}

GarsideReport check_garside_against(const CellGraph& graph, const PositiveWord& word, const NormalForm& nf) {
  CoxeterSystem& sys = graph.system();
  GarsideReport rep;
  rep.factors = static_cast<int>(nf.factors.size());
  SumComplex c = act_positive(graph, word);
  rep.top = top_perverse_degree(c);
  std::ostringstream detail;
  bool ok = rep.top == rep.factors;
  if (!ok) detail << "top degree " << rep.top << " vs " << rep.factors << " factors; ";
  if (rep.factors > 0) {
    const auto a = anchors(c);
    rep.anchor_colors = colors_of(graph, a);
    rep.expected_colors = sys.descents(nf.factors.front(), Side::Left);
    GenSet got = 0;
    for (Gen t : rep.anchor_colors) got |= gen_bit(t);
    if (got != rep.expected_colors) {
      ok = false;
      detail << "anchor colors differ from D_L(w_m); ";
    }
    const CoxeterMatrix& cm = sys.matrix();
    rep.bijectivity_checked = cm.simply_laced() && graph.radius_complete() && graph.size() == cm.rank();
    if (rep.bijectivity_checked) {
      rep.bijective = a.size() == rep.anchor_colors.size();
      if (!rep.bijective) {
        ok = false;
        detail << "anchors do not map bijectively; ";
      }
    }
  }
  rep.pass = ok;
  rep.detail = detail.str();
  return rep;
}

GarsideReport check_garside_theorem(const CellGraph& graph, const PositiveWord& word) {
  return check_garside_against(graph, word, normal_form(graph.system(), word));
}

}  // namespace cellcat
