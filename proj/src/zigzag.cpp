#include "cellcat/zigzag.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cellcat/error.hpp"

namespace cellcat {

const char* to_string(MorKind kind) {
  switch (kind) {
    case MorKind::Identity: return "id";
    case MorKind::Edge: return "edge";
    case MorKind::Loop: return "loop";
  }
  return "?";
}

std::optional<MorKind> basis_kind(const CellGraph& g, int x, int m, int y, int mp) {
  switch (mp - m) {
    case 0: return x == y ? std::optional(MorKind::Identity) : std::nullopt;
    case 1: return g.adjacent(x, y) ? std::optional(MorKind::Edge) : std::nullopt;
    case 2: return x == y ? std::optional(MorKind::Loop) : std::nullopt;
    default: return std::nullopt;
  }
}

namespace {

// Composite of the basis morphisms a → b (degree da) and b → c (degree db):
// true iff it is the basis morphism a → c rather than zero.
bool composes(int a, int da, int b, int db, int c) {
  if (da == 0 || db == 0) return true;
  return da == 1 && db == 1 && a == c && a != b;
}

// Summands of B_r ⊗ B_w(m): copies B_x(m + 1 − deg f), f a basis morphism x → w, π(x) = r.
struct Copy {
  int vertex;
  int fdeg;
};

std::vector<Copy> tensor_copies(const CellGraph& g, Gen r, int w) {
  if (has_gen(g.outside_colors(w), r))
    throw Error(ErrorKind::WavefrontOutOfRadius,
                "B_" + g.system().name(r) + " applied at '" + g.label(w) + "' needs vertices beyond the truncation");
  std::vector<Copy> out;
  if (g.color(w) == r) {
    out.push_back({w, 0});
    out.push_back({w, 2});
  } else {
    for (int x : g.neighbors(w))
      if (g.color(x) == r) out.push_back({x, 1});
  }
  return out;
}

void check_categorical(const CellGraph& g) {
  if (!g.categorical_allowed())
    throw Error(ErrorKind::BadBaseChoice, "categorical operations refuse a forced base without override");
}

// Adds B_r ⊗ C with C's degrees. Returns, per object of C, the indices of its copies.
std::vector<std::vector<int>> add_tensor_part(Gen r, const ZComplex& c, ZComplex& out,
                                              std::vector<std::vector<Copy>>& copies) {
  const CellGraph& g = c.graph();
  std::vector<std::vector<int>> idx(c.size());
  copies.resize(c.size());
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& o = c.object(i);
    copies[i] = tensor_copies(g, r, o.vertex);
    for (const Copy& cp : copies[i]) idx[i].push_back(out.add_object({cp.vertex, o.shift + 1 - cp.fdeg, o.degree}));
  }
  // B_r ⊗ d: postcomposition, copy (x, f) ↦ (x, d∘f).
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& src = c.object(i);
    for (const auto& [j, scale] : c.out(i)) {
      const ZObject& tgt = c.object(j);
      const int dg = tgt.shift - src.shift;
      for (std::size_t a = 0; a < copies[i].size(); ++a) {
        const Copy& cp = copies[i][a];
        if (!composes(cp.vertex, cp.fdeg, src.vertex, dg, tgt.vertex)) continue;
        const int fdeg = cp.fdeg + dg;
        for (std::size_t b = 0; b < copies[j].size(); ++b)
          if (copies[j][b].vertex == cp.vertex && copies[j][b].fdeg == fdeg) out.add_entry(idx[i][a], idx[j][b], scale);
      }
    }
  }
  return idx;
}

}  // namespace

ZMorphism ZComplex::entry(int src, int tgt) const {
  const ZObject& a = objects_[src];
  const ZObject& b = objects_[tgt];
  auto kind = basis_kind(*graph_, a.vertex, a.shift, b.vertex, b.shift);
  auto it = out_[src].find(tgt);
  return {kind.value_or(MorKind::Identity), it == out_[src].end() ? mpq_class(0) : it->second};
}

int ZComplex::add_object(ZObject obj) {
  if (obj.vertex < 0 || obj.vertex >= graph_->size())
    throw Error(ErrorKind::VertexOutsideGraph, "vertex index " + std::to_string(obj.vertex));
  objects_.push_back(obj);
  out_.emplace_back();
  in_.emplace_back();
  minimal_ = false;
  return size() - 1;
}

void ZComplex::add_entry(int src, int tgt, const mpq_class& scale) {
  if (scale == 0) return;
  const ZObject& a = objects_.at(src);
  const ZObject& b = objects_.at(tgt);
  if (b.degree != a.degree + 1)
    throw Error(ErrorKind::InconsistentDifferential, "differential entries must raise the degree by one");
  if (!basis_kind(*graph_, a.vertex, a.shift, b.vertex, b.shift))
    throw Error(ErrorKind::ZigzagTruncationViolated,
                "no zigzag morphism from " + graph_->label(a.vertex) + "(" + std::to_string(a.shift) + ") to " +
                    graph_->label(b.vertex) + "(" + std::to_string(b.shift) + ")");
  auto [it, inserted] = out_[src].try_emplace(tgt, scale);
  if (!inserted) {
    it->second += scale;
    if (it->second == 0) {
      out_[src].erase(it);
      in_[tgt].erase(src);
      return;
    }
  }
  in_[tgt][src] = out_[src][tgt];
  minimal_ = false;
}

std::size_t ZComplex::entry_count() const {
  std::size_t n = 0;
  for (const auto& m : out_) n += m.size();
  return n;
}

void ZComplex::check_d_squared() const {
  std::map<int, mpq_class> acc;
  for (int i = 0; i < size(); ++i) {
    acc.clear();
    const ZObject& a = objects_[i];
    for (const auto& [j, x] : out_[i]) {
      const ZObject& b = objects_[j];
      for (const auto& [k, y] : out_[j]) {
        const ZObject& c = objects_[k];
        if (composes(a.vertex, b.shift - a.shift, b.vertex, c.shift - b.shift, c.vertex)) acc[k] += x * y;
      }
    }
    for (const auto& [k, total] : acc)
      if (total != 0)
        throw Error(ErrorKind::InconsistentDifferential,
                    "d∘d is non-zero from object " + std::to_string(i) + " to object " + std::to_string(k));
  }
}

std::string ZComplex::dump() const {
  std::ostringstream os;
  os << "objects " << size() << "\n";
  for (int i = 0; i < size(); ++i) {
    const ZObject& o = objects_[i];
    os << "  " << i << ": (" << graph_->label(o.vertex) << ", " << o.shift << ", " << o.degree << ")\n";
  }
  os << "entries " << entry_count() << "\n";
  for (int i = 0; i < size(); ++i)
    for (const auto& [j, scale] : out_[i])
      os << "  " << i << " -> " << j << " : " << to_string(entry(i, j).kind) << " * " << scale.get_str() << "\n";
  return os.str();
}

ZComplex unit_complex(const CellGraph& graph, int vertex) {
  ZComplex c(graph);
  c.add_object({vertex, 0, 0});
  return minimize(c);
}

ZComplex direct_sum(const std::vector<ZComplex>& parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyComplex, "direct sum of no complexes");
  ZComplex out(parts.front().graph());
  bool minimal = true;
  for (const ZComplex& p : parts) {
    const int offset = out.size();
    for (const ZObject& o : p.objects()) out.add_object(o);
    for (int i = 0; i < p.size(); ++i)
      for (const auto& [j, s] : p.out(i)) out.add_entry(offset + i, offset + j, s);
    minimal = minimal && p.minimal();
  }
  return minimal ? minimize(out) : out;
}

ZComplex tensor_F(Gen r, const ZComplex& c) {
  const CellGraph& g = c.graph();
  check_categorical(g);
  ZComplex out(g);
  std::vector<std::vector<Copy>> copies;
  auto idx = add_tensor_part(r, c, out, copies);
  std::vector<int> cone(c.size());
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& o = c.object(i);
    cone[i] = out.add_object({o.vertex, o.shift + 1, o.degree + 1});
  }
  for (int i = 0; i < c.size(); ++i) {
    for (int idx_a : idx[i]) out.add_entry(idx_a, cone[i], 1);  // evaluation
    for (const auto& [j, s] : c.out(i)) out.add_entry(cone[i], cone[j], -s);
  }
  out.check_d_squared();
  return out;
}

ZComplex tensor_E(Gen r, const ZComplex& c) {
  const CellGraph& g = c.graph();
  check_categorical(g);
  ZComplex out(g);
  std::vector<int> cone(c.size());
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& o = c.object(i);
    cone[i] = out.add_object({o.vertex, o.shift - 1, o.degree - 1});
  }
  std::vector<std::vector<Copy>> copies;
  auto idx = add_tensor_part(r, c, out, copies);
  for (int i = 0; i < c.size(); ++i) {
    for (int idx_a : idx[i]) out.add_entry(cone[i], idx_a, 1);  // coevaluation, f ↦ f^∨
    for (const auto& [j, s] : c.out(i)) out.add_entry(cone[i], cone[j], -s);
  }
  out.check_d_squared();
  return out;
}

ZComplex minimize(const ZComplex& c) {
  c.check_d_squared();
  const int n = c.size();
  std::vector<std::map<int, mpq_class>> out = c.out_, in = c.in_;
  std::vector<bool> alive(n, true);
  const auto& obj = c.objects_;

  auto set_entry = [&](int p, int q, const mpq_class& delta) {
    auto [it, inserted] = out[p].try_emplace(q, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) {
        out[p].erase(it);
        in[q].erase(p);
        return;
      }
    }
    in[q][p] = out[p][q];
  };
  auto remove = [&](int i) {
    for (const auto& [j, s] : out[i]) in[j].erase(i);
    for (const auto& [j, s] : in[i]) out[j].erase(i);
    out[i].clear();
    in[i].clear();
    alive[i] = false;
  };

  std::deque<int> work;
  for (int i = 0; i < n; ++i) work.push_back(i);
  while (!work.empty()) {
    const int i = work.front();
    work.pop_front();
    if (!alive[i]) continue;
    int j = -1;
    for (const auto& [t, s] : out[i])
      if (obj[t].vertex == obj[i].vertex && obj[t].shift == obj[i].shift) {
        j = t;
        break;
      }
    if (j < 0) continue;
    const mpq_class delta = out[i][j];
    std::vector<std::pair<int, mpq_class>> preds, succs;
    for (const auto& [p, s] : in[j])
      if (p != i) preds.emplace_back(p, s);
    for (const auto& [q, s] : out[i])
      if (q != j) succs.emplace_back(q, s);
    remove(i);
    remove(j);
    const int x = obj[i].vertex, m = obj[i].shift;
    for (const auto& [p, gamma] : preds) {
      for (const auto& [q, beta] : succs) {
        if (!composes(obj[p].vertex, m - obj[p].shift, x, obj[q].shift - m, obj[q].vertex)) continue;
        set_entry(p, q, -(beta * gamma) / delta);
      }
      work.push_back(p);
    }
  }

  ZComplex result(*c.graph_);
  std::vector<int> renumber(n, -1);
  for (int i = 0; i < n; ++i)
    if (alive[i]) renumber[i] = result.add_object(obj[i]);
  for (int i = 0; i < n; ++i)
    if (alive[i])
      for (const auto& [j, s] : out[i]) result.add_entry(renumber[i], renumber[j], s);
  result.minimal_ = true;
  return result;
}

namespace {

int rank_of(std::vector<std::vector<mpq_class>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[rank][col];
      for (int k = col; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Fingerprint fingerprint(const ZComplex& c) {
  if (!c.minimal()) throw Error(ErrorKind::NotMinimal, "fingerprint needs a minimal complex");
  Fingerprint fp;
  auto triple = [&](int i) {
    const ZObject& o = c.object(i);
    return Fingerprint::Triple{o.vertex, o.shift, o.degree};
  };
  for (int i = 0; i < c.size(); ++i) fp.objects.push_back(triple(i));
  std::sort(fp.objects.begin(), fp.objects.end());

  std::map<std::pair<Fingerprint::Triple, Fingerprint::Triple>, std::vector<std::tuple<int, int, mpq_class>>> blocks;
  for (int i = 0; i < c.size(); ++i)
    for (const auto& [j, s] : c.out(i))
      if (c.entry(i, j).kind == MorKind::Edge) blocks[{triple(i), triple(j)}].emplace_back(i, j, s);
  for (const auto& [key, entries] : blocks) {
    std::map<int, int> rows, cols;
    for (const auto& [i, j, s] : entries) {
      rows.try_emplace(i, static_cast<int>(rows.size()));
      cols.try_emplace(j, static_cast<int>(cols.size()));
    }
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size()));
    for (const auto& [i, j, s] : entries) m[rows[i]][cols[j]] = s;
    fp.edge_ranks.emplace_back(key.first, key.second, rank_of(std::move(m)));
  }
  return fp;
}

int dihedral_vertex(const CellGraph& g, int k) {
  for (int i = 0; i < g.size(); ++i)
    if (g.system().length(g.vertex(i)) == k) return i;
  throw Error(ErrorKind::IndexOutOfRange, "no vertex of length " + std::to_string(k));
}

ZComplex dihedral_wave(const CellGraph& g, int k, int l) {
  const CoxeterMatrix& cm = g.system().matrix();
  if (cm.rank() != 2 || cm.m(0, 1) == CoxeterMatrix::kInfinity)
    throw Error(ErrorKind::InvalidSystem, "the wave needs a finite dihedral system");
  const int m = cm.m(0, 1);
  if (k < 1 || k > m - 1 || l < 0 || l > m - 1)
    throw Error(ErrorKind::IndexOutOfRange, "need 1 <= k <= m-1 and 0 <= l <= m-1");
  const int w = dihedral_vertex(g, k);
  ZComplex c = unit_complex(g, w);
  Gen letter = 1 - g.color(w);
  for (int step = 0; step < l; ++step) {
    c = minimize(tensor_F(letter, c));
    letter = 1 - letter;
  }
  return c;
}

}  // namespace cellcat
