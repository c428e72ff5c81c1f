#pragma once

// Bounded complexes over the zigzag-truncated cell category of Γ_s, the
// Rouquier actions F_r, E_r and Gaussian elimination.
//
// Between B_x(m) and B_y(m') there is at most one basis morphism, of degree
// m' − m: the identity (x = y, degree 0), the edge (x ~ y, degree 1) or the
// loop (x = y, degree 2). A differential entry is therefore a scalar.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cellcat/cellgraph.hpp"

namespace cellcat {

enum class MorKind { Identity, Edge, Loop };

const char* to_string(MorKind kind);

struct ZObject {
  int vertex = 0;
  int shift = 0;   // internal grading m of B_w(m)
  int degree = 0;  // cohomological degree n
  friend auto operator<=>(const ZObject&, const ZObject&) = default;
};

struct ZMorphism {
  MorKind kind;
  mpq_class scale;
};

/// The basis morphism from B_x(m) to B_y(m'), if the zigzag algebra has one.
std::optional<MorKind> basis_kind(const CellGraph& g, int x, int m, int y, int mp);

class ZComplex {
 public:
  explicit ZComplex(const CellGraph& graph) : graph_(&graph) {}

  const CellGraph& graph() const { return *graph_; }
  int size() const { return static_cast<int>(objects_.size()); }
  bool empty() const { return objects_.empty(); }
  const ZObject& object(int i) const { return objects_[i]; }
  const std::vector<ZObject>& objects() const { return objects_; }
  /// Differential entries leaving / entering object i, keyed by the other end.
  const std::map<int, mpq_class>& out(int i) const { return out_[i]; }
  const std::map<int, mpq_class>& in(int i) const { return in_[i]; }
  ZMorphism entry(int src, int tgt) const;  // scale 0 if absent
  bool minimal() const { return minimal_; }

  int add_object(ZObject obj);
  /// Adds `scale` to the entry src → tgt; checks degree and that a basis morphism exists.
  void add_entry(int src, int tgt, const mpq_class& scale);

  /// Raises InconsistentDifferential unless d∘d = 0.
  void check_d_squared() const;
  std::size_t entry_count() const;

  /// `(vertex-word, shift, degree)` lines, then `src -> tgt : kind * p/q`.
  std::string dump() const;

 private:
  friend ZComplex minimize(const ZComplex&);

  const CellGraph* graph_;
  std::vector<ZObject> objects_;
  std::vector<std::map<int, mpq_class>> out_;
  std::vector<std::map<int, mpq_class>> in_;
  bool minimal_ = false;
};

ZComplex unit_complex(const CellGraph& graph, int vertex);
ZComplex direct_sum(const std::vector<ZComplex>& parts);

/// F_r(C): total complex of B_r⊗C → C(1).
ZComplex tensor_F(Gen r, const ZComplex& c);
/// E_r(C): total complex of C(−1) → B_r⊗C.
ZComplex tensor_E(Gen r, const ZComplex& c);
/// Gaussian elimination of every invertible (Identity) entry.
ZComplex minimize(const ZComplex& c);

/// Isomorphism invariant of a minimal complex: the multiset of objects and,
/// for every pair of object types joined by edges, the rank of the scalar block.
struct Fingerprint {
  using Triple = std::tuple<int, int, int>;  // vertex, shift, degree
  std::vector<Triple> objects;
  std::vector<std::tuple<Triple, Triple, int>> edge_ranks;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ZComplex& c);  // NotMinimal

/// Vertex [k] of Γ_s in I₂(m): the alternating word of length k ending in s.
int dihedral_vertex(const CellGraph& g, int k);
/// minimize(F_{l̂}(B_[k])) in I₂(mrt), l̂ the alternating word of length l whose
/// first applied letter is not π_s([k]). The graph must belong to I₂(mrt).
ZComplex dihedral_wave(const CellGraph& g, int k, int l);

}  // namespace cellcat
