#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellcat/coxeter.hpp"

namespace cellcat {

class Hecke;

/// The tree Γ_s on 𝒞_s = {w : w has a unique reduced word, D_R(w) = {s}},
/// colored by π_s(w) = the unique left descent of w.
class CellGraph {
 public:
  static constexpr int kDefaultRadius = 64;

  /// BFS from s over w ↦ rw. Raises BadBaseChoice for a base outside a pair
  /// with m ≥ 4 in non-simply-laced type, unless force_base is set.
  static CellGraph build(CoxeterSystem& system, Gen s, int radius = kDefaultRadius,
                         bool force_base = false);

  /// The default base: lowest generator in a pair with m ≥ 4 (or ∞), else the first one.
  static Gen default_base(const CoxeterMatrix& matrix);
  static bool base_allowed(const CoxeterMatrix& matrix, Gen s);

  CoxeterSystem& system() const { return *sys_; }
  Gen base() const { return base_; }
  int radius() const { return radius_; }
  bool radius_complete() const { return complete_; }
  /// True when the base violates the standing rule and was only built under force.
  bool forced() const { return forced_; }
  /// Lets F_r/E_r run on a forced graph anyway.
  void set_override(bool on) { override_ = on; }
  bool categorical_allowed() const { return !forced_ || override_; }

  int size() const { return static_cast<int>(vertices_.size()); }
  CoxElt vertex(int i) const { return vertices_[i]; }
  const std::vector<CoxElt>& vertices() const { return vertices_; }
  Gen color(int i) const { return color_[i]; }
  int depth(int i) const { return depth_[i]; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Colors r for which vertex i has an r-colored neighbour beyond the truncation.
  GenSet outside_colors(int i) const { return outside_[i]; }
  /// Vertex indices colored r.
  const std::vector<int>& colored(Gen r) const { return by_color_[r]; }
  /// Shortest distance to a vertex with neighbours outside the truncation (large if complete).
  int boundary_distance(int i) const { return boundary_dist_[i]; }

  std::optional<int> find(CoxElt w) const;
  int index_of(CoxElt w) const;  // VertexOutsideGraph
  std::string label(int i) const;

  /// Structured-text export: vertices with canonical words and colors, then edges.
  std::string to_json() const;

 private:
  CoxeterSystem* sys_ = nullptr;
  Gen base_ = 0;
  int radius_ = 0;
  bool complete_ = true;
  bool forced_ = false;
  bool override_ = false;
  std::vector<CoxElt> vertices_;
  std::vector<Gen> color_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<GenSet> outside_;
  std::vector<std::vector<int>> by_color_;
  std::vector<int> boundary_dist_;
  std::unordered_map<CoxElt, int, CoxEltHash> index_;
};

/// Edge criterion: {x,y} is an edge iff π_s(x) ≠ π_s(y) and μ(x,y) ≠ 0, and then μ = 1.
bool check_mu_edges(const CellGraph& graph, Hecke& hecke);
/// Same test against an arbitrary candidate edge set (for negative controls).
bool edges_match_mu(const CellGraph& graph, Hecke& hecke,
                    const std::vector<std::pair<int, int>>& edges);

}  // namespace cellcat
