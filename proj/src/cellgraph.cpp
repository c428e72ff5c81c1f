#include "cellcat/cellgraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>

#include <json.hpp>

#include "cellcat/error.hpp"
#include "cellcat/hecke.hpp"

namespace cellcat {

bool CellGraph::base_allowed(const CoxeterMatrix& matrix, Gen s) {
  if (matrix.simply_laced()) return true;
  for (Gen t = 0; t < matrix.rank(); ++t) {
    if (t == s) continue;
    int m = matrix.m(s, t);
    if (m == CoxeterMatrix::kInfinity || m >= 4) return true;
  }
  return false;
}

Gen CellGraph::default_base(const CoxeterMatrix& matrix) {
  for (Gen s = 0; s < matrix.rank(); ++s)
    if (base_allowed(matrix, s)) return s;
  return 0;
}

CellGraph CellGraph::build(CoxeterSystem& system, Gen s, int radius, bool force_base) {
  if (radius < 1) throw Error(ErrorKind::RadiusTooSmall, "radius must be at least 1");
  if (s < 0 || s >= system.rank())
    throw Error(ErrorKind::UnknownGenerator, "base index " + std::to_string(s));
  CellGraph g;
  g.sys_ = &system;
  g.base_ = s;
  g.radius_ = radius;
  if (!base_allowed(system.matrix(), s)) {
    if (!force_base)
      throw Error(ErrorKind::BadBaseChoice, "base " + system.name(s) +
                                                " lies in no pair with m >= 4 of this non-simply-laced system");
    g.forced_ = true;
  }
  const int rank = system.rank();
  auto add_vertex = [&](CoxElt w, int depth) {
    int id = g.size();
    g.vertices_.push_back(w);
    g.color_.push_back(std::countr_zero(system.descents(w, Side::Left)));
    g.depth_.push_back(depth);
    g.adj_.emplace_back();
    g.outside_.push_back(0);
    g.index_.emplace(w, id);
    return id;
  };
  add_vertex(system.generator(s), 1);
  for (int i = 0; i < g.size(); ++i) {
    const CoxElt w = g.vertices_[i];
    const GenSet left = system.descents(w, Side::Left);
    for (Gen r = 0; r < rank; ++r) {
      if (has_gen(left, r)) continue;
      const CoxElt rw = system.lmul(r, w);
      if (!system.has_unique_reduced_word(rw)) continue;
      if (g.depth_[i] >= radius) {
        g.outside_[i] |= gen_bit(r);
        g.complete_ = false;
        continue;
      }
      int j = add_vertex(rw, g.depth_[i] + 1);
      g.adj_[i].push_back(j);
      g.adj_[j].push_back(i);
      g.edges_.emplace_back(i, j);
    }
  }
  g.by_color_.assign(rank, {});
  for (int i = 0; i < g.size(); ++i) g.by_color_[g.color_[i]].push_back(i);
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  // multi-source BFS from the boundary
  constexpr int kFar = std::numeric_limits<int>::max() / 2;
  g.boundary_dist_.assign(g.size(), kFar);
  std::deque<int> queue;
  for (int i = 0; i < g.size(); ++i)
    if (g.outside_[i]) {
      g.boundary_dist_[i] = 0;
      queue.push_back(i);
    }
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : g.adj_[i])
      if (g.boundary_dist_[j] == kFar) {
        g.boundary_dist_[j] = g.boundary_dist_[i] + 1;
        queue.push_back(j);
      }
  }
  return g;
}

bool CellGraph::adjacent(int i, int j) const {
  const auto& nb = adj_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::optional<int> CellGraph::find(CoxElt w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CellGraph::index_of(CoxElt w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw Error(ErrorKind::VertexOutsideGraph, "'" + sys_->format(w) + "' is not a vertex of the cell graph");
  return it->second;
}

std::string CellGraph::label(int i) const { return sys_->format(vertices_[i]); }

std::string CellGraph::to_json() const {
  nlohmann::json j;
  j["base"] = sys_->name(base_);
  j["radius_complete"] = complete_;
  j["forced_base"] = forced_;
  j["vertices"] = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::json v;
    v["word"] = label(i);
    v["color"] = sys_->name(color_[i]);
    if (outside_[i]) {
      std::vector<std::string> names;
      for (Gen r = 0; r < sys_->rank(); ++r)
        if (has_gen(outside_[i], r)) names.push_back(sys_->name(r));
      v["outside"] = names;
    }
    j["vertices"].push_back(v);
  }
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges_) j["edges"].push_back({label(a), label(b)});
  return j.dump(2);
}

bool edges_match_mu(const CellGraph& graph, Hecke& hecke, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> edge_set;
  for (auto [a, b] : edges) edge_set.emplace(std::min(a, b), std::max(a, b));
  for (int x = 0; x < graph.size(); ++x)
    for (int y = x + 1; y < graph.size(); ++y) {
      const long m = hecke.mu(graph.vertex(x), graph.vertex(y));
      const bool predicted = graph.color(x) != graph.color(y) && m != 0;
      if (predicted != edge_set.count({x, y})) return false;
      if (predicted && m != 1) return false;
    }
  return true;
}

bool check_mu_edges(const CellGraph& graph, Hecke& hecke) { return edges_match_mu(graph, hecke, graph.edges()); }

}  // namespace cellcat
