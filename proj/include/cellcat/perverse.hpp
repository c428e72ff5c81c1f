#pragma once

// Perverse filtration on minimal complexes: the index of B_w(m) in degree n
// is n − m.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellcat/zigzag.hpp"

namespace cellcat {

inline int perverse_degree_of(const ZObject& o) { return o.degree - o.shift; }

/// Objects with n − m = j, moved to degree m (the [j] shift). NotMinimal.
ZComplex pH(const ZComplex& c, int j);
/// max(n − m). EmptyComplex.
int top_perverse_degree(const ZComplex& c);
int top_perverse_degree(const std::vector<ZComplex>& summands);

/// Vertices w admitting a non-zero map C → B_w(m)[−m] from the top perverse
/// degree: some block of copies of B_w has incoming edge scalars of rank
/// below the number of copies.
std::set<int> anchors(const ZComplex& c);
/// Union over the summands whose top degree is the global top.
std::set<int> anchors(const std::vector<ZComplex>& summands);

/// Colors t with top(minimize(F_t C)) = top(C) + 1.
std::set<Gen> anchor_colors_by_F(const std::vector<ZComplex>& summands);

/// Grid of the objects of a complex: (degree n, shift m) → vertices.
class PerverseTable {
 public:
  explicit PerverseTable(const ZComplex& c);
  explicit PerverseTable(const std::vector<ZComplex>& summands);

  const std::map<std::pair<int, int>, std::multiset<int>>& entries() const { return entries_; }

  /// Rows = shift (descending), columns = degree; diagonal cells (n = m) in brackets.
  // label: vertex names in cells; without it cells hold indices and a legend follows
  std::string ascii(const std::function<std::string(int)>& label = {}) const;
  std::string json() const;

 private:
  void add(const ZComplex& c);

  const CellGraph* graph_ = nullptr;
  std::map<std::pair<int, int>, std::multiset<int>> entries_;
};

}  // namespace cellcat
