#include "cellcat/perverse.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cellcat/error.hpp"

namespace cellcat {

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

ZComplex pH(const ZComplex& c, int j) {
  if (!c.minimal()) throw Error(ErrorKind::NotMinimal, "pH needs a minimal complex");
  ZComplex out(c.graph());
  std::vector<int> map(c.size(), -1);
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& o = c.object(i);
    if (perverse_degree_of(o) == j) map[i] = out.add_object({o.vertex, o.shift, o.degree - j});
  }
  for (int i = 0; i < c.size(); ++i)
    if (map[i] >= 0)
      for (const auto& [t, s] : c.out(i))
        if (map[t] >= 0) out.add_entry(map[i], map[t], s);
  return minimize(out);
}

int top_perverse_degree(const ZComplex& c) {
  if (c.empty()) throw Error(ErrorKind::EmptyComplex, "top perverse degree of the zero complex");
  int top = perverse_degree_of(c.object(0));
  for (const ZObject& o : c.objects()) top = std::max(top, perverse_degree_of(o));
  return top;
}

int top_perverse_degree(const std::vector<ZComplex>& summands) {
  bool any = false;
  int top = 0;
  for (const ZComplex& c : summands) {
    if (c.empty()) continue;
    int t = top_perverse_degree(c);
    top = any ? std::max(top, t) : t;
    any = true;
  }
  if (!any) throw Error(ErrorKind::EmptyComplex, "top perverse degree of the zero complex");
  return top;
}

std::set<int> anchors(const ZComplex& c) {
  if (!c.minimal()) throw Error(ErrorKind::NotMinimal, "anchors need a minimal complex");
  const int k = top_perverse_degree(c);
  // blocks: (vertex, degree) → copies on the top diagonal
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int i = 0; i < c.size(); ++i) {
    const ZObject& o = c.object(i);
    if (perverse_degree_of(o) == k) blocks[{o.vertex, o.degree}].push_back(i);
  }
  std::set<int> out;
  for (const auto& [key, copies] : blocks) {
    std::map<int, int> cols;
    for (int i : copies)
      for (const auto& [src, s] : c.in(i)) cols.try_emplace(src, static_cast<int>(cols.size()));
    if (cols.empty()) {
      out.insert(key.first);
      continue;
    }
    std::vector<std::vector<mpq_class>> m(copies.size(), std::vector<mpq_class>(cols.size()));
    for (std::size_t r = 0; r < copies.size(); ++r)
      for (const auto& [src, s] : c.in(copies[r])) m[r][cols[src]] = s;
    if (rank_of(std::move(m)) < static_cast<int>(copies.size())) out.insert(key.first);
  }
  return out;
}

std::set<int> anchors(const std::vector<ZComplex>& summands) {
  const int k = top_perverse_degree(summands);
  std::set<int> out;
  for (const ZComplex& c : summands) {
    if (c.empty() || top_perverse_degree(c) != k) continue;
    auto a = anchors(c);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::set<Gen> anchor_colors_by_F(const std::vector<ZComplex>& summands) {
  const int k = top_perverse_degree(summands);
  std::set<Gen> out;
  const CellGraph& g = summands.front().graph();
  for (Gen t = 0; t < g.system().rank(); ++t) {
    std::vector<ZComplex> next;
    for (const ZComplex& c : summands) next.push_back(minimize(tensor_F(t, c)));
    if (top_perverse_degree(next) == k + 1) out.insert(t);
  }
  return out;
}

PerverseTable::PerverseTable(const ZComplex& c) { add(c); }

PerverseTable::PerverseTable(const std::vector<ZComplex>& summands) {
  for (const ZComplex& c : summands) add(c);
}

void PerverseTable::add(const ZComplex& c) {
  graph_ = &c.graph();
  for (const ZObject& o : c.objects()) entries_[{o.degree, o.shift}].insert(o.vertex);
}

std::string PerverseTable::ascii(const std::function<std::string(int)>& label) const {
  if (entries_.empty()) return "(zero complex)\n";
  int nmin = 0, nmax = 0, mmin = 0, mmax = 0;
  bool first = true;
  for (const auto& [key, v] : entries_) {
    auto [n, m] = key;
    if (first) {
      nmin = nmax = n;
      mmin = mmax = m;
      first = false;
    }
    nmin = std::min(nmin, n);
    nmax = std::max(nmax, n);
    mmin = std::min(mmin, m);
    mmax = std::max(mmax, m);
  }
  auto cell = [&](int n, int m) {
    std::string text;
    auto it = entries_.find({n, m});
    if (it != entries_.end())
      for (int v : it->second) {
        if (!text.empty()) text += ",";
        text += label ? label(v) : std::to_string(v);
      }
    if (text.empty()) text = n == m ? "." : "";
    return n == m ? "[" + text + "]" : text;
  };
  std::size_t width = 4;
  for (int m = mmin; m <= mmax; ++m)
    for (int n = nmin; n <= nmax; ++n) width = std::max(width, cell(n, m).size() + 1);
  std::ostringstream os;
  os << "m/n";
  for (int n = nmin; n <= nmax; ++n) {
    std::string h = std::to_string(n);
    os << std::string(width - h.size(), ' ') << h;
  }
  os << "\n";
  for (int m = mmax; m >= mmin; --m) {
    std::string h = std::to_string(m);
    os << h << std::string(3 - std::min<std::size_t>(3, h.size()), ' ');
    for (int n = nmin; n <= nmax; ++n) {
      std::string c = cell(n, m);
      os << std::string(width - c.size(), ' ') << c;
    }
    os << "\n";
  }
  if (label) return os.str();
  os << "vertices:";
  std::set<int> used;
  for (const auto& [key, v] : entries_) used.insert(v.begin(), v.end());
  for (int v : used) os << " " << v << "=" << graph_->label(v);
  os << "\n";
  return os.str();
}

std::string PerverseTable::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, v] : entries_) {
    std::vector<std::string> names;
    for (int x : v) names.push_back(graph_->label(x));
    j.push_back({{"degree", key.first}, {"shift", key.second}, {"vertices", names}});
  }
  return j.dump();
}

}  // namespace cellcat
