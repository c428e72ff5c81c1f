#include "cellcat/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "cellcat/error.hpp"

namespace cellcat {

namespace {

std::vector<std::string> default_names(int rank) {
  std::vector<std::string> names;
  if (rank <= 3) {
    const char* small[] = {"s", "t", "u"};
    for (int i = 0; i < rank; ++i) names.emplace_back(small[i]);
  } else {
    for (int i = 1; i <= rank; ++i) names.push_back("s" + std::to_string(i));
  }
  return names;
}

CoxeterMatrix blank(int rank) {
  CoxeterMatrix cm;
  cm.generators = default_names(rank);
  cm.order.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) cm.order[i][i] = 1;
  return cm;
}

void set_order(CoxeterMatrix& cm, int a, int b, int m) {
  cm.order[a][b] = m;
  cm.order[b][a] = m;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " in '" + std::string(text) + "'");
  return value;
}

}  // namespace

Gen CoxeterMatrix::index_of(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (generators[i] == name) return i;
  throw Error(ErrorKind::UnknownGenerator, "'" + std::string(name) + "'");
}

bool CoxeterMatrix::simply_laced() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (i != j && (order[i][j] == kInfinity || order[i][j] > 3)) return false;
  return true;
}

void CoxeterMatrix::validate() const {
  const int n = rank();
  if (n == 0) throw Error(ErrorKind::InvalidSystem, "no generators");
  if (n > 32) throw Error(ErrorKind::InvalidSystem, "at most 32 generators are supported");
  if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::InvalidSystem, "matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(order[i].size()) != n) throw Error(ErrorKind::InvalidSystem, "matrix size mismatch");
    for (int j = i + 1; j < n; ++j)
      if (generators[i] == generators[j])
        throw Error(ErrorKind::InvalidSystem, "duplicate generator '" + generators[i] + "'");
  }
  for (int i = 0; i < n; ++i) {
    if (order[i][i] != 1) throw Error(ErrorKind::InvalidSystem, "diagonal entries must be 1");
    for (int j = 0; j < n; ++j) {
      if (order[i][j] != order[j][i]) throw Error(ErrorKind::InvalidSystem, "matrix is not symmetric");
      if (i != j && order[i][j] != kInfinity && order[i][j] < 2)
        throw Error(ErrorKind::InvalidSystem, "off-diagonal orders must be >= 2");
    }
  }
  // Irreducibility: the graph with edges m >= 3 must be connected.
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b)
      if (!seen[b] && b != a && order[a][b] != 2) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::InvalidSystem, "Coxeter graph is not connected (system is reducible)");
}

CoxeterMatrix CoxeterMatrix::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorKind::ParseError, "system file needs a \"generators\" array");
  CoxeterMatrix cm;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw Error(ErrorKind::ParseError, "generator names must be strings");
    cm.generators.push_back(g.get<std::string>());
  }
  const int n = cm.rank();
  cm.order.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) cm.order[i][i] = 1;
  if (j.contains("m")) {
    for (const auto& entry : j["m"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string())
        throw Error(ErrorKind::ParseError, "each \"m\" entry must be [name, name, order]");
      Gen a = cm.index_of(entry[0].get<std::string>());
      Gen b = cm.index_of(entry[1].get<std::string>());
      int m = 0;
      if (entry[2].is_string()) {
        auto s = entry[2].get<std::string>();
        if (s == "inf" || s == "infinity")
          m = kInfinity;
        else
          m = parse_int(s, "order");
      } else if (entry[2].is_number_integer()) {
        m = entry[2].get<int>();
      } else {
        throw Error(ErrorKind::ParseError, "order must be an integer or \"inf\"");
      }
      if (a == b) throw Error(ErrorKind::InvalidSystem, "diagonal orders are fixed to 1");
      set_order(cm, a, b, m);
    }
  }
  cm.validate();
  return cm;
}

std::string CoxeterMatrix::to_json() const {
  nlohmann::json j;
  j["generators"] = generators;
  j["m"] = nlohmann::json::array();
  for (int i = 0; i < rank(); ++i)
    for (int k = i + 1; k < rank(); ++k) {
      if (order[i][k] == 2) continue;
      nlohmann::json e = nlohmann::json::array({generators[i], generators[k]});
      if (order[i][k] == kInfinity)
        e.push_back("inf");
      else
        e.push_back(order[i][k]);
      j["m"].push_back(e);
    }
  return j.dump();
}

CoxeterMatrix CoxeterMatrix::named(std::string_view name) {
  auto bad = [&] { return Error(ErrorKind::InvalidSystem, "unknown system type '" + std::string(name) + "'"); };
  if (name.empty()) throw bad();
  CoxeterMatrix cm;
  if (name.rfind("I2:", 0) == 0) {
    auto tail = name.substr(3);
    int m = (tail == "inf") ? kInfinity : parse_int(tail, "dihedral order");
    if (m != kInfinity && m < 3) throw Error(ErrorKind::InvalidSystem, "I2(m) needs m >= 3 to be irreducible");
    cm = blank(2);
    set_order(cm, 0, 1, m);
  } else if (name.rfind("~A", 0) == 0) {
    int n = parse_int(name.substr(2), "rank");
    if (n < 1) throw bad();
    cm = blank(n + 1);
    if (n == 1) {
      set_order(cm, 0, 1, kInfinity);
    } else {
      for (int i = 0; i <= n; ++i) set_order(cm, i, (i + 1) % (n + 1), 3);
    }
  } else if (name == "H3") {
    cm = blank(3);
    set_order(cm, 0, 1, 5);
    set_order(cm, 1, 2, 3);
  } else if (name == "H4") {
    cm = blank(4);
    set_order(cm, 0, 1, 5);
    set_order(cm, 1, 2, 3);
    set_order(cm, 2, 3, 3);
  } else if (name == "F4") {
    cm = blank(4);
    set_order(cm, 0, 1, 3);
    set_order(cm, 1, 2, 4);
    set_order(cm, 2, 3, 3);
  } else {
    char family = name[0];
    int n = parse_int(name.substr(1), "rank");
    if (family == 'A' && n >= 1) {
      cm = blank(n);
      for (int i = 0; i + 1 < n; ++i) set_order(cm, i, i + 1, 3);
    } else if (family == 'B' && n >= 2) {
      cm = blank(n);
      for (int i = 0; i + 1 < n; ++i) set_order(cm, i, i + 1, 3);
      set_order(cm, n - 2, n - 1, 4);
    } else if (family == 'D' && n >= 4) {
      cm = blank(n);
      for (int i = 0; i + 2 < n; ++i) set_order(cm, i, i + 1, 3);
      set_order(cm, n - 3, n - 1, 3);
    } else {
      throw bad();
    }
  }
  cm.validate();
  return cm;
}

// ---------------------------------------------------------------------------

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::size_t element_cap)
    : matrix_(std::move(matrix)), cap_(element_cap) {
  matrix_.validate();
  lookup_reduced(std::string());
}

std::vector<std::string> CoxeterSystem::closure(const std::string& reduced_word) const {
  std::vector<std::string> out{reduced_word};
  std::unordered_map<std::string, bool> seen{{reduced_word, true}};
  for (std::size_t next = 0; next < out.size(); ++next) {
    const std::string w = out[next];
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const int a = w[i], b = w[i + 1];
      if (a == b) continue;
      const int m = matrix_.m(a, b);
      if (m == CoxeterMatrix::kInfinity || i + m > n) continue;
      bool alternating = true;
      for (int k = 2; k < m && alternating; ++k) alternating = (w[i + k] == (k % 2 == 0 ? a : b));
      if (!alternating) continue;
      std::string moved = w;
      for (int k = 0; k < m; ++k) moved[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.emplace(moved, true).second) out.push_back(std::move(moved));
    }
  }
  return out;
}

std::uint32_t CoxeterSystem::lookup_reduced(const std::string& word) {
  if (auto it = by_word_.find(word); it != by_word_.end()) return it->second;
  if (nodes_.size() >= cap_)
    throw Error(ErrorKind::BudgetExceeded,
                "element table reached its cap of " + std::to_string(cap_) + " elements");
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  const int n = rank();
  Node node;
  node.length = static_cast<int>(word.size());
  node.starts_with.assign(n, std::string());
  node.ends_with.assign(n, std::string());
  node.lmul.assign(n, -1);
  node.rmul.assign(n, -1);
  auto words = closure(word);
  node.word = *std::min_element(words.begin(), words.end());
  node.reduced_words = words.size();
  for (auto& w : words) {
    if (!w.empty()) {
      Gen first = w.front(), last = w.back();
      node.left |= gen_bit(first);
      node.right |= gen_bit(last);
      if (node.starts_with[first].empty()) node.starts_with[first] = w;
      if (node.ends_with[last].empty()) node.ends_with[last] = w;
    }
    by_word_.emplace(std::move(w), id);
  }
  nodes_.push_back(std::move(node));
  return id;
}

std::uint32_t CoxeterSystem::rmul_locked(std::uint32_t w, Gen s) {
  if (auto cached = nodes_[w].rmul[s]; cached >= 0) return static_cast<std::uint32_t>(cached);
  std::uint32_t result;
  if (has_gen(nodes_[w].right, s)) {
    std::string shorter = nodes_[w].ends_with[s];
    shorter.pop_back();
    result = lookup_reduced(shorter);
  } else {
    std::string longer = nodes_[w].word;
    longer.push_back(static_cast<char>(s));
    result = lookup_reduced(longer);
  }
  nodes_[w].rmul[s] = result;
  nodes_[result].rmul[s] = w;
  return result;
}

std::uint32_t CoxeterSystem::lmul_locked(Gen s, std::uint32_t w) {
  if (auto cached = nodes_[w].lmul[s]; cached >= 0) return static_cast<std::uint32_t>(cached);
  std::uint32_t result;
  if (has_gen(nodes_[w].left, s)) {
    result = lookup_reduced(nodes_[w].starts_with[s].substr(1));
  } else {
    std::string longer(1, static_cast<char>(s));
    longer += nodes_[w].word;
    result = lookup_reduced(longer);
  }
  nodes_[w].lmul[s] = result;
  nodes_[result].lmul[s] = w;
  return result;
}

CoxElt CoxeterSystem::generator(Gen s) {
  std::lock_guard lock(mutex_);
  return CoxElt{rmul_locked(0, s)};
}

CoxElt CoxeterSystem::canonicalize(std::span<const Gen> word) {
  std::lock_guard lock(mutex_);
  std::uint32_t cur = 0;
  for (Gen s : word) {
    if (s < 0 || s >= rank())
      throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(s));
    cur = rmul_locked(cur, s);
  }
  return CoxElt{cur};
}

CoxElt CoxeterSystem::mul(CoxElt a, CoxElt b) {
  std::lock_guard lock(mutex_);
  std::uint32_t cur = a.id;
  const std::string bw = nodes_[b.id].word;
  for (char s : bw) cur = rmul_locked(cur, s);
  return CoxElt{cur};
}

CoxElt CoxeterSystem::lmul(Gen s, CoxElt w) {
  std::lock_guard lock(mutex_);
  return CoxElt{lmul_locked(s, w.id)};
}

CoxElt CoxeterSystem::rmul(CoxElt w, Gen s) {
  std::lock_guard lock(mutex_);
  return CoxElt{rmul_locked(w.id, s)};
}

CoxElt CoxeterSystem::inverse(CoxElt w) {
  std::lock_guard lock(mutex_);
  std::string rev(nodes_[w.id].word.rbegin(), nodes_[w.id].word.rend());
  return CoxElt{lookup_reduced(rev)};
}

std::vector<Gen> CoxeterSystem::word(CoxElt w) const {
  std::lock_guard lock(mutex_);
  const auto& s = nodes_[w.id].word;
  return std::vector<Gen>(s.begin(), s.end());
}

int CoxeterSystem::length(CoxElt w) const {
  std::lock_guard lock(mutex_);
  return nodes_[w.id].length;
}

GenSet CoxeterSystem::descents(CoxElt w, Side side) const {
  std::lock_guard lock(mutex_);
  return side == Side::Left ? nodes_[w.id].left : nodes_[w.id].right;
}

std::size_t CoxeterSystem::reduced_word_count(CoxElt w) const {
  std::lock_guard lock(mutex_);
  return nodes_[w.id].reduced_words;
}

std::vector<std::vector<Gen>> CoxeterSystem::reduced_words(CoxElt w) const {
  std::lock_guard lock(mutex_);
  std::vector<std::vector<Gen>> out;
  for (const auto& s : closure(nodes_[w.id].word)) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterSystem::bruhat_locked(std::uint32_t y, std::uint32_t w) {
  if (y == w) return true;
  if (nodes_[y].length >= nodes_[w].length) return false;
  if (y == 0) return true;
  const std::uint64_t key = (std::uint64_t{y} << 32) | w;
  if (auto it = bruhat_memo_.find(key); it != bruhat_memo_.end()) return it->second;
  // w != id here since l(w) > l(y) >= 0.
  Gen s = 0;
  while (!has_gen(nodes_[w].left, s)) ++s;
  const std::uint32_t sw = lmul_locked(s, w);
  bool result;
  if (has_gen(nodes_[y].left, s))
    result = bruhat_locked(lmul_locked(s, y), sw);
  else
    result = bruhat_locked(y, sw);
  bruhat_memo_.emplace(key, result);
  return result;
}

bool CoxeterSystem::bruhat_leq(CoxElt y, CoxElt w) {
  std::lock_guard lock(mutex_);
  return bruhat_locked(y.id, w.id);
}

std::vector<CoxElt> CoxeterSystem::enumerate(int max_length) {
  std::lock_guard lock(mutex_);
  std::vector<CoxElt> out{identity()};
  std::unordered_map<std::uint32_t, bool> seen{{0u, true}};
  for (std::size_t next = 0; next < out.size(); ++next) {
    const std::uint32_t w = out[next].id;
    if (nodes_[w].length >= max_length) continue;
    for (Gen s = 0; s < rank(); ++s) {
      if (has_gen(nodes_[w].right, s)) continue;
      const std::uint32_t ws = rmul_locked(w, s);
      if (seen.emplace(ws, true).second) out.push_back(CoxElt{ws});
    }
  }
  return out;
}

std::size_t CoxeterSystem::element_count() const {
  std::lock_guard lock(mutex_);
  return nodes_.size();
}

std::vector<Gen> CoxeterSystem::parse_word(std::string_view text) const {
  std::vector<Gen> out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) out.push_back(matrix_.index_of(token));
  return out;
}

std::string CoxeterSystem::format_word(std::span<const Gen> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += matrix_.generators.at(word[i]);
  }
  return out;
}

}  // namespace cellcat
