#include "cellcat/braid.hpp"

#include <sstream>
#include <unordered_set>

#include "cellcat/error.hpp"

namespace cellcat {

SignedWord parse_signed_word(const CoxeterSystem& sys, std::string_view text) {
  SignedWord out;
  std::istringstream is{std::string(text)};
  std::string token;
  std::size_t pos = 0;
  while (is >> token) {
    int sign = 1;
    std::string name = token;
    if (!name.empty() && name[0] == '-') {
      sign = -1;
      name.erase(0, 1);
    }
    try {
      out.push_back({sys.matrix().index_of(name), sign});
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownGenerator, "'" + token + "' at letter " + std::to_string(pos + 1));
    }
    ++pos;
  }
  return out;
}

PositiveWord parse_positive_word(const CoxeterSystem& sys, std::string_view text) {
  PositiveWord out;
  std::size_t pos = 0;
  for (const SignedLetter& l : parse_signed_word(sys, text)) {
    ++pos;
    if (l.sign < 0)
      throw Error(ErrorKind::ParseError, "inverse letter at position " + std::to_string(pos) + " in a positive word");
    out.push_back(l.gen);
  }
  return out;
}

std::string format_signed_word(const CoxeterSystem& sys, const SignedWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    if (word[i].sign < 0) out += '-';
    out += sys.name(word[i].gen);
  }
  return out;
}

bool is_normal_pair(const CoxeterSystem& sys, CoxElt x, CoxElt y) {
  const GenSet r = sys.descents(x, Side::Right), l = sys.descents(y, Side::Left);
  return (r & ~l) == 0;
}

bool is_normal(const CoxeterSystem& sys, const NormalForm& nf) {
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    if (nf.factors[i] == sys.identity()) return false;
    if (i + 1 < nf.factors.size() && !is_normal_pair(sys, nf.factors[i], nf.factors[i + 1])) return false;
  }
  return true;
}

namespace {

// Moves one letter s ∈ D_R(x) \ D_L(y) from x to y. False if the pair is normal.
bool push_letter(CoxeterSystem& sys, CoxElt& x, CoxElt& y) {
  const GenSet movable = sys.descents(x, Side::Right) & ~sys.descents(y, Side::Left);
  if (!movable) return false;
  Gen s = 0;
  while (!has_gen(movable, s)) ++s;
  x = sys.rmul(x, s);
  y = sys.lmul(s, y);
  return true;
}

std::vector<CoxElt> letters(CoxeterSystem& sys, const PositiveWord& word) {
  std::vector<CoxElt> out;
  for (Gen g : word) {
    if (g < 0 || g >= sys.rank()) throw Error(ErrorKind::UnknownGenerator, "index " + std::to_string(g));
    out.push_back(sys.generator(g));
  }
  return out;
}

void drop_identities(CoxeterSystem& sys, std::vector<CoxElt>& f) {
  std::erase(f, sys.identity());
}

}  // namespace

NormalForm normal_form(CoxeterSystem& sys, const PositiveWord& word) {
  std::vector<CoxElt> f = letters(sys, word);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      while (push_letter(sys, f[i], f[i + 1])) changed = true;
    drop_identities(sys, f);
  }
  return {f};
}

NormalForm normal_form_shuffled(CoxeterSystem& sys, const PositiveWord& word, std::mt19937& rng) {
  std::vector<CoxElt> f = letters(sys, word);
  std::vector<std::size_t> bad;
  for (;;) {
    bad.clear();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (!is_normal_pair(sys, f[i], f[i + 1])) bad.push_back(i);
    if (bad.empty()) break;
    std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    push_letter(sys, f[i], f[i + 1]);
    if (f[i] == sys.identity()) f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return {f};
}

namespace {

std::vector<PositiveWord> monoid_closure(const CoxeterSystem& sys, const PositiveWord& word, std::size_t budget) {
  std::vector<PositiveWord> out{word};
  std::unordered_set<std::string> seen{std::string(word.begin(), word.end())};
  for (std::size_t next = 0; next < out.size(); ++next) {
    const PositiveWord w = out[next];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Gen a = w[i], b = w[i + 1];
      if (a == b) continue;
      const int m = sys.matrix().m(a, b);
      if (m == CoxeterMatrix::kInfinity || i + m > w.size()) continue;
      bool alternating = true;
      for (int k = 2; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 == 0 ? a : b);
      if (!alternating) continue;
      PositiveWord moved = w;
      for (int k = 0; k < m; ++k) moved[i + k] = k % 2 == 0 ? b : a;
      if (seen.emplace(moved.begin(), moved.end()).second) {
        if (out.size() >= budget)
          throw Error(ErrorKind::BudgetExceeded, "monoid closure exceeds " + std::to_string(budget) + " words");
        out.push_back(std::move(moved));
      }
    }
  }
  return out;
}

}  // namespace

NormalForm oracle_normal_form(CoxeterSystem& sys, const PositiveWord& word, std::size_t budget) {
  NormalForm nf;
  PositiveWord rest = word;
  while (!rest.empty()) {
    const auto closure = monoid_closure(sys, rest, budget);
    int best_len = 0;
    CoxElt best = sys.identity();
    bool tie = false;
    PositiveWord best_prefix;
    for (const PositiveWord& w : closure) {
      // longest reduced suffix of w
      CoxElt suffix = sys.identity();
      int len = 0;
      for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        CoxElt grown = sys.lmul(w[i], suffix);
        if (sys.length(grown) != len + 1) break;
        suffix = grown;
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        best = suffix;
        tie = false;
        best_prefix.assign(w.begin(), w.end() - len);
      } else if (len == best_len && suffix != best) {
        tie = true;
      }
    }
    if (tie) throw Error(ErrorKind::InvalidSystem, "two distinct longest right divisors; the oracle is inconsistent");
    nf.factors.insert(nf.factors.begin(), best);
    rest = std::move(best_prefix);
  }
  return nf;
}

bool monoid_equal(CoxeterSystem& sys, const PositiveWord& a, const PositiveWord& b) {
  return normal_form(sys, a) == normal_form(sys, b);
}

PositiveWord to_word(const CoxeterSystem& sys, const NormalForm& nf) {
  PositiveWord out;
  for (CoxElt f : nf.factors) {
    auto w = sys.word(f);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::string format_normal_form(const CoxeterSystem& sys, const NormalForm& nf) {
  if (nf.factors.empty()) return "()";
  std::string out;
  for (CoxElt f : nf.factors) out += "(" + sys.format(f) + ")";
  return out;
}

}  // namespace cellcat
