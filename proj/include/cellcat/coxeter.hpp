#pragma once

// Coxeter systems given by a Coxeter matrix. Elements are identified through
// the braid-move closure of their reduced words (Tits' solution of the word
// problem), so no reflection representation or algebraic numbers are needed.

#include <compare>
#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cellcat {

using Gen = int;
/// Bitset over generator indices (at most 32 generators).
using GenSet = std::uint32_t;

constexpr GenSet gen_bit(Gen s) { return GenSet{1} << s; }
constexpr bool has_gen(GenSet set, Gen s) { return (set >> s) & 1U; }

enum class Side { Left, Right };

struct CoxeterMatrix {
  /// Order m(s,t); kInfinity stands for m = ∞ (no braid relation).
  static constexpr int kInfinity = 0;

  std::vector<std::string> generators;
  std::vector<std::vector<int>> order;

  int rank() const { return static_cast<int>(generators.size()); }
  int m(Gen s, Gen t) const { return order[s][t]; }
  Gen index_of(std::string_view name) const;
  bool simply_laced() const;
  /// Symmetric, unit diagonal, off-diagonal ≥ 2 (or ∞), connected Coxeter graph.
  void validate() const;

  /// `{"generators": ["s","t"], "m": [["s","t",3]]}`; omitted pairs default to 2.
  static CoxeterMatrix from_json(std::string_view text);
  std::string to_json() const;

  /// Built-in types: A<n>, B<n>, D<n>, H3, H4, F4, I2:<m>, ~A<n>.
  static CoxeterMatrix named(std::string_view name);
};

struct CoxElt {
  std::uint32_t id = 0;
  friend auto operator<=>(CoxElt, CoxElt) = default;
};

struct CoxEltHash {
  std::size_t operator()(CoxElt e) const noexcept { return e.id; }
};

class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultElementCap = 200000;

  explicit CoxeterSystem(CoxeterMatrix matrix, std::size_t element_cap = kDefaultElementCap);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  const std::string& name(Gen s) const { return matrix_.generators[s]; }

  CoxElt identity() const { return CoxElt{0}; }
  CoxElt generator(Gen s);

  /// Canonical (ShortLex-least reduced word) element of an arbitrary word.
  CoxElt canonicalize(std::span<const Gen> word);
  CoxElt mul(CoxElt a, CoxElt b);
  CoxElt lmul(Gen s, CoxElt w);
  CoxElt rmul(CoxElt w, Gen s);
  CoxElt inverse(CoxElt w);

  std::vector<Gen> word(CoxElt w) const;
  int length(CoxElt w) const;
  GenSet descents(CoxElt w, Side side) const;
  /// Number of distinct reduced words of w.
  std::size_t reduced_word_count(CoxElt w) const;
  bool has_unique_reduced_word(CoxElt w) const { return reduced_word_count(w) == 1; }
  std::vector<std::vector<Gen>> reduced_words(CoxElt w) const;

  /// Bruhat order, by the left-descent recursion with memoization.
  bool bruhat_leq(CoxElt y, CoxElt w);

  /// Every element of length ≤ max_length exactly once, in BFS (length) order.
  std::vector<CoxElt> enumerate(int max_length);

  std::size_t element_count() const;
  std::size_t element_cap() const { return cap_; }

  /// Whitespace-separated generator names.
  std::vector<Gen> parse_word(std::string_view text) const;
  std::string format_word(std::span<const Gen> word) const;
  std::string format(CoxElt w) const { return format_word(word(w)); }

 private:
  struct Node {
    std::string word;  // canonical word, one char per generator index
    int length = 0;
    GenSet left = 0;
    GenSet right = 0;
    std::size_t reduced_words = 0;
    std::vector<std::string> starts_with;  // a reduced word beginning with s, or empty
    std::vector<std::string> ends_with;    // a reduced word ending with s, or empty
    std::vector<std::int64_t> lmul;        // -1 = unknown
    std::vector<std::int64_t> rmul;
  };

  std::uint32_t lookup_reduced(const std::string& word);
  std::uint32_t lmul_locked(Gen s, std::uint32_t w);
  std::uint32_t rmul_locked(std::uint32_t w, Gen s);
  std::vector<std::string> closure(const std::string& reduced_word) const;
  bool bruhat_locked(std::uint32_t y, std::uint32_t w);

  CoxeterMatrix matrix_;
  std::size_t cap_;
  mutable std::recursive_mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<std::string, std::uint32_t> by_word_;  // every reduced word -> element
  std::unordered_map<std::uint64_t, bool> bruhat_memo_;
};

}  // namespace cellcat
