#pragma once

// Positive braid monoid Br⁺(W,S) and its right-greedy Garside normal form.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cellcat/coxeter.hpp"

namespace cellcat {

using PositiveWord = std::vector<Gen>;

struct SignedLetter {
  Gen gen;
  int sign;  // +1 or -1
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};
using SignedWord = std::vector<SignedLetter>;

/// Factors (w_m, …, w_1), leftmost first; w_1 is the maximal right divisor.
struct NormalForm {
  std::vector<CoxElt> factors;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// Whitespace-separated names; a leading '-' marks an inverse letter.
SignedWord parse_signed_word(const CoxeterSystem& sys, std::string_view text);
/// As above but inverse letters are a ParseError.
PositiveWord parse_positive_word(const CoxeterSystem& sys, std::string_view text);
std::string format_signed_word(const CoxeterSystem& sys, const SignedWord& word);

/// D_R(x) ⊆ D_L(y).
bool is_normal_pair(const CoxeterSystem& sys, CoxElt x, CoxElt y);
bool is_normal(const CoxeterSystem& sys, const NormalForm& nf);

NormalForm normal_form(CoxeterSystem& sys, const PositiveWord& word);
/// Same sweep, visiting non-normal pairs in random order.
NormalForm normal_form_shuffled(CoxeterSystem& sys, const PositiveWord& word, std::mt19937& rng);

/// Brute force: closure of the word under braid relations, then peel off the
/// longest reduced suffix and recurse. BudgetExceeded beyond `budget` words.
NormalForm oracle_normal_form(CoxeterSystem& sys, const PositiveWord& word, std::size_t budget = 500000);

bool monoid_equal(CoxeterSystem& sys, const PositiveWord& a, const PositiveWord& b);

/// Concatenated canonical words of the factors.
PositiveWord to_word(const CoxeterSystem& sys, const NormalForm& nf);
/// `(t)(s t s)`, or `()` for the identity.
std::string format_normal_form(const CoxeterSystem& sys, const NormalForm& nf);

}  // namespace cellcat
