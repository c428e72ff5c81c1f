#pragma once

// Exact Laurent polynomials in one variable v with integer coefficients.

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace cellcat {

class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): integers embed

  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);
  /// v itself.
  static LaurentPoly v() { return monomial(1); }
  /// v + v^-1, the class of B_s acting on a descent.
  static LaurentPoly quantum_two();

  /// Parses the text format written by to_string(), e.g. "v^3 + 2v - 1 + v^-2".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  mpz_class coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  /// The bar involution v -> v^-1.
  LaurentPoly bar() const;
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(int exponent, const mpz_class& coeff);

  Terms terms_;  // no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace cellcat
