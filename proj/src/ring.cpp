#include "cellcat/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "cellcat/error.hpp"

namespace cellcat {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::quantum_two() { return monomial(1) + monomial(-1); }

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term(sign);
      skip_space();
    }
    return result;
  }

 private:
  LaurentPoly term(int sign) {
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    int exponent = 0;
    if (!at_end() && peek() == 'v') {
      ++pos_;
      exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        int esign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        exponent = esign * std::stoi(digits());
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 'v'");
    }
    return LaurentPoly::monomial(exponent, sign * coeff);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace cellcat
