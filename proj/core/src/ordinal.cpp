#include "copwin/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace copwin {

namespace {

// Capacity ceiling for the nested-CNF representation. Exceeding any of
// these raises OrdinalCapacityError instead of silently degrading.
constexpr std::size_t kMaxDepth = 64;
constexpr std::size_t kMaxTerms = 4096;

std::uint64_t checked_coeff_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw OrdinalCapacityError("coefficient overflow in ordinal addition");
  return a + b;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  check_canonical();
}

void Ordinal::check_canonical() const {
  if (terms_.size() > kMaxTerms)
    throw OrdinalCapacityError("ordinal term count exceeds capacity");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0)
      throw OrdinalDomainError("zero coefficient in CNF term");
    if (i + 1 < terms_.size() &&
        !(terms_[i + 1].exponent < terms_[i].exponent))
      throw OrdinalDomainError("CNF exponents must strictly decrease");
  }
  if (depth() > kMaxDepth)
    throw OrdinalCapacityError("ordinal nesting depth exceeds capacity");
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coeff) {
  if (coeff == 0) return Ordinal();
  std::vector<Term> t;
  t.push_back(Term{exponent, coeff});
  return Ordinal(std::move(t));
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  return Ordinal(std::move(terms));
}

bool Ordinal::is_zero() const noexcept { return terms_.empty(); }

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_limit() const noexcept {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::as_natural() const {
  if (!is_finite()) throw OrdinalDomainError("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

std::uint64_t Ordinal::finite_part() const noexcept {
  if (!terms_.empty() && terms_.back().exponent.is_zero())
    return terms_.back().coeff;
  return 0;
}

Ordinal Ordinal::limit_part() const {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return *this;
  std::vector<Term> t(terms_.begin(), terms_.end() - 1);
  return Ordinal(std::move(t));
}

std::pair<Ordinal, std::uint64_t> Ordinal::split_successor() const {
  if (*this < Ordinal::omega())
    throw OrdinalDomainError("split_successor requires an ordinal >= omega");
  return {limit_part(), finite_part()};
}

Ordinal Ordinal::successor() const { return *this + Ordinal(1); }

Ordinal Ordinal::operator+(const Ordinal& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return rhs;
  const Ordinal& e = rhs.terms_[0].exponent;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  // Keep only the terms of the left operand that survive absorption.
  for (const Term& t : terms_) {
    if (t.exponent < e) break;
    out.push_back(t);
  }
  std::size_t j = 0;
  if (!out.empty() && out.back().exponent == e) {
    out.back().coeff = checked_coeff_add(out.back().coeff, rhs.terms_[0].coeff);
    j = 1;
  }
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  return Ordinal(std::move(out));
}

Ordinal& Ordinal::operator+=(const Ordinal& rhs) {
  *this = *this + rhs;
  return *this;
}

bool operator==(const Ordinal& a, const Ordinal& b) noexcept {
  return a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Ordinal& a,
                                 const Ordinal& b) noexcept {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != 0) return c;
    auto d = a.terms_[i].coeff <=> b.terms_[i].coeff;
    if (d != 0) return d;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::size_t Ordinal::depth() const noexcept {
  std::size_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exponent.depth() + 1);
  return d;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal run() {
    Ordinal value = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw OrdinalParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  Ordinal expr() {
    Ordinal value = term();
    for (;;) {
      skip_ws();
      if (!eat('+')) break;
      value += term();
    }
    return value;
  }

  Ordinal term() {
    skip_ws();
    if (eat('w')) {
      Ordinal exponent(1);
      if (eat('^')) exponent = factor();
      std::uint64_t coeff = 1;
      if (eat('*')) coeff = nat();
      return Ordinal::omega_pow(exponent, coeff);
    }
    return Ordinal(nat());
  }

  Ordinal factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal value = expr();
      skip_ws();
      if (!eat(')')) throw OrdinalParseError("expected ')'", pos_);
      return value;
    }
    if (eat('w')) {
      Ordinal exponent(1);
      if (eat('^')) exponent = factor();
      return Ordinal::omega_pow(exponent);
    }
    return Ordinal(nat());
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw OrdinalParseError("expected a natural number or 'w'", pos_);
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw OrdinalParseError("natural number out of range", pos_);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// An exponent prints without parentheses only when it is a bare natural
// number or a single coefficient-1 term (a right-nested w^... chain).
bool exponent_needs_parens(const Ordinal& e) {
  if (e.is_finite()) return false;
  return e.terms().size() > 1 || e.terms()[0].coeff != 1;
}

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).run(); }

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(1))) {
      out += '^';
      if (exponent_needs_parens(t.exponent)) {
        out += '(';
        out += t.exponent.str();
        out += ')';
      } else {
        out += t.exponent.str();
      }
    }
    if (t.coeff != 1) {
      out += '*';
      out += std::to_string(t.coeff);
    }
  }
  return out;
}

nlohmann::json Ordinal::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const Term& t : terms_) j.push_back({t.exponent.to_json(), t.coeff});
  return j;
}

Ordinal Ordinal::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw OrdinalDomainError("ordinal JSON must be an array");
  std::vector<Term> terms;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw OrdinalDomainError("ordinal JSON terms must be [exponent, coeff]");
    terms.push_back(Term{from_json(pair[0]), pair[1].get<std::uint64_t>()});
  }
  return Ordinal(std::move(terms));
}

Ordinal ord_sup(const std::vector<Ordinal>& values) {
  if (values.empty())
    throw OrdinalDomainError("supremum of an empty set is undefined here");
  Ordinal best = values[0];
  for (const Ordinal& v : values) best = ord_max(best, v);
  return best;
}

}  // namespace copwin
