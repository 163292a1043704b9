#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace copwin {

class OrdinalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result would leave the representable range (nested CNF
/// below epsilon_0 with bounded depth, term count and coefficients).
class OrdinalCapacityError : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

class OrdinalDomainError : public OrdinalError {
 public:
  using OrdinalError::OrdinalError;
};

class OrdinalParseError : public OrdinalError {
 public:
  OrdinalParseError(const std::string& message, std::size_t position)
      : OrdinalError(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An ordinal below epsilon_0 in Cantor normal form: a strictly
/// exponent-decreasing sum of terms w^e * c with coefficients c >= 1.
/// The empty sum is 0. Values are immutable once built and the
/// representation of every value is unique, so equality is structural.
class Ordinal {
 public:
  struct Term;

  Ordinal() noexcept = default;  // zero
  Ordinal(std::uint64_t n);      // finite ordinals, implicit on purpose

  static Ordinal omega();
  /// w^exponent * coeff as a single-term ordinal (coeff >= 1).
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coeff = 1);
  /// Builds from an explicit term list; throws OrdinalDomainError if the
  /// list is not in canonical form.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  bool is_limit() const noexcept;
  bool is_successor() const noexcept;

  /// Value as a natural number; requires is_finite().
  std::uint64_t as_natural() const;
  /// The trailing w^0 coefficient (0 when there is none).
  std::uint64_t finite_part() const noexcept;
  /// The value with its finite tail removed (the maximal limit-or-zero
  /// ordinal <= *this).
  Ordinal limit_part() const;
  /// Unique (gamma, n) with gamma the maximal limit ordinal <= *this and
  /// n finite; requires *this >= omega.
  std::pair<Ordinal, std::uint64_t> split_successor() const;

  Ordinal successor() const;

  Ordinal operator+(const Ordinal& rhs) const;
  Ordinal& operator+=(const Ordinal& rhs);

  friend bool operator==(const Ordinal& a, const Ordinal& b) noexcept;
  friend std::strong_ordering operator<=>(const Ordinal& a,
                                          const Ordinal& b) noexcept;

  /// Pure-ASCII grammar:
  ///   expr   := term ('+' term)*
  ///   term   := 'w' ('^' factor)? ('*' nat)? | nat
  ///   factor := '(' expr ')' | 'w' ('^' factor)? | nat
  /// Non-canonical input is folded into canonical form via ordinal
  /// addition, e.g. "w+w" parses to w*2 and "1+w" to w.
  static Ordinal parse(std::string_view text);
  std::string str() const;

  /// Nested-array serialization: [[exponent, coeff], ...], 0 as [].
  nlohmann::json to_json() const;
  static Ordinal from_json(const nlohmann::json& j);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t depth() const noexcept;

 private:
  explicit Ordinal(std::vector<Term> terms);
  void check_canonical() const;

  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.coeff == b.coeff && a.exponent == b.exponent;
  }
};

inline const Ordinal& ord_min(const Ordinal& a, const Ordinal& b) {
  return b < a ? b : a;
}
inline const Ordinal& ord_max(const Ordinal& a, const Ordinal& b) {
  return a < b ? b : a;
}

/// Supremum of a finite, nonempty set (= maximum).
Ordinal ord_sup(const std::vector<Ordinal>& values);

}  // namespace copwin
