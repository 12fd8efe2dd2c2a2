#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "ualpha/monomial.hpp"

namespace ualpha {

using Rational = mpq_class;

/// Parses "3", "-4/6" (normalized) or "2.5". Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Element of the group algebra: exact rational combination of masks.
/// Monomial signs are folded into the coefficients; zero coefficients are
/// never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Mask, Rational>;

  AlgebraElement() = default;
  explicit AlgebraElement(const Rational& scalar);
  explicit AlgebraElement(Monomial m, const Rational& coeff = 1);

  static AlgebraElement zero() { return {}; }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient of the mask, zero when absent.
  [[nodiscard]] Rational coefficient(Mask mask) const;
  /// True when the element is q * 1 for some rational q (including zero).
  [[nodiscard]] bool is_scalar() const noexcept;

  void add_term(Mask mask, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& q);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& q) { return a *= q; }
  friend AlgebraElement operator*(const Rational& q, AlgebraElement a) { return a *= q; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  /// Signed sum of coeff*name terms in canonical mask order, "0" when empty.
  [[nodiscard]] std::string to_string() const;

 private:
  Terms terms_;
};

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
inline AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }
inline bool is_zero(const AlgebraElement& x) { return x.is_zero(); }

}  // namespace ualpha
