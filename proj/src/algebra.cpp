#include "ualpha/algebra.hpp"

#include <cctype>

namespace ualpha {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.erase(0, 1);
    }
    if (whole.empty() && frac.empty()) throw bad();
    for (char c : whole + frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    mpz_class numerator(whole + frac, 10);
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
    Rational q(numerator, denominator);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  std::string body = s;
  if (body[0] == '+') body.erase(0, 1);
  const std::size_t start = (!body.empty() && body[0] == '-') ? 1 : 0;
  const auto slash = body.find('/');
  auto digits_ok = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(std::string_view(body).substr(start))) throw bad();
  } else {
    if (!digits_ok(std::string_view(body).substr(start, slash - start)) ||
        !digits_ok(std::string_view(body).substr(slash + 1))) {
      throw bad();
    }
  }
  Rational q;
  if (q.set_str(body, 10) != 0 || q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

AlgebraElement::AlgebraElement(const Rational& scalar) { add_term(0, scalar); }

AlgebraElement::AlgebraElement(Monomial m, const Rational& coeff) {
  add_term(m.mask, m.negative ? Rational(-coeff) : coeff);
}

Rational AlgebraElement::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

void AlgebraElement::add_term(Mask mask, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= q;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Rational c = ca * cb;
      out.add_term(ma ^ mb, product_sign(ma, mb) < 0 ? Rational(-c) : c);
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.get_str() + "*" + mask_name(mask);
    first = false;
  }
  return out;
}

}  // namespace ualpha
