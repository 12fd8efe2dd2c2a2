#include "ualpha/monomial.hpp"

#include <bit>
#include <cctype>

namespace ualpha {

std::string Generator::name() const {
  return (kind == GeneratorKind::I ? "i" : "j") + std::to_string(index);
}

Monomial Monomial::of(std::initializer_list<Generator> gens, bool negative) {
  // Built as a product so that out-of-order lists pick up the right sign.
  Monomial result{negative, 0};
  for (const Generator& g : gens) result = multiply(result, Monomial::of(g));
  return result;
}

int Monomial::degree() const noexcept { return std::popcount(mask); }

std::vector<Generator> Monomial::generators() const {
  std::vector<Generator> out;
  for (Mask m = mask; m != 0; m &= m - 1) out.push_back(Generator::at_position(std::countr_zero(m)));
  return out;
}

std::string mask_name(Mask mask) {
  if (mask == 0) return "1";
  std::string out;
  for (Mask m = mask; m != 0; m &= m - 1) out += Generator::at_position(std::countr_zero(m)).name();
  return out;
}

std::string Monomial::name() const { return (negative ? "-" : "") + mask_name(mask); }

Monomial Monomial::parse(std::string_view text) {
  const std::string original(text);
  Monomial result;
  if (!text.empty() && text.front() == '-') {
    result.negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty monomial name: '" + original + "'");
  if (text == "1") return result;

  int last_position = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char letter = text[pos];
    if (letter != 'i' && letter != 'j') {
      throw ParseError("unexpected character in monomial name: '" + original + "'");
    }
    ++pos;
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view digits = text.substr(digits_begin, pos - digits_begin);
    if (digits.empty() || digits.front() == '0' || digits.size() > 2) {
      throw ParseError("bad generator index in monomial name: '" + original + "'");
    }
    const int index = std::stoi(std::string(digits));
    if (index > kMaxGeneratorIndex) {
      throw ParseError("generator index out of range in monomial name: '" + original + "'");
    }
    const Generator g{index, letter == 'i' ? GeneratorKind::I : GeneratorKind::J};
    if (g.position() <= last_position) {
      throw ParseError("tokens out of canonical order or duplicated: '" + original + "'");
    }
    last_position = g.position();
    result.mask |= g.bit();
  }
  return result;
}

Monomial operator*(Monomial a, Monomial b) noexcept { return multiply(a, b); }
Monomial operator-(Monomial a) noexcept { return a.negated(); }

}  // namespace ualpha
