#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ualpha {

/// Bit set of generators. Bit 2(n-1) is i_n, bit 2(n-1)+1 is j_n, so the
/// numeric bit order is the canonical order i1 < j1 < i2 < j2 < ...
using Mask = std::uint32_t;

inline constexpr int kMaxGeneratorIndex = 16;
inline constexpr Mask kIMask = 0x55555555u;
inline constexpr Mask kJMask = 0xAAAAAAAAu;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GeneratorKind : std::uint8_t { I, J };

struct Generator {
  int index = 1;  // n >= 1
  GeneratorKind kind = GeneratorKind::I;

  /// Position in the canonical order (0-based): i1=0, j1=1, i2=2, ...
  [[nodiscard]] int position() const noexcept {
    return 2 * (index - 1) + (kind == GeneratorKind::J ? 1 : 0);
  }
  [[nodiscard]] Mask bit() const noexcept { return Mask{1} << position(); }
  [[nodiscard]] Generator partner() const noexcept {
    return {index, kind == GeneratorKind::I ? GeneratorKind::J : GeneratorKind::I};
  }
  [[nodiscard]] std::string name() const;

  static Generator at_position(int position) noexcept {
    return {position / 2 + 1, position % 2 == 0 ? GeneratorKind::I : GeneratorKind::J};
  }

  auto operator<=>(const Generator& o) const noexcept { return position() <=> o.position(); }
  bool operator==(const Generator& o) const noexcept { return position() == o.position(); }
};

/// A signed product of distinct generators in canonical order.
struct Monomial {
  bool negative = false;
  Mask mask = 0;

  static constexpr Monomial one() noexcept { return {false, 0}; }
  static constexpr Monomial minus_one() noexcept { return {true, 0}; }
  static Monomial of(Generator g) noexcept { return {false, g.bit()}; }
  static Monomial of(std::initializer_list<Generator> gens, bool negative = false);

  /// Parses a canonical name such as "1", "-i1j1" or "i1j1i2j2i3".
  static Monomial parse(std::string_view name);

  [[nodiscard]] int sign() const noexcept { return negative ? -1 : 1; }
  [[nodiscard]] Monomial negated() const noexcept { return {!negative, mask}; }
  [[nodiscard]] Monomial unsigned_part() const noexcept { return {false, mask}; }
  [[nodiscard]] bool is_scalar() const noexcept { return mask == 0; }
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] std::vector<Generator> generators() const;
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: by mask, then + before -.
  friend auto operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.mask <=> b.mask; c != 0) return c;
    return a.negative <=> b.negative;
  }
};

/// Canonical name of an unsigned mask ("1" for the empty mask).
std::string mask_name(Mask mask);

/// Sign (+1 / -1) picked up when the canonical words for a and b are
/// concatenated and brought back into canonical order.
[[nodiscard]] inline int product_sign(Mask a, Mask b) noexcept {
  // Only j_n (in a) followed by i_n (in b) crosses an anticommuting pair;
  // every shared generator squares to -1.
  const int crossings = __builtin_popcount((b & kIMask) & ((a & kJMask) >> 1));
  const int shared = __builtin_popcount(a & b);
  return ((crossings + shared) & 1) ? -1 : 1;
}

[[nodiscard]] inline Monomial multiply(Monomial a, Monomial b) noexcept {
  const bool flip = product_sign(a.mask, b.mask) < 0;
  return {static_cast<bool>(a.negative ^ b.negative ^ flip), a.mask ^ b.mask};
}

[[nodiscard]] inline bool anticommutes(Mask a, Mask b) noexcept {
  const int n = __builtin_popcount((a & kIMask) & ((b & kJMask) >> 1)) +
                __builtin_popcount((a & kJMask) & ((b & kIMask) << 1));
  return (n & 1) != 0;
}

[[nodiscard]] inline bool anticommutes(Monomial a, Monomial b) noexcept {
  return anticommutes(a.mask, b.mask);
}

[[nodiscard]] inline Monomial square(Monomial a) noexcept { return multiply(a, a); }

/// Two-sided inverse: a^-1 = square(a) * a, since square(a) is +-1.
[[nodiscard]] inline Monomial inverse(Monomial a) noexcept { return multiply(square(a), a); }

Monomial operator*(Monomial a, Monomial b) noexcept;
Monomial operator-(Monomial a) noexcept;

}  // namespace ualpha
