#pragma once

// Test-only reference implementations, independent of the library's bit
// tricks. They work on explicit generator words.

#include <utility>
#include <vector>

#include "ualpha/monomial.hpp"

namespace ualpha::oracle {

/// Positions in canonical order; i_n = 2(n-1), j_n = 2(n-1)+1.
using Word = std::vector<int>;

inline Word word_of(Mask mask) {
  Word w;
  for (int p = 0; p < 32; ++p)
    if (mask & (Mask{1} << p)) w.push_back(p);
  return w;
}

inline bool generators_anticommute(int a, int b) { return a != b && a / 2 == b / 2; }

/// Bubble-sorts the concatenated word, flipping the sign on every swap of an
/// anticommuting pair and replacing each adjacent equal pair by -1.
inline std::pair<int, Mask> reduce(Word w) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == w[k + 1]) {
        sign = -sign;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
      if (w[k] > w[k + 1]) {
        if (generators_anticommute(w[k], w[k + 1])) sign = -sign;
        std::swap(w[k], w[k + 1]);
        changed = true;
      }
    }
  }
  Mask mask = 0;
  for (int p : w) mask |= Mask{1} << p;
  return {sign, mask};
}

inline Monomial multiply(Monomial a, Monomial b) {
  Word w = word_of(a.mask);
  const Word wb = word_of(b.mask);
  w.insert(w.end(), wb.begin(), wb.end());
  auto [sign, mask] = reduce(w);
  if (a.negative) sign = -sign;
  if (b.negative) sign = -sign;
  return {sign < 0, mask};
}

}  // namespace ualpha::oracle
