#include "ualpha/sampling.hpp"

#include <algorithm>

namespace ualpha {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Sampler::rational(std::int64_t range, std::int64_t max_den) {
  Rational q(static_cast<long>(integer(-range, range)), static_cast<long>(integer(1, max_den)));
  q.canonicalize();
  return q;
}

AlgebraElement Sampler::element(int level, int terms) {
  AlgebraElement out;
  const auto masks = std::int64_t{1} << level;
  for (int t = 0; t < terms; ++t) out.add_term(static_cast<Mask>(integer(0, masks - 1)), rational());
  return out;
}

ShellPoint Sampler::on_shell() {
  for (;;) {
    const std::int64_t a = integer(-4, 4);
    const std::int64_t b = integer(-4, 4);
    const std::int64_t c = integer(-4, 4);
    const std::int64_t d = integer(1, 4);
    const std::int64_t abc = a * a + b * b + c * c;
    if (abc == 0 || abc == d * d) continue;
    const std::int64_t scale = integer(1, 3);
    auto q = [scale](std::int64_t v) {
      Rational r(static_cast<long>(v), static_cast<long>(scale));
      r.canonicalize();
      return r;
    };
    ShellPoint p;
    p.energy = q(abc + d * d);
    p.mass = q(abc > d * d ? abc - d * d : d * d - abc);
    p.momentum = {q(2 * a * d), q(2 * b * d), q(2 * c * d)};
    // Rotate which slot carries which component.
    const auto shift = static_cast<std::size_t>(integer(0, 2));
    std::rotate(p.momentum.begin(), p.momentum.begin() + static_cast<std::ptrdiff_t>(shift), p.momentum.end());
    return p;
  }
}

ShellPoint Sampler::off_shell() {
  for (;;) {
    ShellPoint p;
    p.energy = abs(rational());
    p.mass = abs(rational());
    p.momentum = {rational(), rational(), rational()};
    const Rational residual = p.energy * p.energy - p.momentum[0] * p.momentum[0] -
                              p.momentum[1] * p.momentum[1] - p.momentum[2] * p.momentum[2] - p.mass * p.mass;
    if (residual != 0) return p;
  }
}

}  // namespace ualpha
