#include "doctest.h"

#include "ualpha/matrix.hpp"
#include "ualpha/nilpotent.hpp"
#include "ualpha/sampling.hpp"

using namespace ualpha;
using namespace ualpha::dirac;

namespace {

const Pentad& gamma_pentad() {
  static const Pentad p = first_nilpotent_pentad();
  return p;
}

AlgebraElement unit_product(Monomial a, Monomial b, const Rational& c) { return AlgebraElement(multiply(a, b), c); }

}  // namespace

TEST_CASE("first nilpotent pentad") {
  const auto& p = gamma_pentad();
  CHECK(p.signature() == Signature{1, -1, -1, -1, -1});
  CHECK(p.level() == 5);
}

TEST_CASE("build and square") {
  const auto& p = gamma_pentad();
  CHECK(square(build(p, 5, {0, 0, 4}, 3)).is_zero());
  CHECK(square(build(p, 2, {0, 0, 1}, 1)) == AlgebraElement(Rational(2)));
  const auto zero = build(p, 0, {0, 0, 0}, 0);
  CHECK(zero.element().is_zero());

  CHECK_THROWS_AS(build(p, -1, {0, 0, 0}, 0), PreconditionError);
  CHECK_THROWS_AS(build(p, 1, {0, 0, 0}, -1), PreconditionError);
  const Pentad gamma_type(5, {Monomial::parse("i1i3"), Monomial::parse("j1"), Monomial::parse("i1j1i2i3"),
                              Monomial::parse("i1j1j2i3"), Monomial::parse("i1j1i2j2")});
  CHECK_THROWS_AS(build(gamma_type.dirac_ordered(), 5, {0, 0, 4}, 3), SignatureError);
  CHECK_THROWS_AS(build(gamma_type, 5, {0, 0, 4}, 3), SignatureError);
}

TEST_CASE("element layout") {
  const auto& p = gamma_pentad();
  const auto op = build(p, 5, {1, 2, 3}, 7, {-1, 1});
  const auto& u = p.members();
  AlgebraElement expected = AlgebraElement(u[0], -5) + AlgebraElement(u[1], 1) + AlgebraElement(u[2], 2) +
                            AlgebraElement(u[3], 3) + AlgebraElement(u[4], 7);
  CHECK(op.element() == expected);
}

TEST_CASE("is_nilpotent") {
  const auto& p = gamma_pentad();
  CHECK(is_nilpotent(build(p, 5, {0, 0, 4}, 3)));
  CHECK(is_nilpotent(build(p, 13, {3, 4, 12}, 0)));
  const auto off = build(p, 1, {0, 0, 1}, 1);
  CHECK_FALSE(is_nilpotent(off));
  CHECK(square(off) == AlgebraElement(Rational(-1)));
}

TEST_CASE("square equals the shell residual for every nilpotent-type pentad") {
  Sampler rng(5);
  for (const auto& raw : find_pentads(5)) {
    const Pentad p = raw.dirac_ordered();
    if (p.signature() != Signature{1, -1, -1, -1, -1}) continue;
    for (int s = 0; s < 5; ++s) {
      const auto pt = rng.off_shell();
      const auto op = build(p, pt.energy, pt.momentum, pt.mass);
      REQUIRE(square(op) == AlgebraElement(op.shell_residual()));
      const auto on = rng.on_shell();
      REQUIRE(is_nilpotent(build(p, on.energy, on.momentum, on.mass)));
    }
  }
}

TEST_CASE("exclusion products") {
  const auto& p = gamma_pentad();
  const auto& u = p.members();
  const auto a = build(p, 5, {0, 0, 4}, 3, {1, 1});
  CHECK(exclusion_product(a, a).is_zero());

  // (A + B + D)(A - B + D) = (E^2 + p^2 - m^2) - 2AB + 2BD with A = E alpha,
  // B = p3 beta3, D = m delta.
  const auto b = build(p, 5, {0, 0, 4}, 3, {1, -1});
  const AlgebraElement expected = AlgebraElement(Rational(32)) + unit_product(u[0], u[3], -40) +
                                  unit_product(u[3], u[4], 24);
  CHECK(exclusion_product(a, b) == expected);
  CHECK_FALSE(exclusion_product(a, b).is_zero());

  const auto other = build(p, 13, {0, 0, 12}, 5);
  CHECK_FALSE(exclusion_product(a, other).is_zero());

  SUBCASE("m = 0 lets opposite variants annihilate") {
    const auto x = build(p, 5, {3, 4, 0}, 0, {1, 1});
    const auto y = build(p, 5, {3, 4, 0}, 0, {-1, -1});
    CHECK(exclusion_product(x, y).is_zero());
  }
}

TEST_CASE("variant products vanish only on the diagonal") {
  Sampler rng(9);
  const auto& p = gamma_pentad();
  for (int s = 0; s < 20; ++s) {
    const auto pt = rng.on_shell();
    for (const auto& su : sign_variants())
      for (const auto& sv : sign_variants()) {
        const auto x = build(p, pt.energy, pt.momentum, pt.mass, su);
        const auto y = build(p, pt.energy, pt.momentum, pt.mass, sv);
        REQUIRE(exclusion_product(x, y).is_zero() == (su == sv));
      }
  }
}

TEST_CASE("antifermion and boson") {
  const auto& p = gamma_pentad();
  const auto f = build(p, 5, {0, 0, 4}, 3);
  const auto af = antifermion(f);
  CHECK(af.signs() == SignPair{-1, 1});
  CHECK(antifermion(af) == f);
  CHECK(is_nilpotent(af));

  // (A + B + D)(-A + B + D) = -(E^2 + p^2 + m^2) + 2AB + 2AD.
  const auto& u = p.members();
  const AlgebraElement expected =
      AlgebraElement(Rational(-50)) + unit_product(u[0], u[3], 40) + unit_product(u[0], u[4], 30);
  const auto boson = boson_product(f, af);
  CHECK(boson == expected);

  const matrix::Representation rep(5);
  CHECK(rep.image(boson) == rep.image(f.element()) * rep.image(af.element()));
}

TEST_CASE("dirac annihilation table") {
  const auto& p = gamma_pentad();
  const auto t = dirac_annihilation_table(p, 5, {0, 0, 4}, 3);
  CHECK(is_permutation_matrix(t));
  const auto& v = sign_variants();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool expected = v[c].energy == v[r].energy && v[c].momentum == -v[r].momentum;
      CHECK(t[r][c] == expected);
    }

  SUBCASE("substitution flips the momentum sign") {
    for (const auto& s : v) {
      const auto op = substituted_operator(p, 5, {0, 0, 4}, 3, s);
      CHECK(op == build(p, 5, {0, 0, 4}, 3, {s.energy, -s.momentum}).element());
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(dirac_annihilation_table(p, 5, {0, 0, 4}, 2), PreconditionError);
    CHECK_THROWS_AS(dirac_annihilation_table(p, 13, {3, 4, 12}, 0), PreconditionError);
    CHECK_THROWS_AS(dirac_annihilation_table(p, 3, {0, 0, 0}, 3), PreconditionError);
  }
  SUBCASE("random on-shell points") {
    Sampler rng(3);
    for (int s = 0; s < 20; ++s) {
      const auto pt = rng.on_shell();
      REQUIRE(is_permutation_matrix(dirac_annihilation_table(p, pt.energy, pt.momentum, pt.mass)));
    }
  }
  CHECK_FALSE(is_permutation_matrix(AnnihilationTable{}));
}

TEST_CASE("parameter table") {
  const auto& rows = parameter_table();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].name == "space");
  CHECK_FALSE(rows[0].conjugated);
  CHECK_FALSE(rows[0].complex);
  CHECK(rows[0].dimensional);
  CHECK(rows[0].algebra == "multivariate vector");
  CHECK(rows[1].name == "time");
  CHECK(rows[1].complex);
  CHECK_FALSE(rows[1].dimensional);
  CHECK(rows[1].algebra == "pseudoscalar");
  CHECK(rows[2].name == "mass");
  CHECK(rows[2].conjugated);
  CHECK_FALSE(rows[2].complex);
  CHECK_FALSE(rows[2].dimensional);
  CHECK(rows[2].algebra == "real scalar");
  CHECK(rows[3].name == "charge");
  CHECK(rows[3].conjugated);
  CHECK(rows[3].complex);
  CHECK(rows[3].dimensional);
  CHECK(rows[3].algebra == "quaternion");
}

TEST_CASE("sampler") {
  Sampler a(17);
  Sampler b(17);
  for (int s = 0; s < 50; ++s) {
    const auto x = a.on_shell();
    const auto y = b.on_shell();
    REQUIRE(x.energy == y.energy);
    REQUIRE(x.energy * x.energy ==
            x.momentum[0] * x.momentum[0] + x.momentum[1] * x.momentum[1] + x.momentum[2] * x.momentum[2] +
                x.mass * x.mass);
    REQUIRE(x.mass > 0);
    const auto off = a.off_shell();
    b.off_shell();
    REQUIRE(off.energy * off.energy != off.momentum[0] * off.momentum[0] + off.momentum[1] * off.momentum[1] +
                                           off.momentum[2] * off.momentum[2] + off.mass * off.mass);
  }
}
