#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ualpha/algebra.hpp"
#include "ualpha/pentad.hpp"

namespace ualpha::dirac {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Momentum = std::array<Rational, 3>;

/// Signs on the energy and momentum terms.
struct SignPair {
  int energy = 1;
  int momentum = 1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

/// (+,+), (+,-), (-,+), (-,-).
const std::array<SignPair, 4>& sign_variants();

/// s_E * alpha * E + s_p * (beta . p) + delta * m over a pentad ordered
/// (alpha, beta1, beta2, beta3, delta) with squares (+1,-1,-1,-1,-1).
class NilpotentOperator {
 public:
  [[nodiscard]] const Pentad& pentad() const noexcept { return pentad_; }
  [[nodiscard]] const Rational& energy() const noexcept { return energy_; }
  [[nodiscard]] const Momentum& momentum() const noexcept { return momentum_; }
  [[nodiscard]] const Rational& mass() const noexcept { return mass_; }
  [[nodiscard]] SignPair signs() const noexcept { return signs_; }
  [[nodiscard]] const AlgebraElement& element() const noexcept { return element_; }

  /// E^2 - p^2 - m^2.
  [[nodiscard]] Rational shell_residual() const;

  friend bool operator==(const NilpotentOperator& a, const NilpotentOperator& b) {
    return a.pentad_ == b.pentad_ && a.energy_ == b.energy_ && a.momentum_ == b.momentum_ &&
           a.mass_ == b.mass_ && a.signs_ == b.signs_;
  }

 private:
  friend NilpotentOperator build(const Pentad&, const Rational&, const Momentum&, const Rational&, SignPair);
  NilpotentOperator(Pentad p, Rational e, Momentum mom, Rational m, SignPair s);

  Pentad pentad_;
  Rational energy_;
  Momentum momentum_;
  Rational mass_;
  SignPair signs_;
  AlgebraElement element_;
};

/// Throws SignatureError unless the pentad's ordered signature is
/// (+1,-1,-1,-1,-1); PreconditionError for negative E or m.
NilpotentOperator build(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                        const Rational& mass, SignPair signs = {});

/// First pentad of the level whose Dirac ordering has squares (+1,-1,-1,-1,-1).
Pentad first_nilpotent_pentad(int level = 5);

[[nodiscard]] AlgebraElement square(const NilpotentOperator& op);
[[nodiscard]] bool is_nilpotent(const NilpotentOperator& op);

/// a * b; zero exactly when a and b are the same on-shell operator
/// (given m > 0 and p != 0).
AlgebraElement exclusion_product(const NilpotentOperator& a, const NilpotentOperator& b);

/// Flips the energy sign.
NilpotentOperator antifermion(const NilpotentOperator& op);

/// fermion * antifermion.
AlgebraElement boson_product(const NilpotentOperator& fermion, const NilpotentOperator& antifermion);

/// The central pseudoscalar of the pentad's level, used as the imaginary unit.
Monomial imaginary_unit(int level);

/// Differential operator s_E*iota*alpha*d/dt + s_p*iota*beta.grad + delta*m
/// with plane-wave substitution d/dt -> -iota*E, grad -> iota*p.
AlgebraElement substituted_operator(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                                    const Rational& mass, SignPair signs);

using AnnihilationTable = std::array<std::array<bool, 4>, 4>;

/// Row = operator sign variant, column = amplitude sign variant (order of
/// sign_variants()); true where the product vanishes. Requires on-shell input
/// with E, m > 0 and p != 0.
AnnihilationTable dirac_annihilation_table(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                                           const Rational& mass);

bool is_permutation_matrix(const AnnihilationTable& t);

struct ParameterRow {
  std::string name;
  bool conjugated = false;
  bool complex = false;
  bool dimensional = false;
  std::string algebra;
};

/// space, time, mass, charge.
const std::vector<ParameterRow>& parameter_table();

nlohmann::ordered_json nilpotent_json(const NilpotentOperator& op, const AnnihilationTable* annihilation);

}  // namespace ualpha::dirac
