#include "ualpha/nilpotent.hpp"

#include <cstdlib>

#include "ualpha/group.hpp"

namespace ualpha::dirac {
namespace {

constexpr Signature kNilpotentSignature{1, -1, -1, -1, -1};

AlgebraElement term(Monomial unit, const Rational& coeff) { return AlgebraElement(unit, coeff); }

Rational momentum_squared(const Momentum& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }

AlgebraElement assemble(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                        const Rational& mass, SignPair signs) {
  const auto& u = pentad.members();
  AlgebraElement out = term(u[0], signs.energy * energy);
  for (std::size_t k = 0; k < 3; ++k) out += term(u[k + 1], signs.momentum * momentum[k]);
  out += term(u[4], mass);
  return out;
}

}  // namespace

const std::array<SignPair, 4>& sign_variants() {
  static const std::array<SignPair, 4> variants{SignPair{1, 1}, SignPair{1, -1}, SignPair{-1, 1}, SignPair{-1, -1}};
  return variants;
}

NilpotentOperator::NilpotentOperator(Pentad p, Rational e, Momentum mom, Rational m, SignPair s)
    : pentad_(std::move(p)), energy_(std::move(e)), momentum_(std::move(mom)), mass_(std::move(m)), signs_(s) {
  element_ = assemble(pentad_, energy_, momentum_, mass_, signs_);
}

Rational NilpotentOperator::shell_residual() const {
  return energy_ * energy_ - momentum_squared(momentum_) - mass_ * mass_;
}

NilpotentOperator build(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                        const Rational& mass, SignPair signs) {
  if (pentad.signature() != kNilpotentSignature) {
    throw SignatureError("nilpotent operator needs signature (+1,-1,-1,-1,-1), got " +
                         signature_string(pentad.signature()));
  }
  if (energy < 0 || mass < 0) throw PreconditionError("energy and mass must be non-negative");
  if (std::abs(signs.energy) != 1 || std::abs(signs.momentum) != 1) throw PreconditionError("signs must be +-1");
  return NilpotentOperator(pentad, energy, momentum, mass, signs);
}

Pentad first_nilpotent_pentad(int level) {
  for (const Pentad& p : find_pentads(level)) {
    const Pentad ordered = p.dirac_ordered();
    if (ordered.signature() == kNilpotentSignature) return ordered;
  }
  throw SignatureError("no pentad with signature (+1,-1,-1,-1,-1) at level " + std::to_string(level));
}

AlgebraElement square(const NilpotentOperator& op) { return op.element() * op.element(); }

bool is_nilpotent(const NilpotentOperator& op) { return square(op).is_zero(); }

AlgebraElement exclusion_product(const NilpotentOperator& a, const NilpotentOperator& b) {
  if (!(a.pentad() == b.pentad())) throw PreconditionError("exclusion product needs a common pentad");
  return a.element() * b.element();
}

NilpotentOperator antifermion(const NilpotentOperator& op) {
  SignPair flipped = op.signs();
  flipped.energy = -flipped.energy;
  return build(op.pentad(), op.energy(), op.momentum(), op.mass(), flipped);
}

AlgebraElement boson_product(const NilpotentOperator& fermion, const NilpotentOperator& antifermion) {
  if (!(fermion.pentad() == antifermion.pentad())) throw PreconditionError("boson product needs a common pentad");
  return fermion.element() * antifermion.element();
}

Monomial imaginary_unit(int level) {
  const UnitClassification roles = classify_units(level);
  if (!roles.pseudoscalar) throw PreconditionError("level " + std::to_string(level) + " has no pseudoscalar");
  return *roles.pseudoscalar;
}

AlgebraElement substituted_operator(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                                    const Rational& mass, SignPair signs) {
  const AlgebraElement iota(imaginary_unit(pentad.level()));
  const auto& u = pentad.members();

  // d/dt acting on exp(-iota(Et - p.r)) brings down -iota*E; each spatial
  // derivative brings down iota*p_k.
  const AlgebraElement d_t = -(iota * AlgebraElement(Rational(energy)));
  AlgebraElement out = Rational(signs.energy) * (iota * AlgebraElement(u[0]) * d_t);
  for (std::size_t k = 0; k < 3; ++k) {
    const AlgebraElement d_k = iota * AlgebraElement(Rational(momentum[k]));
    out += Rational(signs.momentum) * (iota * AlgebraElement(u[k + 1]) * d_k);
  }
  out += AlgebraElement(u[4], mass);
  return out;
}

AnnihilationTable dirac_annihilation_table(const Pentad& pentad, const Rational& energy, const Momentum& momentum,
                                           const Rational& mass) {
  if (pentad.signature() != kNilpotentSignature) {
    throw SignatureError("annihilation table needs signature (+1,-1,-1,-1,-1)");
  }
  if (energy <= 0 || mass <= 0) throw PreconditionError("annihilation table needs E > 0 and m > 0");
  if (momentum_squared(momentum) == 0) throw PreconditionError("annihilation table needs p != 0");
  if (energy * energy != momentum_squared(momentum) + mass * mass) {
    throw PreconditionError("annihilation table needs on-shell input (E^2 = p^2 + m^2)");
  }

  AnnihilationTable table{};
  const auto& variants = sign_variants();
  for (std::size_t r = 0; r < 4; ++r) {
    const AlgebraElement op = substituted_operator(pentad, energy, momentum, mass, variants[r]);
    for (std::size_t c = 0; c < 4; ++c) {
      const AlgebraElement amplitude = build(pentad, energy, momentum, mass, variants[c]).element();
      table[r][c] = (op * amplitude).is_zero();
    }
  }
  return table;
}

bool is_permutation_matrix(const AnnihilationTable& t) {
  for (std::size_t r = 0; r < 4; ++r) {
    int row = 0;
    int col = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      row += t[r][c] ? 1 : 0;
      col += t[c][r] ? 1 : 0;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

const std::vector<ParameterRow>& parameter_table() {
  static const std::vector<ParameterRow> rows{
      {"space", false, false, true, "multivariate vector"},
      {"time", false, true, false, "pseudoscalar"},
      {"mass", true, false, false, "real scalar"},
      {"charge", true, true, true, "quaternion"},
  };
  return rows;
}

nlohmann::ordered_json nilpotent_json(const NilpotentOperator& op, const AnnihilationTable* annihilation) {
  nlohmann::ordered_json j;
  auto names = nlohmann::ordered_json::array();
  for (const auto& m : op.pentad().members()) names.push_back(m.name());
  j["pentad"] = std::move(names);
  j["E"] = op.energy().get_str();
  j["p"] = {op.momentum()[0].get_str(), op.momentum()[1].get_str(), op.momentum()[2].get_str()};
  j["m"] = op.mass().get_str();
  j["element"] = op.element().to_string();
  j["square"] = square(op).to_string();
  j["nilpotent"] = is_nilpotent(op);
  if (annihilation != nullptr) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : *annihilation) rows.push_back(row);
    j["annihilation"] = std::move(rows);
  } else {
    j["annihilation"] = nullptr;
  }
  return j;
}

}  // namespace ualpha::dirac
