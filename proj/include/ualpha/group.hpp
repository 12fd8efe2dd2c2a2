#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ualpha/monomial.hpp"

namespace ualpha {

inline constexpr int kDefaultMaxLevel = 7;

/// Thrown when a level exceeds the configured bound.
class ResourceBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// All signed monomials over the first `level` generators, in canonical
/// order (+1, -1, +i1, -i1, +j1, ...). Order 2^(level+1).
class GroupLevel {
 public:
  static GroupLevel enumerate(int level, int max_level = kDefaultMaxLevel);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<Monomial>& elements() const& noexcept { return elements_; }
  [[nodiscard]] std::vector<Monomial> elements() && noexcept { return std::move(elements_); }
  /// Mask with one bit per generator in play.
  [[nodiscard]] Mask generator_mask() const noexcept { return (Mask{1} << level_) - 1; }
  [[nodiscard]] bool contains(Monomial m) const noexcept { return (m.mask & ~generator_mask()) == 0; }
  /// Position of m in elements().
  [[nodiscard]] std::size_t index_of(Monomial m) const noexcept {
    return 2 * static_cast<std::size_t>(m.mask) + (m.negative ? 1 : 0);
  }

 private:
  GroupLevel(int level, std::vector<Monomial> elements) : level_(level), elements_(std::move(elements)) {}

  int level_ = 0;
  std::vector<Monomial> elements_;
};

inline GroupLevel enumerate(int level, int max_level = kDefaultMaxLevel) {
  return GroupLevel::enumerate(level, max_level);
}

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
};

struct GroupReport {
  int level = 0;
  std::size_t order = 0;
  std::vector<AxiomCheck> checks;  // closure, associativity, identity, inverses, order-doubling

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] const AxiomCheck* find(std::string_view axiom) const noexcept;
};

/// Exhaustive group-axiom verification.
GroupReport verify_group(int level, int max_level = kDefaultMaxLevel);

/// Elements commuting with every element of the level.
std::vector<Monomial> center(int level, int max_level = kDefaultMaxLevel);

enum class Role { Scalar, Pseudoscalar, QuaternionUnit, VectorUnit, PseudovectorUnit, Other };

std::string_view role_name(Role role) noexcept;

struct UnitRole {
  Role role = Role::Other;
  Monomial monomial;
};

struct UnitClassification {
  int level = 0;
  std::optional<Monomial> pseudoscalar;
  std::vector<UnitRole> roles;
  /// "no pseudoscalar" when the level has no central non-scalar unit.
  std::string note;

  [[nodiscard]] std::vector<Monomial> with_role(Role role) const;
};

/// Structural role assignment. At odd levels 2k+1 the pseudoscalar is i_{k+1},
/// the vector triple is pseudoscalar x {i_k, j_k, i_k j_k}, and the earlier pairs
/// give quaternion triples. Every assignment is checked against the defining
/// criteria (centrality, squares, anticommutation) before it is returned.
UnitClassification classify_units(int level, int max_level = kDefaultMaxLevel);

nlohmann::ordered_json to_json(const GroupReport& report);

/// Multiplication table export.
std::string table_csv(const GroupLevel& group);
nlohmann::ordered_json table_json(const GroupLevel& group);

}  // namespace ualpha
