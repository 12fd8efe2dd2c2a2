#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ualpha/group.hpp"

namespace ualpha::rewrite {

class InvalidModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 0, the recursive all-symbol E, or the n-th iteratively created symbol.
struct Symbol {
  enum class Kind : std::uint8_t { Zero, Every, Created };
  Kind kind = Kind::Zero;
  int ordinal = 0;  // creation ordinal for Created, 0 otherwise

  static constexpr Symbol zero() noexcept { return {Kind::Zero, 0}; }
  static constexpr Symbol every() noexcept { return {Kind::Every, 0}; }
  static constexpr Symbol created(int n) noexcept { return {Kind::Created, n}; }

  /// "0", "E", "A1", "A2", ...
  [[nodiscard]] std::string name() const;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Symbols delivered so far; always starts with Zero.
class SubsetAlphabet {
 public:
  SubsetAlphabet() : symbols_{Symbol::zero()} {}

  [[nodiscard]] const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool contains(Symbol s) const noexcept;
  [[nodiscard]] bool is_u_state() const noexcept { return symbols_.size() == 1; }
  [[nodiscard]] bool is_recursive() const noexcept;
  [[nodiscard]] int created_count() const noexcept;
  [[nodiscard]] std::vector<std::string> names() const;

  friend bool operator==(const SubsetAlphabet&, const SubsetAlphabet&) = default;

 private:
  friend SubsetAlphabet create_iterative(const SubsetAlphabet&);
  friend SubsetAlphabet create_recursive(const SubsetAlphabet&);
  std::vector<Symbol> symbols_;
};

enum class CellClass : std::uint8_t { ZeroZero, ConjugatePair, NovelDiagonal, BalancedDiagonal };

/// "00", "conj", "novel", "balanced".
std::string_view cell_class_name(CellClass c) noexcept;

class TransitionTable {
 public:
  TransitionTable(std::size_t size, std::vector<CellClass> cells) : size_(size), cells_(std::move(cells)) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t cell_count() const noexcept { return cells_.size(); }
  [[nodiscard]] CellClass at(std::size_t row, std::size_t col) const { return cells_.at(row * size_ + col); }
  [[nodiscard]] std::size_t count(CellClass c) const noexcept;
  /// Off-diagonal (x, y)/(y, x) pairs that cancel against each other.
  [[nodiscard]] std::size_t conjugate_pair_count() const noexcept { return count(CellClass::ConjugatePair) / 2; }

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

 private:
  std::size_t size_;
  std::vector<CellClass> cells_;
};

enum class Verdict : std::uint8_t { Consistent, RequiresCreate };

struct ConserveResult {
  TransitionTable table;
  Verdict verdict;
};

enum class ProcessLabel : std::uint8_t { Conjugation, Complexification, Dimensionalization, Repetition };
enum class Action : std::uint8_t { Created, Halted };

std::string_view label_name(ProcessLabel label) noexcept;
std::string_view action_name(Action action) noexcept;
ProcessLabel label_for_step(int step) noexcept;

struct TraceStep {
  int step = 0;
  SubsetAlphabet alphabet;
  TransitionTable table;
  Verdict verdict = Verdict::RequiresCreate;
  ProcessLabel label = ProcessLabel::Conjugation;
  Action action = Action::Created;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;
  [[nodiscard]] const SubsetAlphabet& alphabet() const { return steps.back().alphabet; }
};

/// The u-state {0}.
SubsetAlphabet initial_state();

/// {0} -> {0, E}. Any other input is rejected: refining E is not finitely
/// realizable.
SubsetAlphabet create_recursive(const SubsetAlphabet& state);

/// Appends the next created symbol.
SubsetAlphabet create_iterative(const SubsetAlphabet& state);

/// Classifies every ordered pair of symbols.
ConserveResult conserve(const SubsetAlphabet& state);

/// Alternates create/conserve from the u-state for exactly max_steps steps.
RewriteTrace run(int max_steps);

/// Group level reached after `step` creations: step - 1 generators.
GroupLevel map_to_group(int step, int max_level = kDefaultMaxLevel);

nlohmann::ordered_json to_json(const RewriteTrace& trace);

}  // namespace ualpha::rewrite
