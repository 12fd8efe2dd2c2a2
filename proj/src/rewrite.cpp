#include "ualpha/rewrite.hpp"

#include <algorithm>

namespace ualpha::rewrite {

std::string Symbol::name() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Every: return "E";
    case Kind::Created: return "A" + std::to_string(ordinal);
  }
  return "?";
}

bool SubsetAlphabet::contains(Symbol s) const noexcept {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

bool SubsetAlphabet::is_recursive() const noexcept { return contains(Symbol::every()); }

int SubsetAlphabet::created_count() const noexcept {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(),
                                        [](const Symbol& s) { return s.kind == Symbol::Kind::Created; }));
}

std::vector<std::string> SubsetAlphabet::names() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_) out.push_back(s.name());
  return out;
}

std::string_view cell_class_name(CellClass c) noexcept {
  switch (c) {
    case CellClass::ZeroZero: return "00";
    case CellClass::ConjugatePair: return "conj";
    case CellClass::NovelDiagonal: return "novel";
    case CellClass::BalancedDiagonal: return "balanced";
  }
  return "?";
}

std::size_t TransitionTable::count(CellClass c) const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), c));
}

std::string_view label_name(ProcessLabel label) noexcept {
  switch (label) {
    case ProcessLabel::Conjugation: return "conjugation";
    case ProcessLabel::Complexification: return "complexification";
    case ProcessLabel::Dimensionalization: return "dimensionalization";
    case ProcessLabel::Repetition: return "repetition";
  }
  return "?";
}

std::string_view action_name(Action action) noexcept {
  return action == Action::Created ? "created" : "halted";
}

ProcessLabel label_for_step(int step) noexcept {
  switch (step) {
    case 1: return ProcessLabel::Conjugation;
    case 2: return ProcessLabel::Complexification;
    case 3: return ProcessLabel::Dimensionalization;
    default: return ProcessLabel::Repetition;
  }
}

SubsetAlphabet initial_state() { return SubsetAlphabet{}; }

SubsetAlphabet create_recursive(const SubsetAlphabet& state) {
  if (!state.is_u_state()) {
    throw InvalidModeError("recursive create applies only to the u-state {0}");
  }
  SubsetAlphabet next = state;
  next.symbols_.push_back(Symbol::every());
  return next;
}

SubsetAlphabet create_iterative(const SubsetAlphabet& state) {
  if (state.is_recursive()) {
    throw InvalidModeError("iterative create cannot refine the recursive alphabet {0, E}");
  }
  SubsetAlphabet next = state;
  next.symbols_.push_back(Symbol::created(state.created_count() + 1));
  return next;
}

ConserveResult conserve(const SubsetAlphabet& state) {
  const std::size_t n = state.size();
  std::vector<CellClass> cells(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      CellClass cls;
      if (r != c) {
        cls = CellClass::ConjugatePair;
      } else if (r == 0) {
        cls = CellClass::ZeroZero;
      } else {
        // Only the newest self-transition is unexplained; older ones are
        // balanced by whatever was created after them.
        cls = (r == n - 1) ? CellClass::NovelDiagonal : CellClass::BalancedDiagonal;
      }
      cells[r * n + c] = cls;
    }
  }
  TransitionTable table(n, std::move(cells));
  const Verdict verdict =
      table.count(CellClass::NovelDiagonal) > 0 ? Verdict::RequiresCreate : Verdict::Consistent;
  return {std::move(table), verdict};
}

RewriteTrace run(int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  RewriteTrace trace;
  SubsetAlphabet state = initial_state();
  for (int step = 1; step <= max_steps; ++step) {
    state = create_iterative(state);
    auto [table, verdict] = conserve(state);
    const Action action = step == max_steps ? Action::Halted : Action::Created;
    trace.steps.push_back({step, state, std::move(table), verdict, label_for_step(step), action});
  }
  return trace;
}

GroupLevel map_to_group(int step, int max_level) {
  if (step < 1) throw std::invalid_argument("step must be at least 1");
  return GroupLevel::enumerate(step - 1, max_level);
}

nlohmann::ordered_json to_json(const RewriteTrace& trace) {
  nlohmann::ordered_json j;
  auto& steps = j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json sj;
    sj["step"] = s.step;
    sj["label"] = label_name(s.label);
    sj["action"] = action_name(s.action);
    sj["alphabet"] = s.alphabet.names();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < s.table.size(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < s.table.size(); ++c) row.push_back(cell_class_name(s.table.at(r, c)));
      rows.push_back(std::move(row));
    }
    sj["table"] = std::move(rows);
    steps.push_back(std::move(sj));
  }
  return j;
}

}  // namespace ualpha::rewrite
