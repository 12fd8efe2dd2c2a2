#include "ualpha/group.hpp"

#include <algorithm>
#include <sstream>

namespace ualpha {
namespace {

void check_level(int level, int max_level) {
  if (level < 0) throw ResourceBoundError("level must be non-negative, got " + std::to_string(level));
  if (level > max_level) {
    throw ResourceBoundError("level " + std::to_string(level) + " exceeds maximum " +
                             std::to_string(max_level));
  }
  if (level > 2 * kMaxGeneratorIndex) throw ResourceBoundError("level exceeds generator capacity");
}

void record(AxiomCheck& check, bool ok, const std::string& what) {
  ++check.checked;
  if (ok) return;
  if (check.failures++ == 0) check.first_counterexample = what;
  check.passed = false;
}

}  // namespace

GroupLevel GroupLevel::enumerate(int level, int max_level) {
  check_level(level, max_level);
  std::vector<Monomial> elements;
  const Mask count = Mask{1} << level;
  elements.reserve(2 * static_cast<std::size_t>(count));
  for (Mask mask = 0; mask < count; ++mask) {
    elements.push_back({false, mask});
    elements.push_back({true, mask});
  }
  return GroupLevel(level, std::move(elements));
}

bool GroupReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* GroupReport::find(std::string_view axiom) const noexcept {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

GroupReport verify_group(int level, int max_level) {
  const GroupLevel group = GroupLevel::enumerate(level, max_level);
  const auto& els = group.elements();
  GroupReport report{level, group.order(), {}};

  // Product table by index; closure is checked while filling it.
  const std::size_t n = els.size();
  std::vector<std::size_t> table(n * n);
  AxiomCheck closure{"closure"};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Monomial p = multiply(els[a], els[b]);
      const bool inside = group.contains(p);
      record(closure, inside, els[a].name() + "*" + els[b].name() + "=" + p.name());
      table[a * n + b] = inside ? group.index_of(p) : 0;
    }
  }

  AxiomCheck assoc{"associativity"};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const bool ok = table[ab * n + c] == table[a * n + table[b * n + c]];
        ++assoc.checked;
        if (!ok) {
          if (assoc.failures++ == 0) {
            assoc.first_counterexample = "(" + els[a].name() + "," + els[b].name() + "," + els[c].name() + ")";
          }
          assoc.passed = false;
        }
      }
    }
  }

  AxiomCheck identity{"identity"};
  const std::size_t e = group.index_of(Monomial::one());
  for (std::size_t a = 0; a < n; ++a) {
    record(identity, table[e * n + a] == a && table[a * n + e] == a, els[a].name());
  }

  AxiomCheck inverses{"inverses"};
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = table[a * n + b] == e && table[b * n + a] == e;
    }
    record(inverses, found, els[a].name());
  }

  AxiomCheck doubling{"order-doubling"};
  if (level >= 1) {
    const std::size_t previous = GroupLevel::enumerate(level - 1, max_level).order();
    record(doubling, group.order() == 2 * previous,
           std::to_string(group.order()) + " != 2*" + std::to_string(previous));
  }
  record(doubling, group.order() == (std::size_t{2} << level), "order " + std::to_string(group.order()));

  report.checks = {closure, assoc, identity, inverses, doubling};
  return report;
}

std::vector<Monomial> center(int level, int max_level) {
  const GroupLevel group = GroupLevel::enumerate(level, max_level);
  std::vector<Monomial> out;
  for (const Monomial& z : group.elements()) {
    const bool central = std::all_of(group.elements().begin(), group.elements().end(),
                                     [&](const Monomial& g) { return multiply(z, g) == multiply(g, z); });
    if (central) out.push_back(z);
  }
  return out;
}

std::string_view role_name(Role role) noexcept {
  switch (role) {
    case Role::Scalar: return "scalar";
    case Role::Pseudoscalar: return "pseudoscalar";
    case Role::QuaternionUnit: return "quaternion-unit";
    case Role::VectorUnit: return "vector-unit";
    case Role::PseudovectorUnit: return "pseudovector-unit";
    case Role::Other: return "other";
  }
  return "other";
}

std::vector<Monomial> UnitClassification::with_role(Role role) const {
  std::vector<Monomial> out;
  for (const auto& r : roles) {
    if (r.role == role) out.push_back(r.monomial);
  }
  return out;
}

namespace {

std::vector<Monomial> quaternion_triple(int pair_index) {
  const Monomial i = Monomial::of(Generator{pair_index, GeneratorKind::I});
  const Monomial j = Monomial::of(Generator{pair_index, GeneratorKind::J});
  return {i, j, multiply(i, j)};
}

bool is_anticommuting_triple(const std::vector<Monomial>& t) {
  return t.size() == 3 && anticommutes(t[0], t[1]) && anticommutes(t[0], t[2]) && anticommutes(t[1], t[2]);
}

}  // namespace

UnitClassification classify_units(int level, int max_level) {
  check_level(level, max_level);
  UnitClassification out;
  out.level = level;
  out.roles.push_back({Role::Scalar, Monomial::one()});

  for (const Monomial& z : center(level, max_level)) {
    if (z.negative || z.is_scalar()) continue;
    if (square(z) == Monomial::minus_one()) {
      out.pseudoscalar = z;
      break;
    }
  }

  const int complete_pairs = level / 2;
  const int quaternion_pairs = out.pseudoscalar ? complete_pairs - 1 : complete_pairs;
  for (int n = 1; n <= quaternion_pairs; ++n) {
    const auto triple = quaternion_triple(n);
    if (!is_anticommuting_triple(triple)) continue;
    for (const Monomial& q : triple) {
      if (square(q) == Monomial::minus_one()) out.roles.push_back({Role::QuaternionUnit, q});
    }
  }

  if (!out.pseudoscalar) {
    out.note = "no pseudoscalar";
    return out;
  }
  const Monomial iota = *out.pseudoscalar;
  out.roles.push_back({Role::Pseudoscalar, iota});

  if (complete_pairs >= 1) {
    std::vector<Monomial> vectors;
    for (const Monomial& q : quaternion_triple(complete_pairs)) vectors.push_back(multiply(iota, q));
    const bool squares_ok = std::all_of(vectors.begin(), vectors.end(),
                                        [](Monomial v) { return square(v) == Monomial::one(); });
    if (squares_ok && is_anticommuting_triple(vectors)) {
      for (const Monomial& v : vectors) out.roles.push_back({Role::VectorUnit, v});
      for (const Monomial& v : vectors) out.roles.push_back({Role::PseudovectorUnit, multiply(iota, v)});
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const GroupReport& report) {
  nlohmann::ordered_json j;
  j["level"] = report.level;
  j["order"] = report.order;
  j["passed"] = report.passed();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["axiom"] = c.axiom;
    cj["passed"] = c.passed;
    cj["checked"] = c.checked;
    cj["failures"] = c.failures;
    if (!c.first_counterexample.empty()) cj["first_counterexample"] = c.first_counterexample;
    checks.push_back(std::move(cj));
  }
  return j;
}

std::string table_csv(const GroupLevel& group) {
  std::ostringstream os;
  os << "*";
  for (const auto& b : group.elements()) os << ',' << b.name();
  os << '\n';
  for (const auto& a : group.elements()) {
    os << a.name();
    for (const auto& b : group.elements()) os << ',' << multiply(a, b).name();
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json table_json(const GroupLevel& group) {
  nlohmann::ordered_json j;
  j["level"] = group.level();
  j["order"] = group.order();
  auto& rows = j["table"] = nlohmann::ordered_json::array();
  for (const auto& a : group.elements()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& b : group.elements()) row.push_back(multiply(a, b).name());
    rows.push_back(std::move(row));
  }
  return j;
}

}  // namespace ualpha
