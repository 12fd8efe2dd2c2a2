#include "ualpha/verify.hpp"

#include <algorithm>

#include "ualpha/algebra.hpp"
#include "ualpha/group.hpp"
#include "ualpha/matrix.hpp"
#include "ualpha/nilpotent.hpp"
#include "ualpha/pentad.hpp"
#include "ualpha/rewrite.hpp"
#include "ualpha/sampling.hpp"

namespace ualpha {

void CheckResult::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (failures++ == 0) first_counterexample = what;
  passed = false;
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = config.seed;
  j["max_level"] = config.max_level;
  j["steps"] = config.max_steps;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["checked"] = c.checked;
    cj["failures"] = c.failures;
    if (!c.first_counterexample.empty()) cj["first_counterexample"] = c.first_counterexample;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j;
}

namespace {

constexpr int kPentadLevel = 5;
constexpr int kPauliLevel = 3;
constexpr int kCommutationGenerators = 6;

CheckResult group_orders(const VerifyConfig& cfg) {
  CheckResult c{"group-orders"};
  for (int g = 0; g <= cfg.max_level; ++g) {
    const auto order = GroupLevel::enumerate(g, cfg.max_level).order();
    c.record(order == (std::size_t{2} << g), "level " + std::to_string(g) + " order " + std::to_string(order));
  }
  return c;
}

CheckResult group_axioms(const VerifyConfig& cfg) {
  CheckResult c{"group-axioms"};
  for (int g = 0; g <= cfg.max_level; ++g) {
    const GroupReport r = verify_group(g, cfg.max_level);
    for (const auto& axiom : r.checks) {
      c.record(axiom.passed, "level " + std::to_string(g) + " " + axiom.axiom + ": " + axiom.first_counterexample);
    }
  }
  return c;
}

CheckResult monomial_associativity() {
  CheckResult c{"monomial-associativity"};
  for (Mask a = 0; a < 32; ++a)
    for (Mask b = 0; b < 32; ++b)
      for (Mask d = 0; d < 32; ++d)
        for (int signs = 0; signs < 8; ++signs) {
          const Monomial x{(signs & 1) != 0, a};
          const Monomial y{(signs & 2) != 0, b};
          const Monomial z{(signs & 4) != 0, d};
          c.record(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)),
                   "(" + x.name() + "," + y.name() + "," + z.name() + ")");
        }
  return c;
}

CheckResult commutation_rules() {
  CheckResult c{"commutation-rules"};
  const int pairs = kCommutationGenerators / 2;
  for (int m = 1; m <= pairs; ++m) {
    const Monomial im = Monomial::of(Generator{m, GeneratorKind::I});
    const Monomial jm = Monomial::of(Generator{m, GeneratorKind::J});
    c.record(square(im) == Monomial::minus_one(), im.name() + "^2");
    c.record(square(jm) == Monomial::minus_one(), jm.name() + "^2");
    c.record(square(multiply(im, jm)) == Monomial::minus_one(), "(i" + std::to_string(m) + "j" + std::to_string(m) + ")^2");
    c.record(anticommutes(im, jm), "i" + std::to_string(m) + " ~ j" + std::to_string(m));
    for (int n = 1; n <= pairs; ++n) {
      if (n == m) continue;
      for (auto kn : {GeneratorKind::I, GeneratorKind::J}) {
        const Monomial gn = Monomial::of(Generator{n, kn});
        for (const Monomial& gm : {im, jm}) {
          c.record(square(multiply(gm, gn)) == Monomial::one(), "(" + gm.name() + gn.name() + ")^2");
          c.record(!anticommutes(gm, gn), gm.name() + " ~ " + gn.name());
        }
      }
    }
  }
  return c;
}

CheckResult pauli_identities(Sampler& rng, int pairs) {
  CheckResult c{"pauli-identities"};
  const UnitClassification roles = classify_units(kPauliLevel);
  const auto vectors = roles.with_role(Role::VectorUnit);
  c.record(roles.pseudoscalar.has_value() && vectors.size() == 3, "level-3 roles incomplete");
  if (!roles.pseudoscalar || vectors.size() != 3) return c;
  const Monomial iota = *roles.pseudoscalar;

  for (const auto& v : vectors) c.record(square(v) == Monomial::one(), v.name() + "^2 != 1");
  for (std::size_t k = 0; k < 3; ++k) {
    const Monomial& a = vectors[k];
    const Monomial& b = vectors[(k + 1) % 3];
    const Monomial& third = vectors[(k + 2) % 3];
    c.record(multiply(a, b) == multiply(iota, third), a.name() + "*" + b.name() + " != iota*" + third.name());
    c.record(multiply(b, a) == multiply(iota, third).negated(), b.name() + "*" + a.name() + " != -iota*" + third.name());
  }
  for (const auto& z : GroupLevel::enumerate(kPauliLevel).elements()) {
    c.record(multiply(iota, z) == multiply(z, iota), "pseudoscalar does not commute with " + z.name());
  }

  for (int s = 0; s < pairs; ++s) {
    std::array<Rational, 3> a{rng.rational(), rng.rational(), rng.rational()};
    std::array<Rational, 3> b{rng.rational(), rng.rational(), rng.rational()};
    AlgebraElement va;
    AlgebraElement vb;
    for (std::size_t k = 0; k < 3; ++k) {
      va += AlgebraElement(vectors[k], a[k]);
      vb += AlgebraElement(vectors[k], b[k]);
    }
    const Rational dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    const std::array<Rational, 3> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    AlgebraElement expected(dot);
    for (std::size_t k = 0; k < 3; ++k) expected += AlgebraElement(multiply(iota, vectors[k]), cross[k]);
    c.record(va * vb == expected, "sample " + std::to_string(s) + ": " + (va * vb).to_string());
  }
  return c;
}

CheckResult matrix_oracle(const VerifyConfig& cfg, Sampler& rng) {
  CheckResult c{"matrix-oracle"};
  const int top = std::min(cfg.max_level, matrix::kMaxRepresentedLevel);
  for (int g = 0; g <= top; ++g) {
    const auto f = matrix::verify_faithful(g);
    c.record(f.passed && f.value == (std::size_t{2} << g), "faithfulness level " + std::to_string(g));
  }
  const auto h = matrix::verify_homomorphism(kPentadLevel);
  c.record(h.passed && h.checked == 4096, "homomorphism level 5: " + h.first_counterexample);

  const matrix::Representation rep(kPentadLevel);
  for (int s = 0; s < 20; ++s) {
    const AlgebraElement x = rng.element(kPentadLevel);
    const AlgebraElement y = rng.element(kPentadLevel);
    c.record(rep.image(x * y) == rep.image(x) * rep.image(y), "algebra product " + x.to_string() + " | " + y.to_string());
  }
  const Monomial iota = dirac::imaginary_unit(kPentadLevel);
  c.record(rep.image(iota) == matrix::Complex::i() * matrix::ExactComplexMatrix::identity(rep.dim()),
           "pseudoscalar image is not i*identity");
  return c;
}

CheckResult pentad_maximality() {
  CheckResult c{"pentad-maximality"};
  const int best = max_anticommuting_set_size(kPentadLevel);
  c.record(best == 5, "maximum anticommuting set size " + std::to_string(best));
  c.record(anticommuting_sets(kPentadLevel, 6).empty(), "6-element anticommuting set found");
  return c;
}

CheckResult pentad_signatures(const std::vector<Pentad>& pentads) {
  CheckResult c{"pentad-signatures"};
  bool nilpotent_type = false;
  bool gamma_type = false;
  for (const Pentad& p : pentads) {
    const Signature s = p.dirac_ordered().signature();
    nilpotent_type = nilpotent_type || s == Signature{1, -1, -1, -1, -1};
    gamma_type = gamma_type || s == Signature{1, -1, -1, -1, 1};

    const Mask parity = p.parity();
    const Mask iota = dirac::imaginary_unit(kPentadLevel).mask;
    c.record(parity == 0 || parity == iota, "parity law " + mask_name(parity));
    c.record((parity == iota) == p.generates_full_group(), "generation vs parity for " + to_json(p).dump());

    if (p.generates_full_group()) {
      const auto r = matrix::gamma_relations_check(p);
      c.record(r.passed && r.value == 16, "gamma relations for " + to_json(p).dump());
    }
  }
  c.record(nilpotent_type, "no (+1,-1,-1,-1,-1) pentad");
  c.record(gamma_type, "no (+1,-1,-1,-1,+1) pentad");
  return c;
}

std::vector<Pentad> nilpotent_pentads(const std::vector<Pentad>& pentads) {
  std::vector<Pentad> out;
  for (const Pentad& p : pentads) {
    Pentad ordered = p.dirac_ordered();
    if (ordered.signature() == Signature{1, -1, -1, -1, -1}) out.push_back(std::move(ordered));
  }
  return out;
}

std::string point_name(const ShellPoint& s) {
  return "(" + s.energy.get_str() + ",(" + s.momentum[0].get_str() + "," + s.momentum[1].get_str() + "," +
         s.momentum[2].get_str() + ")," + s.mass.get_str() + ")";
}

CheckResult nilpotency(const std::vector<Pentad>& gammas, const std::vector<ShellPoint>& on,
                       const std::vector<ShellPoint>& off) {
  CheckResult c{"nilpotency"};
  for (const Pentad& p : gammas) {
    for (const auto& s : on) {
      const auto op = dirac::build(p, s.energy, s.momentum, s.mass);
      c.record(dirac::is_nilpotent(op), "on-shell " + point_name(s));
    }
    for (const auto& s : off) {
      const auto op = dirac::build(p, s.energy, s.momentum, s.mass);
      c.record(dirac::square(op) == AlgebraElement(op.shell_residual()), "off-shell " + point_name(s));
    }
  }
  return c;
}

CheckResult exclusion(const std::vector<Pentad>& gammas, const std::vector<ShellPoint>& on) {
  CheckResult c{"exclusion"};
  for (const Pentad& p : gammas) {
    for (const auto& s : on) {
      for (const auto& u : dirac::sign_variants())
        for (const auto& v : dirac::sign_variants()) {
          const auto a = dirac::build(p, s.energy, s.momentum, s.mass, u);
          const auto b = dirac::build(p, s.energy, s.momentum, s.mass, v);
          c.record(dirac::exclusion_product(a, b).is_zero() == (u == v), "variants at " + point_name(s));
        }
    }
  }
  return c;
}

CheckResult annihilation(const std::vector<Pentad>& gammas, const std::vector<ShellPoint>& on) {
  CheckResult c{"dirac-annihilation"};
  for (const Pentad& p : gammas) {
    for (const auto& s : on) {
      const auto t = dirac::dirac_annihilation_table(p, s.energy, s.momentum, s.mass);
      c.record(dirac::is_permutation_matrix(t), "table at " + point_name(s));
    }
  }
  return c;
}

CheckResult rewrite_counts(const VerifyConfig& cfg) {
  CheckResult c{"rewrite-counts"};
  const auto trace = rewrite::run(std::max(cfg.max_steps, 3));
  for (const auto& step : trace.steps) {
    const std::size_t n = step.alphabet.size();
    c.record(step.table.cell_count() == n * n, "cell count at step " + std::to_string(step.step));
    c.record(step.table.conjugate_pair_count() == n * (n - 1) / 2, "pairs at step " + std::to_string(step.step));
    c.record(step.label == rewrite::label_for_step(step.step), "label at step " + std::to_string(step.step));
    c.record(step.verdict == rewrite::Verdict::RequiresCreate, "verdict at step " + std::to_string(step.step));
    c.record(step.table.count(rewrite::CellClass::NovelDiagonal) == 1, "novel count at step " + std::to_string(step.step));
  }
  c.record(trace.steps[1].table.conjugate_pair_count() == 3, "3 pairs at alphabet size 3");
  c.record(trace.steps[2].table.conjugate_pair_count() == 6, "6 pairs at alphabet size 4");
  for (int step = 1; step <= std::min(cfg.max_steps, cfg.max_level + 1); ++step) {
    c.record(rewrite::map_to_group(step, cfg.max_level).order() == (std::size_t{1} << step),
             "group order at step " + std::to_string(step));
  }
  return c;
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  VerifyReport report{config, {}};
  Sampler rng(config.seed);

  report.checks.push_back(group_orders(config));
  report.checks.push_back(group_axioms(config));
  report.checks.push_back(monomial_associativity());
  report.checks.push_back(commutation_rules());
  report.checks.push_back(pauli_identities(rng, config.vector_pairs));
  report.checks.push_back(matrix_oracle(config, rng));
  report.checks.push_back(pentad_maximality());

  const auto pentads = find_pentads(kPentadLevel);
  report.checks.push_back(pentad_signatures(pentads));

  std::vector<ShellPoint> on;
  std::vector<ShellPoint> off;
  for (int s = 0; s < config.shell_samples; ++s) on.push_back(rng.on_shell());
  for (int s = 0; s < config.shell_samples; ++s) off.push_back(rng.off_shell());
  const auto gammas = nilpotent_pentads(pentads);
  report.checks.push_back(nilpotency(gammas, on, off));
  report.checks.push_back(exclusion(gammas, on));
  report.checks.push_back(annihilation(gammas, on));
  report.checks.push_back(rewrite_counts(config));
  return report;
}

}  // namespace ualpha
