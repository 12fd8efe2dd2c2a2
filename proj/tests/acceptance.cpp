// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ualpha/algebra.hpp"
#include "ualpha/cli.hpp"
#include "ualpha/group.hpp"
#include "ualpha/matrix.hpp"
#include "ualpha/nilpotent.hpp"
#include "ualpha/pentad.hpp"
#include "ualpha/rewrite.hpp"
#include "ualpha/sampling.hpp"

using namespace ualpha;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kShellSamples = 20;
constexpr int kVectorPairs = 100;

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome group_orders() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (int g = 0; g <= 5; ++g) {
    const auto order = enumerate(g).order();
    ok = ok && order == (std::size_t{2} << g);
    d << order << (g < 5 ? "," : "");
  }
  const double t = seconds_since(start);
  d << " in " << t << "s (limit 1s)";
  return {ok && t < 1.0, "orders " + d.str()};
}

Outcome group_axioms() {
  const auto start = Clock::now();
  const auto r = verify_group(5);
  const double t = seconds_since(start);
  std::size_t failures = 0;
  for (const auto& c : r.checks) failures += c.failures;
  std::ostringstream d;
  d << "order " << r.order << ", associativity triples " << r.find("associativity")->checked << ", failures "
    << failures << ", " << t << "s (limit 10s)";
  return {r.passed() && r.order == 64 && failures == 0 && t < 10.0, d.str()};
}

Outcome commutation_rules() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (int m = 1; m <= 3; ++m) {
    const Monomial im = Monomial::of(Generator{m, GeneratorKind::I});
    const Monomial jm = Monomial::of(Generator{m, GeneratorKind::J});
    ++checked;
    failures += square(multiply(im, jm)) == Monomial::minus_one() ? 0 : 1;
    for (int n = 1; n <= 3; ++n) {
      if (n == m) continue;
      const Monomial in = Monomial::of(Generator{n, GeneratorKind::I});
      ++checked;
      failures += square(multiply(im, in)) == Monomial::one() ? 0 : 1;
    }
  }
  return {failures == 0, std::to_string(checked) + " squares checked through level 6, " +
                             std::to_string(failures) + " failures"};
}

Outcome pauli_identities() {
  const auto c = classify_units(3);
  if (!c.pseudoscalar) return {false, "no pseudoscalar at order 16"};
  const Monomial iota = *c.pseudoscalar;
  const auto v = c.with_role(Role::VectorUnit);
  if (v.size() != 3) return {false, "vector triple not found"};
  bool ok = true;
  for (const auto& u : v) ok = ok && square(u) == Monomial::one();
  ok = ok && multiply(v[0], v[1]) == multiply(iota, v[2]);
  ok = ok && multiply(v[1], v[0]) == multiply(iota, v[2]).negated();

  Sampler rng(kSeed);
  int matched = 0;
  for (int s = 0; s < kVectorPairs; ++s) {
    std::array<Rational, 3> a{rng.rational(), rng.rational(), rng.rational()};
    std::array<Rational, 3> b{rng.rational(), rng.rational(), rng.rational()};
    AlgebraElement va;
    AlgebraElement vb;
    for (std::size_t k = 0; k < 3; ++k) {
      va += AlgebraElement(v[k], a[k]);
      vb += AlgebraElement(v[k], b[k]);
    }
    AlgebraElement expected(Rational(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]));
    expected += AlgebraElement(multiply(iota, v[0]), a[1] * b[2] - a[2] * b[1]);
    expected += AlgebraElement(multiply(iota, v[1]), a[2] * b[0] - a[0] * b[2]);
    expected += AlgebraElement(multiply(iota, v[2]), a[0] * b[1] - a[1] * b[0]);
    matched += (va * vb == expected) ? 1 : 0;
  }
  return {ok && matched == kVectorPairs,
          "unit relations " + std::string(ok ? "hold" : "fail") + ", " + std::to_string(matched) + "/" +
              std::to_string(kVectorPairs) + " vector pairs equal dot + pseudoscalar*cross"};
}

Outcome matrix_oracle() {
  const auto f = matrix::verify_faithful(5);
  const auto h = matrix::verify_homomorphism(5);
  const std::size_t good = h.checked - h.failures;
  return {f.passed && f.value == 64 && h.passed && h.checked == 4096,
          std::to_string(f.value) + " distinct matrices, homomorphism " + std::to_string(good) + "/" +
              std::to_string(h.checked)};
}

Outcome pentad_maximality() {
  const auto start = Clock::now();
  const int best = max_anticommuting_set_size(5);
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "maximum anticommuting set " << best << " in " << t << "s (limit 1s)";
  return {best == 5 && t < 1.0, d.str()};
}

Outcome pentad_signatures(const std::vector<Pentad>& pentads) {
  bool nilpotent_type = false;
  bool gamma_type = false;
  std::size_t generating = 0;
  std::size_t gamma_ok = 0;
  for (const auto& p : pentads) {
    const auto s = p.dirac_ordered().signature();
    nilpotent_type = nilpotent_type || s == Signature{1, -1, -1, -1, -1};
    gamma_type = gamma_type || s == Signature{1, -1, -1, -1, 1};
    if (p.generates_full_group()) {
      ++generating;
      const auto r = matrix::gamma_relations_check(p);
      gamma_ok += (r.passed && r.value == 16) ? 1 : 0;
    }
  }
  std::ostringstream d;
  d << pentads.size() << " pentads; (+1,-1,-1,-1,-1) " << (nilpotent_type ? "found" : "missing")
    << "; (+1,-1,-1,-1,+1) " << (gamma_type ? "found" : "missing") << "; gamma relations + span 16 for "
    << gamma_ok << "/" << generating << " generating pentads";
  return {nilpotent_type && gamma_type && generating > 0 && gamma_ok == generating, d.str()};
}

std::vector<Pentad> nilpotent_pentads(const std::vector<Pentad>& pentads) {
  std::vector<Pentad> out;
  for (const auto& p : pentads) {
    auto ordered = p.dirac_ordered();
    if (ordered.signature() == Signature{1, -1, -1, -1, -1}) out.push_back(ordered);
  }
  return out;
}

ShellPoint point(long e, std::array<long, 3> p, long m) {
  return {Rational(e), {Rational(p[0]), Rational(p[1]), Rational(p[2])}, Rational(m)};
}

Outcome nilpotency(const std::vector<Pentad>& gammas, const std::vector<ShellPoint>& on,
                   const std::vector<ShellPoint>& off) {
  std::size_t zero = 0;
  std::size_t residual = 0;
  for (const auto& p : gammas) {
    for (const auto& s : on) zero += dirac::is_nilpotent(dirac::build(p, s.energy, s.momentum, s.mass)) ? 1 : 0;
    for (const auto& s : off) {
      const auto op = dirac::build(p, s.energy, s.momentum, s.mass);
      residual += dirac::square(op) == AlgebraElement(op.shell_residual()) ? 1 : 0;
    }
  }
  const std::size_t want_on = gammas.size() * on.size();
  const std::size_t want_off = gammas.size() * off.size();
  std::ostringstream d;
  d << gammas.size() << " pentads; on-shell squares zero " << zero << "/" << want_on
    << "; off-shell squares = (E^2-p^2-m^2)*1 " << residual << "/" << want_off;
  return {!gammas.empty() && on.size() >= 20 && off.size() >= 20 && zero == want_on && residual == want_off, d.str()};
}

Outcome exclusion(const Pentad& p, const std::vector<ShellPoint>& on) {
  std::size_t ok = 0;
  std::size_t total = 0;
  for (const auto& s : on)
    for (const auto& u : dirac::sign_variants())
      for (const auto& v : dirac::sign_variants()) {
        const auto a = dirac::build(p, s.energy, s.momentum, s.mass, u);
        const auto b = dirac::build(p, s.energy, s.momentum, s.mass, v);
        ++total;
        ok += dirac::exclusion_product(a, b).is_zero() == (u == v) ? 1 : 0;
      }
  return {ok == total && total == 16 * on.size(),
          std::to_string(ok) + "/" + std::to_string(total) + " variant products (16 per sample) zero iff u = v"};
}

Outcome annihilation(const Pentad& p, const std::vector<ShellPoint>& on) {
  std::size_t perms = 0;
  for (const auto& s : on) {
    perms += dirac::is_permutation_matrix(dirac::dirac_annihilation_table(p, s.energy, s.momentum, s.mass)) ? 1 : 0;
  }
  return {perms == on.size(), std::to_string(perms) + "/" + std::to_string(on.size()) + " tables are permutations"};
}

Outcome rewrite_counts() {
  const auto trace = rewrite::run(6);
  const auto size3 = trace.steps[1].table.conjugate_pair_count();
  const auto size4 = trace.steps[2].table.conjugate_pair_count();
  bool cells = true;
  for (const auto& s : trace.steps) {
    const auto n = static_cast<std::size_t>(s.step + 1);
    cells = cells && s.table.cell_count() == n * n;
  }
  const std::vector<rewrite::ProcessLabel> ladder{
      rewrite::ProcessLabel::Conjugation, rewrite::ProcessLabel::Complexification,
      rewrite::ProcessLabel::Dimensionalization, rewrite::ProcessLabel::Repetition,
      rewrite::ProcessLabel::Repetition, rewrite::ProcessLabel::Repetition};
  bool labels = true;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) labels = labels && trace.steps[k].label == ladder[k];
  std::ostringstream d;
  d << "pairs at size 3 = " << size3 << ", at size 4 = " << size4 << "; cell counts "
    << (cells ? "(n+1)^2" : "wrong") << "; labels " << (labels ? "follow ladder" : "wrong");
  return {size3 == 3 && size4 == 6 && cells && labels, d.str()};
}

Outcome determinism() {
  const std::vector<std::string> args{"--format", "json", "--seed", std::to_string(kSeed), "verify"};
  std::ostringstream out1;
  std::ostringstream out2;
  std::ostringstream err;
  const int c1 = cli::run(args, out1, err);
  const int c2 = cli::run(args, out2, err);
  const bool same = out1.str() == out2.str() && !out1.str().empty();
  return {same && c1 == 0 && c2 == 0, std::string(same ? "byte-identical" : "differs") + " JSON (" +
                                          std::to_string(out1.str().size()) + " bytes), exit codes " +
                                          std::to_string(c1) + "," + std::to_string(c2)};
}

}  // namespace

int main() {
  const auto pentads = find_pentads(5);
  const auto gammas = nilpotent_pentads(pentads);

  Sampler rng(kSeed);
  std::vector<ShellPoint> on{point(5, {0, 0, 4}, 3), point(13, {3, 4, 12}, 0)};
  std::vector<ShellPoint> off{point(1, {0, 0, 1}, 1), point(2, {0, 0, 1}, 1)};
  std::vector<ShellPoint> strict_on{point(5, {0, 0, 4}, 3)};  // E, m > 0 and p != 0
  for (int s = 0; s < kShellSamples; ++s) {
    const auto p = rng.on_shell();
    on.push_back(p);
    strict_on.push_back(p);
  }
  for (int s = 0; s < kShellSamples; ++s) off.push_back(rng.off_shell());

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 group orders", group_orders},
      {"2 group axioms at order 64", group_axioms},
      {"3 commutation rules", commutation_rules},
      {"4 Pauli identities at order 16", pauli_identities},
      {"5 matrix oracle", matrix_oracle},
      {"6 pentad maximality", pentad_maximality},
      {"7 pentad signatures", [&] { return pentad_signatures(pentads); }},
      {"8 nilpotency", [&] { return nilpotency(gammas, on, off); }},
      {"9 exclusion", [&] { return exclusion(gammas.front(), strict_on); }},
      {"10 Dirac annihilation", [&] { return annihilation(gammas.front(), strict_on); }},
      {"11 rewrite counts", rewrite_counts},
      {"12 end-to-end determinism", determinism},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << '\n';
    failed += o.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
