#include "ualpha/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ualpha/algebra.hpp"
#include "ualpha/group.hpp"
#include "ualpha/nilpotent.hpp"
#include "ualpha/pentad.hpp"
#include "ualpha/rewrite.hpp"
#include "ualpha/verify.hpp"

namespace ualpha::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_level(int level, const RunConfig& cfg) {
  if (level < 0 || level > cfg.max_level) {
    throw UsageError("level " + std::to_string(level) + " outside [0, " + std::to_string(cfg.max_level) + "]");
  }
}

int cmd_generate(int level, const RunConfig& cfg, std::ostream& out) {
  require_level(level, cfg);
  const GroupLevel group = GroupLevel::enumerate(level, cfg.max_level);
  switch (cfg.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["level"] = level;
      j["order"] = group.order();
      auto names = nlohmann::ordered_json::array();
      for (const auto& m : group.elements()) names.push_back(m.name());
      j["elements"] = std::move(names);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "name,sign,generators\n";
      for (const auto& m : group.elements()) {
        out << m.name() << ',' << m.sign() << ',' << mask_name(m.mask) << '\n';
      }
      break;
    case OutputFormat::Text:
      out << "level " << level << ", order " << group.order() << '\n';
      for (const auto& m : group.elements()) out << "  " << m.name() << '\n';
      break;
  }
  return kExitPass;
}

int cmd_table(int level, const RunConfig& cfg, std::ostream& out) {
  require_level(level, cfg);
  const GroupLevel group = GroupLevel::enumerate(level, cfg.max_level);
  switch (cfg.format) {
    case OutputFormat::Json: out << table_json(group).dump() << '\n'; break;
    case OutputFormat::Csv: out << table_csv(group); break;
    case OutputFormat::Text: {
      std::size_t width = 1;
      for (const auto& m : group.elements()) width = std::max(width, m.name().size());
      out << std::setw(static_cast<int>(width)) << "*";
      for (const auto& b : group.elements()) out << ' ' << std::setw(static_cast<int>(width)) << b.name();
      out << '\n';
      for (const auto& a : group.elements()) {
        out << std::setw(static_cast<int>(width)) << a.name();
        for (const auto& b : group.elements()) {
          out << ' ' << std::setw(static_cast<int>(width)) << multiply(a, b).name();
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_rewrite(int steps, const RunConfig& cfg, std::ostream& out) {
  if (steps < 1) throw UsageError("steps must be at least 1");
  const auto trace = rewrite::run(steps);
  switch (cfg.format) {
    case OutputFormat::Json: out << rewrite::to_json(trace).dump() << '\n'; break;
    case OutputFormat::Csv:
      out << "step,label,action,alphabet_size,cells,conjugate_pairs,novel,balanced\n";
      for (const auto& s : trace.steps) {
        out << s.step << ',' << rewrite::label_name(s.label) << ',' << rewrite::action_name(s.action) << ','
            << s.alphabet.size() << ',' << s.table.cell_count() << ',' << s.table.conjugate_pair_count() << ','
            << s.table.count(rewrite::CellClass::NovelDiagonal) << ','
            << s.table.count(rewrite::CellClass::BalancedDiagonal) << '\n';
      }
      break;
    case OutputFormat::Text:
      for (const auto& s : trace.steps) {
        out << "step " << s.step << " (" << rewrite::label_name(s.label) << "): {";
        const auto names = s.alphabet.names();
        for (std::size_t k = 0; k < names.size(); ++k) out << (k ? ", " : "") << names[k];
        out << "} cells=" << s.table.cell_count() << " cancelling pairs=" << s.table.conjugate_pair_count()
            << " -> " << rewrite::action_name(s.action) << '\n';
      }
      break;
  }
  return kExitPass;
}

int cmd_pentads(int level, const std::optional<SignatureFilter>& filter, const RunConfig& cfg, std::ostream& out) {
  require_level(level, cfg);
  const int max_set = max_anticommuting_set_size(level);
  const auto pentads = find_pentads(level, filter);
  switch (cfg.format) {
    case OutputFormat::Json: out << pentads_json(level, max_set, pentads).dump() << '\n'; break;
    case OutputFormat::Csv:
      out << "m1,m2,m3,m4,m5,signature,generates\n";
      for (const auto& p : pentads) {
        for (const auto& m : p.members()) out << m.name() << ',';
        out << '"' << signature_string(p.signature()) << "\"," << (p.generates_full_group() ? "true" : "false")
            << '\n';
      }
      break;
    case OutputFormat::Text:
      out << "level " << level << ": maximum anticommuting set size " << max_set << ", " << pentads.size()
          << " pentads\n";
      for (const auto& p : pentads) {
        out << " ";
        for (const auto& m : p.members()) out << ' ' << m.name();
        out << "  " << signature_string(p.signature()) << (p.generates_full_group() ? "  generates" : "") << '\n';
      }
      break;
  }
  return kExitPass;
}

dirac::SignPair parse_signs(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("signs must look like '+,-'");
  auto one = [&](const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError("bad sign '" + s + "'");
  };
  return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
}

int cmd_nilpotent(const std::vector<std::string>& values, const std::string& signs, const RunConfig& cfg,
                  std::ostream& out) {
  if (values.size() != 5) throw UsageError("nilpotent expects E p1 p2 p3 m");
  std::vector<Rational> q;
  for (const auto& v : values) q.push_back(parse_rational(v));
  if (q[0] < 0 || q[4] < 0) throw UsageError("E and m must be non-negative");

  const Pentad pentad = dirac::first_nilpotent_pentad(5);
  const dirac::Momentum momentum{q[1], q[2], q[3]};
  const auto op = dirac::build(pentad, q[0], momentum, q[4], parse_signs(signs));

  std::optional<dirac::AnnihilationTable> table;
  const bool annihilation_defined = op.shell_residual() == 0 && q[0] > 0 && q[4] > 0 &&
                                    (q[1] != 0 || q[2] != 0 || q[3] != 0);
  if (annihilation_defined) table = dirac::dirac_annihilation_table(pentad, q[0], momentum, q[4]);

  switch (cfg.format) {
    case OutputFormat::Json:
      out << dirac::nilpotent_json(op, table ? &*table : nullptr).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << "E,p1,p2,p3,m,square,nilpotent\n";
      for (const auto& v : q) out << v.get_str() << ',';
      out << '"' << dirac::square(op).to_string() << "\"," << (dirac::is_nilpotent(op) ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text: {
      out << "pentad:";
      for (const auto& m : pentad.members()) out << ' ' << m.name();
      out << "\noperator: " << op.element().to_string() << '\n';
      out << "square: " << dirac::square(op).to_string() << '\n';
      out << "nilpotent: " << (dirac::is_nilpotent(op) ? "yes" : "no") << '\n';
      if (table) {
        out << "annihilation (rows: operator signs, columns: amplitude signs ++ +- -+ --):\n";
        for (const auto& row : *table) {
          out << ' ';
          for (bool b : row) out << ' ' << (b ? 1 : 0);
          out << '\n';
        }
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.max_level = cfg.max_level;
  vc.max_steps = cfg.max_steps;
  vc.seed = cfg.seed;
  const VerifyReport report = run_verify(vc);
  switch (cfg.format) {
    case OutputFormat::Json: out << report.to_json().dump() << '\n'; break;
    case OutputFormat::Csv:
      out << "name,passed,checked,failures\n";
      for (const auto& c : report.checks) {
        out << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.checked << ',' << c.failures << '\n';
      }
      break;
    case OutputFormat::Text:
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checks";
        if (!c.passed) out << ", " << c.failures << " failures, first: " << c.first_counterexample;
        out << ")\n";
      }
      out << (report.passed() ? "all checks passed" : "verification FAILED") << " (seed " << cfg.seed << ")\n";
      break;
  }
  return report.passed() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rewrite-system and group-algebra engine", "ualpha"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-level", cfg.max_level, "Largest group level allowed")->check(CLI::Range(0, kDefaultMaxLevel));
  app.add_option("--steps", cfg.max_steps, "Rewrite steps")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  app.add_option("--output", cfg.output_path, "Write output to this file");

  int level = 0;
  auto* generate = app.add_subcommand("generate", "List the elements of a group level");
  generate->add_option("level", level, "Group level")->required();
  generate->fallthrough();

  auto* table = app.add_subcommand("table", "Multiplication table of a group level");
  table->add_option("level", level, "Group level")->required();
  table->fallthrough();

  std::optional<int> rewrite_steps;
  auto* rewrite = app.add_subcommand("rewrite", "Run the create/conserve loop");
  rewrite->add_option("steps", rewrite_steps, "Number of steps (defaults to --steps)");
  rewrite->fallthrough();

  std::string signature;
  int pentad_level = 5;
  auto* pentads = app.add_subcommand("pentads", "Search for pairwise-anticommuting pentads");
  pentads->add_option("--signature", signature, "Signature filter, e.g. +1,-1,-1,-1,-1");
  pentads->add_option("--level", pentad_level, "Group level to search");
  pentads->fallthrough();

  std::vector<std::string> values;
  std::string signs = "+,+";
  auto* nilpotent = app.add_subcommand("nilpotent", "Build and check a nilpotent operator");
  nilpotent->add_option("values", values, "E p1 p2 p3 m (rationals)")->required()->expected(5);
  nilpotent->add_option("--signs", signs, "Energy and momentum signs, e.g. +,-");
  nilpotent->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  verify->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

  std::ostringstream buffer;
  int code = kExitPass;
  try {
    if (*generate) code = cmd_generate(level, cfg, buffer);
    else if (*table) code = cmd_table(level, cfg, buffer);
    else if (*rewrite) code = cmd_rewrite(rewrite_steps.value_or(cfg.max_steps), cfg, buffer);
    else if (*pentads) {
      std::optional<SignatureFilter> filter;
      if (!signature.empty()) filter = SignatureFilter::parse(signature);
      code = cmd_pentads(pentad_level, filter, cfg, buffer);
    } else if (*nilpotent) code = cmd_nilpotent(values, signs, cfg, buffer);
    else if (*verify) code = cmd_verify(cfg, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output_path << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace ualpha::cli
