#include "schubert/cli.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/document.hpp"
#include "schubert/errors.hpp"
#include "schubert/gorenstein.hpp"

namespace schubert::cli {

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string token = csv.substr(pos, comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: \"" + csv + "\"");
    }
    if (used != token.size()) {
      throw std::invalid_argument("not an integer list: \"" + csv + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

struct InstanceArgs {
  int n = 0;
  std::string gamma_csv;
  std::string schubert_csv;
  unsigned long long guard = kDefaultSizeGuard;
  std::string format = "text";
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--n", args.n, "ambient column count")->required();
  auto* gamma =
      cmd->add_option("--gamma", args.gamma_csv,
                      "bottom minor b_1,...,b_m (comma separated)");
  auto* schubert = cmd->add_option(
      "--schubert", args.schubert_csv,
      "Schubert conditions a_1,...,a_m; converted via b_i = n+1-a_{m+1-i}");
  gamma->excludes(schubert);
  schubert->excludes(gamma);
  cmd->add_option("--guard", args.guard,
                  "largest lattice the enumeration may materialize");
}

void add_format_option(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
}

GammaContext make_context(const InstanceArgs& args) {
  const bool has_gamma = !args.gamma_csv.empty();
  const bool has_schubert = !args.schubert_csv.empty();
  if (has_gamma == has_schubert) {
    throw std::invalid_argument(
        "exactly one of --gamma or --schubert is required");
  }
  if (has_gamma) {
    return GammaContext(
        args.n, Minor::validated(parse_int_list(args.gamma_csv), args.n));
  }
  const Minor conditions =
      Minor::validated(parse_int_list(args.schubert_csv), args.n);
  return GammaContext(args.n,
                      gamma_from_schubert_conditions(conditions, args.n));
}

std::string sweep_text_line(const GammaContext& ctx,
                            const GorensteinReport& report) {
  std::string line = "gamma=" + ctx.gamma().to_string();
  line += " l_set=[";
  for (size_t i = 0; i < report.l_set.indices.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(report.l_set.indices[i]);
  }
  line += "] values=[";
  for (size_t i = 0; i < report.criterion_values.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(report.criterion_values[i]);
  }
  line += std::string("] gorenstein=") +
          (report.gorenstein ? "true" : "false");
  if (report.oracle) line += " oracle=agree";
  return line + "\n";
}

/// Advances a combination [c_1 < ... < c_m] of {1..n} to its lexicographic
/// successor; false once exhausted.
bool next_combination(std::vector<int>& comb, int n) {
  const int m = static_cast<int>(comb.size());
  int k = m - 1;
  while (k >= 0 && comb[static_cast<size_t>(k)] == n - (m - 1 - k)) --k;
  if (k < 0) return false;
  comb[static_cast<size_t>(k)] += 1;
  for (int j = k + 1; j < m; ++j) {
    comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j) - 1] + 1;
  }
  return true;
}

int cmd_gorenstein(const InstanceArgs& args, bool oracle, std::ostream& out) {
  const GammaContext ctx = make_context(args);
  const GorensteinReport report = gorenstein_report(ctx, oracle, args.guard);
  if (args.format == "machine") {
    out << doc::emit_machine(doc::gorenstein_document(ctx, report));
  } else {
    out << doc::gorenstein_text(ctx, report);
  }
  return 0;
}

int cmd_irreducibles(const InstanceArgs& args, bool oracle,
                     std::ostream& out) {
  const GammaContext ctx = make_context(args);
  const auto entries = oracle
                           ? doc::irreducibles_oracle(ctx, args.guard)
                           : doc::irreducibles_closed_form(ctx, args.guard);
  if (args.format == "machine") {
    out << doc::emit_machine(doc::irreducibles_document(ctx, entries));
  } else {
    out << doc::irreducibles_text(ctx, entries);
  }
  return 0;
}

int cmd_hasse(const InstanceArgs& args, const std::string& target,
              const std::string& out_path, std::ostream& out) {
  const GammaContext ctx = make_context(args);
  const std::string dot = (target == "lattice")
                              ? doc::hasse_dot_lattice(ctx, args.guard)
                              : doc::hasse_dot_p(ctx, args.guard);
  if (out_path.empty()) {
    out << dot;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open output file " + out_path);
    }
    file << dot;
  }
  return 0;
}

int cmd_sweep(int n, std::optional<int> m_filter, bool oracle,
              unsigned long long guard, const std::string& format,
              std::ostream& out) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m_filter && (*m_filter < 1 || *m_filter > n)) {
    throw std::invalid_argument("m must satisfy 1 <= m <= n");
  }
  long long instances = 0;
  long long gorenstein_count = 0;
  long long oracle_checked = 0;

  const int m_lo = m_filter ? *m_filter : 1;
  const int m_hi = m_filter ? *m_filter : n;
  for (int m = m_lo; m <= m_hi; ++m) {
    std::vector<int> comb(static_cast<size_t>(m));
    std::iota(comb.begin(), comb.end(), 1);
    do {
      const GammaContext ctx(n, Minor::validated(comb, n));
      GorensteinReport report;
      try {
        report = gorenstein_report(ctx, oracle, guard);
      } catch (const GuardExceeded& e) {
        throw GuardExceeded(e.count(), e.guard(),
                            "gamma " + ctx.gamma().to_string() + ": ");
      }
      if (format == "machine") {
        out << doc::emit_machine_line(doc::gorenstein_document(ctx, report));
      } else {
        out << sweep_text_line(ctx, report);
      }
      ++instances;
      if (report.gorenstein) ++gorenstein_count;
      if (report.oracle) ++oracle_checked;
    } while (next_combination(comb, n));
  }

  if (format == "machine") {
    nlohmann::ordered_json summary;
    summary["format"] = doc::kFormatTag;
    summary["kind"] = "sweep_summary";
    summary["n"] = n;
    if (m_filter) summary["m"] = *m_filter;
    summary["instances"] = instances;
    summary["gorenstein_count"] = gorenstein_count;
    summary["non_gorenstein_count"] = instances - gorenstein_count;
    summary["oracle_checked_count"] = oracle_checked;
    out << doc::emit_machine_line(summary);
  } else {
    out << "sweep n=" << n;
    if (m_filter) out << " m=" << *m_filter;
    out << ": instances=" << instances << " gorenstein=" << gorenstein_count
        << " non_gorenstein=" << (instances - gorenstein_count)
        << " oracle_checked=" << oracle_checked << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Join-irreducible structure and Gorenstein verdicts for the lattice "
      "of maximal-minor indices over a bottom minor gamma"};
  app.require_subcommand(1);

  InstanceArgs gor_args;
  bool gor_oracle = false;
  auto* gor = app.add_subcommand(
      "gorenstein", "decide Gorensteinness from the l-set criterion");
  add_instance_options(gor, gor_args);
  add_format_option(gor, gor_args);
  gor->add_flag("--oracle", gor_oracle,
                "cross-check against brute-force purity");

  InstanceArgs irr_args;
  bool irr_oracle = false;
  bool irr_closed = false;
  auto* irr = app.add_subcommand(
      "irreducibles", "list the join-irreducibles with their coordinates");
  add_instance_options(irr, irr_args);
  add_format_option(irr, irr_args);
  auto* irr_oracle_flag = irr->add_flag(
      "--oracle", irr_oracle, "derive the list by brute-force enumeration");
  auto* irr_closed_flag = irr->add_flag(
      "--closed-form", irr_closed,
      "derive the list from the coordinate picture (default)");
  irr_oracle_flag->excludes(irr_closed_flag);
  irr_closed_flag->excludes(irr_oracle_flag);

  InstanceArgs hasse_args;
  std::string hasse_target = "p";
  std::string hasse_out;
  auto* hasse =
      app.add_subcommand("hasse", "emit a Hasse diagram as a DOT graph");
  add_instance_options(hasse, hasse_args);
  hasse->add_option("--target", hasse_target,
                    "p (join-irreducibles) or lattice (all elements)")
      ->check(CLI::IsMember({"p", "lattice"}));
  hasse->add_option("--out", hasse_out, "write DOT here instead of stdout");

  int sweep_n = 0;
  int sweep_m = 0;
  bool sweep_oracle = false;
  unsigned long long sweep_guard = kDefaultSizeGuard;
  std::string sweep_format = "text";
  auto* sweep = app.add_subcommand(
      "sweep", "run the gorenstein analysis over every gamma");
  sweep->add_option("--n", sweep_n, "ambient column count")->required();
  auto* sweep_m_opt =
      sweep->add_option("--m", sweep_m, "restrict to gammas of this length");
  sweep->add_flag("--oracle", sweep_oracle,
                  "cross-check every instance against brute-force purity");
  sweep->add_option("--guard", sweep_guard,
                    "largest lattice the enumeration may materialize");
  sweep->add_option("--format", sweep_format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(gor)) {
      return cmd_gorenstein(gor_args, gor_oracle, out);
    }
    if (app.got_subcommand(irr)) {
      return cmd_irreducibles(irr_args, irr_oracle, out);
    }
    if (app.got_subcommand(hasse)) {
      return cmd_hasse(hasse_args, hasse_target, hasse_out, out);
    }
    if (app.got_subcommand(sweep)) {
      std::optional<int> m_filter;
      if (sweep_m_opt->count() > 0) m_filter = sweep_m;
      return cmd_sweep(sweep_n, m_filter, sweep_oracle, sweep_guard,
                       sweep_format, out);
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const OracleDisagreement& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: require_subcommand(1) guarantees a dispatch
}

}  // namespace schubert::cli
