#include "fibpair/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "fibpair/closed_forms.hpp"
#include "fibpair/error.hpp"
#include "fibpair/explorer.hpp"
#include "fibpair/fibonacci.hpp"
#include "fibpair/solver.hpp"
#include "fibpair/verify.hpp"

namespace fibpair::cli {

namespace {

enum class OutputFormat { text, csv, json };

const std::map<std::string, unsigned long> kFamilies = {
    {"linear", 1}, {"squared", 2}, {"cubed", 3}, {"quartic", 4}};

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

void write_aligned(std::ostream& out, const std::vector<ScanRecord>& records) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"n", "a", "b", "x", "y", "gamma"});
  for (const ScanRecord& r : records) {
    if (!satisfies_equation(r)) {
      throw ContradictionError("record n=" + std::to_string(r.n) +
                               " does not satisfy its defining equation");
    }
    rows.push_back({std::to_string(r.n), to_decimal(r.a), to_decimal(r.b), to_decimal(r.x),
                    to_decimal(r.y), std::to_string(to_int(r.gamma))});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out << "  ";
      }
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
}

void write_period(std::ostream& out, const PeriodReport& report) {
  out << "# period status=" << (report.status == PeriodStatus::found ? "found" : "none-found");
  if (report.status == PeriodStatus::found) {
    out << " offset=" << report.offset << " period=" << report.period << " pattern=";
    for (std::size_t k = 0; k < report.pattern.size(); ++k) {
      out << (k ? "," : "") << to_int(report.pattern[k]);
    }
  }
  out << " verified_upto=" << report.verified_upto << '\n';
}

void write_verify(std::ostream& out, const VerifyReport& report) {
  out << "suite=" << report.suite << " checked=" << report.checked
      << " passed=" << report.passed << '\n';
  if (report.counterexample) {
    out << "counterexample: " << *report.counterexample << '\n';
  }
}

std::string equation_name(PositiveEquation e) { return e == PositiveEquation::plus ? "plus" : "minus"; }

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and explorer for the Diophantine pair ax + by (+1) = (a-1)(b-1)/2",
               "fibpair"};
  app.require_subcommand(1);

  std::string arg_a, arg_b, arg_n;
  unsigned long power = 1;
  bool shifted = false;
  std::string family;
  unsigned long exp_i = 0, exp_j = 0;
  FibIndex n_from = 0, n_to = 0;
  OutputFormat format = OutputFormat::text;
  std::string suite;
  std::uint64_t max_value = 0;
  bool want_period = false, want_differences = false;

  auto* fib_cmd = app.add_subcommand("fib", "Print F_N (or F_N^K with --pow)");
  fib_cmd->add_option("N", arg_n, "Fibonacci index")->required();
  fib_cmd->add_option("--pow", power, "Exponent K >= 1")->check(CLI::PositiveNumber);

  auto* gamma_cmd = app.add_subcommand("gamma", "Print Gamma(A, B)");
  gamma_cmd->add_option("A", arg_a)->required();
  gamma_cmd->add_option("B", arg_b)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve the pair for coprime A, B");
  solve_cmd->add_option("A", arg_a)->required();
  solve_cmd->add_option("B", arg_b)->required();
  solve_cmd->add_flag("--shifted", shifted, "Targets raised by A + B, positive solutions");

  auto* positive_cmd =
      app.add_subcommand("positive", "Solve ax + by = (a+1)b/2 +- 1 in positive integers");
  positive_cmd->add_option("A", arg_a, "Odd A")->required();
  positive_cmd->add_option("B", arg_b, "B >= 2")->required();

  auto* closed_cmd = app.add_subcommand("closed-form", "Explicit solution for (F_N^i, F_{N+1}^i)");
  closed_cmd->add_option("--family", family, "linear|squared|cubed")
      ->required()
      ->check(CLI::IsMember({"linear", "squared", "cubed"}));
  closed_cmd->add_option("N", arg_n)->required();

  auto* table_cmd = app.add_subcommand("table", "Tabulate Gamma(F_n^i, F_{n+1}^j)");
  auto* family_opt = table_cmd->add_option("--family", family, "linear|squared|cubed|quartic")
                         ->check(CLI::IsMember({"linear", "squared", "cubed", "quartic"}));
  auto* i_opt = table_cmd->add_option("--i", exp_i, "Exponent on F_n")->check(CLI::PositiveNumber);
  auto* j_opt =
      table_cmd->add_option("--j", exp_j, "Exponent on F_{n+1}")->check(CLI::PositiveNumber);
  family_opt->excludes(i_opt)->excludes(j_opt);
  i_opt->needs(j_opt);
  j_opt->needs(i_opt);
  table_cmd->add_option("--from", n_from)->required();
  table_cmd->add_option("--to", n_to)->required();
  table_cmd->add_option("--format", format, "text|csv|json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* verify_cmd = app.add_subcommand("verify", "Sweep an identity suite up to --max");
  verify_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember(
          {"cassini", "parity", "triple", "sums", "thm11", "shifted", "thm12", "thm15", "thm42"}));
  verify_cmd->add_option("--max", max_value)->required();

  auto* scan_cmd = app.add_subcommand("scan", "Stream Gamma(F_n^I, F_{n+1}^J) as CSV or JSON");
  scan_cmd->add_option("--i", exp_i)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--j", exp_j)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--from", n_from)->required();
  scan_cmd->add_option("--to", n_to)->required();
  scan_cmd->add_flag("--detect-period", want_period, "Report eventual periodicity of gamma");
  scan_cmd->add_flag("--differences", want_differences, "Report y_{n+1} - x_n");
  scan_cmd->add_option("--format", format, "csv|json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                              {"json", OutputFormat::json}},
          CLI::ignore_case));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitDomainError;
  }

  try {
    if (fib_cmd->parsed()) {
      out << fib_pow(parse_index(arg_n), power) << '\n';
    } else if (gamma_cmd->parsed()) {
      out << to_int(gamma(CoprimePair(parse_decimal(arg_a), parse_decimal(arg_b)))) << '\n';
    } else if (solve_cmd->parsed()) {
      CoprimePair pair(parse_decimal(arg_a), parse_decimal(arg_b));
      PairSolution s = shifted ? solve_shifted_pair(pair) : solve_pair(pair);
      out << "gamma=" << to_int(s.gamma) << " x=" << s.x << " y=" << s.y << '\n';
    } else if (positive_cmd->parsed()) {
      PositivePairSolution s = solve_positive_pair(parse_decimal(arg_a), parse_decimal(arg_b));
      out << "equation=" << equation_name(s.equation) << " x=" << s.x << " y=" << s.y << '\n';
    } else if (closed_cmd->parsed()) {
      const auto fam = static_cast<Family>(kFamilies.at(family));
      ClosedFormResult r = closed_solution(fam, parse_index(arg_n));
      out << "gamma=" << to_int(r.gamma) << " x=" << r.x << " y=" << r.y << '\n';
    } else if (table_cmd->parsed()) {
      if (family.empty() && exp_i == 0) {
        throw DomainError("table needs --family or --i/--j");
      }
      if (!family.empty()) {
        exp_i = exp_j = kFamilies.at(family);
      }
      if (format == OutputFormat::text) {
        write_aligned(out, scan(exp_i, exp_j, n_from, n_to));
      } else {
        TableWriter writer(out, format == OutputFormat::csv ? TableFormat::csv : TableFormat::json);
        scan_each(exp_i, exp_j, n_from, n_to, [&](const ScanRecord& r) { writer.write(r); });
        writer.finish();
      }
    } else if (verify_cmd->parsed()) {
      std::vector<VerifyReport> reports;
      const FibIndex m = max_value;
      if (suite == "cassini") {
        reports.push_back(verify_cassini(m));
      } else if (suite == "parity") {
        reports.push_back(verify_parity(m));
      } else if (suite == "triple") {
        reports.push_back(verify_triple(m));
      } else if (suite == "sums") {
        reports.push_back(verify_sums(m));
      } else if (suite == "thm11") {
        reports.push_back(verify_dichotomy(m));
      } else if (suite == "shifted") {
        reports.push_back(verify_shifted(m));
      } else if (suite == "thm12") {
        reports.push_back(verify_squared_identities(m));
        reports.push_back(verify_squared_solver(m));
      } else if (suite == "thm15") {
        reports.push_back(verify_cubed_identities(m));
        reports.push_back(verify_cubed_solver(m));
      } else {
        reports.push_back(verify_positive_pair(m, m));
      }
      bool ok = true;
      for (const VerifyReport& r : reports) {
        write_verify(out, r);
        ok = ok && r.ok();
      }
      return ok ? kExitOk : kExitContradiction;
    } else if (scan_cmd->parsed()) {
      TableWriter writer(out, format == OutputFormat::json ? TableFormat::json : TableFormat::csv);
      std::vector<Gamma> gammas;
      std::vector<Difference> differences;
      std::optional<ScanRecord> prev;
      scan_each(exp_i, exp_j, n_from, n_to, [&](const ScanRecord& r) {
        writer.write(r);
        gammas.push_back(r.gamma);
        if (want_differences) {
          if (prev) {
            const ScanRecord window[] = {*prev, r};
            auto d = difference_probe(window);
            differences.insert(differences.end(), d.begin(), d.end());
          }
          prev = r;
        }
      });
      writer.finish();
      if (want_period) {
        write_period(out, detect_period(gammas, n_from));
      }
      for (const Difference& d : differences) {
        out << "# difference n=" << d.n << " value=" << d.value << '\n';
      }
    }
  } catch (const ContradictionError& e) {
    err << "internal contradiction: " << e.what() << '\n';
    return kExitContradiction;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace fibpair::cli
