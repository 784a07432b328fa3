#pragma once

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.  Data goes to `out`, diagnostics to `err`.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfrieze/continuant.hpp"
#include "qfrieze/frieze.hpp"
#include "qfrieze/seed.hpp"
#include "qfrieze/serialize.hpp"
#include "qfrieze/suite.hpp"

namespace qfrieze::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

namespace detail {

inline void require_even_flag(int n) {
  if (n < 2) throw UsageError{"--n: n must be at least 2"};
  if (n % 2 != 0) throw UsageError{"--n: n must be even"};
}

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum frieze patterns and quantum cluster variables of linear type A"};
  app.name("qfrieze");
  app.require_subcommand(1);

  int n = 0;
  std::string frieze_format, mutate_format, continuant_format, verify_format;

  auto* frieze = app.add_subcommand("frieze", "Quantum frieze of variables on a column window");
  std::optional<int> j_min, j_max;
  frieze->add_option("--n", n, "Even rank")->required();
  frieze->add_option("--jmin", j_min, "First column (default -(n+3))");
  frieze->add_option("--jmax", j_max, "Last column (default 2(n+3))");
  frieze->add_option("--format", frieze_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate the initial seed along a sequence");
  std::vector<int> sequence;
  mutate_cmd->add_option("--n", n, "Even rank")->required();
  mutate_cmd->add_option("--seq", sequence, "Comma-separated directions in 1..n")->delimiter(',');
  mutate_cmd->add_option("--format", mutate_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* cont = app.add_subcommand("continuant", "Quantum signed continuants P_{m,i}");
  std::optional<int> degree, start;
  cont->add_option("--n", n, "Even rank")->required();
  cont->add_option("--m", degree, "Degree m (omit with --i for the whole table)");
  cont->add_option("--i", start, "Start index i");
  cont->add_option("--format", continuant_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::vector<std::string> checks;
  verify->add_option("--n", n, "Even rank")->required();
  verify->add_option("--checks", checks, "Comma-separated check names, or 'all'")->delimiter(',');
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool json = (frieze->parsed() && frieze_format == "json") ||
                    (mutate_cmd->parsed() && mutate_format == "json") ||
                    (cont->parsed() && continuant_format == "json") ||
                    (verify->parsed() && verify_format == "json");
  try {
    detail::require_even_flag(n);

    if (frieze->parsed()) {
      const int lo = j_min.value_or(default_window(n).first);
      const int hi = j_max.value_or(default_window(n).second);
      if (lo > hi) throw UsageError{"--jmin: must not exceed --jmax"};
      const FriezeGrid grid = frieze_of_variables_window(n, lo, hi);
      if (json) {
        detail::emit_json(out, to_json(grid));
      } else {
        out << format_grid(grid);
      }
      return kExitOk;
    }

    if (mutate_cmd->parsed()) {
      for (int k : sequence)
        if (k < 1 || k > n) {
          throw UsageError{"--seq: direction " + std::to_string(k) + " outside 1.." + std::to_string(n)};
        }
      const QuantumSeed seed = mutate_sequence(initial_seed(n), sequence);
      if (json) {
        detail::emit_json(out, to_json(seed));
      } else {
        out << format_seed(seed);
      }
      return kExitOk;
    }

    if (cont->parsed()) {
      if (degree.has_value() != start.has_value()) throw UsageError{"--m and --i go together"};
      const ContinuantTable table(n);
      std::vector<std::pair<int, int>> wanted;
      if (degree) {
        if (!ContinuantTable::is_valid_index(n, *degree, *start)) {
          throw UsageError{"--m/--i: need m >= 0, i >= 1, i+m-1 <= n"};
        }
        wanted.emplace_back(*degree, *start);
      } else {
        for (int m = 0; m <= n; ++m)
          for (int i = 1; i + m - 1 <= n; ++i) wanted.emplace_back(m, i);
      }
      if (json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["n"] = n;
        Json list = Json::array();
        for (const auto& [m, i] : wanted) {
          Json e;
          e["m"] = m;
          e["i"] = i;
          e["terms"] = to_json(table.at(m, i));
          list.push_back(std::move(e));
        }
        j["continuants"] = std::move(list);
        detail::emit_json(out, j);
      } else {
        for (const auto& [m, i] : wanted) {
          out << "P(" << m << "," << i << ") = " << format_torus(table.at(m, i)) << "\n";
        }
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<std::string> names;
      for (const auto& c : checks) {
        if (c == "all") {
          names = default_check_names();
          for (const auto& d : diagnostic_check_names()) names.push_back(d);
          break;
        }
        if (!is_known_check(c)) throw UsageError{"--checks: unknown check '" + c + "'"};
        names.push_back(c);
      }
      const VerificationReport report = run_suite(n, names);
      if (json) {
        Json j = to_json(report);
        j["n"] = n;
        detail::emit_json(out, j);
      } else {
        out << format_report(report);
      }
      return report.all_passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qfrieze");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qfrieze::cli
