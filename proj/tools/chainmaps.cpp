// chainmaps: generate, classify, count and verify full contractions of a
// finite chain.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainmaps/chainmaps.hpp"

namespace {

using namespace chainmaps;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Family family_arg(const std::string& text) {
  auto f = parse_family(text);
  if (!f) throw UsageError("unknown family '" + text + "'");
  return *f;
}

Mode mode_arg(const std::string& text) {
  if (text == "brute") return Mode::brute;
  if (text == "direct") return Mode::direct;
  throw UsageError("mode must be 'brute' or 'direct', got '" + text + "'");
}

std::vector<Family> families_arg(const std::string& text) {
  if (text == "all") return {kCountedFamilies.begin(), kCountedFamilies.end()};
  std::vector<Family> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(family_arg(item));
  if (out.empty()) throw UsageError("no families given");
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
}

int run_gen(int n, const std::string& family_text, const std::string& mode_text,
            const std::string& format, bool override_budget) {
  const Family family = family_arg(family_text);
  const Mode mode = mode_arg(mode_text);
  std::uint64_t total = 0;
  std::string line;
  for_each_member(
      n, family, mode,
      [&](const Transformation& a) {
        if (format == "csv") {
          line.clear();
          for (int y : a.images()) {
            if (!line.empty()) line += ',';
            line += std::to_string(y);
          }
          std::cout << line << '\n';
        } else {
          std::cout << a << '\n';
        }
        ++total;
      },
      override_budget);
  std::cout << "# total: " << total << '\n';
  return kExitOk;
}

std::string join_points(const std::vector<int>& points) {
  std::string out;
  for (int x : points) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

int run_stats(const std::vector<std::string>& words) {
  std::string line;
  if (words.empty() || (words.size() == 1 && words[0] == "-")) {
    std::getline(std::cin, line);
  } else {
    for (const auto& w : words) {
      if (!line.empty()) line += ' ';
      line += w;
    }
  }
  const Transformation a = parse_transformation(line);
  const StatProfile s = stat_profile(a);
  std::cout << "transformation: " << a << '\n'
            << "p=" << s.height << '\n'
            << "m=" << s.fix << '\n'
            << "k=" << s.right_waist << '\n'
            << "w-=" << s.left_waist << '\n'
            << "fix_set=" << join_points(s.fix_set) << '\n'
            << "image_set=" << join_points(s.image_set) << '\n';
  for (Family f : kAllFamilies) {
    std::cout << name(f) << '=' << (is_member(f, a) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int run_count(const std::string& function, const std::vector<std::string>& assignments) {
  const Formula* f = find_formula(function);
  if (!f) throw UsageError("unknown function '" + function + "'");
  CountKey key{0, std::nullopt, std::nullopt, std::nullopt};
  bool have_n = false;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value, got '" + a + "'");
    const std::string lhs = a.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(a.substr(eq + 1), &used);
      if (used != a.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("'" + a + "' does not hold an integer");
    }
    if (lhs == "n") {
      key.n = value;
      have_n = true;
    } else if (lhs == "p") {
      key.p = value;
    } else if (lhs == "m") {
      key.m = value;
    } else if (lhs == "k") {
      key.k = value;
    } else {
      throw UsageError("unknown statistic '" + lhs + "'");
    }
  }
  if (!have_n) throw UsageError("count needs n=<value>");
  std::cout << to_decimal(evaluate(*f, key)) << '\n';
  return kExitOk;
}

int run_verify(int n_lo, int n_hi, const std::string& families_text, const std::string& mode_text,
               bool override_budget, const std::string& report_path, int recurrence_max) {
  const auto families = families_arg(families_text);
  const Mode mode = mode_arg(mode_text);
  VerificationReport report = cross_validate(n_lo, n_hi, families, mode, override_budget);

  const int brute_hi = override_budget ? n_hi : std::min(n_hi, kBruteForceCap);
  if (n_lo <= brute_hi) report.append(invariant_suite(n_lo, brute_hi, override_budget));
  RecurrenceBounds bounds;
  bounds.b_n_max = recurrence_max;
  bounds.oracle_n_max = brute_hi;
  report.append(recurrence_suite(bounds, override_budget));

  write_file(report_path, to_json(report).dump(2) + "\n");
  for (const auto& [family, s] : report.summary()) {
    std::cout << family << ": " << s.passed << "/" << s.runs << " runs passed\n";
  }
  for (const auto& r : report.runs) {
    if (!r.pass) {
      std::cout << "FAIL " << r.suite << " " << r.check << " n=" << r.n << " at " << r.at
                << ": formula " << to_decimal(r.formula_value) << ", enumerated "
                << to_decimal(r.enumerated_value) << " (" << r.mismatches << " mismatches)\n";
    }
  }
  std::cout << "report: " << report_path << "\n";
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_table(const std::string& function, int N, const std::string& format_text,
              const std::string& stat, const std::string& output) {
  auto format = parse_table_format(format_text);
  if (!format) throw UsageError("format must be csv or tsv");
  std::optional<char> stat_char;
  if (!stat.empty()) {
    if (stat.size() != 1) throw UsageError("--stat takes one of p, m, k");
    stat_char = stat[0];
  }
  const TriangleTable t = triangle(function, N, *format, stat_char);
  if (output.empty()) {
    std::cout << t.render();
  } else {
    write_file(output, t.render());
    write_file(output + ".meta", t.meta());
  }
  return kExitOk;
}

int run_export(const std::string& sequence, int N, const std::string& output) {
  if (std::find(kOeisSequences.begin(), kOeisSequences.end(), sequence) == kOeisSequences.end()) {
    throw UsageError("unknown sequence '" + sequence + "'");
  }
  const std::string body = export_oeis(sequence, N);
  if (output.empty()) {
    std::cout << body;
  } else {
    write_file(output, body);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-preserving and order-reversing full contractions of a finite chain"};
  app.require_subcommand(1);

  int n = 0, n_lo = 0, n_hi = 0, N = 0, recurrence_max = 30;
  std::string family, mode = "direct", gen_format = "text", function, families, sequence;
  std::string table_format = "csv", stat, output, report_path = "verification_report.json";
  std::vector<std::string> words;
  bool override_budget = false;

  auto* gen = app.add_subcommand("gen", "List every member of a family, one per line");
  gen->add_option("n", n, "Chain size")->required();
  gen->add_option("family", family, "Family label (T, O, OR, CT, D, OCT, ORCT, ORCT_STAR, ...)")
      ->required();
  gen->add_option("--mode", mode, "direct or brute")->capture_default_str();
  gen->add_option("--format", gen_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  gen->add_flag("--override-budget", override_budget, "Allow brute force above n = 8");

  auto* stats = app.add_subcommand("stats", "Statistics and family membership of one map");
  stats->add_option("line", words, "Transformation as 'n: i1 ... in' ('-' reads stdin)");

  auto* count = app.add_subcommand("count", "Evaluate a closed-form count");
  count->add_option("function", function, "Function name, e.g. oct_f_pmk")->required();
  count->add_option("keys", words, "n=<v> and any of p=<v> m=<v> k=<v>");

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against enumeration");
  verify->add_option("n_lo", n_lo)->required();
  verify->add_option("n_hi", n_hi)->required();
  verify->add_option("families", families, "'all' or a comma-separated list")->required();
  verify->add_option("mode", mode, "brute or direct")->required();
  verify->add_flag("--override-budget", override_budget, "Allow brute force above n = 8");
  verify->add_option("--report", report_path, "Report output path")->capture_default_str();
  verify->add_option("--recurrence-max", recurrence_max, "Largest n for b(n,p) recurrences")
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Emit the triangle of a counting function");
  table->add_option("function", function)->required();
  table->add_option("N", N, "Last row")->required();
  table->add_option("format", table_format, "csv or tsv")->capture_default_str();
  table->add_option("--stat", stat, "Running statistic (p, m or k) for multi-key functions");
  table->add_option("--output", output, "Write FILE and FILE.meta instead of stdout");

  auto* oeis = app.add_subcommand("export-oeis", "Emit an OEIS b-file");
  oeis->add_option("sequence", sequence)->required();
  oeis->add_option("N", N, "Last index")->required();
  oeis->add_option("--output", output, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return run_gen(n, family, mode, gen_format, override_budget);
    if (*stats) return run_stats(words);
    if (*count) return run_count(function, words);
    if (*verify) {
      return run_verify(n_lo, n_hi, families, mode, override_budget, report_path, recurrence_max);
    }
    if (*table) return run_table(function, N, table_format, stat, output);
    if (*oeis) return run_export(sequence, N, output);
  } catch (const BudgetExceeded& e) {
    std::cerr << "chainmaps: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "chainmaps: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "chainmaps: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
