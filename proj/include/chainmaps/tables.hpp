#ifndef CHAINMAPS_TABLES_HPP
#define CHAINMAPS_TABLES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chainmaps/counting.hpp"

namespace chainmaps {

enum class TableFormat { csv, tsv };

inline std::optional<TableFormat> parse_table_format(std::string_view s) noexcept {
  if (s == "csv") return TableFormat::csv;
  if (s == "tsv") return TableFormat::tsv;
  return std::nullopt;
}

/// Rows n = 1..N of F(n) or F(n; s) over the running statistic s.
struct TriangleTable {
  std::string name;
  int rows_n = 0;
  TableFormat format = TableFormat::csv;
  std::vector<std::vector<BigCount>> rows;

  /// One line per row, no header, '\n' line endings.
  std::string render() const {
    const char sep = format == TableFormat::csv ? ',' : '\t';
    std::string out;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += sep;
        out += to_decimal(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  std::string meta() const {
    return "function=" + name + " N=" + std::to_string(rows_n) +
           " format=" + (format == TableFormat::csv ? "csv" : "tsv") + "\n";
  }
};

/// `stat` picks the running statistic ('p', 'm' or 'k') when the function
/// accepts more than one single-statistic key. Throws std::invalid_argument
/// for unknown functions, functions of two or more statistics, or N < 1.
inline TriangleTable triangle(std::string_view function, int N, TableFormat format,
                              std::optional<char> stat = std::nullopt) {
  const Formula* f = find_formula(function);
  if (!f) throw std::invalid_argument("unknown function '" + std::string(function) + "'");
  if (N < 1) throw std::invalid_argument("table needs N >= 1");

  std::optional<KeySelection> chosen;
  if (stat) {
    const KeySelection want{*stat == 'p', *stat == 'm', *stat == 'k'};
    if (want.arity() != 1 || !f->accepts(want)) {
      throw std::invalid_argument(std::string(function) + " has no single-statistic form in '" +
                                  std::string(1, *stat) + "'");
    }
    chosen = want;
  } else {
    std::vector<KeySelection> usable;
    for (const auto& a : f->arities) {
      if (a.arity() <= 1) usable.push_back(a);
    }
    if (usable.size() == 1) chosen = usable.front();
    if (usable.size() > 1) {
      throw std::invalid_argument(std::string(function) +
                                  " takes several statistics; pick one with --stat");
    }
  }
  if (!chosen) {
    throw std::invalid_argument(std::string(function) +
                                " is not a function of n and at most one statistic");
  }

  TriangleTable t{std::string(function), N, format, {}};
  for (int n = 1; n <= N; ++n) {
    std::vector<BigCount> row;
    CountKey q{n, std::nullopt, std::nullopt, std::nullopt};
    if (chosen->arity() == 0) {
      row.push_back(evaluate(*f, q));
    } else {
      const int lo = chosen->fix ? f->min_fix : 1;
      for (int s = lo; s <= n; ++s) {
        if (chosen->height) q.p = s;
        if (chosen->fix) q.m = s;
        if (chosen->right_waist) q.k = s;
        row.push_back(evaluate(*f, q));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline constexpr std::array<std::string_view, 7> kOeisSequences = {
    "oct_order", "orct_order", "odct_order", "a_seq", "oct_f_m1", "orct_f_m0", "orct_f_m1"};

inline BigCount oeis_term(std::string_view sequence, int n) {
  if (sequence == "oct_order") return oct_order(n);
  if (sequence == "orct_order") return orct_order(n);
  if (sequence == "odct_order") return odct_order(n);
  if (sequence == "a_seq") return a_seq(n);
  if (sequence == "oct_f_m1") return oct_f_m(n, 1);
  if (sequence == "orct_f_m0") return orct_f_m(n, 0);
  if (sequence == "orct_f_m1") return orct_f_m(n, 1);
  throw std::invalid_argument("unknown sequence '" + std::string(sequence) + "'");
}

/// OEIS b-file body: `index value` lines for index 1..N.
inline std::string export_oeis(std::string_view sequence, int N) {
  if (N < 1) throw std::invalid_argument("b-file needs N >= 1");
  std::string out;
  if (sequence == "a_seq") {
    const auto a = a_sequence(N);
    for (int n = 1; n <= N; ++n) out += std::to_string(n) + " " + to_decimal(a[n]) + "\n";
    return out;
  }
  for (int n = 1; n <= N; ++n) {
    out += std::to_string(n) + " " + to_decimal(oeis_term(sequence, n)) + "\n";
  }
  return out;
}

}  // namespace chainmaps

#endif  // CHAINMAPS_TABLES_HPP
