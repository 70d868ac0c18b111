#pragma once

// Reproduction of the two historical seven-place tables for s = 90°:
// the log-secant sum for l(pi/2) and the tangent series for 2/pi.
//
// Every row is computed exactly and rounded to seven places before it is
// added, as was done by hand; subtotals are sums of the rounded rows.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geoprog/angle.hpp"
#include "geoprog/precision.hpp"
#include "geoprog/series.hpp"
#include "geoprog/trig.hpp"

namespace geoprog {

enum class RowKind { term, tail, subtotal, constant, result };

inline std::string_view row_kind_name(RowKind k) {
  switch (k) {
    case RowKind::term: return "term";
    case RowKind::tail: return "tail";
    case RowKind::subtotal: return "subtotal";
    case RowKind::constant: return "constant";
    case RowKind::result: return "result";
  }
  return "";
}

struct TableRow {
  /// Label with the function prefix ("l Sec ", "1/4 Tag ") and, for term
  /// rows, the sexagesimal angle.
  std::string prefix;
  std::optional<Angle> argument;
  std::string name;  // rows without an angle ("other terms", "l 2")
  std::string value_7dp;
  RowKind kind = RowKind::term;

  std::string label(AngleStyle style = AngleStyle::euler) const {
    return argument ? prefix + format(*argument, style) : name;
  }
};

struct EulerTable {
  std::string name;
  std::vector<TableRow> rows;
  /// pi to seven places as the table yields it.
  std::string final_pi;
  /// The closing line as printed ("3.1415928", "2/0.6366198 = 1/0.3183099").
  std::string final_display;
  std::vector<std::string> diagnostics;
};

/// Decimal point to comma, for the historical display.
inline std::string to_comma(std::string s) {
  for (char& c : s) {
    if (c == '.') c = ',';
  }
  return s;
}

inline std::string to_point(std::string s) {
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

namespace detail {

inline TableRow term_row(const SeriesTerm& t, std::string prefix) {
  TableRow row;
  row.prefix = std::move(prefix);
  row.argument = t.argument;
  row.value_7dp = t.value.round_to_decimals(7).to_fixed(7);
  row.kind = RowKind::term;
  return row;
}

inline TableRow named_row(std::string name, const HPReal& v, RowKind kind) {
  TableRow row;
  row.name = std::move(name);
  row.value_7dp = v.to_fixed(7);
  row.kind = kind;
  return row;
}

inline HPReal sum_of_rows(const std::vector<TableRow>& rows, int digits) {
  HPReal sum(0, digits);
  for (const TableRow& r : rows) sum += HPReal::parse(r.value_7dp, digits);
  return sum;
}

}  // namespace detail

/// l(pi/2) = l sec 45° + l sec 22° 30′ + ... through eight rows, the
/// remaining terms as a rigorous tail rounded to seven places, then l pi
/// and pi = 10^(l pi).
inline EulerTable log_secant_table(const PrecisionConfig& cfg) {
  const int p = cfg.working_digits;
  const Angle right = Angle::degrees(90);
  const SeriesResult series =
      log_secant_sum(right, TruncationSpec::fixed(8), cfg,
                     LogRounding::row_rounded_7dp, TailKind::rigorous);
  EulerTable table;
  table.name = "log-secant";
  for (const SeriesTerm& t : series.terms) {
    if (t.k == 0) continue;  // l sin 90° = 0
    table.rows.push_back(detail::term_row(t, "l Sec "));
  }
  table.rows.push_back(detail::named_row(
      "other terms", series.tail->estimate.round_to_decimals(7), RowKind::tail));
  const HPReal half_pi_log = detail::sum_of_rows(table.rows, p);
  table.rows.push_back(detail::named_row("l π/2", half_pi_log, RowKind::subtotal));
  const HPReal log2 = hp_log10(HPReal(2, p), cfg).round_to_decimals(7);
  table.rows.push_back(detail::named_row("l 2", log2, RowKind::constant));
  const HPReal log_pi = half_pi_log + log2;
  table.rows.push_back(detail::named_row("l π", log_pi, RowKind::result));

  // The antilogarithm is cut, not rounded, to seven places: 10^0.4971499 is
  // 3.14159285..., printed as 3,1415928.
  const HPReal antilog = hp_pow10(log_pi, cfg);
  table.final_pi = antilog.truncate_to_decimals(7).to_fixed(7);
  table.final_display = table.final_pi;

  const HPReal reference = hp_pi(cfg);
  const std::string reference7 = reference.round_to_decimals(7).to_fixed(7);
  if (reference7 != table.final_pi) {
    table.diagnostics.push_back(
        "pi rounds to " + reference7 + "; the table gives " + table.final_pi +
        " because its seven-place rows accumulate rounding error (10^" +
        log_pi.to_fixed(7) + " = " + antilog.to_fixed(9) + "...)");
  }
  const HPReal exact_log =
      hp_log10(reference / 2, cfg).round_to_decimals(10);
  table.diagnostics.push_back("l π/2 unrounded: " + exact_log.to_fixed(10) +
                              ", table: " + half_pi_log.to_fixed(7));
  return table;
}

/// 2/pi = 1/2 tan 45° + 1/4 tan 22° 30′ + ... through six rows, the
/// remaining terms as a rigorous tail, and pi = 2/(2/pi).
inline EulerTable tangent_table(const PrecisionConfig& cfg) {
  const int p = cfg.working_digits;
  const SeriesResult series =
      tangent_series(Angle::degrees(90), RatioSpec::for_ratio(2),
                     TruncationSpec::fixed(6), cfg, TailKind::rigorous);
  EulerTable table;
  table.name = "tangent";
  for (const SeriesTerm& t : series.terms) {
    if (t.k == 0) continue;  // cot 90° = 0
    table.rows.push_back(
        detail::term_row(t, detail::reciprocal_label(2, t.k) + " Tag "));
  }
  table.rows.push_back(detail::named_row(
      "for the remaining", series.tail->estimate.round_to_decimals(7), RowKind::tail));
  const HPReal two_over_pi = detail::sum_of_rows(table.rows, p);
  table.rows.push_back(detail::named_row("2/π", two_over_pi, RowKind::subtotal));

  const HPReal two(2, p);
  table.final_pi = (two / two_over_pi).round_to_decimals(7).to_fixed(7);
  table.final_display =
      "2/" + two_over_pi.to_fixed(7) + " = 1/" + (two_over_pi / 2).to_string();

  const HPReal reference = hp_pi(cfg);
  const std::string reference7 = reference.round_to_decimals(7).to_fixed(7);
  if (reference7 != table.final_pi) {
    table.diagnostics.push_back("pi rounds to " + reference7 + "; 2/" +
                                two_over_pi.to_fixed(7) + " = " +
                                (two / two_over_pi).to_fixed(9) + "...");
  }
  return table;
}

/// The table in fixture form: `<label>;<value>` per line, closing with the
/// pi line.  Euler style uses decimal commas.
inline std::string fixture_text(const EulerTable& table, bool euler_style = true,
                                AngleStyle labels = AngleStyle::euler) {
  const auto num = [&](const std::string& s) { return euler_style ? to_comma(s) : s; };
  std::ostringstream out;
  for (const TableRow& r : table.rows) {
    out << r.label(labels) << ';' << num(r.value_7dp) << '\n';
  }
  out << "π;" << num(table.final_display) << '\n';
  return out.str();
}

struct GoldenDiff {
  /// 1-based line number.
  int line = 0;
  std::string expected;
  std::string actual;
};

/// First line at which `table` departs from the golden fixture text, after
/// mapping decimal commas to points on both sides.
inline std::optional<GoldenDiff> compare_to_golden(const EulerTable& table,
                                                   std::string_view golden) {
  const auto split = [](std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(to_point(line));
    }
    return lines;
  };
  const auto expected = split(golden);
  const auto actual = split(fixture_text(table, false));
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string e = i < expected.size() ? expected[i] : "<missing>";
    const std::string a = i < actual.size() ? actual[i] : "<missing>";
    if (e != a) return GoldenDiff{static_cast<int>(i + 1), e, a};
  }
  return std::nullopt;
}

}  // namespace geoprog
