#pragma once

// Subcommands of the geoprog tool.  `run` parses a full argument vector and
// returns the process exit code; output goes to the given streams so the
// commands can be driven from tests.
//
// Exit codes: 0 ok, 2 golden/reference mismatch, 3 pole, 4 unreachable
// precision, 64 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geoprog/angle.hpp"
#include "geoprog/errors.hpp"
#include "geoprog/identities.hpp"
#include "geoprog/pi_series.hpp"
#include "geoprog/precision.hpp"
#include "geoprog/serialize.hpp"
#include "geoprog/series.hpp"
#include "geoprog/tables.hpp"
#include "geoprog_golden.hpp"

namespace geoprog::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 2,
  kPole = 3,
  kUnreachable = 4,
  kUsage = 64,
};

enum class Output { text, json, csv };

struct CommandConfig {
  int precision = 40;
  Output output = Output::text;
  bool euler_style = false;
  bool decimal_minutes = false;
  std::uint64_t seed = 1737;

  PrecisionConfig precision_config() const { return PrecisionConfig::digits(precision); }
  AngleStyle label_style() const {
    return decimal_minutes ? AngleStyle::decimal_minutes : AngleStyle::euler;
  }
  std::string num(const std::string& s) const { return euler_style ? to_comma(s) : s; }
};

/// A random rational angle p/q degrees with q in [1, 3600] and |p/q| <= 360.
inline Angle random_angle(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 3600);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(-360 * q, 360 * q);
  return Angle::degrees(num(rng), q);
}

namespace detail {

/// Series labels end with the argument in the euler angle style; re-renders that
/// suffix in another style.
inline std::string relabel(const SeriesTerm& t, AngleStyle style) {
  if (!t.argument || style == AngleStyle::euler) return t.label;
  const std::string old = format(*t.argument, AngleStyle::euler);
  if (t.label.size() < old.size() ||
      t.label.compare(t.label.size() - old.size(), old.size(), old) != 0) {
    return t.label;
  }
  return t.label.substr(0, t.label.size() - old.size()) + format(*t.argument, style);
}

inline std::string short_number(const HPReal& v, int digits = 6) {
  return v.with_precision(digits).to_string();
}

}  // namespace detail

inline int cmd_table(const std::string& which, const std::optional<std::string>& golden_path,
                     const CommandConfig& cc, std::ostream& out, std::ostream& err) {
  const auto cfg = cc.precision_config();
  EulerTable table;
  std::string golden;
  if (which == "log-secant") {
    table = log_secant_table(cfg);
    golden = std::string(golden::log_secant);
  } else if (which == "tangent") {
    table = tangent_table(cfg);
    golden = std::string(golden::tangent);
  } else {
    err << "unknown table '" << which << "' (expected log-secant or tangent)\n";
    return kUsage;
  }
  if (golden_path) {
    std::ifstream in(*golden_path);
    if (!in) {
      err << "cannot read golden file " << *golden_path << "\n";
      return kUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    golden = buf.str();
  }
  const auto diff = compare_to_golden(table, golden);
  const AngleStyle labels = cc.label_style();

  switch (cc.output) {
    case Output::json: {
      auto j = to_json(table, cc.euler_style, labels);
      j["golden_match"] = !diff.has_value();
      out << j.dump(2) << "\n";
      break;
    }
    case Output::csv:
      out << "label,value,kind\n";
      for (const TableRow& r : table.rows) {
        out << '"' << r.label(labels) << "\"," << r.value_7dp << ','
            << row_kind_name(r.kind) << "\n";
      }
      out << "\"π\"," << table.final_pi << ",result\n";
      break;
    case Output::text:
      for (const TableRow& r : table.rows) {
        out << r.label(labels) << " = " << cc.num(r.value_7dp) << "\n";
      }
      out << "π = " << cc.num(table.final_display) << "\n";
      break;
  }
  for (const std::string& d : table.diagnostics) err << "note: " << d << "\n";
  if (diff) {
    err << "golden mismatch at line " << diff->line << ": expected '" << diff->expected
        << "', got '" << diff->actual << "'\n";
    return kMismatch;
  }
  return kOk;
}

inline int cmd_verify(const std::string& name, int samples,
                      const std::optional<std::string>& angle_text,
                      const CommandConfig& cc, std::ostream& out, std::ostream& err) {
  const auto id = identity_from_name(name);
  if (!id) {
    err << "unknown identity '" << name << "'; known:";
    for (IdentityId i : kAllIdentities) err << ' ' << identity_name(i);
    err << "\n";
    return kUsage;
  }
  if (samples < 1) {
    err << "--samples must be positive\n";
    return kUsage;
  }
  const auto cfg = cc.precision_config();
  std::vector<IdentityReport> reports;
  int skipped = 0;
  if (angle_text) {
    reports.push_back(evaluate_identity(*id, parse_angle(*angle_text), cfg));
  } else {
    std::mt19937_64 rng(cc.seed);
    while (static_cast<int>(reports.size()) < samples) {
      const Angle phi = random_angle(rng);
      if (!in_domain(*id, phi)) {
        ++skipped;
        continue;
      }
      try {
        reports.push_back(evaluate_identity(*id, phi, cfg));
      } catch (const NearPoleError&) {
        ++skipped;
      }
    }
  }
  HPReal max_residual;
  HPReal max_tolerance;
  int failures = 0;
  for (const IdentityReport& r : reports) {
    max_residual = std::max(max_residual, abs(r.residual));
    max_tolerance = std::max(max_tolerance, r.tolerance);
    if (!r.passed) ++failures;
  }
  const std::string residual = detail::short_number(max_residual);
  switch (cc.output) {
    case Output::json: {
      nlohmann::ordered_json j{{"identity", name},
                               {"precision", cc.precision},
                               {"samples", reports.size()},
                               {"skipped", skipped},
                               {"max_residual", residual},
                               {"failures", failures},
                               {"passed", failures == 0}};
      if (angle_text) j["report"] = to_json(reports.front());
      out << j.dump(2) << "\n";
      break;
    }
    case Output::csv:
      out << "identity,samples,skipped,max_residual,failures\n"
          << name << ',' << reports.size() << ',' << skipped << ',' << residual << ','
          << failures << "\n";
      break;
    case Output::text:
      out << "identity " << name << " at P=" << cc.precision << ": " << reports.size()
          << " samples, " << skipped << " redrawn\n"
          << "max |residual| = " << cc.num(residual) << "\n"
          << (failures == 0 ? "all passed" : std::to_string(failures) + " failed")
          << "\n";
      break;
  }
  return failures == 0 ? kOk : kMismatch;
}

inline int cmd_series(int ratio, const std::string& arc_text, int depth, TailKind tail,
                      const CommandConfig& cc, std::ostream& out, std::ostream&) {
  const auto cfg = cc.precision_config();
  const Angle arc = parse_angle(arc_text);
  const SeriesResult r = tangent_series(arc, RatioSpec::for_ratio(ratio),
                                        TruncationSpec::fixed(depth), cfg, tail);
  const AngleStyle labels = cc.label_style();
  switch (cc.output) {
    case Output::json: {
      auto j = to_json(r);
      for (std::size_t i = 0; i < r.terms.size(); ++i) {
        j["terms"][i]["label"] = detail::relabel(r.terms[i], labels);
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Output::csv:
      out << "k,label,value\n";
      for (const SeriesTerm& t : r.terms) {
        out << t.k << ",\"" << detail::relabel(t, labels) << "\"," << t.value.to_string()
            << "\n";
      }
      out << "# value=" << r.value.to_string() << "\n";
      if (r.tail) {
        out << "# tail=" << r.tail->estimate.to_string() << " ("
            << tail_kind_name(r.tail->kind) << ")\n";
      }
      out << "# identity_residual=" << detail::short_number(*r.identity_residual) << "\n";
      break;
    case Output::text:
      out << "ratio " << ratio << ", arc " << format(arc, labels) << ", depth "
          << r.depth_used << "\n";
      for (const SeriesTerm& t : r.terms) {
        out << t.k << "  " << detail::relabel(t, labels) << " = "
            << cc.num(t.value.to_string()) << "\n";
      }
      out << "value = " << cc.num(r.value.to_string()) << "\n";
      if (r.tail) {
        out << "tail (" << tail_kind_name(r.tail->kind)
            << ") = " << cc.num(r.tail->estimate.to_string()) << "\n";
      } else {
        out << "tail: arc too large relative to depth for an estimate\n";
      }
      out << "finite identity residual = "
          << cc.num(detail::short_number(*r.identity_residual)) << "\n";
      break;
  }
  return kOk;
}

/// Least-squares slope of log10(error) against depth.
inline std::optional<double> fitted_slope(const std::vector<std::pair<int, double>>& pts) {
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += static_cast<double>(x) * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double den = n * sxx - sx * sx;
  if (den == 0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

inline int cmd_converge(const std::vector<int>& ratios, const std::string& arc_text,
                        int max_depth, const CommandConfig& cc, std::ostream& out,
                        std::ostream&) {
  const auto cfg = cc.precision_config();
  const auto cw = cfg.widened();
  const Angle arc = parse_angle(arc_text);
  if (arc.is_zero()) throw DomainError("the arc must be nonzero");
  const HPReal limit = HPReal(1, cw.working_digits) / hp_radians(arc, cw);
  const HPReal noise = HPReal::power_of_ten(5 - cc.precision, cw.working_digits);

  struct Row {
    int ratio;
    int depth;
    HPReal error;
  };
  std::vector<Row> rows;
  std::map<int, std::optional<double>> slopes;
  for (int ratio : ratios) {
    const SeriesResult r = tangent_series(arc, RatioSpec::for_ratio(ratio),
                                          TruncationSpec::fixed(max_depth), cfg);
    std::vector<std::pair<int, double>> pts;
    HPReal partial(0, cw.working_digits);
    const auto totals = r.depth_totals();
    for (int k = 0; k <= r.depth_used; ++k) {
      partial += totals[k];
      const HPReal e = abs(partial - limit).with_precision(cfg.working_digits);
      rows.push_back({ratio, k, e});
      if (k >= 1 && e > noise) pts.emplace_back(k, hp_log10(e, cfg).to_double());
    }
    slopes[ratio] = fitted_slope(pts);
  }

  const auto expected = [](int r) { return 2 * std::log10(static_cast<double>(r)); };
  const auto fixed4 = [](double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(4);
    s << v;
    return s.str();
  };
  if (cc.output == Output::json) {
    nlohmann::ordered_json j;
    j["arc"] = format(arc, AngleStyle::grammar);
    auto jr = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      jr.push_back({{"ratio", row.ratio},
                    {"depth", row.depth},
                    {"abs_error", detail::short_number(row.error)}});
    }
    j["rows"] = std::move(jr);
    auto jf = nlohmann::ordered_json::array();
    for (const auto& [ratio, slope] : slopes) {
      jf.push_back({{"ratio", ratio},
                    {"decades_per_depth", slope ? fixed4(-*slope) : "n/a"},
                    {"log10_r_squared", fixed4(expected(ratio))}});
    }
    j["fits"] = std::move(jf);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "ratio,depth,abs_error\n";
  for (const Row& row : rows) {
    out << row.ratio << ',' << row.depth << ',' << detail::short_number(row.error) << "\n";
  }
  for (const auto& [ratio, slope] : slopes) {
    out << "# ratio " << ratio << ": error falls by "
        << (slope ? fixed4(-*slope) : std::string("n/a"))
        << " decades per depth (log10 r^2 = " << fixed4(expected(ratio)) << ")\n";
  }
  return kOk;
}

inline int cmd_pi(const std::string& method_name, int digits, bool euler_pipeline,
                  const CommandConfig& cc, std::ostream& out, std::ostream& err) {
  const auto method = pi_method_from_name(method_name);
  if (!method) {
    err << "unknown method '" << method_name
        << "' (expected log-secant, tangent, viete or secant-product)\n";
    return kUsage;
  }
  const auto cfg = cc.precision_config();
  if (euler_pipeline) {
    if (*method != PiMethod::log_secant && *method != PiMethod::tangent) {
      err << "--euler-pipeline exists only for log-secant and tangent\n";
      return kUsage;
    }
    if (digits != 7) {
      err << "--euler-pipeline works to 7 places only\n";
      return kUsage;
    }
    CommandConfig historical = cc;
    historical.euler_style = true;
    const EulerTable table =
        *method == PiMethod::log_secant ? log_secant_table(cfg) : tangent_table(cfg);
    const std::string_view golden =
        *method == PiMethod::log_secant ? golden::log_secant : golden::tangent;
    if (cc.output == Output::json) {
      out << nlohmann::ordered_json{{"method", method_name},
                                    {"pipeline", "euler"},
                                    {"value", historical.num(table.final_pi)}}
                 .dump(2)
          << "\n";
    } else {
      out << historical.num(table.final_pi) << "\n";
    }
    for (const std::string& d : table.diagnostics) err << "note: " << d << "\n";
    return compare_to_golden(table, golden) ? kMismatch : kOk;
  }

  const PiResult r = compute_pi(*method, digits, cfg);
  const std::string reference = hp_pi(cfg).round_to_decimals(digits).to_fixed(digits);
  const bool match = r.text() == reference;
  switch (cc.output) {
    case Output::json: {
      auto j = to_json(r);
      j["reference_match"] = match;
      out << j.dump(2) << "\n";
      break;
    }
    case Output::csv:
      out << "method,digits,value,depth\n"
          << method_name << ',' << digits << ',' << r.text() << ',' << r.depth << "\n";
      break;
    case Output::text:
      out << cc.num(r.text()) << "\n";
      err << "depth " << r.depth << ", bracket [" << r.lower.to_string() << ", "
          << r.upper.to_string() << "]\n";
      break;
  }
  if (!match) {
    err << "result differs from reference pi " << reference << "\n";
    return kMismatch;
  }
  return kOk;
}

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series and products over angles in geometric progression"};
  app.require_subcommand(1);

  CommandConfig cc;
  std::string output = "text";
  app.add_option("-P,--precision", cc.precision, "working precision in digits (>= 10)")
      ->envname("GEOPROG_PRECISION");
  app.add_option("--output", output, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--euler-style", cc.euler_style, "decimal commas in values");
  app.add_flag("--decimal-minutes", cc.decimal_minutes,
               "write angles as decimal minutes instead of fractions");
  app.add_option("--seed", cc.seed, "seed for random samples");

  auto* table = app.add_subcommand("table", "reproduce a historical table");
  std::string which;
  std::optional<std::string> golden_path;
  table->add_option("which", which, "log-secant or tangent")->required();
  table->add_option("--golden", golden_path, "fixture to compare against");

  auto* verify = app.add_subcommand("verify", "check an identity at random angles");
  std::string identity;
  int samples = 100;
  std::optional<std::string> angle;
  verify->add_option("identity", identity, "identity name")->required();
  verify->add_option("--samples", samples, "number of random angles");
  verify->add_option("--angle", angle, "a single angle instead of random ones");

  auto* series = app.add_subcommand("series", "evaluate a tangent series");
  int ratio = 2;
  std::string arc = "90d";
  int depth = 6;
  std::string tail = "asymptotic";
  series->add_option("--ratio", ratio, "2, 3, 4 or 5");
  series->add_option("--arc", arc, "arc, e.g. 90d or 5d37 1/2m");
  series->add_option("--depth", depth, "number of depths after the head");
  series->add_option("--tail", tail, "asymptotic, rigorous or continuation")
      ->check(CLI::IsMember({"asymptotic", "rigorous", "continuation"}));

  auto* converge = app.add_subcommand("converge", "error against depth per ratio");
  std::vector<int> ratios{2, 3, 4, 5};
  std::string converge_arc = "90d";
  int max_depth = 20;
  converge->add_option("--ratios", ratios, "comma-separated ratios")->delimiter(',');
  converge->add_option("--arc", converge_arc, "arc");
  converge->add_option("--max-depth", max_depth, "deepest depth");

  auto* pi = app.add_subcommand("pi", "pi from one of the series");
  std::string method = "tangent";
  int digits = 7;
  bool euler_pipeline = false;
  pi->add_option("--method", method, "log-secant, tangent, viete or secant-product");
  pi->add_option("--digits", digits, "decimal places");
  pi->add_flag("--euler-pipeline", euler_pipeline,
               "seven-place rounded rows, as in the historical table");

  for (auto* sub : {table, verify, series, converge, pi}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }
  cc.output = output == "json" ? Output::json : output == "csv" ? Output::csv : Output::text;

  try {
    cc.precision_config();
    if (*table) return cmd_table(which, golden_path, cc, out, err);
    if (*verify) return cmd_verify(identity, samples, angle, cc, out, err);
    if (*series) {
      const TailKind kind = tail == "rigorous"       ? TailKind::rigorous
                            : tail == "continuation" ? TailKind::continuation
                                                     : TailKind::asymptotic;
      return cmd_series(ratio, arc, depth, kind, cc, out, err);
    }
    if (*converge) {
      for (int r : ratios) {
        if (r < 2 || r > 5) {
          err << "ratios must be among 2, 3, 4, 5\n";
          return kUsage;
        }
      }
      return cmd_converge(ratios, converge_arc, max_depth, cc, out, err);
    }
    if (*pi) return cmd_pi(method, digits, euler_pipeline, cc, out, err);
  } catch (const PoleError& e) {
    err << e.what() << "\n";
    return kPole;
  } catch (const NearPoleError& e) {
    err << e.what() << "\n";
    return kPole;
  } catch (const PrecisionUnreachable& e) {
    err << e.what() << "\n";
    return kUnreachable;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace geoprog::cli
