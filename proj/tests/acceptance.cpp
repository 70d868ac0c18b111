// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "geoprog/identities.hpp"
#include "geoprog/series.hpp"
#include "geoprog/tables.hpp"
#include "oracle/oracle.hpp"

using namespace geoprog;
using oracle::Big;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Cli {
  int code;
  std::string out;
  std::string err;
};

Cli run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string normalize(const std::string& text) {
  // "label = value" lines to fixture form "label;value".
  std::istringstream in(text);
  std::string line, result;
  while (std::getline(in, line)) {
    const auto at = line.find(" = ");
    if (at != std::string::npos) line = line.substr(0, at) + ";" + line.substr(at + 3);
    result += line + "\n";
  }
  return result;
}

Outcome golden_table(const std::string& which, std::string_view golden, std::size_t lines) {
  const Cli r = run_cli({"table", which, "--euler-style"});
  const std::string got = normalize(r.out);
  Outcome o;
  o.passed = r.code == 0 && got == golden &&
             static_cast<std::size_t>(std::count(got.begin(), got.end(), '\n')) == lines;
  o.detail = "exit " + std::to_string(r.code) + ", " +
             std::to_string(std::count(got.begin(), got.end(), '\n')) + " lines";
  if (got != golden) o.detail += ", output differs from fixture";
  return o;
}

Outcome finite_identities() {
  const auto cfg = PrecisionConfig::digits(40);
  const Big bound = oracle::pow10(-36);
  std::mt19937_64 rng(2024);
  Big worst = 0;
  std::string worst_case;
  int failures = 0;
  const auto check = [&](const Big& residual, const std::string& what) {
    if (residual > worst) {
      worst = residual;
      worst_case = what;
    }
    if (residual > bound) ++failures;
  };
  for (int i = 0; i < 500; ++i) {
    const Angle s = oracle::random_arc(rng);
    const Big sin_s = oracle::sin_deg(s);
    for (int n : {1, 5, 15, 30}) {
      const std::string tag = format(s) + " n=" + std::to_string(n);
      for (int r : {2, 3}) {
        const auto res = tangent_series(s, RatioSpec::for_ratio(r), TruncationSpec::fixed(n), cfg);
        check(abs(oracle::from_hp(*res.identity_residual)), "telescoping r=" + std::to_string(r) + " " + tag);
      }
      check(oracle::diff(viete_sin(s, n, cfg), sin_s), "viete " + tag);
      check(oracle::diff(ternary_sin_product(s, n, cfg), sin_s), "ternary sine " + tag);
      check(abs(oracle::from_hp(secant_squared_series(s, n, cfg).finite_residual)),
            "secant squared " + tag);
    }
  }
  Outcome o;
  o.passed = failures == 0;
  o.detail = "2000 arc/depth pairs x 5 identities, max residual " + oracle::text(worst, 2) +
             (failures ? ", " + std::to_string(failures) + " over bound, worst " + worst_case : "");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  int total = 0;
  int redrawn = 0;
  int failures = 0;
  for (int p : {20, 40}) {
    const auto cfg = PrecisionConfig::digits(p);
    std::mt19937_64 rng(77 + p);
    for (IdentityId id : kAllIdentities) {
      int done = 0;
      while (done < 1000) {
        const Angle phi = cli::random_angle(rng);
        if (!in_domain(id, phi)) {
          ++redrawn;
          continue;
        }
        try {
          const IdentityReport r = evaluate_identity(id, phi, cfg);
          if (!r.passed) ++failures;
          ++done;
        } catch (const NearPoleError&) {
          ++redrawn;
        }
      }
      total += done;
    }
  }
  o.passed = failures == 0;
  o.detail = std::to_string(total) + " samples, " + std::to_string(failures) + " failures, " +
             std::to_string(redrawn) + " out-of-domain draws replaced";
  return o;
}

Outcome convergence_ratios() {
  Outcome o;
  const auto cfg = PrecisionConfig::digits(60);
  double worst = 0;
  for (int r : {2, 3, 4, 5}) {
    const auto res = tangent_series(Angle::degrees(90), RatioSpec::for_ratio(r),
                                    TruncationSpec::fixed(20), cfg);
    const auto totals = res.depth_totals();
    for (int k = 10; k < 20; ++k) {
      const double q = (totals[k + 1] / totals[k]).to_double() * r * r;
      worst = std::max(worst, std::abs(q - 1));
    }
  }
  o.passed = worst <= 0.02;
  o.detail = "max relative deviation from 1/r^2: " + std::to_string(worst);
  return o;
}

Outcome pi_and_tails() {
  Outcome o;
  const std::string expected =
      oracle::to_hp(oracle::pi(), 110).round_to_decimals(25).to_fixed(25) + "\n";
  const std::string kernel =
      hp_pi(PrecisionConfig::digits(40)).round_to_decimals(25).to_fixed(25) + "\n";
  for (const char* m : {"tangent", "viete"}) {
    const Cli r = run_cli({"pi", "--method", m, "--digits", "25"});
    if (r.code != 0 || r.out != expected || r.out != kernel) {
      o.passed = false;
      o.detail += std::string(m) + " gave " + r.out;
    }
  }
  const auto cfg = PrecisionConfig::digits(30);
  std::mt19937_64 rng(606);
  int cases = 0;
  int violations = 0;
  while (cases < 100) {
    const Angle s = oracle::random_arc(rng);
    const int r = 2 + static_cast<int>(rng() % 4);
    const int n = static_cast<int>(rng() % 16);
    if (!detail::small_enough_for_tail(s, r, n)) continue;
    ++cases;
    const auto spec = RatioSpec::for_ratio(r);
    const HPReal bound = tail_estimate(s, spec, n, cfg, TailKind::rigorous).estimate;
    const HPReal remainder = tail_estimate(s, spec, n, cfg, TailKind::continuation).estimate;
    if (abs(bound) < abs(remainder)) ++violations;
  }
  if (violations) o.passed = false;
  o.detail += "25-digit pi from tangent and viete; rigorous tail >= continuation remainder in " +
              std::to_string(cases - violations) + "/" + std::to_string(cases) + " cases";
  return o;
}

Outcome tail_rows() {
  const auto cfg = PrecisionConfig::digits(30);
  const Angle right = Angle::degrees(90);
  const std::string log_tail =
      log_secant_tail_estimate(right, 8, cfg, TailKind::rigorous).estimate.round_to_decimals(7).to_fixed(7);
  const std::string tan_tail = tail_estimate(right, RatioSpec::for_ratio(2), 6, cfg, TailKind::rigorous)
                                   .estimate.round_to_decimals(7)
                                   .to_fixed(7);
  Outcome o;
  o.passed = log_tail == "0.0000027" && tan_tail == "0.0001279";
  o.detail = "log-secant tail " + log_tail + ", tangent tail " + tan_tail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> check;
    double time_limit;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria{
      {1, "log-secant table reproduces all printed lines and pi = 3,1415928",
       [] { return golden_table("log-secant", golden::log_secant, 13); }, 1.0},
      {2, "tangent table reproduces rows, tail 0.0001279 and 2/pi = 0.6366198",
       [] { return golden_table("tangent", golden::tangent, 9); }, 1.0},
      {3, "finite identities hold to 1e-36 at P=40", finite_identities, 60.0},
      {4, "eight named identities pass 1000 samples at P=20 and P=40", identity_suite, 0},
      {5, "consecutive tangent-series term ratios within 2% of 1/r^2", convergence_ratios, 0},
      {6, "25-digit pi and rigorous tail soundness", pi_and_tails, 0},
      {7, "rigorous-then-round tails give 0.0000027 and 0.0001279", tail_rows, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.passed = false;
      o.detail += ", over the time limit";
    }
    if (!o.passed) ++failed;
    std::printf("%s criterion %d: %s (%s; %.2f s)\n", o.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
