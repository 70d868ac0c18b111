#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "geoprog/serialize.hpp"
#include "geoprog/tables.hpp"
#include "geoprog_golden.hpp"

using namespace geoprog;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GEOPROG_GOLDEN_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const TableRow& row(const EulerTable& t, const std::string& label) {
  for (const TableRow& r : t.rows) {
    if (r.label() == label) return r;
  }
  throw std::runtime_error("no row " + label);
}

}  // namespace

TEST(LogSecantTable, MatchesFixture) {
  const EulerTable t = log_secant_table(PrecisionConfig::digits(30));
  ASSERT_EQ(t.rows.size(), 12u);
  EXPECT_FALSE(compare_to_golden(t, read_fixture("log_secant.txt")).has_value());
  EXPECT_EQ(fixture_text(t), read_fixture("log_secant.txt"));
  EXPECT_EQ(row(t, "l Sec 11° 15′").value_7dp, "0.0084261");
  EXPECT_EQ(row(t, "other terms").value_7dp, "0.0000027");
  EXPECT_EQ(row(t, "l π/2").value_7dp, "0.1961199");
  EXPECT_EQ(row(t, "l 2").value_7dp, "0.3010300");
  EXPECT_EQ(row(t, "l π").value_7dp, "0.4971499");
  EXPECT_EQ(t.final_pi, "3.1415928");
}

TEST(LogSecantTable, ReportsTheSeventhPlaceDiscrepancy) {
  const EulerTable t = log_secant_table(PrecisionConfig::digits(30));
  ASSERT_FALSE(t.diagnostics.empty());
  EXPECT_NE(t.diagnostics.front().find("3.1415927"), std::string::npos);
  EXPECT_NE(t.diagnostics.front().find("3.141592851"), std::string::npos);
}

TEST(TangentTable, MatchesFixture) {
  const EulerTable t = tangent_table(PrecisionConfig::digits(30));
  ASSERT_EQ(t.rows.size(), 8u);
  EXPECT_FALSE(compare_to_golden(t, read_fixture("tangent.txt")).has_value());
  EXPECT_EQ(fixture_text(t), read_fixture("tangent.txt"));
  EXPECT_EQ(row(t, "1/32 Tag 2° 48 3/4′").value_7dp, "0.0015352");
  EXPECT_EQ(row(t, "for the remaining").value_7dp, "0.0001279");
  EXPECT_EQ(row(t, "2/π").value_7dp, "0.6366198");
  EXPECT_EQ(t.final_display, "2/0.6366198 = 1/0.3183099");
  EXPECT_EQ(t.final_pi, "3.1415925");
}

TEST(Tables, EmbeddedFixturesEqualFiles) {
  EXPECT_EQ(std::string(golden::log_secant), read_fixture("log_secant.txt"));
  EXPECT_EQ(std::string(golden::tangent), read_fixture("tangent.txt"));
}

// Each term row is the exact term rounded to seven places, and each
// subtotal is the sum of the rounded rows above it.
TEST(Tables, PipelineDecomposition) {
  const auto cfg = PrecisionConfig::digits(30);
  for (const EulerTable& t : {log_secant_table(cfg), tangent_table(cfg)}) {
    HPReal running(0, 30);
    for (const TableRow& r : t.rows) {
      const HPReal v = HPReal::parse(r.value_7dp, 30);
      if (r.kind == RowKind::term) {
        ASSERT_TRUE(r.argument.has_value());
        const HPReal exact = t.name == "tangent"
                                 // 2^-k = (90°/2^k) / 90°
                                 ? hp_tan(*r.argument, cfg) *
                                       HPReal::from_rational(r.argument->value() / 90, 30)
                                 : hp_log10_sec(*r.argument, cfg);
        EXPECT_EQ(exact.round_to_decimals(7), v) << r.label();
      }
      if (r.kind == RowKind::term || r.kind == RowKind::tail) running += v;
      if (r.kind == RowKind::subtotal) {
        EXPECT_EQ(running, v) << t.name;
      }
    }
  }
}

TEST(Tables, GoldenDiffNamesFirstBadLine) {
  const EulerTable t = log_secant_table(PrecisionConfig::digits(20));
  std::string broken = read_fixture("log_secant.txt");
  const auto at = broken.find("0,0084261");
  broken.replace(at, 9, "0,0084262");
  const auto diff = compare_to_golden(t, broken);
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(diff->line, 3);
  EXPECT_EQ(diff->expected, "l Sec 11° 15′;0.0084262");
  EXPECT_EQ(diff->actual, "l Sec 11° 15′;0.0084261");

  const auto short_diff = compare_to_golden(t, "l Sec 45°;0,1505150\n");
  ASSERT_TRUE(short_diff.has_value());
  EXPECT_EQ(short_diff->line, 2);
  EXPECT_EQ(short_diff->expected, "<missing>");
}

TEST(Tables, CommaNormalization) {
  EXPECT_EQ(to_comma("0.1505150"), "0,1505150");
  EXPECT_EQ(to_point("2/0,6366198 = 1/0,3183099"), "2/0.6366198 = 1/0.3183099");
  const EulerTable t = tangent_table(PrecisionConfig::digits(20));
  const std::string windows = [] {
    std::string s;
    for (char c : std::string(golden::tangent)) {
      if (c == '\n') s += '\r';
      s += c;
    }
    return s;
  }();
  EXPECT_FALSE(compare_to_golden(t, windows).has_value());
}

TEST(Tables, DecimalMinuteLabels) {
  const EulerTable t = log_secant_table(PrecisionConfig::digits(20));
  EXPECT_EQ(t.rows[3].label(AngleStyle::decimal_minutes), "l Sec 5° 37.5′");
  EXPECT_EQ(t.rows[8].label(AngleStyle::decimal_minutes), "other terms");
}

TEST(Tables, JsonForm) {
  const auto j = to_json(tangent_table(PrecisionConfig::digits(20)));
  EXPECT_EQ(j["subtotal"], "0.6366198");
  EXPECT_EQ(j["rows"].size(), 8u);
  EXPECT_EQ(j["rows"][6]["kind"], "tail");
  const auto euler = to_json(log_secant_table(PrecisionConfig::digits(20)), true);
  EXPECT_EQ(euler["final_pi"], "3,1415928");
}
