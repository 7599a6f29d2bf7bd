#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "neighborly/bounds.hpp"
#include "neighborly/construction.hpp"
#include "neighborly/errors.hpp"

namespace nb = neighborly;

namespace {

nb::Rational rat(long long num, long long den) {
  return nb::Rational(nb::BigInt(num), nb::BigInt(den));
}

}  // namespace

TEST_CASE("binomial is exact") {
  CHECK(nb::binomial(0, 0) == 1);
  CHECK(nb::binomial(6, 3) == 20);
  CHECK(nb::binomial(6, 7) == 0);
  CHECK(nb::binomial(52, 26) == nb::BigInt("495918532948104"));
}

TEST_CASE("alon bounds: exact lower, outward-rounded upper") {
  nb::AlonBounds b = nb::alon_bounds(2, 4);
  CHECK(b.lower == rat(4, 1));
  // 2 (2e)^2 (d/k)^k with e -> 2718281829/10^9, reduced
  CHECK(b.upper == nb::Rational(nb::BigInt("7389056101871585241"),
                                nb::BigInt("31250000000000000")));

  nb::AlonBounds b1 = nb::alon_bounds(1, 4);
  CHECK(b1.lower == rat(4, 1));
  CHECK(b1.upper == nb::Rational(nb::BigInt("2718281829"),
                                 nb::BigInt("62500000")));

  // the enclosure really is above the true value 2*(2e)^1*4 = 16e
  CHECK(b1.upper > rat(43492508, 1000000));

  CHECK_THROWS_AS(nb::alon_bounds(0, 4), nb::InvalidParams);
  CHECK_THROWS_AS(nb::alon_bounds(5, 4), nb::InvalidParams);
}

TEST_CASE("gkp reference curve is d^k / k!") {
  CHECK(nb::gkp_reference(2, 4) == rat(8, 1));
  CHECK(nb::gkp_reference(3, 7) == rat(343, 6));
  CHECK(nb::gkp_reference(1, 9) == rat(9, 1));
}

TEST_CASE("cwxy upper bound, even and odd cases") {
  CHECK(nb::cwxy_upper(2, 4) == rat(37, 4));
  CHECK(nb::cwxy_upper(1, 4) == rat(27, 4));
  CHECK(nb::cwxy_upper(2, 5) == rat(57, 4));
  CHECK(nb::cwxy_upper(3, 5) == rat(37, 2));
  CHECK(nb::cwxy_upper(4, 6) == rat(75, 2));
  CHECK(nb::cwxy_upper(2, 20) == nb::Rational(nb::BigInt("68723277803"),
                                              nb::BigInt("262144")));
  CHECK(nb::cwxy_upper(17, 20) == rat(1041081, 2));
  CHECK(nb::cwxy_upper(18, 20) == rat(1264531, 2));

  CHECK_THROWS_AS(nb::cwxy_upper(3, 4), nb::OutOfStatedRange);  // k > d-2
  CHECK_THROWS_AS(nb::cwxy_upper(4, 4), nb::OutOfStatedRange);
  CHECK_THROWS_AS(nb::cwxy_upper(0, 4), nb::InvalidParams);
  CHECK_THROWS_AS(nb::cwxy_upper(5, 4), nb::InvalidParams);
}

TEST_CASE("simplified upper bound and its range") {
  CHECK(nb::simplified_upper(2, 4) == rat(10, 1));
  CHECK(nb::simplified_upper(4, 6) == rat(40, 1));
  CHECK(nb::simplified_upper(1, 3) == rat(5, 1));
  CHECK(nb::simplified_upper(2, 20) == rat(524290, 1));
  CHECK_THROWS_AS(nb::simplified_upper(3, 4), nb::OutOfStatedRange);
  CHECK_THROWS_AS(nb::simplified_upper(2, 2), nb::OutOfStatedRange);

  // cwxy never exceeds the simplified form on the shared range
  for (int d = 3; d <= 12; ++d)
    for (int k = 1; k <= d - 2; ++k)
      CHECK(nb::cwxy_upper(k, d) <= nb::simplified_upper(k, d));
}

TEST_CASE("two-cell lower sums the extreme cells") {
  CHECK(nb::two_cell_lower(nb::ConstructionParams(4, 2)) == 5);
  CHECK(nb::two_cell_lower(nb::ConstructionParams(6, 2)) == 25);
  CHECK(nb::two_cell_lower(nb::ConstructionParams(6, 3)) == 9);
  CHECK(nb::two_cell_lower(nb::ConstructionParams(8, 2)) == 110);
  CHECK(nb::two_cell_lower(nb::ConstructionParams(20, 2)) == 533810);
  for (int d = 2; d <= 16; d += 2)
    for (int s = 1; s <= d / 2; ++s) {
      nb::ConstructionParams p(d, s);
      CHECK(nb::two_cell_lower(p) <= nb::lower_bound_formula(p));
    }
}

TEST_CASE("asymptotic ratio (2^s + 1) / 2^{s+1}") {
  CHECK(nb::asymptotic_ratio(1) == rat(3, 4));
  CHECK(nb::asymptotic_ratio(2) == rat(5, 8));
  CHECK(nb::asymptotic_ratio(3) == rat(9, 16));
  CHECK(nb::asymptotic_ratio(4) == rat(17, 32));
  CHECK_THROWS_AS(nb::asymptotic_ratio(0), nb::InvalidParams);
}

TEST_CASE("ratio_floor certifies a downward-rounded factor") {
  nb::RatioFloorResult r = nb::ratio_floor(10, 2);
  CHECK_FALSE(r.heuristic);
  CHECK(r.factor ==
        nb::Rational(nb::BigInt("77245385073913842649659803"),
                     nb::BigInt("177245385073913842649659803")));
  // true factor is 1 - 2/sqrt(4*pi) = 0.43581041645...
  CHECK(r.factor > rat(435810416, 1000000000));
  CHECK(r.factor < rat(435810417, 1000000000));
}

TEST_CASE("ratio_floor value ties factor, coefficient and 2^d together") {
  for (auto [d, s] : {std::pair{10, 2}, std::pair{20, 2}, std::pair{12, 2}}) {
    nb::RatioFloorResult r = nb::ratio_floor(d, s);
    nb::Rational coeff = rat(1, 2) + nb::Rational(1, nb::BigInt(1) << (s + 1));
    CHECK(r.value == coeff * r.factor * (nb::BigInt(1) << d));
    CHECK_FALSE(r.heuristic);
  }
  // the floor stays below the family it certifies
  for (auto [d, s] : {std::pair{10, 2}, std::pair{20, 2}, std::pair{20, 3}}) {
    nb::RatioFloorResult r = nb::ratio_floor(d, s);
    CHECK(r.value <
          nb::Rational(nb::BigInt(nb::lower_bound_formula(
              nb::ConstructionParams(d, s)))));
  }
}

TEST_CASE("ratio_floor flags odd s as heuristic and validates params") {
  CHECK(nb::ratio_floor(20, 3).heuristic);
  CHECK(nb::ratio_floor(10, 1).heuristic);
  CHECK_FALSE(nb::ratio_floor(20, 4).heuristic);
  CHECK_THROWS_AS(nb::ratio_floor(11, 2), nb::InvalidParams);  // odd d
  CHECK_THROWS_AS(nb::ratio_floor(10, 6), nb::InvalidParams);  // s > d/2
  CHECK_THROWS_AS(nb::ratio_floor(10, 0), nb::InvalidParams);
}

TEST_CASE("pascal check accepts the certified table") {
  auto table = nb::certified_exact_table(8, 4);
  CHECK(nb::pascal_check(table).empty());
}

TEST_CASE("pascal check reports synthetic violations") {
  std::map<std::pair<int, int>, std::uint64_t> table = {
      {{1, 2}, 3}, {{1, 3}, 99}};  // n(1,3) <= n(0,2) + n(1,2) = 4 is violated
  auto violations = nb::pascal_check(table);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].k == 1);
  CHECK(violations[0].d == 3);
  CHECK(violations[0].lhs == 99);
  CHECK(violations[0].rhs == 4);
}

TEST_CASE("pascal check applies the k = 0 and k > d conventions") {
  // n(2,3) = 6 needs n(1,2) + n(2,2); n(3,3) = 8 needs n(2,2) + n(3,2) where
  // n(3,2) falls back to 2^2 by convention
  std::map<std::pair<int, int>, std::uint64_t> table = {
      {{1, 2}, 3}, {{2, 2}, 4}, {{2, 3}, 6}, {{3, 3}, 8}};
  CHECK(nb::pascal_check(table).empty());
  table[{3, 3}] = 9;  // 9 > 4 + 4 = 8
  CHECK(nb::pascal_check(table).size() == 1);
}

TEST_CASE("to_decimal rounds in the requested direction and trims") {
  CHECK(nb::to_decimal(rat(1, 3), 6, nb::RoundDirection::Down) == "0.333333");
  CHECK(nb::to_decimal(rat(1, 3), 6, nb::RoundDirection::Up) == "0.333334");
  CHECK(nb::to_decimal(rat(37, 4), 6, nb::RoundDirection::Up) == "9.25");
  CHECK(nb::to_decimal(rat(1, 2), 6, nb::RoundDirection::Down) == "0.5");
  CHECK(nb::to_decimal(rat(25, 4), 6, nb::RoundDirection::Down) == "6.25");
  CHECK(nb::to_decimal(rat(5, 1), 6, nb::RoundDirection::Up) == "5");
  CHECK(nb::to_decimal(rat(0, 1), 6, nb::RoundDirection::Down) == "0");
}

TEST_CASE("audit passes coherent rows and rejects contradictions") {
  nb::BoundReport row;
  row.k = 2;
  row.d = 4;
  row.s = 2;
  row.construction_lower = 9;
  row.two_cell_lower = 5;
  row.alon_lower = rat(4, 1);
  row.alon_upper = nb::alon_bounds(2, 4).upper;
  row.cwxy_upper = rat(37, 4);
  row.simplified_upper = rat(10, 1);
  row.exact = 9;
  row.exact_source = nb::SolveSource::CliqueSearch;
  CHECK_NOTHROW(nb::audit(row));

  nb::BoundReport bad = row;
  bad.exact = 10;  // above cwxy_upper
  CHECK_THROWS_AS(nb::audit(bad), std::logic_error);

  nb::BoundReport bad2 = row;
  bad2.construction_lower = 11;  // lower above an upper
  CHECK_THROWS_AS(nb::audit(bad2), std::logic_error);
}

TEST_CASE("report emits d-major rows with k = d - s") {
  nb::ReportOptions opts;
  opts.time_budget_seconds = 30.0;
  auto rows = nb::report(4, 5, 1, 2, opts);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].d == 4);
  CHECK(rows[0].s == 1);
  CHECK(rows[0].k == 3);
  CHECK(rows[1].d == 4);
  CHECK(rows[1].s == 2);
  CHECK(rows[2].d == 5);
  CHECK(rows[2].s == 1);
  CHECK(rows[3].d == 5);
  CHECK(rows[3].s == 2);

  // even-d rows carry the construction, odd-d rows do not
  CHECK(rows[0].construction_lower == 12);
  CHECK(rows[1].construction_lower == 9);
  CHECK_FALSE(rows[2].construction_lower.has_value());
  CHECK_FALSE(rows[3].construction_lower.has_value());

  // exact values: closed form for (3,4), search for (2,4), (4,5), (3,5)
  CHECK(rows[0].exact == 12);
  CHECK(rows[0].exact_source == nb::SolveSource::ClosedForm);
  CHECK(rows[1].exact == 9);
  CHECK(rows[1].exact_source == nb::SolveSource::CliqueSearch);
  CHECK(rows[2].exact == 24);
  CHECK(rows[3].exact == 18);

  // cwxy applies when k <= d-2, so the s = 1 rows carry none
  CHECK_FALSE(rows[0].cwxy_upper.has_value());
  CHECK(rows[1].cwxy_upper == rat(37, 4));
  CHECK_FALSE(rows[2].cwxy_upper.has_value());
  CHECK(rows[3].cwxy_upper == rat(37, 2));
}

TEST_CASE("report honors no-exact mode and validates ranges") {
  nb::ReportOptions opts;
  opts.attach_exact = false;
  auto rows = nb::report(4, 4, 2, 2, opts);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].exact.has_value());
  CHECK_FALSE(rows[0].exact_source.has_value());

  CHECK_THROWS_AS(nb::report(5, 4, 1, 1, {}), nb::InvalidParams);
  CHECK_THROWS_AS(nb::report(4, 4, 2, 1, {}), nb::InvalidParams);
  CHECK_THROWS_AS(nb::report(4, 4, 4, 4, {}), nb::InvalidParams);  // k = 0 row
  CHECK_THROWS_AS(nb::report(4, 4, 0, 1, {}), nb::InvalidParams);
}
