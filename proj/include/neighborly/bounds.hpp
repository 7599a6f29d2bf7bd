#pragma once

// Closed-form bounds and asymptotics. Everything is exact big-integer /
// rational arithmetic; the only irrationals (e in the Alon upper bound, pi
// and a square root in ratio_floor) enter through direction-correct rational
// enclosures, so reported uppers never under-report and reported lowers
// never over-report. Display rounding is separate (to_decimal) and also
// direction-correct.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neighborly/construction.hpp"
#include "neighborly/solver.hpp"

namespace neighborly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

struct AlonBounds {
  Rational lower;  // d^k / k^k, exact
  Rational upper;  // 2 (2e)^k d^k / k^k with e replaced by a rational > e
};

// Eq. (1). Throws InvalidParams unless 1 <= k <= d.
AlonBounds alon_bounds(int k, int d);

// Eq. (2)'s d^k / k!. A reference curve only: the paper's (1 - o(1)) factor
// is unquantified, so this never enters a consistency audit.
Rational gkp_reference(int k, int d);

// The Cheng-Wang-Xu-Yip upper bound as quoted in section 3. Throws
// OutOfStatedRange unless 1 <= k <= d-2 (the theorem's stated range).
Rational cwxy_upper(int k, int d);

// (2^d + 2^k) / 2, same stated range as cwxy_upper.
Rational simplified_upper(int k, int d);

// |C_alpha| + |C_omega|: the two-term sum of section 3. Always at most
// lower_bound_formula(d, s).
std::uint64_t two_cell_lower(const ConstructionParams& p);

// Theorem 2's limit (2^s + 1) / 2^{s+1}. Throws InvalidParams unless s >= 1.
Rational asymptotic_ratio(int s);

struct RatioFloorResult {
  Rational value;   // certified <= (1/2 + 1/2^{s+1})(1 - s/sqrt(pi(d-s)/2)) 2^d
  Rational factor;  // certified <= 1 - s/sqrt(pi(d-s)/2)
  bool heuristic;   // true when s is odd (the section 3 proof assumes d, s even)
};

// Section 3's final display with certified downward rounding. Requires d
// even and 1 <= s <= d/2 (InvalidParams otherwise); odd s is computed but
// flagged heuristic and excluded from audits.
RatioFloorResult ratio_floor(int d, int s);

struct PascalViolation {
  int k;
  int d;
  BigInt lhs;  // n(k,d)
  BigInt rhs;  // n(k-1,d-1) + n(k,d-1)
};

// Conjecture 2 check over a table of certified exact values, with the
// conventions n(0,d) = 1 and n(k,d) = 2^d for k > d. Triples with a missing
// value are skipped. Empty result = no counterexample found (not a proof).
std::vector<PascalViolation> pascal_check(
    const std::map<std::pair<int, int>, std::uint64_t>& table);

enum class RoundDirection { Down, Up };

// Decimal rendering with directed rounding; trailing zeros trimmed.
std::string to_decimal(const Rational& r, int digits, RoundDirection dir);

struct BoundReport {
  int k = 0;
  int d = 0;
  int s = 0;  // d - k
  std::optional<std::uint64_t> construction_lower;  // d even, s <= d/2
  std::optional<std::uint64_t> two_cell_lower;
  Rational alon_lower;
  Rational alon_upper;
  std::optional<Rational> cwxy_upper;        // 1 <= k <= d-2
  std::optional<Rational> simplified_upper;  // same range
  std::optional<std::uint64_t> exact;
  std::optional<SolveSource> exact_source;
};

struct ReportOptions {
  bool attach_exact = true;
  // Per-row clique-search budget when no closed form applies and d <= 8;
  // rows whose search times out leave `exact` empty.
  double time_budget_seconds = 5.0;
};

// One row per (d, s) pair of the Cartesian ranges, d-major order, k = d-s.
// Every row must have k >= 1 (InvalidParams otherwise). Each row passes
// the consistency audit before being returned.
std::vector<BoundReport> report(int d_lo, int d_hi, int s_lo, int s_hi,
                                const ReportOptions& opts = {});

// Every applicable lower <= every applicable upper, and any exact value
// sits between them. Throws std::logic_error with a diagnostic on failure.
void audit(const BoundReport& row);

}  // namespace neighborly
