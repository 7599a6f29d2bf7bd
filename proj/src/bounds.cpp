#include "neighborly/bounds.hpp"

#include <stdexcept>

#include "neighborly/parallel.hpp"

namespace neighborly {

namespace {

namespace mp = boost::multiprecision;

const BigInt kScale9 = BigInt(1000000000);             // 10^9
const BigInt kEHigh = BigInt(2718281829);              // e < 2.718281829
const BigInt kPiLow = BigInt(3141592653);              // pi > 3.141592653

BigInt pow_int(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt pow2(int e) { return BigInt(1) << e; }

void require_k_d(int k, int d) {
  if (d < 1 || k < 1 || k > d)
    throw InvalidParams("need 1 <= k <= d, got k=" + std::to_string(k) +
                        ", d=" + std::to_string(d));
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after the division
  }
  return r;
}

AlonBounds alon_bounds(int k, int d) {
  require_k_d(k, d);
  Rational lower(pow_int(BigInt(d), k), pow_int(BigInt(k), k));
  // 2 (2e)^k d^k / k^k, with e <= kEHigh/10^9 so the result stays an upper
  // bound after the substitution.
  Rational e_hi(kEHigh, kScale9);
  Rational upper = 2 * lower;
  for (int i = 0; i < k; ++i) upper *= 2 * e_hi;
  return {lower, upper};
}

Rational gkp_reference(int k, int d) {
  require_k_d(k, d);
  BigInt fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return Rational(pow_int(BigInt(d), k), fact);
}

Rational cwxy_upper(int k, int d) {
  require_k_d(k, d);
  if (k > d - 2)
    throw OutOfStatedRange("cwxy_upper is stated only for 1 <= k <= d-2, "
                           "got k=" + std::to_string(k) +
                           ", d=" + std::to_string(d));
  Rational head(pow2(d - 2) + pow2(k));
  if (k % 2 == 0) {
    int t = k / 2;
    BigInt sum = 0;
    for (int i = 0; i <= t; ++i) sum += binomial(d, i);
    Rational coeff = Rational(1, 2) - Rational(1, pow2(d - k));
    return head + coeff * Rational(sum);
  }
  int t = (k - 1) / 2;
  BigInt sum = 0;
  for (int i = 0; i <= t; ++i) sum += binomial(d - 1, i);
  Rational coeff = 1 - Rational(1, pow2(d - k - 1));
  return head + coeff * Rational(sum);
}

Rational simplified_upper(int k, int d) {
  require_k_d(k, d);
  if (k > d - 2)
    throw OutOfStatedRange("simplified_upper is stated only for "
                           "1 <= k <= d-2, got k=" + std::to_string(k) +
                           ", d=" + std::to_string(d));
  return Rational(pow2(d) + pow2(k), 2);
}

std::uint64_t two_cell_lower(const ConstructionParams& p) {
  int n = p.d - p.s;
  int half = p.d / 2;
  BigInt total = 0;
  for (int i = 0; i <= half - p.s; ++i) total += binomial(n, i);
  BigInt tail = 0;
  for (int i = half; i <= n; ++i) tail += binomial(n, i);
  total += pow2(p.s) * tail;
  return static_cast<std::uint64_t>(total);
}

Rational asymptotic_ratio(int s) {
  if (s < 1) throw InvalidParams("s must be >= 1, got " + std::to_string(s));
  return Rational(pow2(s) + 1, pow2(s + 1));
}

RatioFloorResult ratio_floor(int d, int s) {
  ConstructionParams p(d, s);  // validates d even, 1 <= s <= d/2
  // q = pi (d-s) / 2 with pi rounded down, then sqrt(q) rounded down, so
  // s / sqrt(q) rounds up and the factor 1 - s/sqrt(q) rounds down.
  Rational q = Rational(kPiLow * (d - s), kScale9 * 2);
  BigInt scale18 = pow_int(BigInt(10), 18);
  BigInt num = mp::numerator(q), den = mp::denominator(q);
  BigInt radicand = num * den * scale18 * scale18;
  BigInt root_lo = mp::sqrt(radicand);  // floor sqrt
  Rational sqrt_lo(root_lo, den * scale18);
  Rational factor = 1 - Rational(s) / sqrt_lo;
  Rational coeff = Rational(1, 2) + Rational(1, pow2(s + 1));
  return {coeff * factor * Rational(pow2(d)), factor, s % 2 != 0};
}

std::vector<PascalViolation> pascal_check(
    const std::map<std::pair<int, int>, std::uint64_t>& table) {
  auto lookup = [&table](int k, int d) -> std::optional<BigInt> {
    if (k == 0) return BigInt(1);       // n(0,d) = 1 by convention
    if (k > d) return pow2(d);          // n(k,d) = 2^d for k > d
    auto it = table.find({k, d});
    if (it == table.end()) return std::nullopt;
    return BigInt(it->second);
  };
  std::vector<PascalViolation> violations;
  for (const auto& [kd, value] : table) {
    auto [k, d] = kd;
    if (d < 2) continue;
    auto a = lookup(k - 1, d - 1);
    auto b = lookup(k, d - 1);
    if (!a || !b) continue;
    BigInt lhs(value);
    BigInt rhs = *a + *b;
    if (lhs > rhs) violations.push_back({k, d, lhs, rhs});
  }
  return violations;
}

std::string to_decimal(const Rational& r, int digits, RoundDirection dir) {
  BigInt scale = pow_int(BigInt(10), digits);
  BigInt num = mp::numerator(r) * scale;
  BigInt den = mp::denominator(r);  // always > 0 for cpp_rational
  BigInt q = num / den;             // truncates toward zero
  BigInt rem = num % den;
  if (rem != 0) {
    if (dir == RoundDirection::Down && num < 0) --q;
    if (dir == RoundDirection::Up && num > 0) ++q;
  }
  bool negative = q < 0;
  BigInt mag = negative ? BigInt(-q) : q;
  BigInt whole = mag / scale;
  BigInt frac = mag % scale;
  std::string out = negative ? "-" : "";
  out += whole.str();
  if (frac != 0) {
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    out += "." + fs;
  }
  return out;
}

void audit(const BoundReport& row) {
  std::vector<std::pair<std::string, Rational>> lowers;
  std::vector<std::pair<std::string, Rational>> uppers;
  if (row.construction_lower)
    lowers.emplace_back("construction_lower", Rational(*row.construction_lower));
  if (row.two_cell_lower)
    lowers.emplace_back("two_cell_lower", Rational(*row.two_cell_lower));
  lowers.emplace_back("alon_lower", row.alon_lower);
  uppers.emplace_back("alon_upper", row.alon_upper);
  if (row.cwxy_upper) uppers.emplace_back("cwxy_upper", *row.cwxy_upper);
  if (row.simplified_upper)
    uppers.emplace_back("simplified_upper", *row.simplified_upper);
  auto fail = [&row](const std::string& what) {
    throw std::logic_error("bounds audit failed at k=" +
                           std::to_string(row.k) + ", d=" +
                           std::to_string(row.d) + ": " + what);
  };
  for (const auto& [ln, lv] : lowers)
    for (const auto& [un, uv] : uppers)
      if (lv > uv) fail(ln + " > " + un);
  if (row.exact) {
    Rational ex(*row.exact);
    for (const auto& [ln, lv] : lowers)
      if (lv > ex) fail(ln + " > exact");
    for (const auto& [un, uv] : uppers)
      if (ex > uv) fail("exact > " + un);
  }
}

std::vector<BoundReport> report(int d_lo, int d_hi, int s_lo, int s_hi,
                                const ReportOptions& opts) {
  if (d_lo < 1 || d_lo > d_hi || s_lo < 1 || s_lo > s_hi)
    throw InvalidParams("invalid d/s ranges");
  if (d_lo - s_hi < 1)
    throw InvalidParams("every row needs k = d - s >= 1; lower the s range "
                        "or raise the d range");
  std::vector<std::pair<int, int>> pairs;
  for (int d = d_lo; d <= d_hi; ++d)
    for (int s = s_lo; s <= s_hi; ++s) pairs.emplace_back(d, s);
  auto rows = parallel_map<BoundReport>(pairs.size(), [&](std::size_t i) {
    auto [d, s] = pairs[i];
    int k = d - s;
    BoundReport row;
    row.k = k;
    row.d = d;
    row.s = s;
    auto alon = alon_bounds(k, d);
    row.alon_lower = alon.lower;
    row.alon_upper = alon.upper;
    if (k <= d - 2) {
      row.cwxy_upper = cwxy_upper(k, d);
      row.simplified_upper = simplified_upper(k, d);
    }
    if (d % 2 == 0 && s <= d / 2) {
      ConstructionParams p(d, s);
      row.construction_lower = lower_bound_formula(p);
      row.two_cell_lower = two_cell_lower(p);
    }
    if (opts.attach_exact) {
      if (auto cf = closed_form_value(k, d)) {
        row.exact = *cf;
        row.exact_source = SolveSource::ClosedForm;
      } else if (d <= kSolverMaxD) {
        SearchConfig cfg;
        cfg.time_budget_seconds = opts.time_budget_seconds;
        if (row.construction_lower)
          cfg.seed_lower_bound = *row.construction_lower;
        SolveResult res = exact_n(k, d, cfg);
        if (res.status == SolveStatus::Exact) {
          row.exact = res.value;
          row.exact_source = res.source;
        }
      }
    }
    audit(row);
    return row;
  });
  return rows;
}

}  // namespace neighborly
