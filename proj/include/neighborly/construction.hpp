#pragma once

// The Theorem 1 pipeline. For even d and 1 <= s <= d/2, a sign vector
// epsilon in I^s selects:
//
//   t(epsilon)   the unique i with eps_i != eps_{i+1} = ... = eps_s
//                (undefined for alpha = 0...0 and omega = 1...1)
//   A_eps        {eps_1} x ... x {eps_i} x I^{s-1-i}  in I^{s-1}
//   X_m          weight classes partitioning I^{d-s}:
//                X_0 = {|x| <= d/2 - s}, X_m = {|x| = d/2 - s + m} for
//                0 < m < s, X_s = {|x| >= d/2}
//   B_eps        X_{|eps|} cut down to strings whose last s-1 coordinates
//                lie in A_eps; B_alpha = X_0, B_omega = X_s
//   C_eps        B_eps x *^eps, where *^eps expands coordinate j to {0,1}
//                when eps_j = 1 and to {*} when eps_j = 0
//
// build_family is the union over all 2^s cells; its size is
// lower_bound_formula(d, s) and it is (d-s)-neighborly.
//
// Coordinate split: x in I^{d-s} is (x', x'') with x' the first d-2s+1 and
// x'' the last s-1 coordinates. The X_0 upper limit follows the set
// definition, |x| <= d/2 - s; the proof's "d/2-s-1" bullet is a typo (the
// assembled size matches the Theorem 1 statement, which the tests pin).

#include <cstdint>
#include <string_view>
#include <vector>

#include "neighborly/jokerstring.hpp"

namespace neighborly {

class Epsilon {
 public:
  // bits must be joker-free, length s in [1, 64].
  explicit Epsilon(const JokerString& bits);
  static Epsilon parse(std::string_view text);
  static Epsilon alpha(int s);
  static Epsilon omega(int s);
  // rank runs over [0, 2^s) in lexicographic order, eps_1 most significant.
  static Epsilon from_rank(int s, std::uint64_t rank);

  int s() const { return bits_.length(); }
  int bit(int p) const;  // eps_p, 1-based; throws IndexOutOfRange
  int weight() const { return std::popcount(bits_.values()); }
  bool is_alpha() const { return bits_.values() == 0; }
  bool is_omega() const { return weight() == s(); }
  bool is_extremal() const { return is_alpha() || is_omega(); }
  Epsilon complement() const { return Epsilon(antipode(bits_)); }
  std::uint64_t rank() const;
  const JokerString& bits() const { return bits_; }
  std::string str() const { return bits_.str(); }

  bool operator==(const Epsilon&) const = default;

 private:
  JokerString bits_;
};

struct ConstructionParams {
  int d;
  int s;
  // Throws InvalidParams unless d is even, d >= 2, 1 <= s <= d/2, d <= 64.
  ConstructionParams(int d, int s);
  int k() const { return d - s; }
};

// The unique i in [1, s-1] with eps_i != eps_{i+1} = ... = eps_s.
// Throws ExtremalEpsilon for alpha and omega.
int t_index(const Epsilon& eps);

// A_eps as a family over I^{s-1}, lexicographic order. Requires s >= 2 and
// eps non-extremal.
Family a_cell(const Epsilon& eps);

// X_m over I^{d-s}, lexicographic order. Throws IndexOutOfRange unless
// 0 <= m <= s.
Family weight_class(const ConstructionParams& p, int m);

// B_eps over I^{d-s}, lexicographic order. eps.s() must equal p.s.
Family b_cell(const ConstructionParams& p, const Epsilon& eps);

// The expansion of *^eps: 2^{weight(eps)} strings of length s, binary where
// eps is 1, '*' where eps is 0, lexicographic order.
Family star_block(const Epsilon& eps);

// C_eps = B_eps x *^eps over {0,1,*}^d, lexicographic order.
Family c_cell(const ConstructionParams& p, const Epsilon& eps);

// Union of all cells C_eps, cells in lexicographic epsilon order (alpha
// first, omega last), members within a cell in lexicographic string order.
// Parallel cell construction merges by epsilon rank, so the order is
// independent of thread count. Throws ResourceLimit when the resulting
// family would exceed the materialization cap.
Family build_family(const ConstructionParams& p);

// Largest family size this module will materialize (~4M members).
inline constexpr std::uint64_t kMaxFamilySize = std::uint64_t{1} << 22;

// The Theorem 1 sum. Exact integer arithmetic; fits uint64 for d <= 64.
std::uint64_t lower_bound_formula(const ConstructionParams& p);

struct CellSummary {
  Epsilon eps;
  std::uint64_t size;
};

struct ConstructionReport {
  ConstructionParams params;
  int k;                 // d - s
  std::uint64_t size;    // |build_family|
  std::uint64_t formula; // lower_bound_formula(d, s)
  bool match;            // size == formula
  std::vector<CellSummary> cells;
};

// Builds the family, checks the count identity, and returns per-cell sizes.
ConstructionReport construction_report(const ConstructionParams& p,
                                       const Family& family);

}  // namespace neighborly
