#pragma once

// Normalized boxes: products of factors from {[0,1/2], [1/2,1], [0,1]},
// in bijection with joker strings via 0 <-> HalfLow, 1 <-> HalfHigh,
// * <-> Full. Factors stay symbolic; no floating point.
//
// Two normalized boxes pass each other in dimension i when their i-th
// factors are the two opposite halves; otherwise they overlap there. The
// intersection is always a nonempty box (the halves share the hyperplane
// x_i = 1/2) whose dimension is the number of overlapping coordinates, so
// intersection_dimension(A, B) = d - dist(u, v) on the string side, and
// a pair of boxes is k-neighborly iff that dimension lies in [d-k, d-1],
// iff 1 <= dist(u, v) <= k.

#include <string>
#include <string_view>
#include <vector>

#include "neighborly/jokerstring.hpp"

namespace neighborly {

enum class Factor : unsigned char { HalfLow, HalfHigh, Full };

class NormalizedBox {
 public:
  explicit NormalizedBox(std::vector<Factor> factors);

  int dimension() const { return static_cast<int>(factors_.size()); }
  Factor factor(int i) const;  // 1-based; throws IndexOutOfRange
  const std::vector<Factor>& factors() const { return factors_; }

  bool operator==(const NormalizedBox&) const = default;

 private:
  std::vector<Factor> factors_;
};

NormalizedBox from_string(const JokerString& u);
JokerString to_string(const NormalizedBox& a);

// True iff {A_i, B_i} = {HalfLow, HalfHigh}. i is 1-based.
// Throws LengthMismatch, IndexOutOfRange.
bool passes(const NormalizedBox& a, const NormalizedBox& b, int i);

// d minus the number of passing dimensions.
int intersection_dimension(const NormalizedBox& a, const NormalizedBox& b);

// Intersection dimension in [d-k, d-1]. Throws InvalidParams unless
// 1 <= k <= d.
bool k_neighborly_boxes(const NormalizedBox& a, const NormalizedBox& b, int k);

// Interval-token rendering used by the CLI `convert` command:
// "[0,.5] [0,1] [.5,1] ...", one token per factor.
std::string_view interval_token(Factor f);
std::string render_box(const NormalizedBox& a);
NormalizedBox parse_box(std::string_view text);  // inverse of render_box

}  // namespace neighborly
