#pragma once

// Joker strings: words over {0,1,*} of length <= 64, stored bit-parallel.
//
//   support bit i set  <=>  character i is binary (0 or 1)
//   values  bit i set  <=>  character i is 1      (values subset of support)
//
// Character indices are 0-based in the API; bit i corresponds to character i
// (the leftmost character is bit 0). Error messages use 1-based positions.
//
// dist(u,v) counts positions where both strings are binary and disagree:
//   dist = popcount(su & sv & (vu ^ vv))
// which is exactly the number of separating hyperplanes of the corresponding
// boxes, so dist(u,v) = d - intersection_dimension(u,v).

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "neighborly/errors.hpp"

namespace neighborly {

inline constexpr int kMaxLength = 64;

class JokerString {
 public:
  JokerString() : len_(0), support_(0), values_(0) {}

  // Parse from text. Throws InvalidCharacter (1-based position) or
  // LengthOutOfRange if the length is zero or exceeds kMaxLength.
  static JokerString parse(std::string_view text);

  // All-binary string of the given length; bit i of `bits` is character i.
  static JokerString from_bits(int length, std::uint64_t bits);

  // Raw constructor; requires values subset of support and bits above
  // `length` clear.
  static JokerString from_masks(int length, std::uint64_t support,
                                std::uint64_t values);

  int length() const { return len_; }
  std::uint64_t support() const { return support_; }
  std::uint64_t values() const { return values_; }

  char at(int i) const {  // 0-based
    std::uint64_t bit = std::uint64_t{1} << i;
    if (!(support_ & bit)) return '*';
    return (values_ & bit) ? '1' : '0';
  }

  int star_count() const { return len_ - std::popcount(support_); }
  bool is_binary() const { return star_count() == 0; }

  std::string str() const;

  // Lexicographic key under the symbol order 0 < 1 < *.
  unsigned __int128 rank3() const;

  bool operator==(const JokerString&) const = default;

  // Lexicographic comparison (0 < 1 < *); shorter strings first.
  std::strong_ordering operator<=>(const JokerString& o) const {
    if (len_ != o.len_) return len_ <=> o.len_;
    unsigned __int128 a = rank3(), b = o.rank3();
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  JokerString(int len, std::uint64_t support, std::uint64_t values)
      : len_(len), support_(support), values_(values) {}
  int len_;
  std::uint64_t support_;
  std::uint64_t values_;
};

// Number of positions where both strings are binary and differ.
// Throws LengthMismatch on unequal lengths.
int dist(const JokerString& u, const JokerString& v);

// |x| = number of ones; x must be joker-free (throws NotBinary).
int weight(const JokerString& x);

// <x, y> = number of positions where both are 1; both arguments must be
// joker-free. Throws LengthMismatch, NotBinary.
int inner(const JokerString& x, const JokerString& y);

// Coordinatewise complement of a joker-free string; throws NotBinary.
JokerString antipode(const JokerString& x);

// Concatenation; throws LengthOutOfRange if the result exceeds kMaxLength.
JokerString concat(const JokerString& left, const JokerString& right);

// An ordered duplicate-free collection of equal-length strings. The dimension
// is fixed at construction and meaningful even while the family is empty.
class Family {
 public:
  explicit Family(int dimension);

  // Insert at the end; returns false (and leaves the family unchanged) if the
  // member is already present. Throws LengthMismatch on wrong length.
  bool add(const JokerString& s);

  bool contains(const JokerString& s) const;

  int dimension() const { return dimension_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const JokerString& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<JokerString>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  struct Key {
    std::uint64_t support;
    std::uint64_t values;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.support * 0x9e3779b97f4a7c15ULL;
      h ^= k.values + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };
  int dimension_;
  std::vector<JokerString> members_;
  std::unordered_set<Key, KeyHash> seen_;
};

struct Violation {
  std::size_t i;  // member indices, i < j
  std::size_t j;
  int distance;   // the offending dist (0 or > k)
};

struct NeighborlyCheck {
  bool ok;
  std::optional<Violation> violation;  // first (i,j) in member order when !ok
};

// Pairwise 1 <= dist <= k over all member pairs. Families of size <= 1 pass
// by convention. Throws InvalidParams unless 1 <= k <= dimension.
NeighborlyCheck is_k_neighborly(const Family& f, int k);

struct DistanceStats {
  int min;
  int max;
  std::size_t pairs;
};

// Min/max pairwise distance; requires size >= 2 (throws EmptyFamily).
DistanceStats distance_stats(const Family& f);

// Set antipode {antipode(x) : x in A}; every member must be joker-free.
Family antipode(const Family& a);

// max over a in A, b in B of dist(a,b). Both families must be non-empty and
// share a dimension.
int diam(const Family& a, const Family& b);

}  // namespace neighborly
