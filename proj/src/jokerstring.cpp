#include "neighborly/jokerstring.hpp"

#include <bit>

namespace neighborly {

JokerString JokerString::parse(std::string_view text) {
  if (text.empty()) throw LengthOutOfRange("empty joker string");
  if (text.size() > kMaxLength)
    throw LengthOutOfRange("joker string longer than " +
                           std::to_string(kMaxLength) + " characters");
  std::uint64_t support = 0, values = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::uint64_t bit = std::uint64_t{1} << i;
    switch (text[i]) {
      case '0': support |= bit; break;
      case '1': support |= bit; values |= bit; break;
      case '*': break;
      default: throw InvalidCharacter(text[i], i + 1);
    }
  }
  return JokerString(static_cast<int>(text.size()), support, values);
}

JokerString JokerString::from_bits(int length, std::uint64_t bits) {
  if (length < 1 || length > kMaxLength)
    throw LengthOutOfRange("length out of range: " + std::to_string(length));
  std::uint64_t mask =
      length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  if (bits & ~mask) throw InvalidParams("bits set beyond length");
  return JokerString(length, mask, bits);
}

JokerString JokerString::from_masks(int length, std::uint64_t support,
                                    std::uint64_t values) {
  if (length < 1 || length > kMaxLength)
    throw LengthOutOfRange("length out of range: " + std::to_string(length));
  std::uint64_t mask =
      length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  if ((support & ~mask) || (values & ~support))
    throw InvalidParams("inconsistent support/values masks");
  return JokerString(length, support, values);
}

std::string JokerString::str() const {
  std::string out(static_cast<std::size_t>(len_), '*');
  for (int i = 0; i < len_; ++i) out[static_cast<std::size_t>(i)] = at(i);
  return out;
}

unsigned __int128 JokerString::rank3() const {
  unsigned __int128 r = 0;
  for (int i = 0; i < len_; ++i) {
    std::uint64_t bit = std::uint64_t{1} << i;
    unsigned digit = (support_ & bit) ? ((values_ & bit) ? 1u : 0u) : 2u;
    r = r * 3 + digit;
  }
  return r;
}

int dist(const JokerString& u, const JokerString& v) {
  if (u.length() != v.length())
    throw LengthMismatch(static_cast<std::size_t>(u.length()),
                         static_cast<std::size_t>(v.length()));
  return std::popcount(u.support() & v.support() & (u.values() ^ v.values()));
}

int weight(const JokerString& x) {
  if (!x.is_binary()) throw NotBinary("weight");
  return std::popcount(x.values());
}

int inner(const JokerString& x, const JokerString& y) {
  if (x.length() != y.length())
    throw LengthMismatch(static_cast<std::size_t>(x.length()),
                         static_cast<std::size_t>(y.length()));
  if (!x.is_binary() || !y.is_binary()) throw NotBinary("inner");
  return std::popcount(x.values() & y.values());
}

JokerString antipode(const JokerString& x) {
  if (!x.is_binary()) throw NotBinary("antipode");
  return JokerString::from_masks(x.length(), x.support(),
                                 x.support() & ~x.values());
}

Family antipode(const Family& a) {
  Family out(a.dimension());
  for (const auto& x : a) out.add(antipode(x));
  return out;
}

JokerString concat(const JokerString& left, const JokerString& right) {
  int n = left.length() + right.length();
  if (n > kMaxLength)
    throw LengthOutOfRange("concatenation exceeds " +
                           std::to_string(kMaxLength) + " characters");
  int shift = left.length();
  return JokerString::from_masks(
      n, left.support() | (right.support() << shift),
      left.values() | (right.values() << shift));
}

Family::Family(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > kMaxLength)
    throw LengthOutOfRange("family dimension out of range: " +
                           std::to_string(dimension));
}

bool Family::add(const JokerString& s) {
  if (s.length() != dimension_)
    throw LengthMismatch(static_cast<std::size_t>(dimension_),
                         static_cast<std::size_t>(s.length()));
  if (!seen_.insert(Key{s.support(), s.values()}).second) return false;
  members_.push_back(s);
  return true;
}

bool Family::contains(const JokerString& s) const {
  if (s.length() != dimension_) return false;
  return seen_.contains(Key{s.support(), s.values()});
}

NeighborlyCheck is_k_neighborly(const Family& f, int k) {
  if (k < 1 || k > f.dimension())
    throw InvalidParams("k must satisfy 1 <= k <= dimension, got k=" +
                        std::to_string(k) + ", dimension=" +
                        std::to_string(f.dimension()));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      int dd = dist(f[i], f[j]);
      if (dd < 1 || dd > k) return {false, Violation{i, j, dd}};
    }
  }
  return {true, std::nullopt};
}

DistanceStats distance_stats(const Family& f) {
  if (f.size() < 2) throw EmptyFamily("distance_stats");
  DistanceStats st{f.dimension() + 1, -1, 0};
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      int dd = dist(f[i], f[j]);
      st.min = std::min(st.min, dd);
      st.max = std::max(st.max, dd);
      ++st.pairs;
    }
  }
  return st;
}

int diam(const Family& a, const Family& b) {
  if (a.empty() || b.empty()) throw EmptyFamily("diam");
  if (a.dimension() != b.dimension())
    throw LengthMismatch(static_cast<std::size_t>(a.dimension()),
                         static_cast<std::size_t>(b.dimension()));
  int best = 0;
  for (const auto& u : a)
    for (const auto& v : b) best = std::max(best, dist(u, v));
  return best;
}

}  // namespace neighborly
