#include "neighborly/construction.hpp"

#include <bit>

#include "neighborly/parallel.hpp"

namespace neighborly {

namespace {

// Binary string of length n from its lexicographic rank (MSB-first: bit
// n-1-j of v becomes character j).
JokerString binary_string(int n, std::uint64_t v) {
  std::uint64_t bits = 0;
  for (int j = 0; j < n; ++j)
    if ((v >> (n - 1 - j)) & 1) bits |= std::uint64_t{1} << j;
  return JokerString::from_bits(n, bits);
}

// Exact C(n, k) for n <= 63; intermediate products stay well inside 128 bits.
unsigned __int128 binom128(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return r;
}

// The prefix constraint of A_eps / B_eps on the lexicographic rank of the
// trailing block: rank bit s-1-j encodes coordinate j of x''.
struct PrefixFilter {
  std::uint64_t mask = 0;
  std::uint64_t want = 0;
  bool accepts(std::uint64_t v) const { return (v & mask) == want; }
};

PrefixFilter prefix_filter(const Epsilon& eps) {
  int s = eps.s();
  int t = t_index(eps);
  PrefixFilter f;
  for (int j = 1; j <= t; ++j) {
    std::uint64_t bit = std::uint64_t{1} << (s - 1 - j);
    f.mask |= bit;
    if (eps.bit(j)) f.want |= bit;
  }
  return f;
}

// |B_eps| without materializing it.
std::uint64_t cell_base_size(const ConstructionParams& p, const Epsilon& eps) {
  int n = p.d - p.s;
  int half = p.d / 2;
  unsigned __int128 total = 0;
  if (eps.is_alpha()) {
    for (int i = 0; i <= half - p.s; ++i) total += binom128(n, i);
  } else if (eps.is_omega()) {
    for (int i = half; i <= n; ++i) total += binom128(n, i);
  } else {
    int t = t_index(eps);
    int fixed_ones = 0;
    for (int j = 1; j <= t; ++j) fixed_ones += eps.bit(j);
    int w = half - p.s + eps.weight();
    total = binom128(n - t, w - fixed_ones);
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

Epsilon::Epsilon(const JokerString& bits) : bits_(bits) {
  if (!bits.is_binary()) throw NotBinary("Epsilon");
}

Epsilon Epsilon::parse(std::string_view text) {
  return Epsilon(JokerString::parse(text));
}

Epsilon Epsilon::alpha(int s) { return Epsilon(JokerString::from_bits(s, 0)); }

Epsilon Epsilon::omega(int s) {
  std::uint64_t all =
      s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  return Epsilon(JokerString::from_bits(s, all));
}

Epsilon Epsilon::from_rank(int s, std::uint64_t rank) {
  if (s < 1 || s > kMaxLength)
    throw LengthOutOfRange("epsilon length out of range: " +
                           std::to_string(s));
  if (s < 64 && (rank >> s) != 0)
    throw InvalidParams("epsilon rank out of range");
  std::uint64_t bits = 0;
  for (int j = 0; j < s; ++j)
    if ((rank >> (s - 1 - j)) & 1) bits |= std::uint64_t{1} << j;
  return Epsilon(JokerString::from_bits(s, bits));
}

int Epsilon::bit(int p) const {
  if (p < 1 || p > s()) throw IndexOutOfRange(p, s());
  return (bits_.values() >> (p - 1)) & 1 ? 1 : 0;
}

std::uint64_t Epsilon::rank() const {
  std::uint64_t r = 0;
  for (int j = 0; j < s(); ++j)
    r = (r << 1) | ((bits_.values() >> j) & 1);
  return r;
}

ConstructionParams::ConstructionParams(int d, int s) : d(d), s(s) {
  if (d < 2 || d % 2 != 0)
    throw InvalidParams("d must be a positive even integer, got " +
                        std::to_string(d));
  if (d > kMaxLength)
    throw InvalidParams("d must be at most " + std::to_string(kMaxLength) +
                        ", got " + std::to_string(d));
  if (s < 1 || s > d / 2)
    throw InvalidParams("s must satisfy 1 <= s <= d/2, got s=" +
                        std::to_string(s) + ", d=" + std::to_string(d));
}

int t_index(const Epsilon& eps) {
  if (eps.is_alpha()) throw ExtremalEpsilon("alpha");
  if (eps.is_omega()) throw ExtremalEpsilon("omega");
  int s = eps.s();
  int last = eps.bit(s);
  for (int p = s - 1; p >= 1; --p)
    if (eps.bit(p) != last) return p;
  throw ExtremalEpsilon("unreachable");  // non-extremal always has a break
}

Family a_cell(const Epsilon& eps) {
  int s = eps.s();
  PrefixFilter f = prefix_filter(eps);  // t_index validates eps
  Family out(s - 1);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (s - 1)); ++v)
    if (f.accepts(v)) out.add(binary_string(s - 1, v));
  return out;
}

Family weight_class(const ConstructionParams& p, int m) {
  if (m < 0 || m > p.s) throw IndexOutOfRange(m, p.s);
  int n = p.d - p.s;
  int half = p.d / 2;
  Family out(n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    int w = std::popcount(v);
    bool in;
    if (m == 0) in = w <= half - p.s;
    else if (m == p.s) in = w >= half;
    else in = w == half - p.s + m;
    if (in) out.add(binary_string(n, v));
  }
  return out;
}

Family b_cell(const ConstructionParams& p, const Epsilon& eps) {
  if (eps.s() != p.s)
    throw InvalidParams("epsilon length " + std::to_string(eps.s()) +
                        " differs from s=" + std::to_string(p.s));
  if (eps.is_alpha()) return weight_class(p, 0);
  if (eps.is_omega()) return weight_class(p, p.s);
  PrefixFilter f = prefix_filter(eps);
  int n = p.d - p.s;
  int w = p.d / 2 - p.s + eps.weight();
  Family out(n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (std::popcount(v) == w && f.accepts(v)) out.add(binary_string(n, v));
  return out;
}

Family star_block(const Epsilon& eps) {
  int s = eps.s();
  std::uint64_t support = eps.bits().values();  // binary exactly where eps_j=1
  int free = eps.weight();
  Family out(s);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << free); ++w) {
    std::uint64_t values = 0;
    int idx = 0;
    for (int j = 0; j < s; ++j) {
      if (!((support >> j) & 1)) continue;
      if ((w >> (free - 1 - idx)) & 1) values |= std::uint64_t{1} << j;
      ++idx;
    }
    out.add(JokerString::from_masks(s, support, values));
  }
  return out;
}

Family c_cell(const ConstructionParams& p, const Epsilon& eps) {
  Family base = b_cell(p, eps);
  Family stars = star_block(eps);
  Family out(p.d);
  for (const auto& b : base)
    for (const auto& w : stars) out.add(concat(b, w));
  return out;
}

Family build_family(const ConstructionParams& p) {
  std::uint64_t expected = lower_bound_formula(p);
  if (expected > kMaxFamilySize)
    throw ResourceLimit("family of size " + std::to_string(expected) +
                        " exceeds the materialization cap " +
                        std::to_string(kMaxFamilySize));
  std::size_t cells = std::size_t{1} << p.s;
  std::vector<Family> parts = parallel_map<Family>(cells, [&](std::size_t r) {
    return c_cell(p, Epsilon::from_rank(p.s, r));
  });
  Family out(p.d);
  for (const auto& part : parts)
    for (const auto& m : part) out.add(m);
  return out;
}

std::uint64_t lower_bound_formula(const ConstructionParams& p) {
  using u128 = unsigned __int128;
  int n = p.d - p.s;
  int half = p.d / 2;
  u128 total = 0;
  for (int i = 0; i <= half - p.s; ++i) total += binom128(n, i);
  for (int k = 1; k <= p.s - 1; ++k)
    total += (u128{1} << k) * binom128(n, half - p.s + k);
  u128 tail = 0;
  for (int i = half; i <= n; ++i) tail += binom128(n, i);
  total += (u128{1} << p.s) * tail;
  return static_cast<std::uint64_t>(total);
}

ConstructionReport construction_report(const ConstructionParams& p,
                                       const Family& family) {
  ConstructionReport rep{p, p.k(), family.size(), lower_bound_formula(p),
                         false, {}};
  rep.match = rep.size == rep.formula;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << p.s); ++r) {
    Epsilon eps = Epsilon::from_rank(p.s, r);
    std::uint64_t base = cell_base_size(p, eps);
    rep.cells.push_back(
        {eps, base << eps.weight()});  // |C_eps| = |B_eps| * 2^{|eps|}
  }
  return rep;
}

}  // namespace neighborly
