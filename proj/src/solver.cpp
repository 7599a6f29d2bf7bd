#include "neighborly/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "neighborly/construction.hpp"

namespace neighborly {

namespace {

constexpr int kPow3[9] = {1, 3, 9, 27, 81, 243, 729, 2187, 6561};

JokerString decode_rank(int d, int rank) {
  std::uint64_t support = 0, values = 0;
  for (int j = 0; j < d; ++j) {
    int digit = (rank / kPow3[d - 1 - j]) % 3;
    std::uint64_t bit = std::uint64_t{1} << j;
    if (digit == 0) support |= bit;
    else if (digit == 1) { support |= bit; values |= bit; }
  }
  return JokerString::from_masks(d, support, values);
}

using Clock = std::chrono::steady_clock;

struct Bitset {
  static bool empty(const std::uint64_t* p, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
      if (p[w]) return false;
    return true;
  }
  static int first(const std::uint64_t* p, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
      if (p[w]) return static_cast<int>(w * 64) + std::countr_zero(p[w]);
    return -1;
  }
  static void clear(std::uint64_t* p, int v) {
    p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
};

}  // namespace

CompatibilityGraph::CompatibilityGraph(int k, int d) : k_(k), d_(d) {
  if (d < 1) throw InvalidParams("d must be positive, got " + std::to_string(d));
  if (d > kSolverMaxD) throw DimensionTooLarge(d, kSolverMaxD);
  if (k < 1 || k > d)
    throw InvalidParams("k must satisfy 1 <= k <= d, got k=" +
                        std::to_string(k) + ", d=" + std::to_string(d));
  n_ = kPow3[d];
  words_ = static_cast<std::size_t>((n_ + 63) / 64);
  vertices_.reserve(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) vertices_.push_back(decode_rank(d, r));
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int u = 0; u < n_; ++u) {
    const auto& a = vertices_[static_cast<std::size_t>(u)];
    for (int v = u + 1; v < n_; ++v) {
      const auto& b = vertices_[static_cast<std::size_t>(v)];
      int dd = std::popcount(a.support() & b.support() &
                             (a.values() ^ b.values()));
      if (dd >= 1 && dd <= k) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
            std::uint64_t{1} << (v & 63);
        rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |=
            std::uint64_t{1} << (u & 63);
      }
    }
  }
}

int CompatibilityGraph::degree(int v) const {
  int deg = 0;
  for (std::size_t w = 0; w < words_; ++w)
    deg += std::popcount(rows_[static_cast<std::size_t>(v) * words_ + w]);
  return deg;
}

// Tomita-style branch and bound. Vertices are reindexed by descending degree
// (ties by rank) with isolated vertices dropped; each node greedy-colors its
// candidate set and branches highest color first, pruning when the color
// bound cannot beat the incumbent.
struct CliqueSearch {
  const CompatibilityGraph& g;
  int m = 0;
  std::size_t words = 0;
  std::vector<int> to_orig;
  std::vector<std::uint64_t> adj;

  std::vector<std::vector<std::uint64_t>> cand;
  std::vector<std::vector<std::uint64_t>> scratch_q;
  std::vector<std::vector<std::uint64_t>> scratch_c;
  std::vector<std::vector<int>> order_buf;
  std::vector<std::vector<int>> color_buf;

  std::vector<int> current;
  std::vector<int> best;  // new indices
  std::uint64_t best_size = 0;
  bool have_witness = false;

  std::uint64_t nodes = 0;
  bool aborted = false;
  bool has_deadline = false;
  Clock::time_point deadline;

  explicit CliqueSearch(const CompatibilityGraph& graph) : g(graph) {
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) keep.push_back(v);
    std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);  // ties keep rank order
    });
    to_orig = std::move(keep);
    m = static_cast<int>(to_orig.size());
    words = static_cast<std::size_t>((m + 63) / 64);
    // expand() keeps references into these across recursive calls, so the
    // outer vectors must never reallocate; depth is bounded by the clique
    // size, which is at most m.
    std::size_t max_depth = static_cast<std::size_t>(m) + 2;
    cand.reserve(max_depth);
    scratch_q.reserve(max_depth);
    scratch_c.reserve(max_depth);
    order_buf.reserve(max_depth);
    color_buf.reserve(max_depth);
    adj.assign(static_cast<std::size_t>(m) * words, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && g.adjacent(to_orig[static_cast<std::size_t>(i)],
                                 to_orig[static_cast<std::size_t>(j)]))
          adj[static_cast<std::size_t>(i) * words + (j >> 6)] |=
              std::uint64_t{1} << (j & 63);
  }

  void ensure_depth(std::size_t depth) {
    while (cand.size() <= depth) {
      cand.emplace_back(words, 0);
      scratch_q.emplace_back(words, 0);
      scratch_c.emplace_back(words, 0);
      order_buf.emplace_back();
      color_buf.emplace_back();
    }
  }

  void color_sort(std::size_t depth) {
    auto& q = scratch_q[depth];
    auto& c = scratch_c[depth];
    auto& order = order_buf[depth];
    auto& colors = color_buf[depth];
    order.clear();
    colors.clear();
    q = cand[depth];
    int color = 0;
    while (!Bitset::empty(q.data(), words)) {
      ++color;
      c = q;
      while (true) {
        int v = Bitset::first(c.data(), words);
        if (v < 0) break;
        const std::uint64_t* row = &adj[static_cast<std::size_t>(v) * words];
        for (std::size_t w = 0; w < words; ++w) c[w] &= ~row[w];
        Bitset::clear(c.data(), v);
        Bitset::clear(q.data(), v);
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(std::size_t depth) {
    ++nodes;
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
      aborted = true;
      return;
    }
    ensure_depth(depth + 1);
    color_sort(depth);
    auto& order = order_buf[depth];
    auto& colors = color_buf[depth];
    auto& p = cand[depth];
    for (std::size_t i = order.size(); i-- > 0;) {
      if (aborted) return;
      int v = order[i];
      if (current.size() + static_cast<std::size_t>(colors[i]) <= best_size)
        return;
      auto& next = cand[depth + 1];
      const std::uint64_t* row = &adj[static_cast<std::size_t>(v) * words];
      bool next_empty = true;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = p[w] & row[w];
        if (next[w]) next_empty = false;
      }
      current.push_back(v);
      if (current.size() > best_size) {
        best_size = current.size();
        best = current;
        have_witness = true;
      }
      if (!next_empty) expand(depth + 1);
      current.pop_back();
      Bitset::clear(p.data(), v);
    }
  }

  SolveResult run(const SearchConfig& cfg) {
    auto start = Clock::now();
    if (cfg.time_budget_seconds) {
      if (*cfg.time_budget_seconds <= 0)
        throw InvalidParams("time budget must be positive");
      has_deadline = true;
      deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(
                                 *cfg.time_budget_seconds));
    }
    // A one-vertex clique is always available as the baseline incumbent; a
    // trusted external seed raises the bar without materializing a witness.
    if (m > 0) {
      best_size = 1;
      best = {0};
      have_witness = true;
    }
    if (cfg.seed_lower_bound && *cfg.seed_lower_bound > best_size) {
      best_size = *cfg.seed_lower_bound;
      have_witness = false;
      best.clear();
    }
    if (m > 0) {
      ensure_depth(0);
      auto& root = cand[0];
      for (int v = 0; v < m; ++v)
        root[v >> 6] |= std::uint64_t{1} << (v & 63);
      expand(0);
    }
    SolveResult res;
    res.value = best_size;
    res.status = aborted ? SolveStatus::LowerBoundOnly : SolveStatus::Exact;
    res.source = SolveSource::CliqueSearch;
    res.nodes = nodes;
    res.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (cfg.report_witness && have_witness &&
        best.size() == best_size) {
      Family fam(g.d());
      std::vector<int> ids;
      ids.reserve(best.size());
      for (int v : best) ids.push_back(to_orig[static_cast<std::size_t>(v)]);
      std::sort(ids.begin(), ids.end());
      for (int id : ids) fam.add(g.vertex(id));
      res.witness = std::move(fam);
    }
    return res;
  }
};

SolveResult max_clique(const CompatibilityGraph& g, const SearchConfig& cfg) {
  CliqueSearch search(g);
  return search.run(cfg);
}

std::optional<std::uint64_t> closed_form_value(int k, int d) {
  if (d < 1 || k < 1 || k > d)
    throw InvalidParams("need 1 <= k <= d, got k=" + std::to_string(k) +
                        ", d=" + std::to_string(d));
  if (k == 1) return static_cast<std::uint64_t>(d) + 1;
  if (k == d) {
    if (d > 63)
      throw InvalidParams("n(d,d) = 2^d exceeds 64-bit range for d=" +
                          std::to_string(d));
    return std::uint64_t{1} << d;
  }
  if (k == d - 1) return std::uint64_t{3} << (d - 2);
  return std::nullopt;
}

namespace {

Family k1_witness(int d) {
  // {0^d} plus {0^i 1 *^(d-1-i)}: any two members differ in exactly one
  // position where both are binary.
  Family fam(d);
  fam.add(JokerString::from_bits(d, 0));
  for (int i = 0; i < d; ++i) {
    std::string text(static_cast<std::size_t>(i), '0');
    text += '1';
    text.append(static_cast<std::size_t>(d - 1 - i), '*');
    fam.add(JokerString::parse(text));
  }
  return fam;
}

std::optional<Family> closed_form_witness(int k, int d) {
  if (k == 1 && d <= kMaxLength) return k1_witness(d);
  if (k == d && d <= 20) {
    Family fam(d);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v)
      fam.add(JokerString::from_bits(d, v));
    return fam;
  }
  if (k == d - 1 && d % 2 == 0 && d <= 20)
    return build_family(ConstructionParams(d, 1));
  return std::nullopt;
}

}  // namespace

SolveResult exact_n(int k, int d, const SearchConfig& cfg,
                    bool cross_validate) {
  if (d > kMaxLength)
    throw InvalidParams("d must be at most " + std::to_string(kMaxLength));
  auto closed = closed_form_value(k, d);  // validates k, d
  if (closed) {
    SolveResult res;
    res.value = *closed;
    res.status = SolveStatus::Exact;
    res.source = SolveSource::ClosedForm;
    if (cfg.report_witness) res.witness = closed_form_witness(k, d);
    if (cross_validate && d <= kSolverMaxD) {
      CompatibilityGraph g(k, d);
      SearchConfig search_cfg = cfg;
      search_cfg.report_witness = false;
      SolveResult searched = max_clique(g, search_cfg);
      res.nodes = searched.nodes;
      res.elapsed_seconds = searched.elapsed_seconds;
      if (searched.status == SolveStatus::Exact &&
          searched.value != res.value)
        throw std::logic_error(
            "closed form and clique search disagree for n(" +
            std::to_string(k) + "," + std::to_string(d) + "): " +
            std::to_string(res.value) + " vs " +
            std::to_string(searched.value));
      if (searched.status == SolveStatus::LowerBoundOnly &&
          searched.value > res.value)
        throw std::logic_error("clique search exceeds closed form for n(" +
                               std::to_string(k) + "," + std::to_string(d) +
                               ")");
    }
    return res;
  }
  if (d > kSolverMaxD) throw DimensionTooLarge(d, kSolverMaxD);
  CompatibilityGraph g(k, d);
  return max_clique(g, cfg);
}

std::map<std::pair<int, int>, std::uint64_t> certified_exact_table(
    int max_closed_d, int max_search_d, const SearchConfig& cfg) {
  if (max_search_d > kSolverMaxD)
    throw DimensionTooLarge(max_search_d, kSolverMaxD);
  std::map<std::pair<int, int>, std::uint64_t> table;
  for (int d = 1; d <= max_closed_d; ++d) {
    for (int k : {1, d - 1, d}) {
      if (k < 1) continue;
      auto value = closed_form_value(k, d);
      auto [it, inserted] = table.emplace(std::make_pair(k, d), *value);
      if (!inserted && it->second != *value)
        throw std::logic_error("overlapping closed forms disagree");
    }
  }
  for (int d = 1; d <= max_search_d; ++d) {
    for (int k = 1; k <= d; ++k) {
      CompatibilityGraph g(k, d);
      SolveResult res = max_clique(g, cfg);
      if (res.status != SolveStatus::Exact) continue;  // timeout: skip
      auto [it, inserted] = table.emplace(std::make_pair(k, d), res.value);
      if (!inserted && it->second != res.value)
        throw std::logic_error("search disagrees with closed form for n(" +
                               std::to_string(k) + "," + std::to_string(d) +
                               ")");
    }
  }
  return table;
}

}  // namespace neighborly
