#pragma once

// Exact n(k,d) at desk scale. The compatibility graph puts all 3^d joker
// strings on the vertex set (base-3 lexicographic rank order, symbols
// 0 < 1 < *) with an edge exactly when 1 <= dist <= k, so a k-neighborly
// family is a clique and n(k,d) is the clique number. The search is a
// Tomita-style branch and bound with greedy-coloring upper bounds; the three
// closed forms from the literature short-circuit it.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "neighborly/jokerstring.hpp"

namespace neighborly {

inline constexpr int kSolverMaxD = 8;  // 3^8 = 6561 vertices

class CompatibilityGraph {
 public:
  // Throws InvalidParams unless 1 <= k <= d, DimensionTooLarge if d > 8.
  CompatibilityGraph(int k, int d);

  int k() const { return k_; }
  int d() const { return d_; }
  int order() const { return n_; }
  const JokerString& vertex(int v) const { return vertices_[v]; }
  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ +
                  static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) &
           1;
  }
  int degree(int v) const;

 private:
  friend struct CliqueSearch;
  int k_;
  int d_;
  int n_;
  std::size_t words_;  // 64-bit words per adjacency row
  std::vector<JokerString> vertices_;
  std::vector<std::uint64_t> rows_;
};

struct SearchConfig {
  std::optional<double> time_budget_seconds;  // must be > 0 when present
  std::optional<std::uint64_t> seed_lower_bound;
  bool report_witness = false;
};

enum class SolveStatus { Exact, LowerBoundOnly };
enum class SolveSource { ClosedForm, CliqueSearch };

struct SolveResult {
  std::uint64_t value;
  SolveStatus status;
  SolveSource source;
  std::optional<Family> witness;
  std::uint64_t nodes = 0;     // branch-and-bound nodes expanded
  double elapsed_seconds = 0;  // search time (0 for closed forms)
};

// Maximum clique over the compatibility graph. Status Exact means value is
// the true clique number; a timeout downgrades to LowerBoundOnly carrying
// the best clique found. The value is deterministic for a given graph.
SolveResult max_clique(const CompatibilityGraph& g, const SearchConfig& cfg);

// Closed forms: n(1,d) = d+1, n(d,d) = 2^d, n(d-1,d) = 3*2^{d-2} (d >= 2).
// Returns nullopt when no closed form applies. Values need d <= 63 for k=d.
std::optional<std::uint64_t> closed_form_value(int k, int d);

// Closed forms first, otherwise build the graph and search (d <= 8).
// cross_validate additionally runs the search on closed-form instances with
// d <= 8 and throws std::logic_error on disagreement.
// Witnesses for closed forms are materialized when an in-scope construction
// exists (k=1; k=d with d <= 20; k=d-1 with d even); otherwise absent.
SolveResult exact_n(int k, int d, const SearchConfig& cfg,
                    bool cross_validate = false);

// Certified exact values for the bounds tables and the Pascal check:
// closed forms for all d <= max_closed_d, clique search for every (k,d)
// with d <= max_search_d. Search entries overlapping a closed form are
// cross-checked. Key is (k, d).
std::map<std::pair<int, int>, std::uint64_t> certified_exact_table(
    int max_closed_d, int max_search_d, const SearchConfig& cfg = {});

}  // namespace neighborly
