#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "pmatch/alphabet.hpp"

namespace pmatch {

using Weight = std::int64_t;

/// Square bipartite graph over the parameterized alphabet (left = text side,
/// right = pattern side), dense row-major weights.
struct SymbolGraph {
  std::size_t size = 0;
  std::vector<Weight> weights;

  SymbolGraph() = default;
  explicit SymbolGraph(std::size_t n) : size(n), weights(n * n, 0) {}

  Weight& at(std::size_t a, std::size_t b) { return weights[a * size + b]; }
  Weight at(std::size_t a, std::size_t b) const { return weights[a * size + b]; }
};

struct MatchingResult {
  Weight value = 0;
  /// assignment[a] = matched right vertex, or -1. Zero-weight pairs are left unmatched.
  std::vector<std::ptrdiff_t> assignment;
};

namespace detail {

/// Hungarian algorithm (potentials + shortest augmenting paths) maximizing
/// total weight on a rows x cols matrix with rows <= cols. Returns the column
/// assigned to every row.
inline std::vector<std::size_t> hungarian_max(std::size_t rows, std::size_t cols, std::span<const Weight> w,
                                              std::size_t stride) {
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  // 1-based internals; column 0 is the virtual root of each augmenting search.
  std::vector<Weight> u(rows + 1, 0), v(cols + 1, 0), min_slack(cols + 1);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);
  std::vector<char> used(cols + 1);
  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      Weight delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const Weight cur = -w[(i0 - 1) * stride + (j - 1)] - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) row_to_col[owner[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace detail

/// Maximum-weight matching of a square graph with non-negative weights.
/// O(n³). Any optimal assignment may be returned.
inline MatchingResult max_weight_matching(const SymbolGraph& g) {
  if (g.weights.size() != g.size * g.size) throw InputError("matching: weight matrix has the wrong shape");
  for (Weight x : g.weights) {
    if (x < 0) throw InputError("matching: negative weight");
  }
  MatchingResult result;
  result.assignment.assign(g.size, -1);
  if (g.size == 0) return result;
  const auto row_to_col = detail::hungarian_max(g.size, g.size, g.weights, g.size);
  for (std::size_t a = 0; a < g.size; ++a) {
    const Weight x = g.at(a, row_to_col[a]);
    if (x > 0) {
      result.assignment[a] = static_cast<std::ptrdiff_t>(row_to_col[a]);
      result.value += x;
    }
  }
  return result;
}

struct WeightedEdge {
  std::uint32_t left;
  std::uint32_t right;
  Weight weight;
};

/// Maximum-weight matching value for sparse graphs given as an edge list
/// (no duplicate (left, right) pairs, positive weights). Splits the graph into
/// connected components; single-edge and star components are solved
/// directly, the rest with the Hungarian algorithm on the compacted block.
/// Holds scratch buffers, so one instance per thread.
class SparseMatcher {
 public:
  Weight solve(std::span<const WeightedEdge> edges) {
    if (edges.empty()) return 0;
    // Compact vertex ids: left vertices first, then right.
    left_ids_.clear();
    right_ids_.clear();
    for (const auto& e : edges) {
      left_ids_.push_back(e.left);
      right_ids_.push_back(e.right);
    }
    sort_unique(left_ids_);
    sort_unique(right_ids_);
    const std::size_t nl = left_ids_.size();
    const std::size_t nodes = nl + right_ids_.size();
    parent_.resize(nodes);
    std::iota(parent_.begin(), parent_.end(), 0);
    local_.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto l = index_of(left_ids_, edges[k].left);
      const auto r = nl + index_of(right_ids_, edges[k].right);
      local_[k] = {static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r), edges[k].weight};
      unite(l, r);
    }
    component_of_.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) component_of_[k] = find(local_[k].left);
    order_.resize(edges.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t x, std::size_t y) { return component_of_[x] < component_of_[y]; });
    Weight total = 0;
    for (std::size_t begin = 0; begin < order_.size();) {
      std::size_t end = begin;
      while (end < order_.size() && component_of_[order_[end]] == component_of_[order_[begin]]) ++end;
      total += solve_component(std::span<const std::size_t>(order_).subspan(begin, end - begin));
      begin = end;
    }
    return total;
  }

 private:
  Weight solve_component(std::span<const std::size_t> edge_ids) {
    if (edge_ids.size() == 1) return local_[edge_ids[0]].weight;
    rows_.clear();
    cols_.clear();
    for (auto k : edge_ids) {
      rows_.push_back(local_[k].left);
      cols_.push_back(local_[k].right);
    }
    sort_unique(rows_);
    sort_unique(cols_);
    if (rows_.size() == 1 || cols_.size() == 1) {
      Weight best = 0;
      for (auto k : edge_ids) best = std::max(best, local_[k].weight);
      return best;
    }
    const bool transpose = rows_.size() > cols_.size();
    const std::size_t r = transpose ? cols_.size() : rows_.size();
    const std::size_t c = transpose ? rows_.size() : cols_.size();
    block_.assign(r * c, 0);
    for (auto k : edge_ids) {
      const std::size_t li = index_of(rows_, local_[k].left);
      const std::size_t ri = index_of(cols_, local_[k].right);
      block_[transpose ? ri * c + li : li * c + ri] = local_[k].weight;
    }
    const auto row_to_col = detail::hungarian_max(r, c, block_, c);
    Weight value = 0;
    for (std::size_t i = 0; i < r; ++i) value += block_[i * c + row_to_col[i]];
    return value;
  }

  template <typename T>
  static void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  template <typename T, typename U>
  static std::size_t index_of(const std::vector<T>& sorted, U value) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), static_cast<T>(value)) - sorted.begin());
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::vector<std::uint32_t> left_ids_, right_ids_, rows_, cols_;
  std::vector<std::size_t> parent_, order_, component_of_;
  std::vector<WeightedEdge> local_;
  std::vector<Weight> block_;
};

/// Minimum number of aligned positions to discard from both equal-length
/// strings before they p-match: ℓ − (mwm over parameterized pairs + equal
/// static alignments). A static facing anything else is a forced mismatch.
inline std::size_t min_mismatches(const PString& x, const PString& y) {
  detail::require_same_alphabet(x, y, "min_mismatches");
  if (x.size() != y.size()) throw InputError("min_mismatches: strings differ in length");
  const Alphabet& alphabet = x.alphabet();
  SymbolGraph g(alphabet.param_count());
  std::size_t static_hits = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Symbol a = x.symbols()[i];
    const Symbol b = y.symbols()[i];
    if (alphabet.is_param(a) && alphabet.is_param(b)) {
      ++g.at(alphabet.rank(a), alphabet.rank(b));
    } else if (alphabet.is_static(a) && a == b) {
      ++static_hits;
    }
  }
  const auto matched = static_cast<std::size_t>(max_weight_matching(g).value) + static_hits;
  return x.size() - matched;
}

}  // namespace pmatch
