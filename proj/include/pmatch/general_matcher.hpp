#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "pmatch/alphabet.hpp"
#include "pmatch/convolution.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

struct MatchQuery {
  PString text;
  PString pattern;
  std::size_t k = 0;
};

struct MatchReport {
  std::vector<Position> positions;                   // 1-based window starts with <= k mismatches
  std::vector<std::uint32_t> mismatch_counts;        // one entry per window
};

/// Execution knobs for the general matcher; none of them change the output.
struct GeneralOptions {
  std::size_t threads = 1;
  CountingMethod method = CountingMethod::kAuto;
  std::size_t block_windows = 0;  // 0 = derived from the pattern length
};

namespace detail {

inline std::size_t block_size(const GeneralOptions& opt, std::size_t pattern_size, std::size_t windows) {
  std::size_t block = opt.block_windows;
  if (block == 0) {
    // Segment transforms of length ~ max(4|p|, 4096) keep padding overhead below 2x.
    const std::size_t len = std::bit_ceil(std::max<std::size_t>(4 * pattern_size, 4096));
    block = len - 2 * pattern_size + 2;
  }
  return std::clamp<std::size_t>(block, 1, std::max<std::size_t>(windows, 1));
}

/// Turns one block of alignment counts into per-window mismatch counts.
inline void profile_block(const AlignmentCounts& counts, std::size_t pattern_size, SparseMatcher& matcher,
                          std::vector<WeightedEdge>& edges, std::span<std::uint32_t> out) {
  const std::size_t params = counts.param_count();
  const std::size_t pairs = params * params;
  for (std::size_t w = 0; w < counts.window_count(); ++w) {
    const auto row = counts.row(counts.first_window() + w);
    edges.clear();
    for (std::size_t idx = 0; idx < pairs; ++idx) {
      if (row[idx] != 0) {
        edges.push_back({static_cast<std::uint32_t>(idx / params), static_cast<std::uint32_t>(idx % params), row[idx]});
      }
    }
    Weight matched = matcher.solve(edges);
    for (std::size_t r = pairs; r < row.size(); ++r) matched += row[r];
    out[w] = static_cast<std::uint32_t>(pattern_size - static_cast<std::size_t>(matched));
  }
}

/// Per-window edges taken straight from the aligned positions; used for
/// short patterns where a dense |Σp|² row would dominate.
inline void profile_direct(const Alphabet& alphabet, std::span<const Symbol> text, std::span<const Symbol> pattern,
                           std::size_t start, SparseMatcher& matcher, std::vector<WeightedEdge>& edges,
                           std::vector<std::uint64_t>& keys, std::span<std::uint32_t> out) {
  const std::size_t m = pattern.size();
  for (std::size_t w = 0; w < out.size(); ++w) {
    keys.clear();
    Weight matched = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const Symbol a = text[start + w + k];
      const Symbol b = pattern[k];
      if (alphabet.is_param(a)) {
        if (alphabet.is_param(b)) keys.push_back(std::uint64_t{alphabet.rank(a)} << 32U | alphabet.rank(b));
      } else if (a == b) {
        ++matched;
      }
    }
    std::sort(keys.begin(), keys.end());
    edges.clear();
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      edges.push_back({static_cast<std::uint32_t>(keys[i] >> 32U), static_cast<std::uint32_t>(keys[i]),
                       static_cast<Weight>(j - i)});
      i = j;
    }
    matched += matcher.solve(edges);
    out[w] = static_cast<std::uint32_t>(m - static_cast<std::size_t>(matched));
  }
}

}  // namespace detail

/// Minimum mismatch count of every window t_i..t_{i+|p|-1}, i = 1..|t|-|p|+1.
///
/// Windows are processed in independent blocks: alignment counts for the
/// block (exact convolution or direct counting), then one maximum-weight
/// matching per window. Blocks may run on several threads; the result does
/// not depend on the thread count or block size.
inline std::vector<std::uint32_t> mismatch_profile(const PString& t, const PString& p, const GeneralOptions& opt = {}) {
  detail::validate_pair(t, p);
  const std::size_t windows = t.size() - p.size() + 1;
  std::vector<std::uint32_t> profile(windows, 0);
  if (p.empty()) return profile;

  const Alphabet& alphabet = t.alphabet();
  const CountingMethod method = detail::resolve(opt.method, alphabet, p.size());
  const std::size_t block = detail::block_size(opt, p.size(), windows);
  const std::size_t block_count = (windows + block - 1) / block;

  std::optional<detail::TransformCounter> transform;
  if (method == CountingMethod::kTransform) transform.emplace(alphabet, p.symbols(), block);

  auto worker = [&](std::size_t first_block, std::size_t stride) {
    SparseMatcher matcher;
    std::vector<WeightedEdge> edges;
    std::vector<std::uint64_t> keys;
    for (std::size_t b = first_block; b < block_count; b += stride) {
      const std::size_t start = b * block;
      const std::size_t count = std::min(block, windows - start);
      const auto out = std::span(profile).subspan(start, count);
      if (!transform) {
        detail::profile_direct(alphabet, t.symbols(), p.symbols(), start, matcher, edges, keys, out);
        continue;
      }
      AlignmentCounts counts(start + 1, count, alphabet.param_count(), alphabet.static_count());
      transform->count(t.symbols(), start, counts);
      detail::profile_block(counts, p.size(), matcher, edges, out);
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(opt.threads, 1, block_count);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker, i, threads);
  }
  return profile;
}

/// Every window with at most k mismatches, plus the full profile.
inline MatchReport match_k(const MatchQuery& q, const GeneralOptions& opt = {}) {
  if (q.k > q.pattern.size()) throw InputError("match_k: k exceeds the pattern length");
  MatchReport report;
  report.mismatch_counts = mismatch_profile(q.text, q.pattern, opt);
  for (std::size_t w = 0; w < report.mismatch_counts.size(); ++w) {
    if (report.mismatch_counts[w] <= q.k) report.positions.push_back(w + 1);
  }
  return report;
}

}  // namespace pmatch
