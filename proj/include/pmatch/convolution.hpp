#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pmatch/alphabet.hpp"
#include "pmatch/ntt.hpp"

namespace pmatch {

enum class Side : std::uint8_t { kText, kPattern };

/// 0/1 indicator polynomial of one symbol. Text side: c_i = [t_{i+1} = a].
/// Pattern side is reversed: d_i = [p_{|p|-i} = a].
struct IndicatorPoly {
  std::vector<std::uint32_t> coefficients;
  Side side = Side::kText;
  Symbol symbol = 0;

  bool is_zero() const noexcept {
    for (auto c : coefficients) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Exponents with a non-zero coefficient, ascending.
  std::vector<std::size_t> exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (coefficients[i] != 0) out.push_back(i);
    }
    return out;
  }
};

inline IndicatorPoly build_indicator(const PString& s, Symbol a, Side side) {
  if (!s.alphabet().contains(a)) throw InputError("indicator: symbol is not in the alphabet");
  IndicatorPoly poly{std::vector<std::uint32_t>(s.size(), 0), side, a};
  const auto symbols = s.symbols();
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol at = side == Side::kText ? symbols[i] : symbols[n - 1 - i];
    poly.coefficients[i] = at == a ? 1 : 0;
  }
  return poly;
}

/// Exact product of two non-negative integer polynomials. Every true product
/// coefficient must stay below the NTT modulus; for indicator polynomials the
/// coefficients are bounded by the shorter length.
inline std::vector<std::uint32_t> convolve_exact(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_size = a.size() + b.size() - 1;
  std::vector<std::uint32_t> out(out_size, 0);
  const bool a_zero = std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
  const bool b_zero = std::all_of(b.begin(), b.end(), [](auto c) { return c == 0; });
  if (a_zero || b_zero) return out;
  const ntt::Plan plan(ntt::transform_length(out_size));
  std::vector<std::uint32_t> fa(plan.length(), 0);
  std::vector<std::uint32_t> fb(plan.length(), 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  plan.forward(fa);
  plan.forward(fb);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = ntt::mul(fa[i], fb[i]);
  plan.inverse(fa);
  std::copy_n(fa.begin(), out_size, out.begin());
  return out;
}

inline std::vector<std::uint32_t> convolve_exact(const IndicatorPoly& p, const IndicatorPoly& q) {
  return convolve_exact(p.coefficients, q.coefficients);
}

/// Per-window alignment counts for windows [first_window, first_window + window_count).
///
/// Row layout per window: |Σp|² parameterized pairs (text rank major), then
/// one entry per static symbol counting positions where it faces itself.
class AlignmentCounts {
 public:
  AlignmentCounts() = default;
  AlignmentCounts(Position first_window, std::size_t window_count, std::size_t param_count, std::size_t static_count)
      : first_window_(first_window),
        window_count_(window_count),
        param_count_(param_count),
        static_count_(static_count),
        row_size_(param_count * param_count + static_count),
        data_(window_count * row_size_, 0) {}

  Position first_window() const noexcept { return first_window_; }
  std::size_t window_count() const noexcept { return window_count_; }
  std::size_t param_count() const noexcept { return param_count_; }
  std::size_t static_count() const noexcept { return static_count_; }
  std::size_t row_size() const noexcept { return row_size_; }

  /// Weight of edge (text rank a, pattern rank b) in window `window` (1-based, absolute).
  std::uint32_t pair(std::size_t a, std::size_t b, Position window) const {
    return data_[offset(window) + a * param_count_ + b];
  }
  std::uint32_t static_pair(std::size_t rank, Position window) const {
    return data_[offset(window) + param_count_ * param_count_ + rank];
  }

  std::span<const std::uint32_t> row(Position window) const { return {data_.data() + offset(window), row_size_}; }
  std::span<std::uint32_t> mutable_row(Position window) { return {data_.data() + offset(window), row_size_}; }

  /// Series over all windows for the pair of symbols (a, b); for a static
  /// symbol pass a == b.
  std::vector<std::uint32_t> series(const Alphabet& alphabet, Symbol a, Symbol b) const {
    std::size_t column = 0;
    if (alphabet.is_param(a) && alphabet.is_param(b)) {
      column = alphabet.rank(a) * param_count_ + alphabet.rank(b);
    } else if (alphabet.is_static(a) && a == b) {
      column = param_count_ * param_count_ + alphabet.rank(a);
    } else {
      throw InputError("alignment counts: only parameterized pairs and static singletons are tracked");
    }
    std::vector<std::uint32_t> out(window_count_);
    for (std::size_t w = 0; w < window_count_; ++w) out[w] = data_[w * row_size_ + column];
    return out;
  }

 private:
  std::size_t offset(Position window) const {
    if (window < first_window_ || window >= first_window_ + window_count_) {
      throw InputError("alignment counts: window out of range");
    }
    return (window - first_window_) * row_size_;
  }

  Position first_window_ = 1;
  std::size_t window_count_ = 0;
  std::size_t param_count_ = 0;
  std::size_t static_count_ = 0;
  std::size_t row_size_ = 0;
  std::vector<std::uint32_t> data_;
};

enum class CountingMethod : std::uint8_t {
  kAuto,       // direct when |p| is below the number of tracked pairs, else transform
  kTransform,  // one exact product per tracked pair
  kDirect,     // walk each window; O(|p|) per window
};

namespace detail {

inline void validate_pair(const PString& t, const PString& p) {
  detail::require_same_alphabet(t, p, "alignment counts");
  if (p.size() > t.size()) throw InputError("pattern is longer than the text");
}

inline std::size_t tracked_pairs(const Alphabet& alphabet) {
  return alphabet.param_count() * alphabet.param_count() + alphabet.static_count();
}

inline CountingMethod resolve(CountingMethod method, const Alphabet& alphabet, std::size_t pattern_size) {
  if (method != CountingMethod::kAuto) return method;
  return pattern_size < tracked_pairs(alphabet) ? CountingMethod::kDirect : CountingMethod::kTransform;
}

/// Transform-based counting with pattern transforms shared across calls.
/// All segments processed with one instance use the same transform length.
class TransformCounter {
 public:
  TransformCounter(const Alphabet& alphabet, std::span<const Symbol> pattern, std::size_t max_windows)
      : alphabet_(alphabet),
        m_(pattern.size()),
        plan_(ntt::transform_length(max_windows + 2 * pattern.size() - 2)),
        pattern_hat_(alphabet.param_count() + alphabet.static_count()) {
    for (std::size_t k = 0; k < m_; ++k) {
      const Symbol s = pattern[m_ - 1 - k];
      auto& slot = pattern_hat_[column_of(s)];
      if (slot.empty()) slot.assign(plan_.length(), 0);
      slot[k] = 1;
    }
    for (auto& slot : pattern_hat_) {
      if (!slot.empty()) plan_.forward(slot);
    }
  }

  /// Fills `out` for text windows starting at 0-based offsets
  /// [start, start + out.window_count()).
  void count(std::span<const Symbol> text, std::size_t start, AlignmentCounts& out) const {
    const std::size_t windows = out.window_count();
    const std::size_t segment = windows + m_ - 1;
    const std::size_t params = alphabet_.param_count();
    std::vector<std::vector<std::uint32_t>> text_hat(pattern_hat_.size());
    for (std::size_t i = 0; i < segment; ++i) {
      const std::size_t col = column_of(text[start + i]);
      if (col >= alphabet_.param_count() && pattern_hat_[col].empty()) continue;
      auto& slot = text_hat[col];
      if (slot.empty()) slot.assign(plan_.length(), 0);
      slot[i] = 1;
    }
    for (auto& slot : text_hat) {
      if (!slot.empty()) plan_.forward(slot);
    }
    std::vector<std::uint32_t> product(plan_.length());
    auto multiply_into = [&](std::size_t text_col, std::size_t pattern_col, std::size_t column) {
      const auto& x = text_hat[text_col];
      const auto& y = pattern_hat_[pattern_col];
      if (x.empty() || y.empty()) return;
      for (std::size_t i = 0; i < product.size(); ++i) product[i] = ntt::mul(x[i], y[i]);
      plan_.inverse(product);
      for (std::size_t w = 0; w < windows; ++w) {
        out.mutable_row(out.first_window() + w)[column] = product[m_ - 1 + w];
      }
    };
    for (std::size_t a = 0; a < params; ++a) {
      for (std::size_t b = 0; b < params; ++b) multiply_into(a, b, a * params + b);
    }
    for (std::size_t r = 0; r < alphabet_.static_count(); ++r) {
      multiply_into(params + r, params + r, params * params + r);
    }
  }

 private:
  std::size_t column_of(Symbol s) const {
    return alphabet_.is_param(s) ? alphabet_.rank(s) : alphabet_.param_count() + alphabet_.rank(s);
  }

  const Alphabet& alphabet_;
  std::size_t m_;
  ntt::Plan plan_;
  std::vector<std::vector<std::uint32_t>> pattern_hat_;  // indexed by param rank, then static rank
};

inline void count_direct(const Alphabet& alphabet, std::span<const Symbol> text, std::span<const Symbol> pattern,
                         std::size_t start, AlignmentCounts& out) {
  const std::size_t params = alphabet.param_count();
  for (std::size_t w = 0; w < out.window_count(); ++w) {
    auto row = out.mutable_row(out.first_window() + w);
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      const Symbol a = text[start + w + k];
      const Symbol b = pattern[k];
      if (alphabet.is_param(a)) {
        if (alphabet.is_param(b)) ++row[alphabet.rank(a) * params + alphabet.rank(b)];
      } else if (a == b) {
        ++row[params * params + alphabet.rank(a)];
      }
    }
  }
}

}  // namespace detail

/// Alignment counts for windows [first_window, first_window + window_count).
inline AlignmentCounts alignment_counts(const PString& t, const PString& p, Position first_window,
                                        std::size_t window_count, CountingMethod method = CountingMethod::kTransform) {
  detail::validate_pair(t, p);
  const std::size_t total = t.size() - p.size() + 1;
  if (first_window < 1 || first_window - 1 + window_count > total) {
    throw InputError("alignment counts: window range out of bounds");
  }
  const Alphabet& alphabet = t.alphabet();
  AlignmentCounts out(first_window, window_count, alphabet.param_count(), alphabet.static_count());
  if (window_count == 0 || p.empty()) return out;
  if (detail::resolve(method, alphabet, p.size()) == CountingMethod::kDirect) {
    detail::count_direct(alphabet, t.symbols(), p.symbols(), first_window - 1, out);
  } else {
    detail::TransformCounter(alphabet, p.symbols(), window_count).count(t.symbols(), first_window - 1, out);
  }
  return out;
}

/// Alignment counts for every window 1..|t|-|p|+1, materialized.
inline AlignmentCounts alignment_counts(const PString& t, const PString& p,
                                        CountingMethod method = CountingMethod::kTransform) {
  detail::validate_pair(t, p);
  return alignment_counts(t, p, 1, t.size() - p.size() + 1, method);
}

}  // namespace pmatch
