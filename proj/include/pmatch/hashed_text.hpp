#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <span>
#include <vector>

#include "pmatch/encoding.hpp"
#include "pmatch/hashing.hpp"

namespace pmatch {

/// Returned by first_mismatch when the window equals the pattern.
inline constexpr std::optional<Position> kNoMismatch = std::nullopt;

/// Prefix hashes of the (mutable) encoded pattern. Substring hashes are O(1)
/// plus the number of live point updates, which the single-mismatch sweep
/// keeps to a handful and always rolls back.
template <std::size_t K>
class BasicPatternHasher {
 public:
  using Residues = detail::Residues<K>;

  BasicPatternHasher(std::span<const Code> codes, const HashConfig& cfg)
      : ctx_(cfg), codes_(codes.begin(), codes.end()), powers_(ctx_.powers(codes.size())) {
    const Code max_code = codes.empty() ? 0 : *std::max_element(codes.begin(), codes.end());
    cfg.validate(max_code);
    prefix_.resize(codes_.size() + 1);
    prefix_[0].fill(0);
    for (std::size_t j = 0; j < codes_.size(); ++j) {
      prefix_[j + 1] = ctx_.add(prefix_[j], ctx_.mul(ctx_.from(codes_[j]), powers_[j]));
    }
    Residues inv_base;
    for (std::size_t k = 0; k < K; ++k) inv_base[k] = modarith::power(ctx_.base[k], ctx_.mod[k] - 2, ctx_.mod[k]);
    inverse_powers_.resize(codes_.size() + 1);
    inverse_powers_[0].fill(1);
    for (std::size_t j = 1; j <= codes_.size(); ++j) inverse_powers_[j] = ctx_.mul(inverse_powers_[j - 1], inv_base);
  }

  std::size_t size() const noexcept { return codes_.size(); }
  Code code(Position pos) const { return codes_.at(pos - 1); }
  std::span<const Code> codes() const noexcept { return codes_; }

  /// Σ_{j=x}^{y} code_j · base^(j-1), i.e. the substring hash scaled by base^(x-1).
  Residues raw(Position x, Position y) const {
    Residues r = ctx_.sub(prefix_[y], prefix_[x - 1]);
    for (const auto& d : overlay_) {
      if (d.pos >= x && d.pos <= y) r = ctx_.add(r, d.delta);
    }
    return r;
  }

  HashValue substring_hash(Position l, Position r) const {
    if (l < 1 || l > r || r > codes_.size()) throw InputError("pattern hash: invalid range");
    return ctx_.to_value(ctx_.mul(raw(l, r), inverse_powers_[l - 1]), r - l + 1);
  }

  HashValue full_hash() const { return ctx_.to_value(raw(1, codes_.size()), codes_.size()); }
  Residues full_raw() const { return raw(1, codes_.size()); }

  void point_update(Position pos, Code code, UndoLog& log) {
    if (pos < 1 || pos > codes_.size()) throw InputError("pattern hash: position out of range");
    log.push_back({pos, codes_[pos - 1]});
    assign(pos, code);
  }

  void rollback(const UndoLog& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) assign(it->pos, it->old_code);
  }

  /// Folds live updates into the prefix array.
  void rebuild() {
    for (std::size_t j = 0; j < codes_.size(); ++j) {
      prefix_[j + 1] = ctx_.add(prefix_[j], ctx_.mul(ctx_.from(codes_[j]), powers_[j]));
    }
    overlay_.clear();
  }

  const detail::Moduli<K>& moduli() const noexcept { return ctx_; }

 private:
  struct Delta {
    Position pos;
    Residues delta;
  };

  void assign(Position pos, Code code) {
    const Code old = codes_[pos - 1];
    if (old == code) return;
    codes_[pos - 1] = code;
    const Residues change = ctx_.mul(ctx_.sub(ctx_.from(code), ctx_.from(old)), powers_[pos - 1]);
    auto it = std::find_if(overlay_.begin(), overlay_.end(), [pos](const Delta& d) { return d.pos == pos; });
    if (it == overlay_.end()) {
      overlay_.push_back({pos, change});
    } else {
      it->delta = ctx_.add(it->delta, change);
      if (std::all_of(it->delta.begin(), it->delta.end(), [](std::uint64_t x) { return x == 0; })) overlay_.erase(it);
    }
    if (overlay_.size() > kMaxOverlay) rebuild();
  }

  static constexpr std::size_t kMaxOverlay = 32;

  detail::Moduli<K> ctx_;
  std::vector<Code> codes_;
  std::vector<Residues> powers_;
  std::vector<Residues> prefix_;
  std::vector<Residues> inverse_powers_;
  std::vector<Delta> overlay_;
};

/// Segment tree over an encoded text. Node [l..r] stores
/// Σ_{j=l}^{r} code_j · base^(j-l); children combine as
/// left + right · base^len(left). The leaf row is padded with zero codes to
/// a power of two, so every node covers a power-of-two range. Single writer.
template <std::size_t K>
class BasicHashSegmentTree {
 public:
  using Residues = detail::Residues<K>;

  BasicHashSegmentTree(std::span<const Code> codes, const HashConfig& cfg)
      : ctx_(cfg),
        codes_(codes.begin(), codes.end()),
        powers_(ctx_.powers(codes.size())),
        leaves_(codes.empty() ? 0 : std::bit_ceil(codes.size())),
        nodes_(2 * leaves_) {
    const Code max_code = codes.empty() ? 0 : *std::max_element(codes.begin(), codes.end());
    cfg.validate(max_code);
    if (leaves_ == 0) return;
    const auto top = ctx_.powers(leaves_ / 2);
    for (std::size_t i = 0; i < codes_.size(); ++i) nodes_[leaves_ + i] = ctx_.from(codes_[i]);
    for (std::size_t node = leaves_ - 1; node >= 1; --node) {
      nodes_[node] = ctx_.add(nodes_[2 * node], ctx_.mul(nodes_[2 * node + 1], top[span(node) / 2]));
    }
    half_powers_.resize(std::bit_width(leaves_));
    for (std::size_t d = 0; d + 1 < half_powers_.size(); ++d) half_powers_[d] = top[(leaves_ >> d) / 2];
  }

  std::size_t size() const noexcept { return codes_.size(); }
  Code code(Position pos) const { return codes_.at(pos - 1); }
  std::span<const Code> codes() const noexcept { return codes_; }

  HashValue root() const {
    if (codes_.empty()) return ctx_.to_value(Residues{}, 0);
    return ctx_.to_value(nodes_[1], codes_.size());
  }

  HashValue range_hash(Position l, Position r) const {
    check_range(l, r);
    return ctx_.to_value(range_residues(l, r), r - l + 1);
  }

  Residues range_residues(Position l, Position r) const {
    Residues acc{};
    std::size_t acc_len = 0;
    for_each_canonical(l, r, [&](std::size_t node) {
      acc = ctx_.add(acc, ctx_.mul(nodes_[node], powers_[acc_len]));
      acc_len += span(node);
      return true;
    });
    return acc;
  }

  void point_update(Position pos, Code code, UndoLog& log) {
    if (pos < 1 || pos > codes_.size()) throw InputError("segment tree: position out of range");
    log.push_back({pos, codes_[pos - 1]});
    assign(pos, code);
  }

  void assign(Position pos, Code code) {
    if (codes_[pos - 1] == code) return;
    codes_[pos - 1] = code;
    std::size_t node = leaves_ + pos - 1;
    nodes_[node] = ctx_.from(code);
    for (std::size_t depth = half_powers_.size() - 1; node > 1;) {
      node /= 2;
      --depth;
      nodes_[node] = ctx_.add(nodes_[2 * node], ctx_.mul(nodes_[2 * node + 1], half_powers_[depth]));
    }
  }

  void rollback(const UndoLog& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) assign(it->pos, it->old_code);
  }

  /// First position j in [start, start+|p|-1] whose code differs from the
  /// aligned pattern code, found by comparing the window's canonical nodes
  /// left to right against pattern substrings and descending into the first
  /// differing one. Exact unless two compared hashes collide.
  std::optional<Position> first_mismatch(Position start, const BasicPatternHasher<K>& pattern) const {
    const std::size_t m = pattern.size();
    if (m == 0) return kNoMismatch;
    if (start < 1 || start - 1 + m > codes_.size()) throw InputError("first_mismatch: window out of range");
    std::optional<Position> hit = kNoMismatch;
    for_each_canonical(start, start + m - 1, [&](std::size_t node) {
      if (same_as_pattern(node, start, pattern)) return true;
      // The leftmost differing child holds the first mismatch.
      while (node < leaves_) node = same_as_pattern(2 * node, start, pattern) ? 2 * node + 1 : 2 * node;
      hit = node - leaves_ + 1;
      return false;
    });
    return hit;
  }

  /// All node residues, for bit-exact state comparison.
  std::span<const Residues> node_residues() const noexcept { return nodes_; }

  const detail::Moduli<K>& moduli() const noexcept { return ctx_; }

 private:
  void check_range(Position l, Position r) const {
    if (l < 1 || l > r || r > codes_.size()) throw InputError("segment tree: invalid range");
  }

  std::size_t span(std::size_t node) const noexcept { return leaves_ >> (std::bit_width(node) - 1); }
  Position first_of(std::size_t node) const noexcept {
    const std::size_t depth = std::bit_width(node) - 1;
    return (node - (std::size_t{1} << depth)) * span(node) + 1;
  }

  // Visits the canonical nodes of [l..r] left to right until `visit` returns false.
  template <typename Visit>
  void for_each_canonical(Position l, Position r, Visit&& visit) const {
    std::array<std::size_t, 64> right{};
    std::size_t right_count = 0;
    for (std::size_t lo = leaves_ + l - 1, hi = leaves_ + r; lo < hi; lo /= 2, hi /= 2) {
      if (lo & 1U) {
        if (!visit(lo++)) return;
      }
      if (hi & 1U) right[right_count++] = --hi;
    }
    while (right_count > 0) {
      if (!visit(right[--right_count])) return;
    }
  }

  // Node against the aligned pattern substring, cross-multiplied.
  bool same_as_pattern(std::size_t node, Position start, const BasicPatternHasher<K>& pattern) const {
    const Position l = first_of(node);
    const Position x = l - start + 1;
    return ctx_.mul(nodes_[node], powers_[x - 1]) == pattern.raw(x, x + span(node) - 1);
  }

  detail::Moduli<K> ctx_;
  std::vector<Code> codes_;
  std::vector<Residues> powers_;
  std::size_t leaves_ = 0;
  std::vector<Residues> nodes_;
  std::vector<Residues> half_powers_;  // base^(span/2) of a node at each depth
};

using HashSegmentTree = BasicHashSegmentTree<2>;
using PatternHasher = BasicPatternHasher<2>;

}  // namespace pmatch
