#pragma once

#include <optional>
#include <vector>

#include "pmatch/alphabet.hpp"
#include "pmatch/encoding.hpp"
#include "pmatch/hashed_text.hpp"

namespace pmatch {

struct WindowVerdict {
  bool matched = false;
  std::optional<Position> discarded;  // set only for a match that needed one discard

  bool operator==(const WindowVerdict&) const = default;
};

/// Decides whether two equal-length strings p-match with at most one
/// mismatch, working on their prev-occurrence encodings.
///
/// Equal encodings match outright. Otherwise let i be the first differing
/// position: discarding i is tried first; failing that (from the original
/// encodings again), when exactly one of t_i, p_i has an earlier occurrence
/// that occurrence is discarded instead. A static symbol at i, or earlier
/// occurrences on both sides, rules out a match.
inline WindowVerdict equal_length_match(const PString& t, const PString& p) {
  detail::require_same_alphabet(t, p, "equal_length_match");
  if (t.size() != p.size()) throw InputError("equal_length_match: strings differ in length");
  const auto base = static_cast<Code>(t.size() + 1);
  EncodedString te = encode(t, base);
  EncodedString pe = encode(p, base);
  if (te == pe) return {true, std::nullopt};

  Position i = 1;
  while (te.code(i) == pe.code(i)) ++i;
  const OccurrenceIndex t_occ = occurrence_index(t);
  const OccurrenceIndex p_occ = occurrence_index(p);

  UndoLog t_log;
  UndoLog p_log;
  discard_in_place(te, i, t_occ, t_log);
  discard_in_place(pe, i, p_occ, p_log);
  if (te == pe) return {true, i};
  revert(te, t_log);
  revert(pe, p_log);

  if (te.is_static_code(te.code(i)) || pe.is_static_code(pe.code(i))) return {};
  const OptPosition j1 = t_occ.prev(i);
  const OptPosition j2 = p_occ.prev(i);
  if ((j1 == kNoPosition) == (j2 == kNoPosition)) return {};
  const auto d = static_cast<Position>(j1 == kNoPosition ? j2 : j1);
  t_log.clear();
  p_log.clear();
  discard_in_place(te, d, t_occ, t_log);
  discard_in_place(pe, d, p_occ, p_log);
  if (te == pe) return {true, d};
  return {};
}

/// Codes used by the sliding matcher for a pattern of length m: distances
/// below m are kept, larger ones (never visible inside a window) collapse to
/// m, and static symbols take m+1+rank. Inside any window the codes equal
/// the window's own encoding with static base m+1.
inline std::vector<Code> window_codes(const Alphabet& alphabet, std::span<const Symbol> symbols, std::size_t m) {
  const EncodedString full = encode(alphabet, symbols, static_cast<Code>(symbols.size() + 1));
  const auto far = static_cast<Code>(m);
  std::vector<Code> out(full.codes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Code c = full.codes[i];
    out[i] = full.is_static_code(c) ? far + 1 + (c - full.static_base) : std::min(c, far);
  }
  return out;
}

/// Sliding single-mismatch matcher over one text/pattern pair.
///
/// The segment tree holds the text codes consistent with the current suffix
/// t_w..t_n; each window is decided with hash comparisons, first-mismatch
/// descent and transactional discards that are rolled back before the next
/// window. Owns its tree and pattern hasher; not thread-safe.
template <std::size_t K>
class SingleMismatchMatcher {
 public:
  SingleMismatchMatcher(const PString& t, const PString& p, const HashConfig& cfg)
      : m_(validated_size(t, p)),
        static_base_(static_cast<Code>(m_ + 1)),
        far_(static_cast<Code>(m_)),
        text_(t),
        tree_(window_codes(t.alphabet(), t.symbols(), m_), cfg),
        pattern_(window_codes(p.alphabet(), p.symbols(), m_), cfg),
        text_next_(occurrence_index(t).nexts),
        pattern_next_(occurrence_index(p).nexts),
        windows_(t.size() - m_ + 1) {}

  std::size_t window_count() const noexcept { return windows_; }
  /// Next window to be decided (1-based); window_count()+1 when finished.
  Position current() const noexcept { return next_window_; }
  bool done() const noexcept { return next_window_ > windows_; }

  /// Decides window current() and advances.
  WindowVerdict step() {
    const Position w = next_window_++;
    if (w >= 2) slide_past(w - 1);
    return decide(w);
  }

  const BasicHashSegmentTree<K>& tree() const noexcept { return tree_; }
  const BasicPatternHasher<K>& pattern() const noexcept { return pattern_; }

 private:
  static std::size_t validated_size(const PString& t, const PString& p) {
    detail::require_same_alphabet(t, p, "match_single");
    if (p.size() > t.size()) throw InputError("pattern is longer than the text");
    return p.size();
  }

  // Position `gone` leaves the suffix: its next occurrence becomes a first occurrence.
  void slide_past(Position gone) {
    if (!text_.alphabet().is_param(text_.symbols()[gone - 1])) return;
    const OptPosition j = text_next_[gone - 1];
    if (j != kNoPosition) tree_.assign(static_cast<Position>(j), 0);
  }

  bool window_equals_pattern(Position w) const {
    if (m_ == 0) return true;
    return tree_.range_residues(w, w + m_ - 1) == pattern_.full_raw();
  }

  void discard_text(Position pos, UndoLog& log) {
    const Code old = tree_.code(pos);
    tree_.point_update(pos, 0, log);
    if (old >= static_base_) return;
    const OptPosition next = text_next_[pos - 1];
    if (next == kNoPosition) return;
    tree_.point_update(static_cast<Position>(next), relinked(pos, old, next), log);
  }

  void discard_pattern(Position pos, UndoLog& log) {
    const Code old = pattern_.code(pos);
    pattern_.point_update(pos, 0, log);
    if (old >= static_base_) return;
    const OptPosition next = pattern_next_[pos - 1];
    if (next == kNoPosition) return;
    pattern_.point_update(static_cast<Position>(next), relinked(pos, old, next), log);
  }

  // New code of `next` once `pos` (live code `old`, inside the window) is discarded.
  Code relinked(Position pos, Code old, OptPosition next) const {
    if (old == 0) return 0;
    const auto prev = static_cast<OptPosition>(pos - old);
    return static_cast<Code>(std::min<OptPosition>(next - prev, far_));
  }

  // Discards window-relative position d in both strings, tests, rolls back.
  bool matches_without(Position w, Position d) {
    text_log_.clear();
    pattern_log_.clear();
    discard_text(w + d - 1, text_log_);
    discard_pattern(d, pattern_log_);
    const bool equal = window_equals_pattern(w);
    tree_.rollback(text_log_);
    pattern_.rollback(pattern_log_);
    return equal;
  }

  WindowVerdict decide(Position w) {
    if (window_equals_pattern(w)) return {true, std::nullopt};
    const auto mismatch = tree_.first_mismatch(w, pattern_);
    if (!mismatch) return {true, std::nullopt};
    const Position j = *mismatch;
    const Position q = j - w + 1;
    if (matches_without(w, q)) return {true, j};

    const Code tc = tree_.code(j);
    const Code pc = pattern_.code(q);
    if (tc >= static_base_ || pc >= static_base_) return {};
    const bool text_has_prev = tc != 0;
    const bool pattern_has_prev = pc != 0;
    if (text_has_prev == pattern_has_prev) return {};
    const Position d = q - (text_has_prev ? tc : pc);
    if (matches_without(w, d)) return {true, w + d - 1};
    return {};
  }

  std::size_t m_;
  Code static_base_;
  Code far_;
  PString text_;
  BasicHashSegmentTree<K> tree_;
  BasicPatternHasher<K> pattern_;
  std::vector<OptPosition> text_next_;
  std::vector<OptPosition> pattern_next_;
  std::size_t windows_;
  Position next_window_ = 1;
  UndoLog text_log_;
  UndoLog pattern_log_;
};

template <std::size_t K>
std::vector<WindowVerdict> match_single_verdicts_with(const PString& t, const PString& p, const HashConfig& cfg) {
  SingleMismatchMatcher<K> matcher(t, p, cfg);
  std::vector<WindowVerdict> out;
  out.reserve(matcher.window_count());
  while (!matcher.done()) out.push_back(matcher.step());
  return out;
}

/// Per-window verdicts of the sliding matcher; `discarded` is a text position.
inline std::vector<WindowVerdict> match_single_verdicts(const PString& t, const PString& p, const HashConfig& cfg) {
  return cfg.moduli() == 2 ? match_single_verdicts_with<2>(t, p, cfg) : match_single_verdicts_with<1>(t, p, cfg);
}

/// entry i-1 is true iff window t_i..t_{i+|p|-1} p-matches p with at most
/// one mismatch (up to hash collisions).
inline std::vector<bool> match_single(const PString& t, const PString& p, const HashConfig& cfg) {
  std::vector<bool> out;
  auto run = [&]<std::size_t K>() {
    SingleMismatchMatcher<K> matcher(t, p, cfg);
    out.reserve(matcher.window_count());
    while (!matcher.done()) out.push_back(matcher.step().matched);
  };
  if (cfg.moduli() == 2) {
    run.template operator()<2>();
  } else {
    run.template operator()<1>();
  }
  return out;
}

/// Largest code the sliding matcher feeds to the hash (base must exceed it).
inline std::uint64_t single_max_code(const Alphabet& alphabet, std::size_t m) {
  return m + alphabet.static_count();
}

}  // namespace pmatch
