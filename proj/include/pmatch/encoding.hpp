#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmatch/alphabet.hpp"

namespace pmatch {

using Code = std::uint32_t;

/// Prev-occurrence encoding of a parameterized string.
///
/// A parameterized symbol encodes as 0 on its first occurrence and as the
/// distance back to its previous occurrence otherwise. A static symbol of
/// rank r encodes as `static_base + r`. Distances never exceed the string
/// length, so the two code ranges are disjoint whenever
/// `static_base >= size()`. Two strings p-match iff their encodings (built
/// with the same static base) are equal.
struct EncodedString {
  std::vector<Code> codes;  // 0-based storage; code(pos) is 1-based
  Code static_base = 0;

  std::size_t size() const noexcept { return codes.size(); }
  Code code(Position pos) const { return codes.at(pos - 1); }
  bool is_static_code(Code c) const noexcept { return c >= static_base; }

  bool operator==(const EncodedString&) const = default;
};

/// Encodes a raw symbol sequence; used by the matchers on windows and suffixes.
inline EncodedString encode(const Alphabet& alphabet, std::span<const Symbol> symbols, Code static_base) {
  if (static_base < symbols.size()) throw InputError("encode: static base overlaps distance codes");
  EncodedString out;
  out.static_base = static_base;
  out.codes.resize(symbols.size());
  std::vector<std::ptrdiff_t> last(alphabet.param_count(), -1);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const Symbol s = symbols[i];
    switch (alphabet.kind(s)) {
      case SymbolKind::kStatic:
        out.codes[i] = static_base + alphabet.rank(s);
        break;
      case SymbolKind::kParam: {
        std::ptrdiff_t& prev = last[alphabet.rank(s)];
        out.codes[i] = prev < 0 ? 0 : static_cast<Code>(static_cast<std::ptrdiff_t>(i) - prev);
        prev = static_cast<std::ptrdiff_t>(i);
        break;
      }
      case SymbolKind::kAbsent:
        throw InputError("encode: symbol at position " + std::to_string(i + 1) + " is not in the alphabet");
    }
  }
  return out;
}

inline EncodedString encode(const PString& s, Code static_base) {
  return encode(s.alphabet(), s.symbols(), static_base);
}

/// Encodes with the default static base `|s| + 1`.
inline EncodedString encode(const PString& s) {
  return encode(s, static_cast<Code>(s.size() + 1));
}

/// prev/next occurrence of the same symbol, 1-based, kNoPosition when absent.
struct OccurrenceIndex {
  std::vector<OptPosition> prevs;
  std::vector<OptPosition> nexts;

  std::size_t size() const noexcept { return prevs.size(); }
  OptPosition prev(Position pos) const { return prevs.at(pos - 1); }
  OptPosition next(Position pos) const { return nexts.at(pos - 1); }
};

inline OccurrenceIndex occurrence_index(std::span<const Symbol> symbols) {
  OccurrenceIndex occ;
  occ.prevs.assign(symbols.size(), kNoPosition);
  occ.nexts.assign(symbols.size(), kNoPosition);
  Symbol max_symbol = 0;
  for (Symbol s : symbols) max_symbol = std::max(max_symbol, s);
  std::vector<OptPosition> last(symbols.empty() ? 0 : std::size_t{max_symbol} + 1, kNoPosition);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto pos = static_cast<OptPosition>(i + 1);
    OptPosition& prev = last[symbols[i]];
    if (prev != kNoPosition) {
      occ.prevs[i] = prev;
      occ.nexts[static_cast<std::size_t>(prev - 1)] = pos;
    }
    prev = pos;
  }
  return occ;
}

inline OccurrenceIndex occurrence_index(const PString& s) { return occurrence_index(s.symbols()); }

struct UndoEntry {
  Position pos;
  Code old_code;
};

/// Point rewrites in application order; revert() replays them backwards.
using UndoLog = std::vector<UndoEntry>;

inline void revert(EncodedString& enc, const UndoLog& log) {
  for (auto it = log.rbegin(); it != log.rend(); ++it) enc.codes[it->pos - 1] = it->old_code;
}

/// Discards position `pos` of one encoded string in place: the position
/// becomes 0 and, for a parameterized symbol, the next occurrence is
/// re-linked to the previous one (or becomes a first occurrence).
inline void discard_in_place(EncodedString& enc, Position pos, const OccurrenceIndex& occ, UndoLog& log) {
  if (pos < 1 || pos > enc.size()) throw InputError("discard: position out of range");
  const Code old = enc.codes[pos - 1];
  log.push_back({pos, old});
  enc.codes[pos - 1] = 0;
  if (enc.is_static_code(old)) return;
  const OptPosition next = occ.next(pos);
  if (next == kNoPosition) return;
  const OptPosition prev = occ.prev(pos);
  const auto j = static_cast<Position>(next);
  log.push_back({j, enc.codes[j - 1]});
  enc.codes[j - 1] = prev == kNoPosition ? 0 : static_cast<Code>(next - prev);
}

struct DiscardResult {
  EncodedString text;
  EncodedString pattern;
  UndoLog text_log;
  UndoLog pattern_log;
};

/// Discards aligned position `pos` from both encodings (equal length).
inline DiscardResult discard_position(const EncodedString& text, const EncodedString& pattern, Position pos,
                                      const OccurrenceIndex& text_occ, const OccurrenceIndex& pattern_occ) {
  if (text.size() != pattern.size()) throw InputError("discard: strings differ in length");
  if (pos < 1 || pos > text.size()) throw InputError("discard: position out of range");
  DiscardResult out{text, pattern, {}, {}};
  discard_in_place(out.text, pos, text_occ, out.text_log);
  discard_in_place(out.pattern, pos, pattern_occ, out.pattern_log);
  return out;
}

}  // namespace pmatch
