#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmatch {

/// Raised when caller-supplied strings, positions or sizes violate a contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for unusable tuning parameters (hash moduli, transform sizes).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the brute-force oracles when an instance is too large to enumerate.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

using Symbol = std::uint32_t;

/// 1-based position, as used by every public contract in this library.
using Position = std::size_t;

/// Signed 1-based position where -1 means "no such occurrence".
using OptPosition = std::ptrdiff_t;
inline constexpr OptPosition kNoPosition = -1;

enum class SymbolKind : std::uint8_t { kAbsent, kStatic, kParam };

/// Partition of the symbol universe into static symbols (must match
/// themselves) and parameterized symbols (may be renamed by a bijection).
/// Both sets are kept sorted; a symbol's rank is its index in its own set.
class Alphabet {
 public:
  Alphabet() = default;

  Alphabet(std::vector<Symbol> static_symbols, std::vector<Symbol> param_symbols)
      : statics_(std::move(static_symbols)), params_(std::move(param_symbols)) {
    std::sort(statics_.begin(), statics_.end());
    std::sort(params_.begin(), params_.end());
    if (std::adjacent_find(statics_.begin(), statics_.end()) != statics_.end() ||
        std::adjacent_find(params_.begin(), params_.end()) != params_.end()) {
      throw InputError("alphabet: duplicate symbol");
    }
    Symbol max_symbol = 0;
    if (!statics_.empty()) max_symbol = std::max(max_symbol, statics_.back());
    if (!params_.empty()) max_symbol = std::max(max_symbol, params_.back());
    index_.assign(statics_.empty() && params_.empty() ? 0 : std::size_t{max_symbol} + 1, Entry{});
    for (std::size_t r = 0; r < statics_.size(); ++r) {
      index_[statics_[r]] = Entry{SymbolKind::kStatic, static_cast<std::uint32_t>(r)};
    }
    for (std::size_t r = 0; r < params_.size(); ++r) {
      if (index_[params_[r]].kind != SymbolKind::kAbsent) {
        throw InputError("alphabet: symbol is both static and parameterized");
      }
      index_[params_[r]] = Entry{SymbolKind::kParam, static_cast<std::uint32_t>(r)};
    }
  }

  /// Byte alphabet: the characters of `statics` are static, every other byte
  /// occurring in `texts` is parameterized.
  static Alphabet from_bytes(std::string_view statics, std::span<const std::string_view> texts) {
    std::vector<bool> is_static(256, false);
    std::vector<Symbol> static_symbols;
    for (unsigned char c : statics) {
      if (is_static[c]) throw InputError("alphabet: duplicate static symbol '" + std::string(1, static_cast<char>(c)) + "'");
      is_static[c] = true;
      static_symbols.push_back(c);
    }
    std::vector<bool> seen(256, false);
    std::vector<Symbol> param_symbols;
    for (std::string_view text : texts) {
      for (unsigned char c : text) {
        if (!is_static[c] && !seen[c]) {
          seen[c] = true;
          param_symbols.push_back(c);
        }
      }
    }
    return Alphabet(std::move(static_symbols), std::move(param_symbols));
  }

  static Alphabet from_bytes(std::string_view statics, std::initializer_list<std::string_view> texts) {
    return from_bytes(statics, std::span<const std::string_view>(texts.begin(), texts.size()));
  }

  SymbolKind kind(Symbol s) const noexcept {
    return s < index_.size() ? index_[s].kind : SymbolKind::kAbsent;
  }
  bool contains(Symbol s) const noexcept { return kind(s) != SymbolKind::kAbsent; }
  bool is_static(Symbol s) const noexcept { return kind(s) == SymbolKind::kStatic; }
  bool is_param(Symbol s) const noexcept { return kind(s) == SymbolKind::kParam; }

  /// Rank of `s` within its own set. Precondition: contains(s).
  std::uint32_t rank(Symbol s) const noexcept { return index_[s].rank; }

  std::span<const Symbol> static_symbols() const noexcept { return statics_; }
  std::span<const Symbol> param_symbols() const noexcept { return params_; }
  std::size_t static_count() const noexcept { return statics_.size(); }
  std::size_t param_count() const noexcept { return params_.size(); }

  bool operator==(const Alphabet& other) const {
    return statics_ == other.statics_ && params_ == other.params_;
  }

 private:
  struct Entry {
    SymbolKind kind = SymbolKind::kAbsent;
    std::uint32_t rank = 0;
  };

  std::vector<Symbol> statics_;
  std::vector<Symbol> params_;
  std::vector<Entry> index_;
};

/// A parameterized string: symbols validated against a shared alphabet.
class PString {
 public:
  PString() : alphabet_(std::make_shared<const Alphabet>()) {}

  PString(std::shared_ptr<const Alphabet> alphabet, std::vector<Symbol> symbols)
      : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (!alphabet_) throw InputError("pstring: null alphabet");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!alphabet_->contains(symbols_[i])) {
        throw InputError("pstring: symbol at position " + std::to_string(i + 1) + " is not in the alphabet");
      }
    }
  }

  static PString from_bytes(std::shared_ptr<const Alphabet> alphabet, std::string_view text) {
    return PString(std::move(alphabet), std::vector<Symbol>(text.begin(), text.end()));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// 1-based access.
  Symbol at(Position pos) const {
    if (pos < 1 || pos > symbols_.size()) throw InputError("pstring: position out of range");
    return symbols_[pos - 1];
  }

  /// 0-based view of the underlying symbols.
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }

  /// Substring s[pos .. pos+len-1] (1-based), sharing the alphabet.
  PString substr(Position pos, std::size_t len) const {
    if (pos < 1 || pos - 1 + len > symbols_.size()) throw InputError("pstring: substring out of range");
    PString out;
    out.alphabet_ = alphabet_;
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(pos - 1 + len));
    return out;
  }

  bool operator==(const PString& other) const {
    return symbols_ == other.symbols_ && *alphabet_ == *other.alphabet_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Symbol> symbols_;
};

namespace detail {

inline void require_same_alphabet(const PString& a, const PString& b, const char* what) {
  if (a.alphabet_ptr() != b.alphabet_ptr() && !(a.alphabet() == b.alphabet())) {
    throw InputError(std::string(what) + ": strings use different alphabets");
  }
}

}  // namespace detail

}  // namespace pmatch
