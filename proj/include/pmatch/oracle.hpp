#pragma once

// Brute-force reference implementations. They share no code
// with the encoding, convolution, matching or hashing modules.

#include <algorithm>
#include <map>
#include <span>
#include <numeric>
#include <vector>

#include "pmatch/alphabet.hpp"

namespace pmatch::oracle {

inline constexpr std::size_t kMaxParamSymbols = 8;

/// min over all bijections π of Σp (statics fixed) of |{i : π(x_i) != y_i}|.
inline std::size_t min_mismatch(const PString& x, const PString& y) {
  if (x.size() != y.size()) throw InputError("oracle: strings differ in length");
  const Alphabet& alphabet = x.alphabet();
  const auto params = alphabet.param_symbols();
  if (params.size() > kMaxParamSymbols) throw SizeError("oracle: too many parameterized symbols to enumerate");

  // Slot of each x_i in the parameter list, or -1 for a static symbol.
  std::vector<std::ptrdiff_t> slot(x.size(), -1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto it = std::find(params.begin(), params.end(), x.symbols()[i]);
    if (it != params.end()) slot[i] = it - params.begin();
  }
  std::vector<Symbol> image(params.begin(), params.end());
  std::size_t best = x.size();
  do {
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Symbol mapped = slot[i] < 0 ? x.symbols()[i] : image[static_cast<std::size_t>(slot[i])];
      if (mapped != y.symbols()[i]) ++mismatches;
    }
    best = std::min(best, mismatches);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

/// min_mismatch of every window against the pattern.
inline std::vector<std::size_t> profile(const PString& t, const PString& p) {
  if (p.size() > t.size()) throw InputError("oracle: pattern is longer than the text");
  std::vector<std::size_t> out;
  for (Position w = 1; w + p.size() <= t.size() + 1; ++w) out.push_back(min_mismatch(t.substr(w, p.size()), p));
  return out;
}

/// True iff some bijection maps x onto y exactly, checked directly with two
/// partial maps. Positions in `skip` are ignored.
inline bool p_match(const Alphabet& alphabet, std::span<const Symbol> x, std::span<const Symbol> y,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  std::map<Symbol, Symbol> forward;
  std::map<Symbol, Symbol> backward;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == skip) continue;
    const Symbol a = x[i];
    const Symbol b = y[i];
    if (alphabet.is_static(a) || alphabet.is_static(b)) {
      if (a != b) return false;
      continue;
    }
    const auto [f, f_new] = forward.emplace(a, b);
    const auto [g, g_new] = backward.emplace(b, a);
    if (f->second != b || g->second != a) return false;
  }
  return true;
}

/// Per window: p-match after deleting no position or any single aligned position.
inline std::vector<bool> single(const PString& t, const PString& p) {
  if (p.size() > t.size()) throw InputError("oracle: pattern is longer than the text");
  const std::size_t m = p.size();
  std::vector<bool> out;
  for (std::size_t w = 0; w + m <= t.size(); ++w) {
    const auto window = t.symbols().subspan(w, m);
    bool ok = p_match(t.alphabet(), window, p.symbols());
    for (std::size_t d = 0; d < m && !ok; ++d) ok = p_match(t.alphabet(), window, p.symbols(), d);
    out.push_back(ok);
  }
  return out;
}

}  // namespace pmatch::oracle
