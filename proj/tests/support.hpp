#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pmatch/alphabet.hpp"
#include "pmatch/experiment.hpp"

namespace pmatch::testing {

struct Pair {
  std::shared_ptr<const Alphabet> alphabet;
  PString text;
  PString pattern;
  std::string text_bytes;
  std::string pattern_bytes;
};

inline std::shared_ptr<const Alphabet> bytes_alphabet(std::string_view statics,
                                                      std::initializer_list<std::string_view> texts) {
  return std::make_shared<const Alphabet>(Alphabet::from_bytes(statics, texts));
}

/// Random text/pattern pair over `params` p-symbols ('a'...) and `statics`
/// s-symbols ('A'...), lengths in [1, max_n] and [1, min(n, max_m)].
inline Pair random_pair(experiment::Generator& gen, std::size_t max_n, std::size_t max_m, std::size_t params,
                        std::size_t statics) {
  std::string param_chars;
  std::string static_chars;
  for (std::size_t i = 0; i < params; ++i) param_chars += static_cast<char>('a' + i);
  for (std::size_t i = 0; i < statics; ++i) static_chars += static_cast<char>('A' + i);
  const std::string all = param_chars + static_chars;
  const std::size_t n = 1 + gen.below(max_n);
  const std::size_t m = 1 + gen.below(std::min(n, max_m));
  Pair pair;
  pair.text_bytes = gen.string_over(n, all);
  pair.pattern_bytes = gen.string_over(m, all);
  std::vector<Symbol> p_ids(param_chars.begin(), param_chars.end());
  std::vector<Symbol> s_ids(static_chars.begin(), static_chars.end());
  pair.alphabet = std::make_shared<const Alphabet>(s_ids, p_ids);
  pair.text = PString::from_bytes(pair.alphabet, pair.text_bytes);
  pair.pattern = PString::from_bytes(pair.alphabet, pair.pattern_bytes);
  return pair;
}

}  // namespace pmatch::testing
