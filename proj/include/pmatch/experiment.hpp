#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pmatch/general_matcher.hpp"
#include "pmatch/hashing.hpp"
#include "pmatch/single_mismatch.hpp"

namespace pmatch::experiment {

/// Seeded instance source. Draws come from std::mt19937_64 (whose output
/// sequence is fixed by the standard); bounded integers use rejection
/// sampling rather than std::uniform_int_distribution so streams are
/// identical across standard libraries.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = rng_();
      if (x >= threshold) return x % bound;
    }
  }

  std::string string_over(std::size_t n, std::string_view alphabet) {
    std::string out(n, '\0');
    for (auto& c : out) c = alphabet[below(alphabet.size())];
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

/// Seed of run `r` in an experiment: the r-th SplitMix64 output after `seed`.
inline std::uint64_t run_seed(std::uint64_t seed, std::size_t r) {
  std::uint64_t state = seed + 0x9E3779B97F4A7C15ULL * r;
  return splitmix64(state);
}

struct ExperimentSpec {
  std::size_t runs = 10000;
  std::size_t n = 10000;
  std::size_t m = 10;
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  void validate() const {
    if (runs < 1) throw InputError("experiment: runs must be >= 1");
    if (m > n) throw InputError("experiment: m must not exceed n");
    if (alphabet.empty()) throw InputError("experiment: empty alphabet");
  }
};

struct Instance {
  std::string text;
  std::string pattern;
};

/// Text then pattern, both drawn from run_seed(seed, r).
inline Instance make_instance(const ExperimentSpec& spec, std::size_t r) {
  Generator gen(run_seed(spec.seed, r));
  Instance inst;
  inst.text = gen.string_over(spec.n, spec.alphabet);
  inst.pattern = gen.string_over(spec.m, spec.alphabet);
  return inst;
}

/// Runs the single-mismatch matcher under every hash configuration against
/// the deterministic general matcher (threshold 1) on `spec.runs` random
/// all-parameterized instances. Returns, per configuration, the number of
/// runs with at least one wrong window.
inline std::vector<std::size_t> count_incorrect_runs(const ExperimentSpec& spec, std::span<const HashConfig> configs) {
  spec.validate();
  std::vector<Symbol> symbols(spec.alphabet.begin(), spec.alphabet.end());
  const auto alphabet = std::make_shared<const Alphabet>(std::vector<Symbol>{}, symbols);

  std::vector<std::vector<char>> wrong(configs.size(), std::vector<char>(spec.runs, 0));
  auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < spec.runs; r += stride) {
      const Instance inst = make_instance(spec, r);
      const PString t = PString::from_bytes(alphabet, inst.text);
      const PString p = PString::from_bytes(alphabet, inst.pattern);
      const auto profile = mismatch_profile(t, p);
      for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto verdicts = match_single(t, p, configs[c]);
        for (std::size_t w = 0; w < profile.size(); ++w) {
          if (verdicts[w] != (profile[w] <= 1)) {
            wrong[c][r] = 1;
            break;
          }
        }
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(spec.threads, 1, spec.runs);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker, i, threads);
  }
  std::vector<std::size_t> out;
  for (const auto& flags : wrong) out.push_back(static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1)));
  return out;
}

/// Hash configuration for the experiment: explicit base, or one derived
/// from the seed in (largest code, smallest modulus).
inline HashConfig experiment_config(std::uint64_t mod1, std::optional<std::uint64_t> mod2,
                                    std::optional<std::uint64_t> base, std::uint64_t seed, std::size_t m) {
  HashConfig cfg;
  cfg.mod1 = mod1;
  cfg.mod2 = mod2;
  cfg.base = base ? *base : HashConfig::derive_base(seed, m, mod1, mod2);
  cfg.validate(m);
  return cfg;
}

}  // namespace pmatch::experiment
