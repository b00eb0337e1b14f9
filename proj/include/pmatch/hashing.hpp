#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmatch/alphabet.hpp"

namespace pmatch {

namespace modarith {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  if (m <= 0xFFFFFFFFULL) return a * b % m;  // a, b < m
  if (m == (1ULL << 61) - 1) {
    const auto p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(p) & m) + static_cast<std::uint64_t>(p >> 61U);
    r = (r & m) + (r >> 61U);
    return r >= m ? r - m : r;
  }
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  const std::uint64_t s = a + b;  // a, b < m < 2^63
  return s >= m ? s - m : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return a >= b ? a - b : a + m - b;
}

inline std::uint64_t power(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = power(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modarith

/// SplitMix64 step; used to derive hash bases from a seed.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

/// Polynomial hash H(s[l..r]) = Σ code_j · base^(j-l) mod m, over one
/// modulus or two independent ones.
struct HashConfig {
  static constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;
  static constexpr std::uint64_t kPrime61 = 2305843009213693921ULL;  // largest prime below 2^61 - 1

  std::uint64_t base = 0;
  std::uint64_t mod1 = kMersenne61;
  std::optional<std::uint64_t> mod2 = kPrime61;

  std::size_t moduli() const noexcept { return mod2 ? 2 : 1; }

  /// Throws ConfigError unless both moduli are primes below 2^62 and
  /// `max_code < base < min modulus`.
  void validate(std::uint64_t max_code) const {
    auto check_mod = [](std::uint64_t m, const char* name) {
      if (m >= (1ULL << 62) || !modarith::is_prime(m)) {
        throw ConfigError(std::string("hash config: ") + name + "=" + std::to_string(m) + " is not a prime below 2^62");
      }
    };
    check_mod(mod1, "mod1");
    if (mod2) check_mod(*mod2, "mod2");
    const std::uint64_t smallest = mod2 ? std::min(mod1, *mod2) : mod1;
    if (base >= smallest) throw ConfigError("hash config: base must be smaller than every modulus");
    if (base <= max_code) {
      throw ConfigError("hash config: base " + std::to_string(base) + " must exceed the largest code " +
                        std::to_string(max_code));
    }
  }

  /// Random odd base in (max_code, min modulus) derived from `seed`.
  static std::uint64_t derive_base(std::uint64_t seed, std::uint64_t max_code, std::uint64_t mod1,
                                   std::optional<std::uint64_t> mod2) {
    const std::uint64_t smallest = mod2 ? std::min(mod1, *mod2) : mod1;
    const std::uint64_t lo = max_code + 1;
    if (lo + 1 >= smallest) throw ConfigError("hash config: modulus too small for the code range");
    std::uint64_t state = seed;
    for (;;) {
      const std::uint64_t b = lo + splitmix64(state) % (smallest - lo);
      if (b % 2 == 1 || smallest - lo == 1) return b;
    }
  }

  /// Two 61-bit primes with a seeded random base.
  static HashConfig defaults(std::uint64_t seed, std::uint64_t max_code) {
    HashConfig cfg;
    cfg.base = derive_base(seed, std::max<std::uint64_t>(max_code, 1ULL << 32), cfg.mod1, cfg.mod2);
    return cfg;
  }
};

struct HashValue {
  std::uint64_t h1 = 0;
  std::optional<std::uint64_t> h2;
  std::size_t len = 0;

  bool operator==(const HashValue&) const = default;
};

namespace detail {

/// Residues for K moduli; K = 1 or 2.
template <std::size_t K>
using Residues = std::array<std::uint64_t, K>;

template <std::size_t K>
struct Moduli {
  Residues<K> mod{};
  Residues<K> base{};
  Residues<K> barrett{};  // floor((2^64 - 1) / mod) when mod < 2^32, else 0

  explicit Moduli(const HashConfig& cfg) {
    if (cfg.moduli() != K) throw ConfigError("hash config: modulus count does not match the hasher");
    mod[0] = cfg.mod1;
    if constexpr (K == 2) mod[1] = *cfg.mod2;
    for (std::size_t k = 0; k < K; ++k) {
      base[k] = cfg.base % mod[k];
      barrett[k] = mod[k] <= 0xFFFFFFFFULL ? ~0ULL / mod[k] : 0;
    }
  }

  Residues<K> mul(const Residues<K>& a, const Residues<K>& b) const noexcept {
    Residues<K> r;
    for (std::size_t k = 0; k < K; ++k) {
      if (barrett[k] == 0) {
        r[k] = modarith::mul(a[k], b[k], mod[k]);
        continue;
      }
      // Barrett reduction for moduli below 2^32: the quotient estimate is short by at most one.
      const std::uint64_t x = a[k] * b[k];
      const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett[k]) >> 64U);
      const std::uint64_t rem = x - q * mod[k];
      r[k] = rem >= mod[k] ? rem - mod[k] : rem;
    }
    return r;
  }
  Residues<K> add(const Residues<K>& a, const Residues<K>& b) const noexcept {
    Residues<K> r;
    for (std::size_t k = 0; k < K; ++k) r[k] = modarith::add(a[k], b[k], mod[k]);
    return r;
  }
  Residues<K> sub(const Residues<K>& a, const Residues<K>& b) const noexcept {
    Residues<K> r;
    for (std::size_t k = 0; k < K; ++k) r[k] = modarith::sub(a[k], b[k], mod[k]);
    return r;
  }
  Residues<K> from(std::uint64_t code) const noexcept {
    Residues<K> r;
    for (std::size_t k = 0; k < K; ++k) r[k] = code % mod[k];
    return r;
  }

  /// powers[i] = base^i for i in [0, n].
  std::vector<Residues<K>> powers(std::size_t n) const {
    std::vector<Residues<K>> out(n + 1);
    out[0].fill(1);
    for (std::size_t i = 1; i <= n; ++i) out[i] = mul(out[i - 1], base);
    return out;
  }

  HashValue to_value(const Residues<K>& r, std::size_t len) const {
    HashValue v;
    v.h1 = r[0];
    if constexpr (K == 2) v.h2 = r[1];
    v.len = len;
    return v;
  }
};

}  // namespace detail

}  // namespace pmatch
