#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "pmatch/alphabet.hpp"

namespace pmatch::ntt {

// Number-theoretic transform over 998244353 = 119 * 2^23 + 1, primitive root 3.
inline constexpr std::uint32_t kModulus = 998244353;
inline constexpr std::uint32_t kRoot = 3;
inline constexpr std::size_t kMaxLength = std::size_t{1} << 23;

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kModulus);
}

inline std::uint32_t power(std::uint32_t base, std::uint64_t exp) noexcept {
  std::uint32_t result = 1;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

inline std::size_t transform_length(std::size_t product_size) {
  const std::size_t len = std::bit_ceil(std::max<std::size_t>(product_size, 1));
  if (len > kMaxLength) throw ConfigError("ntt: product of size " + std::to_string(product_size) + " exceeds the transform budget");
  return len;
}

/// Precomputed twiddles for one power-of-two length.
class Plan {
 public:
  explicit Plan(std::size_t length) : length_(length) {
    if (length == 0 || !std::has_single_bit(length) || length > kMaxLength) {
      throw ConfigError("ntt: transform length must be a power of two <= 2^23");
    }
    const std::size_t half = std::max<std::size_t>(length / 2, 1);
    const std::uint32_t w = power(kRoot, (kModulus - 1) / length);
    const std::uint32_t w_inv = power(w, kModulus - 2);
    roots_.resize(half);
    inverse_roots_.resize(half);
    roots_[0] = inverse_roots_[0] = 1;
    for (std::size_t i = 1; i < half; ++i) {
      roots_[i] = mul(roots_[i - 1], w);
      inverse_roots_[i] = mul(inverse_roots_[i - 1], w_inv);
    }
    inverse_length_ = power(static_cast<std::uint32_t>(length), kModulus - 2);
  }

  std::size_t length() const noexcept { return length_; }

  void forward(std::span<std::uint32_t> a) const { run(a, false); }

  void inverse(std::span<std::uint32_t> a) const {
    run(a, true);
    for (auto& x : a) x = mul(x, inverse_length_);
  }

 private:
  void run(std::span<std::uint32_t> a, bool invert) const {
    const std::size_t n = length_;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1U;
      for (; j & bit; bit >>= 1U) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    const std::vector<std::uint32_t>& table = invert ? inverse_roots_ : roots_;
    for (std::size_t len = 2; len <= n; len <<= 1U) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      for (std::size_t i = 0; i < n; i += len) {
        for (std::size_t k = 0; k < half; ++k) {
          const std::uint32_t w = table[k * stride];
          const std::uint32_t u = a[i + k];
          const std::uint32_t v = mul(a[i + k + half], w);
          a[i + k] = u + v >= kModulus ? u + v - kModulus : u + v;
          a[i + k + half] = u >= v ? u - v : u + kModulus - v;
        }
      }
    }
  }

  std::size_t length_;
  std::vector<std::uint32_t> roots_;
  std::vector<std::uint32_t> inverse_roots_;
  std::uint32_t inverse_length_ = 1;
};

}  // namespace pmatch::ntt
