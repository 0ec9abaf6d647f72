#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pgxrag {

// 64-bit FNV-1a. Stable across platforms and runs; used for embedding buckets
// and the index checksum.
class Fnv1a64 {
 public:
  static constexpr std::uint64_t kOffsetBasis = 14695981039346656037ULL;
  static constexpr std::uint64_t kPrime = 1099511628211ULL;

  void update(std::span<const unsigned char> bytes) noexcept {
    for (unsigned char b : bytes) {
      state_ ^= b;
      state_ *= kPrime;
    }
  }
  void update(std::string_view s) noexcept {
    update(std::span(reinterpret_cast<const unsigned char*>(s.data()), s.size()));
  }
  std::uint64_t digest() const noexcept { return state_; }

 private:
  std::uint64_t state_ = kOffsetBasis;
};

inline std::uint64_t fnv1a64(std::string_view s) noexcept {
  Fnv1a64 h;
  h.update(s);
  return h.digest();
}

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace pgxrag
