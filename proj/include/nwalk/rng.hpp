#pragma once

// Threefry-2x32 with 20 rounds (Salmon et al., Random123): a counter-based
// generator. Stream (key, i) yields the words of blocks (0, i), (1, i), ...

#include <array>
#include <cstdint>

namespace nwalk {

using Threefry2x32Word = std::array<std::uint32_t, 2>;

constexpr Threefry2x32Word threefry2x32(Threefry2x32Word key, Threefry2x32Word counter) {
  constexpr unsigned rot[8] = {13, 15, 26, 6, 17, 29, 16, 24};
  const std::uint32_t ks[3] = {key[0], key[1], 0x1BD11BDAu ^ key[0] ^ key[1]};
  std::uint32_t x0 = counter[0] + ks[0], x1 = counter[1] + ks[1];
  for (unsigned r = 0; r < 20; ++r) {
    x0 += x1;
    x1 = (x1 << rot[r % 8]) | (x1 >> (32 - rot[r % 8]));
    x1 ^= x0;
    if (r % 4 == 3) {
      const unsigned s = r / 4 + 1;
      x0 += ks[s % 3];
      x1 += ks[(s + 1) % 3] + s;
    }
  }
  return {x0, x1};
}

class CounterStream {
 public:
  CounterStream(Threefry2x32Word key, std::uint32_t stream) : key_(key), stream_(stream) {}

  std::uint32_t next32() {
    if (avail_ == 0) {
      buf_ = threefry2x32(key_, {block_++, stream_});
      avail_ = 2;
    }
    return buf_[2 - avail_--];
  }

  std::uint64_t next64() {
    const std::uint64_t lo = next32();
    return lo | (static_cast<std::uint64_t>(next32()) << 32);
  }

  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= (std::uint64_t{1} << 32)) {
      const std::uint64_t range = std::uint64_t{1} << 32;
      const std::uint64_t limit = range - range % bound;
      for (;;) {
        const std::uint64_t u = next32();
        if (u < limit) return u % bound;
      }
    }
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    for (;;) {
      const std::uint64_t u = next64();
      if (u <= limit) return u % bound;
    }
  }

 private:
  Threefry2x32Word key_;
  std::uint32_t stream_;
  std::uint32_t block_ = 0;
  Threefry2x32Word buf_{};
  int avail_ = 0;
};

}  // namespace nwalk
