#pragma once

#include <array>
#include <cstdint>

namespace knotinv {

// Philox4x32-10 counter-based generator. Every
// (seed, purpose, chunk) triple owns an independent stream, which lets chunks
// of a run be drawn in any order on any thread with identical results.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Block bijection(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
      key[0] += kW0;
      key[1] += kW1;
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;
};

// Purposes keep streams of different integrals apart.
enum class StreamPurpose : std::uint32_t {
  kRho1 = 1,
  kRho2 = 2,
  kDelta1 = 3,
  kDelta2 = 4,
  kTest = 99,
};

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t purpose, std::uint32_t chunk)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        chunk_(chunk),
        purpose_(purpose) {}
  RandomStream(std::uint64_t seed, StreamPurpose purpose, std::uint32_t chunk)
      : RandomStream(seed, static_cast<std::uint32_t>(purpose), chunk) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return block_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  void refill() {
    block_ = Philox4x32::bijection(
        {static_cast<std::uint32_t>(counter_),
         static_cast<std::uint32_t>(counter_ >> 32), chunk_, purpose_},
        key_);
    ++counter_;
    pos_ = 0;
  }

  Philox4x32::Key key_;
  std::uint32_t chunk_;
  std::uint32_t purpose_;
  std::uint64_t counter_ = 0;
  Philox4x32::Block block_{};
  int pos_ = 4;
};

}  // namespace knotinv
