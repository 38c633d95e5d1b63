#pragma once

#include <array>
#include <cstdint>

namespace tsd {

// Counter-based random streams (Philox 4x32-10). A sample is a pure function
// of (master seed, domain, four counter words), so any element of any stream
// can be generated independently of evaluation order or thread count.

struct GaussianPair {
    double g0;
    double g1;
};

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::array<std::uint32_t, 4> counter);

class RngStream {
  public:
    // Domains keep unrelated consumers of the same master seed independent.
    static constexpr std::uint64_t kNoiseDomain = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kGeneratorDomain = 0xd1b54a32d192ed03ull;

    RngStream(std::uint64_t master_seed, std::uint64_t domain)
        : key_(master_seed ^ domain) {}

    // Two independent standard normals for counter path (a, b, c, d).
    GaussianPair gaussian_pair(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                               std::uint32_t d) const;

    std::uint64_t key() const { return key_; }

  private:
    std::uint64_t key_;
};

}  // namespace tsd
