#include "tsd/rng.hpp"

#include <cmath>

namespace tsd {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x, std::uint32_t k0,
                         std::uint32_t k1) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * x[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * x[2];
    const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
}

inline double to_unit_open(std::uint64_t bits) {
    // (0, 1]; never zero so it is safe inside log()
    return double((bits >> 11) + 1) * 0x1.0p-53;
}

inline double to_unit_half_open(std::uint64_t bits) {
    // [0, 1)
    return double(bits >> 11) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::array<std::uint32_t, 4> counter) {
    std::uint32_t k0 = std::uint32_t(key);
    std::uint32_t k1 = std::uint32_t(key >> 32);
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return counter;
}

GaussianPair RngStream::gaussian_pair(std::uint32_t a, std::uint32_t b,
                                      std::uint32_t c, std::uint32_t d) const {
    const auto words = philox4x32(key_, {a, b, c, d});
    const std::uint64_t u64a = (std::uint64_t(words[0]) << 32) | words[1];
    const std::uint64_t u64b = (std::uint64_t(words[2]) << 32) | words[3];
    const double u1 = to_unit_open(u64a);
    const double u2 = to_unit_half_open(u64b);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace tsd
