#ifndef IWCONTRACT_PRNG_HPP
#define IWCONTRACT_PRNG_HPP

#include <cstdint>
#include <string_view>

namespace iwcontract {

/// SplitMix64 generator. Used instead of <random> engines so that sampled
/// verification runs are bit-reproducible across platforms and compilers.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling, exact.
    long next_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a textual tag
/// (FNV-1a over the tag, mixed with the base). Deterministic.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return SplitMix64(base ^ h).next();
}

} // namespace iwcontract

#endif
