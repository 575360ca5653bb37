#pragma once

#include <cstdint>
#include <string_view>

namespace fairclust {

// Deterministic, platform-independent RNG used everywhere randomness is
// needed. std:: distributions are implementation-defined, so sampling is done
// by hand on top of the raw 64-bit stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    int next_int(int bound) {
        return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                                 static_cast<unsigned __int128>(bound)) >>
                                64);
    }

  private:
    std::uint64_t state_;
};

// FNV-1a over a string, for deriving stream ids from names.
std::uint64_t hash_name(std::string_view name);

// Order-insensitive combination of a base seed with named stream components,
// so concurrent execution cannot change any drawn values.
std::uint64_t derive_seed(std::uint64_t base, std::string_view name, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace fairclust
