#include "fairclust/random.hpp"

namespace fairclust {

std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view name, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = hash_name(name);
    auto mix = [](std::uint64_t x, std::uint64_t y) {
        x ^= y + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
        return x;
    };
    h = mix(h, base);
    h = mix(h, a);
    h = mix(h, b);
    h = mix(h, c);
    return h;
}

}  // namespace fairclust
