#pragma once

#include <cstdint>
#include <string_view>

namespace treecl {

// splitmix64 finalizer. Used both as a hash mixer and as the generator
// behind counter-based random streams.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t seed, uint64_t v) {
    return splitmix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

// Stable FNV-1a over bytes; used to derive named sub-seeds and for the
// probe's train/test split on dialog ids.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag) {
    return hash_combine(seed, fnv1a64(tag));
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag, uint64_t index) {
    return hash_combine(derive_seed(seed, tag), index);
}

// Counter-based uniform stream: value i depends only on (seed, i), so a
// forward pass that consumed k values can be replayed exactly.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    // Uniform in [0, 1).
    double next_uniform() {
        uint64_t bits = splitmix64(seed_ ^ splitmix64(counter_++));
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

    uint64_t next_u64() { return splitmix64(seed_ ^ splitmix64(counter_++)); }

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace treecl
