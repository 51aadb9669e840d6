#include "netinfer/random.hpp"

namespace netinfer {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
    // index -> parent + (index + 1) * odd constant is injective mod 2^64 and mix64 is a
    // bijection, so children of one parent never collide.
    return mix64(parent + (index + 1) * 0xd1b54a32d192ed03ULL);
}

std::uint64_t derive_seed(std::uint64_t parent, std::string_view stage) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : stage) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return derive_seed(parent, h);
}

} // namespace netinfer
