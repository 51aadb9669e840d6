#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netinfer {

/// Source of uniform 64-bit words. All sampling in the library draws through this
/// interface so tests can substitute scripted streams.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual std::uint64_t next_u64() = 0;

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Bernoulli draw. p <= 0 never succeeds, p >= 1 always does.
    bool bernoulli(double p) { return uniform01() < p; }
};

class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Child seed for (parent, index). Distinct indices give distinct children for a fixed parent.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// Child seed for a named stage ("damage", "probes", ...).
std::uint64_t derive_seed(std::uint64_t parent, std::string_view stage) noexcept;

} // namespace netinfer
