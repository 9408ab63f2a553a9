#pragma once

#include <cstdint>
#include <random>

namespace gapn {

// Deterministic RNG used by every seeded operation, so that reports are
// reproducible byte for byte across runs and platforms. Draws go through
// plain modular reduction on a fixed engine rather than
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint32_t below(std::uint32_t bound)
    {
        return static_cast<std::uint32_t>(engine_() % bound);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace gapn
