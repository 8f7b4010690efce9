#pragma once

#include <cstdint>
#include <random>

namespace aspectra {

/// Seeded generator with portable bounded draws.
///
/// std::uniform_int_distribution differs between standard libraries, so the
/// draws are done by rejection sampling on the raw mt19937_64 stream, whose
/// output sequence is fixed by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Independent child stream, for handing a generator to a sub-task.
    Rng split() { return Rng(engine_()); }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace aspectra
