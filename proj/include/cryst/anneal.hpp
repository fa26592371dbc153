#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cryst/complex.hpp"
#include "cryst/moves.hpp"

namespace cryst {

/// splitmix64: the fixed, platform-independent generator behind every
/// randomized routine in this library. All derived draws are pure integer
/// arithmetic, so seeded runs replay bit-for-bit everywhere.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), rejection-sampled.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t bound = ~0ull - ~0ull % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= bound);
        return r % n;
    }
};

struct AnnealTarget {
    enum class Kind { simple_contracted, facet_count };
    Kind kind = Kind::simple_contracted;
    int facets = 2; // for facet_count
};

struct AnnealConfig {
    std::uint64_t seed = 0;
    long max_steps = 10000;
    // 0..4-moves then edge contraction; reducing moves dominate.
    std::array<std::uint32_t, 6> weights = {1, 2, 6, 10, 10, 10};
    long plateau_patience = 100;
    AnnealTarget target;
};

struct MoveLogEntry {
    long step = 0;
    Move move;
    FVector fvec;            // after the move
    std::uint64_t rng_state; // before the move was drawn
};

struct MoveLog {
    std::vector<MoveLogEntry> entries;

    std::string to_string() const;
    static MoveLog parse(const std::string& text);
};

enum class AnnealOutcome { target_reached, steps_exhausted };

struct AnnealResult {
    CellComplex complex;
    MoveLog log;
    AnnealOutcome outcome = AnnealOutcome::steps_exhausted;
};

/// Randomized bistellar-move/edge-contraction simplification. The output is
/// move-equivalent to the input; deterministic for a fixed seed.
AnnealResult simplify(const CellComplex& c, const AnnealConfig& cfg);

/// Re-applies a MoveLog from the initial complex. Throws if any recorded
/// f-vector disagrees.
CellComplex replay(const CellComplex& initial, const MoveLog& log);

} // namespace cryst
