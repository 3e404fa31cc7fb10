#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nofil/sts.hpp"

namespace nofil {

struct HillClimbOptions {
    std::int64_t max_steps = -1;          // resolved to 100*v*v when negative
    std::int64_t restart_interval = -1;   // stagnant steps before restart; 10*v*v
    int exact_cover_max_pairs = 60;       // switch to exact cover below this
    std::int64_t exact_cover_node_cap = 200000;
};

// Stinson-style hill climb: grow a partial triple system by covering two
// uncovered pairs at a point of minimum degree, displacing at most one block
// per step. Deterministic in (v, seed, options); nullopt when max_steps runs
// out. Throws DomainError(OrderInvalid) for inadmissible v.
std::optional<SteinerTripleSystem> hill_climb_sts(int v, std::uint64_t seed,
                                                  const HillClimbOptions& opts = {});

// Same climb around a set of immovable edge-disjoint triples; they are in
// every output. Throws DomainError(BadFixedTriples) on overlap.
std::optional<SteinerTripleSystem> hill_climb_with_fixed(int v,
                                                         const std::vector<Triple>& fixed,
                                                         std::uint64_t seed,
                                                         const HillClimbOptions& opts = {});

struct DistinctBatch {
    std::vector<SteinerTripleSystem> systems;   // pairwise non-isomorphic
    std::int64_t attempts = 0;
    bool exhausted = false;   // attempt budget ran out before count was reached
};

// Climbs repeatedly, keeping systems with fresh certificates until count is
// reached or max_attempts (default 50*count, at least 500) is spent.
DistinctBatch generate_distinct(int v, int count, std::uint64_t seed,
                                std::int64_t max_attempts = -1,
                                const HillClimbOptions& opts = {});

} // namespace nofil
