#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nofil/bounds.hpp"
#include "nofil/game.hpp"
#include "nofil/generate.hpp"
#include "nofil/kayles.hpp"
#include "nofil/sts.hpp"

namespace nofil {

// Proper edge colouring of g with colours 0..palette-1, one entry per edge
// of g.edges; injective additionally makes the colours pairwise distinct.
// nullopt when no such colouring exists.
std::optional<std::vector<int>> proper_edge_coloring(const SimpleGraph& g, int palette,
                                                     bool injective = false);

// Proper edge colouring of the complete graph on p vertices with exactly u
// nonempty classes whose sizes differ by at most one. Entries are
// {i, j, colour}. nullopt when u is outside [chi'(K_p), C(p,2)].
std::optional<std::vector<std::array<int, 3>>> equitable_surjective_coloring(int p, int u);

// The block skeleton that pins a target graph as an endgame: points laid
// out as P = 0..p-1, A = p..p+a-1, U = p+a..p+a+u-1, with the PAA triples
// writing the edges of g, AAU triples the non-edges, and PPU triples
// blocking every unplayable point.
struct SeedTriples {
    int p = 0, a = 0, u = 0;
    std::vector<int> P, A, U;
    std::vector<Triple> paa, aau, ppu;
    std::vector<Triple> all() const;
};

std::optional<SeedTriples> build_seed_triples(const SimpleGraph& g, int p, int u);

// Completion search around immovable triples: same climb as hill_climb_sts
// plus its bounded exact-cover finish; every output contains the fixed
// triples. nullopt when the step budget runs out.
std::optional<SteinerTripleSystem> complete_to_sts(int v, const std::vector<Triple>& fixed,
                                                   std::uint64_t seed,
                                                   const HillClimbOptions& opts = {});

struct VerifyReport {
    bool unplayable_all_blocked = false;
    bool available_none_blocked = false;
    bool graph_isomorphic = false;
    bool value_matches = false;
    int position_value = -1;
    int graph_value = -1;
    bool all_pass() const {
        return unplayable_all_blocked && available_none_blocked && graph_isomorphic &&
               value_matches;
    }
};

// Checks that the position with `played` played realizes g: unplayable
// points each sit on a block with two played points, no available point
// does, the available hypergraph is graph-isomorphic to g, and the position
// value equals the vertex-game value of g.
VerifyReport verify_embedding(const SteinerTripleSystem& sts, const std::vector<int>& played,
                              const SimpleGraph& g);

struct EmbedOptions {
    int seeds_per_split = 8;
    HillClimbOptions climb;
};

struct EmbedResult {
    std::optional<SteinerTripleSystem> sts;
    std::vector<int> played;
    int p = -1, u = -1;
    std::uint64_t seed_used = 0;
    std::vector<std::string> diagnostics;
    bool ok() const { return sts.has_value(); }
};

// Searches the admissible (p, u) splits of order v for an embedding of g,
// preferring p near ceil(sqrt(2(v-a))) and fanning outwards; each split gets
// seeds_per_split completion attempts and every success is verified before
// being returned.
EmbedResult embed_graph(const SimpleGraph& g, int v, std::uint64_t seed,
                        const EmbedOptions& opts = {});

} // namespace nofil
