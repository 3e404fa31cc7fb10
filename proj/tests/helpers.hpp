#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <vector>

#include "nofil/game.hpp"
#include "nofil/hypergraph.hpp"
#include "nofil/rng.hpp"
#include "nofil/sts.hpp"

namespace nofil::testing {

// Backtracking point-mapping search; the independent oracle the certificate
// is checked against.
inline bool sts_isomorphic_bruteforce(const SteinerTripleSystem& s1,
                                      const SteinerTripleSystem& s2) {
    if (s1.order() != s2.order() || s1.num_blocks() != s2.num_blocks()) return false;
    const int v = s1.order();
    auto is_block = [&s2](int x, int y, int z) { return s2.third_point(x, y) == z; };
    std::vector<int> map(static_cast<std::size_t>(v), -1);
    std::vector<bool> used(static_cast<std::size_t>(v), false);
    std::function<bool(int)> rec = [&](int x) {
        if (x == v) return true;
        for (int y = 0; y < v; ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            map[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = true;
            bool ok = true;
            for (int bi : s1.blocks_through(x)) {
                const Triple& b = s1.block(bi);
                int m[3];
                bool complete = true;
                for (int i = 0; i < 3 && complete; ++i) {
                    m[i] = map[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
                    if (m[i] < 0) complete = false;
                }
                if (complete && !is_block(m[0], m[1], m[2])) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(x + 1)) return true;
            used[static_cast<std::size_t>(y)] = false;
            map[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    return rec(0);
}

// Permutation sweep over compacted vertex sets; fine to ~8 vertices.
inline bool hypergraphs_isomorphic_bruteforce(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph ca = compact(a), cb = compact(b);
    if (ca.num_vertices() != cb.num_vertices() || ca.edges.size() != cb.edges.size())
        return false;
    const int n = ca.num_vertices();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<HEdge> target = cb.edges;
    std::sort(target.begin(), target.end());
    do {
        std::vector<HEdge> mapped;
        mapped.reserve(ca.edges.size());
        for (const HEdge& e : ca.edges) {
            if (edge_size(e) == 2)
                mapped.push_back(pair_edge(perm[static_cast<std::size_t>(e[0])],
                                           perm[static_cast<std::size_t>(e[1])]));
            else
                mapped.push_back(triple_edge(perm[static_cast<std::size_t>(e[0])],
                                             perm[static_cast<std::size_t>(e[1])],
                                             perm[static_cast<std::size_t>(e[2])]));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::shared_ptr<const SteinerTripleSystem> shared_builtin(const std::string& name) {
    return std::make_shared<const SteinerTripleSystem>(builtin_sts(name));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return perm;
}

// Every position reachable by legal play, deduplicated by played set.
inline std::vector<Position> all_reachable_positions(
    std::shared_ptr<const SteinerTripleSystem> sts) {
    std::vector<Position> out;
    std::vector<std::vector<int>> seen;   // sorted played sets
    std::function<void(const Position&)> walk = [&](const Position& pos) {
        std::vector<int> key = pos.played();
        auto it = std::lower_bound(seen.begin(), seen.end(), key);
        if (it != seen.end() && *it == key) return;
        seen.insert(it, key);
        out.push_back(pos);
        for (int x : pos.available()) walk(pos.apply(x));
    };
    walk(Position::initial(std::move(sts)));
    return out;
}

} // namespace nofil::testing
