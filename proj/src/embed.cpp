#include "nofil/embed.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "nofil/rng.hpp"
#include "nofil/solver.hpp"

namespace nofil {

std::optional<std::vector<int>> proper_edge_coloring(const SimpleGraph& g, int palette,
                                                     bool injective) {
    const std::size_t ne = g.edges.size();
    if (injective) {
        if (palette < static_cast<int>(ne)) return std::nullopt;
        // distinct colours are proper by themselves
        std::vector<int> colors(ne);
        for (std::size_t i = 0; i < ne; ++i) colors[i] = static_cast<int>(i);
        return colors;
    }
    if (ne == 0) return std::vector<int>{};
    if (palette <= 0) return std::nullopt;
    if (palette > 30) palette = 30;   // colour bitmask width; chi' <= |E| <= 30 in practice here
    std::vector<unsigned> used(static_cast<std::size_t>(g.n), 0);
    std::vector<int> colors(ne, -1);
    std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned seen) {
        if (i == ne) return true;
        const auto& e = g.edges[i];
        unsigned busy = used[static_cast<std::size_t>(e[0])] | used[static_cast<std::size_t>(e[1])];
        for (int c = 0; c < palette; ++c) {
            unsigned bit = 1u << c;
            if (busy & bit) continue;
            bool fresh = !(seen & bit);
            used[static_cast<std::size_t>(e[0])] |= bit;
            used[static_cast<std::size_t>(e[1])] |= bit;
            colors[i] = c;
            if (rec(i + 1, seen | bit)) return true;
            used[static_cast<std::size_t>(e[0])] &= ~bit;
            used[static_cast<std::size_t>(e[1])] &= ~bit;
            colors[i] = -1;
            if (fresh) break;
        }
        return false;
    };
    if (!rec(0, 0)) return std::nullopt;
    return colors;
}

namespace {

int complete_graph_chromatic_index(int p) {
    if (p <= 1) return 0;
    return p % 2 == 0 ? p - 1 : p;
}

// Round-robin proper edge colouring of K_p with chi'(K_p) classes.
std::vector<std::array<int, 3>> one_factor_coloring(int p) {
    std::vector<std::array<int, 3>> out;
    if (p <= 1) return out;
    if (p % 2 == 1) {
        // colour r holds pairs {r+i, r-i} mod p
        for (int r = 0; r < p; ++r)
            for (int i = 1; i <= (p - 1) / 2; ++i) {
                int x = (r + i) % p, y = ((r - i) % p + p) % p;
                out.push_back({std::min(x, y), std::max(x, y), r});
            }
    } else {
        // fix vertex p-1, rotate the rest
        int q = p - 1;
        for (int r = 0; r < q; ++r) {
            out.push_back({std::min(r, p - 1), std::max(r, p - 1), r});
            for (int i = 1; i <= (q - 1) / 2; ++i) {
                int x = (r + i) % q, y = ((r - i) % q + q) % q;
                out.push_back({std::min(x, y), std::max(x, y), r});
            }
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<std::array<int, 3>>> equitable_surjective_coloring(int p, int u) {
    const long long total = static_cast<long long>(p) * (p - 1) / 2;
    if (u > total) return std::nullopt;                        // pigeonhole
    if (u < complete_graph_chromatic_index(p)) return std::nullopt;
    if (p <= 1) return std::vector<std::array<int, 3>>{};      // u == 0 here
    std::vector<std::array<int, 3>> edges = one_factor_coloring(p);
    int classes = complete_graph_chromatic_index(p);
    auto class_sizes = [&edges](int k) {
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (const auto& e : edges) ++size[static_cast<std::size_t>(e[2])];
        return size;
    };
    // split edges off into fresh singleton classes until u classes exist
    while (classes < u) {
        std::vector<int> size = class_sizes(classes);
        int big = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
        for (auto& e : edges)
            if (e[2] == big) {
                e[2] = classes;
                break;
            }
        ++classes;
    }
    // balance: swap colours along an odd path in the union of two classes
    while (true) {
        std::vector<int> size = class_sizes(classes);
        int cmax = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
        int cmin = static_cast<int>(std::min_element(size.begin(), size.end()) - size.begin());
        if (size[static_cast<std::size_t>(cmax)] - size[static_cast<std::size_t>(cmin)] <= 1)
            break;
        // the two classes form disjoint paths and even cycles; find a path
        // with a surplus of cmax edges and flip it
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i][2] != cmax && edges[i][2] != cmin) continue;
            adj[static_cast<std::size_t>(edges[i][0])].push_back(
                {edges[i][1], static_cast<int>(i)});
            adj[static_cast<std::size_t>(edges[i][1])].push_back(
                {edges[i][0], static_cast<int>(i)});
        }
        std::vector<bool> visited_edge(edges.size(), false);
        bool flipped = false;
        for (int start = 0; start < p && !flipped; ++start) {
            if (adj[static_cast<std::size_t>(start)].size() != 1) continue;   // path endpoint
            // walk the path
            std::vector<int> chain;
            int prev = -1, cur = start;
            while (true) {
                int next_edge = -1;
                for (auto [nbr, ei] : adj[static_cast<std::size_t>(cur)])
                    if (nbr != prev && !visited_edge[static_cast<std::size_t>(ei)]) {
                        next_edge = ei;
                        prev = cur;
                        cur = nbr;
                        break;
                    }
                if (next_edge < 0) break;
                visited_edge[static_cast<std::size_t>(next_edge)] = true;
                chain.push_back(next_edge);
            }
            int surplus = 0;
            for (int ei : chain) surplus += edges[static_cast<std::size_t>(ei)][2] == cmax ? 1 : -1;
            if (surplus > 0) {
                for (int ei : chain)
                    edges[static_cast<std::size_t>(ei)][2] =
                        edges[static_cast<std::size_t>(ei)][2] == cmax ? cmin : cmax;
                flipped = true;
            } else {
                for (int ei : chain) visited_edge[static_cast<std::size_t>(ei)] = false;
            }
        }
        if (!flipped) return std::nullopt;   // cannot happen for valid inputs
    }
    return edges;
}

std::vector<Triple> SeedTriples::all() const {
    std::vector<Triple> out;
    out.reserve(paa.size() + aau.size() + ppu.size());
    out.insert(out.end(), paa.begin(), paa.end());
    out.insert(out.end(), aau.begin(), aau.end());
    out.insert(out.end(), ppu.begin(), ppu.end());
    return out;
}

std::optional<SeedTriples> build_seed_triples(const SimpleGraph& g, int p, int u) {
    const int a = g.n;
    SeedTriples seed;
    seed.p = p;
    seed.a = a;
    seed.u = u;
    for (int i = 0; i < p; ++i) seed.P.push_back(i);
    for (int i = 0; i < a; ++i) seed.A.push_back(p + i);
    for (int i = 0; i < u; ++i) seed.U.push_back(p + a + i);

    auto phi = proper_edge_coloring(g, p, p >= static_cast<int>(g.edges.size()));
    if (!phi && !(phi = proper_edge_coloring(g, p, false))) return std::nullopt;
    SimpleGraph comp = complement_graph(g);
    auto f = proper_edge_coloring(comp, u, u >= static_cast<int>(comp.edges.size()));
    if (!f && !(f = proper_edge_coloring(comp, u, false))) return std::nullopt;
    auto kp = equitable_surjective_coloring(p, u);
    if (!kp) return std::nullopt;
    if (u > 0 && p <= 1) return std::nullopt;   // nothing can block the unplayable points

    for (std::size_t i = 0; i < g.edges.size(); ++i)
        seed.paa.push_back(make_triple(p + g.edges[i][0], p + g.edges[i][1],
                                       (*phi)[i]));
    for (std::size_t i = 0; i < comp.edges.size(); ++i)
        seed.aau.push_back(make_triple(p + comp.edges[i][0], p + comp.edges[i][1],
                                       p + a + (*f)[i]));
    for (const auto& e : *kp)
        seed.ppu.push_back(make_triple(e[0], e[1], p + a + e[2]));

    // the three families must be edge-disjoint and cover every U point
    std::set<std::pair<int, int>> pairs;
    for (const Triple& t : seed.all())
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!pairs.insert({t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]})
                         .second)
                    return std::nullopt;
    std::vector<bool> u_hit(static_cast<std::size_t>(u), false);
    for (const Triple& t : seed.ppu)
        for (int x : t)
            if (x >= p + a) u_hit[static_cast<std::size_t>(x - p - a)] = true;
    for (bool hit : u_hit)
        if (!hit) return std::nullopt;
    return seed;
}

std::optional<SteinerTripleSystem> complete_to_sts(int v, const std::vector<Triple>& fixed,
                                                   std::uint64_t seed,
                                                   const HillClimbOptions& opts) {
    return hill_climb_with_fixed(v, fixed, seed, opts);
}

VerifyReport verify_embedding(const SteinerTripleSystem& sts, const std::vector<int>& played,
                              const SimpleGraph& g) {
    VerifyReport rep;
    Position pos =
        Position::from_played(std::make_shared<const SteinerTripleSystem>(sts), played);
    auto two_played = [&sts, &pos](int x) {
        for (int bi : sts.blocks_through(x)) {
            int np = 0;
            for (int q : sts.block(bi))
                if (q != x && pos.state(q) == PointState::Played) ++np;
            if (np == 2) return true;
        }
        return false;
    };
    rep.unplayable_all_blocked = true;
    for (int x : pos.unplayable())
        if (!two_played(x)) rep.unplayable_all_blocked = false;
    rep.available_none_blocked = true;
    for (int x : pos.available())
        if (two_played(x)) rep.available_none_blocked = false;

    Hypergraph h = available_hypergraph(pos);
    bool no_triples = std::all_of(h.edges.begin(), h.edges.end(),
                                  [](const HEdge& e) { return edge_size(e) == 2; });
    rep.graph_isomorphic = no_triples && h.num_vertices() == g.n &&
                           canonical_key(h) == graph_canonical_key(g);

    Solver solver;
    rep.position_value = solver.grundy(pos);
    rep.graph_value = kayles_grundy(g);
    rep.value_matches = rep.position_value == rep.graph_value;
    return rep;
}

EmbedResult embed_graph(const SimpleGraph& g, int v, std::uint64_t seed,
                        const EmbedOptions& opts) {
    if (!admissible_order(v))
        throw DomainError(DomainError::Code::OrderInvalid,
                          "order " + std::to_string(v) + " is not 1 or 3 mod 6");
    EmbedResult res;
    const int a = g.n;
    const long long e = static_cast<long long>(g.edges.size());
    std::optional<std::pair<int, int>> chi;
    if (a <= 12)
        chi = std::make_pair(chromatic_index_exact(g),
                             chromatic_index_exact(complement_graph(g)));
    FeasibilityReport rep = u_interval(a, e, v, chi);
    if (!rep.feasible()) {
        res.diagnostics.push_back("no split: the u window for (a=" + std::to_string(a) +
                                  ", e=" + std::to_string(e) + ", v=" + std::to_string(v) +
                                  ") is empty");
        return res;
    }
    // order splits by p outwards from the square-root heuristic
    const int p_star =
        static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(v - a))));
    std::vector<std::pair<int, int>> splits;   // (p, u)
    for (long long u : rep.feasible_u) {
        int p = v - a - static_cast<int>(u);
        if (p >= 0) splits.emplace_back(p, static_cast<int>(u));
    }
    std::sort(splits.begin(), splits.end(), [p_star](const auto& x, const auto& y) {
        int dx = std::abs(x.first - p_star), dy = std::abs(y.first - p_star);
        if (dx != dy) return dx < dy;
        return x.first > y.first;   // prefer the larger p at equal distance
    });
    for (auto [p, u] : splits) {
        auto seed_triples = build_seed_triples(g, p, u);
        if (!seed_triples) {
            res.diagnostics.push_back("split p=" + std::to_string(p) + " u=" + std::to_string(u) +
                                      ": seed triples infeasible");
            continue;
        }
        std::vector<Triple> fixed = seed_triples->all();
        for (int attempt = 0; attempt < opts.seeds_per_split; ++attempt) {
            std::uint64_t sub_seed = splitmix64(
                splitmix64(seed ^ (static_cast<std::uint64_t>(p) << 32)) +
                static_cast<std::uint64_t>(attempt));
            auto sts = complete_to_sts(v, fixed, sub_seed, opts.climb);
            if (!sts) continue;
            VerifyReport check = verify_embedding(*sts, seed_triples->P, g);
            if (!check.all_pass()) {
                res.diagnostics.push_back("split p=" + std::to_string(p) +
                                          " u=" + std::to_string(u) + " seed " +
                                          std::to_string(sub_seed) + ": verification failed");
                continue;
            }
            res.sts = std::move(sts);
            res.played = seed_triples->P;
            res.p = p;
            res.u = u;
            res.seed_used = sub_seed;
            return res;
        }
        res.diagnostics.push_back("split p=" + std::to_string(p) + " u=" + std::to_string(u) +
                                  ": no completion in " + std::to_string(opts.seeds_per_split) +
                                  " seeds");
    }
    return res;
}

} // namespace nofil
