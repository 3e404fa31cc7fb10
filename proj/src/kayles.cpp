#include "nofil/kayles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>

#include "nofil/solver.hpp"

namespace nofil {

void SimpleGraph::normalize() {
    for (auto& e : edges)
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const std::array<int, 2>& e) { return e[0] == e[1]; }),
                edges.end());
}

SimpleGraph parse_graph(const std::string& text) {
    SimpleGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_n) {
            long n;
            if (tok != "n" || !(ls >> n) || n < 0)
                throw DomainError(DomainError::Code::ParseError,
                                  "expected 'n <count>' at line " + std::to_string(lineno),
                                  lineno);
            g.n = static_cast<int>(n);
            have_n = true;
            continue;
        }
        std::istringstream es(line);
        long a, b;
        if (!(es >> a >> b))
            throw DomainError(DomainError::Code::ParseError,
                              "expected an edge at line " + std::to_string(lineno), lineno);
        if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
            throw DomainError(DomainError::Code::ParseError,
                              "bad edge at line " + std::to_string(lineno), lineno);
        g.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    if (!have_n)
        throw DomainError(DomainError::Code::ParseError, "missing 'n <count>' line", 0);
    g.normalize();
    return g;
}

std::string serialize_graph(const SimpleGraph& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (const auto& e : g.edges)
        out += std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
    return out;
}

Hypergraph graph_to_hypergraph(const SimpleGraph& g) {
    Hypergraph h;
    h.vertices.resize(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) h.vertices[static_cast<std::size_t>(i)] = i;
    for (const auto& e : g.edges) h.edges.push_back(pair_edge(e[0], e[1]));
    h.normalize();
    return h;
}

std::string graph_canonical_key(const SimpleGraph& g) {
    return canonical_key(graph_to_hypergraph(g));
}

SimpleGraph complement_graph(const SimpleGraph& g) {
    SimpleGraph out;
    out.n = g.n;
    std::vector<bool> present(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n),
                              false);
    for (const auto& e : g.edges)
        present[static_cast<std::size_t>(e[0]) * static_cast<std::size_t>(g.n) +
                static_cast<std::size_t>(e[1])] = true;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (!present[static_cast<std::size_t>(a) * static_cast<std::size_t>(g.n) +
                         static_cast<std::size_t>(b)])
                out.edges.push_back({a, b});
    out.normalize();
    return out;
}

namespace {

constexpr int kMaskLimit = 64;

struct MaskGame {
    int n = 0;
    std::vector<std::uint64_t> closed;   // closed neighbourhood masks

    static MaskGame of(const SimpleGraph& g) {
        if (g.n > kMaskLimit)
            throw DomainError(DomainError::Code::SizeLimit,
                              "graph too large for the vertex game solver");
        MaskGame m;
        m.n = g.n;
        m.closed.assign(static_cast<std::size_t>(g.n), 0);
        for (int x = 0; x < g.n; ++x) m.closed[static_cast<std::size_t>(x)] = 1ULL << x;
        for (const auto& e : g.edges) {
            m.closed[static_cast<std::size_t>(e[0])] |= 1ULL << e[1];
            m.closed[static_cast<std::size_t>(e[1])] |= 1ULL << e[0];
        }
        return m;
    }

    Hypergraph induced(std::uint64_t mask) const {
        Hypergraph h;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1) h.vertices.push_back(x);
        for (int x = 0; x < n; ++x) {
            if (!(mask >> x & 1)) continue;
            std::uint64_t nbrs = closed[static_cast<std::size_t>(x)] & mask & ~(1ULL << x);
            for (int y = x + 1; y < n; ++y)
                if (nbrs >> y & 1) h.edges.push_back(pair_edge(x, y));
        }
        h.normalize();
        return h;
    }

    std::vector<std::uint64_t> component_masks(std::uint64_t mask) const {
        std::vector<std::uint64_t> comps;
        std::uint64_t left = mask;
        while (left) {
            std::uint64_t comp = left & -left;
            while (true) {
                std::uint64_t grown = comp;
                for (int x = 0; x < n; ++x)
                    if (comp >> x & 1) grown |= closed[static_cast<std::size_t>(x)] & mask;
                if (grown == comp) break;
                comp = grown;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    }
};

int solve_component(const MaskGame& game, std::uint64_t mask, ValueCache& cache);

int solve_mask(const MaskGame& game, std::uint64_t mask, ValueCache& cache) {
    int value = 0;
    for (std::uint64_t comp : game.component_masks(mask))
        value ^= solve_component(game, comp, cache);
    return value;
}

int solve_component(const MaskGame& game, std::uint64_t mask, ValueCache& cache) {
    int count = std::popcount(mask);
    if (count == 0) return 0;
    if (count == 1) return 1;
    std::string key = canonical_key(game.induced(mask));
    if (auto hit = cache.get(key)) return *hit;
    std::vector<int> options;
    for (int x = 0; x < game.n; ++x)
        if (mask >> x & 1)
            options.push_back(
                solve_mask(game, mask & ~game.closed[static_cast<std::size_t>(x)], cache));
    int value = mex(options);
    cache.put(key, value);
    return value;
}

ValueCache& shared_cache() {
    static ValueCache cache(std::size_t(1) << 20);
    return cache;
}

} // namespace

int kayles_grundy(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    MaskGame game = MaskGame::of(g);
    std::uint64_t full = g.n == kMaskLimit ? ~0ULL : (1ULL << g.n) - 1;
    return solve_mask(game, full, shared_cache());
}

int kayles_bruteforce(const SimpleGraph& g) {
    MaskGame game = MaskGame::of(g);
    std::uint64_t full = g.n == kMaskLimit ? ~0ULL : (1ULL << g.n) - 1;
    // plain recursion, no cache, no decomposition
    std::function<int(std::uint64_t)> rec = [&](std::uint64_t mask) {
        std::vector<int> options;
        for (int x = 0; x < game.n; ++x)
            if (mask >> x & 1)
                options.push_back(rec(mask & ~game.closed[static_cast<std::size_t>(x)]));
        return mex(options);
    };
    return rec(full);
}

} // namespace nofil
