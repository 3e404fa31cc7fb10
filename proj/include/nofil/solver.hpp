#pragma once

#include <cstdint>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nofil/game.hpp"
#include "nofil/hypergraph.hpp"

namespace nofil {

// Least non-negative integer not in the set.
int mex(const std::vector<int>& values);

enum class Outcome { N, P };   // first-player win / previous-player win

// Bounded, thread-safe map from position keys to nim-values. Entries are
// pure values, so racing duplicate inserts is harmless.
class ValueCache {
public:
    explicit ValueCache(std::size_t max_entries) : max_entries_(max_entries) {}
    std::optional<int> get(const std::string& key);
    void put(const std::string& key, int value);
    std::size_t size() const;

private:
    struct Entry {
        int value;
        std::list<std::string>::iterator lru_it;
    };
    mutable std::mutex mu_;
    std::size_t max_entries_;
    std::unordered_map<std::string, Entry> map_;
    std::list<std::string> lru_;   // most recent at front
};

struct SolverOptions {
    std::size_t cache_entries = std::size_t(1) << 22;
};

// Sprague-Grundy evaluation of point play on available hypergraphs: value of
// a disconnected position is the xor over components; per component, the mex
// over moves, memoized under the canonical form so isomorphic positions share
// work across systems.
class Solver {
public:
    explicit Solver(SolverOptions opts = {});

    int grundy(const Hypergraph& h);
    int grundy(const Position& pos);

    // Available points whose option has value 0; empty iff grundy(pos) == 0.
    std::vector<int> best_moves(const Position& pos);
    Outcome outcome(const Position& pos);

    // For a vertex-transitive hypergraph the value is 0 or 1, decided by a
    // single option; nullopt when the hypergraph is not vertex-transitive.
    std::optional<int> vertex_transitive_shortcut(const Hypergraph& h);

    std::size_t cache_size() const { return cache_.size(); }

private:
    int component_value(const Hypergraph& comp);
    ValueCache cache_;
};

// Plain recursion with no memo, canonicalization or decomposition; the
// independent oracle for everything the solver computes. Exponential; keep
// instances small.
int grundy_bruteforce(const Hypergraph& h);
int grundy_bruteforce(const Position& pos);

// --- game trees -----------------------------------------------------------

struct GameTreeNode {
    int parent = -1;
    int move = -1;      // point played on the edge into this node
    int merged = 1;     // number of moves merged under iso reduction
    int depth = 0;
    int value = 0;      // nim-value of the position at this node
    std::vector<int> children;
};

struct GameTree {
    std::vector<GameTreeNode> nodes;   // nodes[0] is the root
    bool iso_reduced = false;
};

struct GameTreeOptions {
    long long max_depth = -1;        // negative: expand to the end of play
    bool iso_reduce = false;         // merge isomorphic children
    std::size_t node_cap = std::size_t(1) << 20;
};

// Throws DomainError(BudgetExceeded) when node_cap is hit.
GameTree game_tree(Solver& solver, const Position& root, const GameTreeOptions& opts = {});

std::string to_dot(const GameTree& tree);

} // namespace nofil
