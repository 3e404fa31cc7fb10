#pragma once

#include <array>
#include <string>
#include <vector>

#include "nofil/hypergraph.hpp"

namespace nofil {

// Plain graph: vertices 0..n-1, undirected edges, no loops or duplicates.
struct SimpleGraph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;   // each {a,b} with a < b, sorted

    void normalize();
    bool operator==(const SimpleGraph&) const = default;
};

// Text format: first line "n <count>", then one edge per line.
SimpleGraph parse_graph(const std::string& text);
std::string serialize_graph(const SimpleGraph& g);

Hypergraph graph_to_hypergraph(const SimpleGraph& g);
std::string graph_canonical_key(const SimpleGraph& g);
SimpleGraph complement_graph(const SimpleGraph& g);

// Nim-value of the vertex-picking game where a move deletes the chosen
// vertex's closed neighbourhood; xor over components, memoized on canonical
// form. The endgame oracle for positions whose available hypergraph has no
// 3-edges.
int kayles_grundy(const SimpleGraph& g);

// Unmemoized recursion, the independent oracle. Keep below ~16 vertices.
int kayles_bruteforce(const SimpleGraph& g);

} // namespace nofil
