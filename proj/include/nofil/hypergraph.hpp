#pragma once

#include <string>
#include <vector>

#include "nofil/common.hpp"

namespace nofil {

// Edge of an available hypergraph: {a,b,-1} is a pair (two available points
// sharing a block with a played point), {a,b,c} a triple (an all-available
// block). Members ascending; the -1 sentinel sorts pairs before triples on
// the same leading points.
using HEdge = std::array<int, 3>;

inline HEdge pair_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    return {a, b, -1};
}

inline HEdge triple_edge(int a, int b, int c) {
    Triple t = make_triple(a, b, c);
    return {t[0], t[1], t[2]};
}

inline int edge_size(const HEdge& e) { return e[2] < 0 ? 2 : 3; }

// Vertex labels are arbitrary point ids; edges only mention listed vertices.
struct Hypergraph {
    std::vector<int> vertices;   // sorted ascending
    std::vector<HEdge> edges;    // sorted, deduplicated

    void normalize();
    bool has_vertex(int x) const;
    bool empty() const { return vertices.empty(); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Hypergraph&) const = default;
};

// Relabels to 0..k-1 (order-preserving); original labels into *labels.
Hypergraph compact(const Hypergraph& h, std::vector<int>* labels = nullptr);

// One move of the point game on the hypergraph: x must be a vertex. The
// partner of every pair edge through x becomes unplayable; triples through
// x shrink to pairs; every edge meeting an unplayable vertex disappears.
Hypergraph play_vertex(const Hypergraph& h, int x);

// Connected components, ordered by smallest vertex label. All isolated
// vertices are grouped into a single edgeless component.
std::vector<Hypergraph> components(const Hypergraph& h);

// Exact encoding of the compacted hypergraph; equal strings iff the two
// hypergraphs are equal after order-preserving relabeling.
std::string exact_key(const Hypergraph& h);

// Canonical form: equal keys iff isomorphic. Isolated vertices contribute
// only their count.
std::string canonical_key(const Hypergraph& h);

// Orbit id per vertex (indexed like h.vertices) under the automorphism
// group, computed by comparing canonical forms with one vertex distinguished.
std::vector<int> automorphism_orbits(const Hypergraph& h);

bool vertex_transitive(const Hypergraph& h);

} // namespace nofil
