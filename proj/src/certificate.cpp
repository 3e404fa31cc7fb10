#include "nofil/hypergraph.hpp"
#include "nofil/sts.hpp"

#include <numeric>

namespace nofil {

IsoCertificate certificate(const SteinerTripleSystem& sts) {
    Hypergraph h;
    h.vertices.resize(static_cast<std::size_t>(sts.order()));
    std::iota(h.vertices.begin(), h.vertices.end(), 0);
    h.edges.reserve(static_cast<std::size_t>(sts.num_blocks()));
    for (const Triple& b : sts.blocks()) h.edges.push_back(triple_edge(b[0], b[1], b[2]));
    h.normalize();
    return IsoCertificate{canonical_key(h)};
}

} // namespace nofil
