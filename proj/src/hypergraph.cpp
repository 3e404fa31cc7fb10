#include "nofil/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace nofil {

void Hypergraph::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (HEdge& e : edges) {
        if (edge_size(e) == 2) {
            e = pair_edge(e[0], e[1]);
        } else {
            e = triple_edge(e[0], e[1], e[2]);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Hypergraph::has_vertex(int x) const {
    return std::binary_search(vertices.begin(), vertices.end(), x);
}

Hypergraph compact(const Hypergraph& h, std::vector<int>* labels) {
    Hypergraph out;
    out.vertices.resize(h.vertices.size());
    std::iota(out.vertices.begin(), out.vertices.end(), 0);
    if (labels) *labels = h.vertices;
    auto rank = [&h](int x) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), x) -
                                h.vertices.begin());
    };
    out.edges.reserve(h.edges.size());
    for (const HEdge& e : h.edges) {
        if (edge_size(e) == 2)
            out.edges.push_back(pair_edge(rank(e[0]), rank(e[1])));
        else
            out.edges.push_back(triple_edge(rank(e[0]), rank(e[1]), rank(e[2])));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Hypergraph play_vertex(const Hypergraph& h, int x) {
    std::vector<int> dead{x};
    for (const HEdge& e : h.edges) {
        if (edge_size(e) == 2) {
            if (e[0] == x) dead.push_back(e[1]);
            else if (e[1] == x) dead.push_back(e[0]);
        }
    }
    std::sort(dead.begin(), dead.end());
    dead.erase(std::unique(dead.begin(), dead.end()), dead.end());
    auto is_dead = [&dead](int y) { return std::binary_search(dead.begin(), dead.end(), y); };

    Hypergraph out;
    out.vertices.reserve(h.vertices.size());
    for (int y : h.vertices)
        if (!is_dead(y)) out.vertices.push_back(y);
    for (const HEdge& e : h.edges) {
        bool through_x = e[0] == x || e[1] == x || (e[2] >= 0 && e[2] == x);
        if (edge_size(e) == 2) {
            if (through_x) continue;   // partner is dead
            if (is_dead(e[0]) || is_dead(e[1])) continue;
            out.edges.push_back(e);
        } else if (through_x) {
            int r0 = e[0] == x ? e[1] : e[0];
            int r1 = e[2] == x ? e[1] : e[2];
            if (!is_dead(r0) && !is_dead(r1)) out.edges.push_back(pair_edge(r0, r1));
        } else {
            if (is_dead(e[0]) || is_dead(e[1]) || is_dead(e[2])) continue;
            out.edges.push_back(e);
        }
    }
    out.normalize();
    return out;
}

std::vector<Hypergraph> components(const Hypergraph& h) {
    const int n = h.num_vertices();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        while (parent[static_cast<std::size_t>(i)] != i) {
            parent[static_cast<std::size_t>(i)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
            i = parent[static_cast<std::size_t>(i)];
        }
        return i;
    };
    auto unite = [&](int i, int j) { parent[static_cast<std::size_t>(find(i))] = find(j); };
    auto rank = [&h](int x) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), x) -
                                h.vertices.begin());
    };
    std::vector<bool> touched(static_cast<std::size_t>(n), false);
    for (const HEdge& e : h.edges) {
        int r0 = rank(e[0]), r1 = rank(e[1]);
        unite(r0, r1);
        touched[static_cast<std::size_t>(r0)] = touched[static_cast<std::size_t>(r1)] = true;
        if (e[2] >= 0) {
            int r2 = rank(e[2]);
            unite(r1, r2);
            touched[static_cast<std::size_t>(r2)] = true;
        }
    }
    // roots of non-isolated components, by smallest member
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    std::vector<Hypergraph> out;
    Hypergraph isolated;
    for (int i = 0; i < n; ++i) {
        if (!touched[static_cast<std::size_t>(i)]) {
            isolated.vertices.push_back(h.vertices[static_cast<std::size_t>(i)]);
            continue;
        }
        int root = find(i);
        if (comp_of[static_cast<std::size_t>(root)] < 0) {
            comp_of[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(root)])].vertices.push_back(
            h.vertices[static_cast<std::size_t>(i)]);
    }
    for (const HEdge& e : h.edges) {
        int root = find(rank(e[0]));
        out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(root)])].edges.push_back(e);
    }
    if (!isolated.vertices.empty()) out.push_back(std::move(isolated));
    for (Hypergraph& c : out) c.normalize();
    std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

namespace {

// --- canonical labeling by individualization and refinement ---------------

std::string encode_compact(int n, const std::vector<HEdge>& edges) {
    if (n > 255)
        throw DomainError(DomainError::Code::SizeLimit, "hypergraph too large to encode");
    std::string out;
    out.reserve(3 + edges.size() * 4);
    out += static_cast<char>(static_cast<unsigned char>(n));
    for (const HEdge& e : edges) {
        out += static_cast<char>(static_cast<unsigned char>(edge_size(e)));
        out += static_cast<char>(static_cast<unsigned char>(e[0]));
        out += static_cast<char>(static_cast<unsigned char>(e[1]));
        if (e[2] >= 0) out += static_cast<char>(static_cast<unsigned char>(e[2]));
    }
    return out;
}

struct CanonSearch {
    int n = 0;
    const std::vector<HEdge>* edges = nullptr;
    std::vector<std::vector<int>> incident;   // vertex -> edge indices
    std::string best;
    bool have_best = false;

    // Splits colour classes by signatures until stable. Colours are ranks
    // 0..m-1 assigned in signature order, so the partition is canonical.
    void refine(std::vector<int>& color) const {
        int classes = 0;
        for (int c : color) classes = std::max(classes, c + 1);
        while (true) {
            std::vector<std::vector<long long>> sig(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                auto& s = sig[static_cast<std::size_t>(x)];
                s.push_back(color[static_cast<std::size_t>(x)]);
                std::vector<long long> parts;
                for (int ei : incident[static_cast<std::size_t>(x)]) {
                    const HEdge& e = (*edges)[static_cast<std::size_t>(ei)];
                    long long c1 = -1, c2 = -1;
                    for (int v : e) {
                        if (v < 0 || v == x) continue;
                        long long c = color[static_cast<std::size_t>(v)];
                        if (c1 < 0) c1 = c;
                        else c2 = c;
                    }
                    if (c2 >= 0 && c2 < c1) std::swap(c1, c2);
                    parts.push_back(((edge_size(e) * 1000003LL + c1 + 1) * 1000003LL) + c2 + 1);
                }
                std::sort(parts.begin(), parts.end());
                s.insert(s.end(), parts.begin(), parts.end());
            }
            std::vector<int> idx(static_cast<std::size_t>(n));
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int i, int j) {
                return sig[static_cast<std::size_t>(i)] < sig[static_cast<std::size_t>(j)];
            });
            std::vector<int> next(static_cast<std::size_t>(n), 0);
            int m = 0;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                if (k > 0 && sig[static_cast<std::size_t>(idx[k])] != sig[static_cast<std::size_t>(idx[k - 1])]) ++m;
                next[static_cast<std::size_t>(idx[k])] = m;
            }
            ++m;
            if (m == classes) {
                color = next;
                return;
            }
            classes = m;
            color = next;
        }
    }

    void emit(const std::vector<int>& color) {
        // colour is a bijection vertex -> position
        std::vector<HEdge> mapped;
        mapped.reserve(edges->size());
        for (const HEdge& e : *edges) {
            int a = color[static_cast<std::size_t>(e[0])];
            int b = color[static_cast<std::size_t>(e[1])];
            if (e[2] >= 0)
                mapped.push_back(triple_edge(a, b, color[static_cast<std::size_t>(e[2])]));
            else
                mapped.push_back(pair_edge(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        std::string cert = encode_compact(n, mapped);
        if (!have_best || cert < best) {
            best = std::move(cert);
            have_best = true;
        }
    }

    void search(std::vector<int> color) {
        refine(color);
        int classes = 0;
        for (int c : color) classes = std::max(classes, c + 1);
        if (classes == n) {
            emit(color);
            return;
        }
        // smallest non-singleton cell, lowest colour on ties
        std::vector<int> size(static_cast<std::size_t>(classes), 0);
        for (int c : color) ++size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < classes; ++c) {
            if (size[static_cast<std::size_t>(c)] < 2) continue;
            if (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])
                target = c;
        }
        for (int x = 0; x < n; ++x) {
            if (color[static_cast<std::size_t>(x)] != target) continue;
            std::vector<int> split(static_cast<std::size_t>(n));
            for (int y = 0; y < n; ++y) {
                int c = color[static_cast<std::size_t>(y)];
                split[static_cast<std::size_t>(y)] = 2 * c + (c == target && y != x ? 1 : 0);
            }
            search(std::move(split));
        }
    }
};

// Fully symmetric edge sets are canonical under any labeling; skipping the
// search keeps complete graphs from costing n! leaves.
bool fully_symmetric(int n, const std::vector<HEdge>& edges) {
    std::size_t pairs = 0, triples = 0;
    for (const HEdge& e : edges) (edge_size(e) == 2 ? pairs : triples)++;
    std::size_t all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t all_triples = static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    return (pairs == 0 || pairs == all_pairs) && (triples == 0 || triples == all_triples);
}

// Quadrilateral incidence per vertex: two triples {a,b,c}, {a,d,e} close
// into a quad when some sixth vertex f carries both {f,b,d} and {f,c,e}.
// Degree-based refinement cannot separate the points of a triple system
// (every pair lies in one block), so this third-order count does the first
// split.
std::vector<long long> quad_counts(int n, const std::vector<HEdge>& edges) {
    std::vector<long long> count(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> completions(
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<std::vector<int>> triples_at(static_cast<std::size_t>(n));
    auto slot = [n](int x, int y) {
        if (x > y) std::swap(x, y);
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(y);
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const HEdge& e = edges[i];
        if (edge_size(e) != 3) continue;
        completions[slot(e[0], e[1])].push_back(e[2]);
        completions[slot(e[0], e[2])].push_back(e[1]);
        completions[slot(e[1], e[2])].push_back(e[0]);
        for (int v : e) triples_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    auto in_five = [](int f, int a, int b, int c, int d, int e) {
        return f == a || f == b || f == c || f == d || f == e;
    };
    for (int a = 0; a < n; ++a) {
        const auto& ts = triples_at[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                const HEdge& e1 = edges[static_cast<std::size_t>(ts[i])];
                const HEdge& e2 = edges[static_cast<std::size_t>(ts[j])];
                int b = e1[0] == a ? e1[1] : e1[0];
                int c = e1[2] == a ? e1[1] : e1[2];
                int d = e2[0] == a ? e2[1] : e2[0];
                int e = e2[2] == a ? e2[1] : e2[2];
                if (b == d || b == e || c == d || c == e) continue;   // share only a
                for (int pairing = 0; pairing < 2; ++pairing) {
                    int p = pairing == 0 ? d : e;
                    int q = pairing == 0 ? e : d;
                    for (int f : completions[slot(b, p)]) {
                        if (in_five(f, a, b, c, d, e)) continue;
                        for (int g : completions[slot(c, q)])
                            if (g == f) {
                                ++count[static_cast<std::size_t>(a)];
                                ++count[static_cast<std::size_t>(b)];
                                ++count[static_cast<std::size_t>(c)];
                                ++count[static_cast<std::size_t>(d)];
                                ++count[static_cast<std::size_t>(e)];
                                ++count[static_cast<std::size_t>(f)];
                            }
                    }
                }
            }
        }
    }
    return count;
}

std::string canon_component(const Hypergraph& comp_compact,
                            const std::vector<int>* init_color = nullptr) {
    const int n = comp_compact.num_vertices();
    if (!init_color && fully_symmetric(n, comp_compact.edges))
        return encode_compact(n, comp_compact.edges);
    // seed colours with label-invariant vertex data: the distinguished
    // mark, then degrees by edge size, then quad incidence
    std::vector<int> d2(static_cast<std::size_t>(n), 0), d3(static_cast<std::size_t>(n), 0);
    bool has_triples = false;
    for (const HEdge& e : comp_compact.edges) {
        if (edge_size(e) == 2) {
            ++d2[static_cast<std::size_t>(e[0])];
            ++d2[static_cast<std::size_t>(e[1])];
        } else {
            has_triples = true;
            for (int v : e) ++d3[static_cast<std::size_t>(v)];
        }
    }
    std::vector<long long> quads =
        has_triples ? quad_counts(n, comp_compact.edges)
                    : std::vector<long long>(static_cast<std::size_t>(n), 0);
    std::vector<std::array<long long, 4>> tuples(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        tuples[static_cast<std::size_t>(x)] = {
            init_color ? static_cast<long long>((*init_color)[static_cast<std::size_t>(x)]) : 0,
            static_cast<long long>(d2[static_cast<std::size_t>(x)]),
            static_cast<long long>(d3[static_cast<std::size_t>(x)]),
            quads[static_cast<std::size_t>(x)]};
    std::vector<std::array<long long, 4>> sorted = tuples;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        color[static_cast<std::size_t>(x)] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), tuples[static_cast<std::size_t>(x)]) -
            sorted.begin());

    CanonSearch cs;
    cs.n = n;
    cs.edges = &comp_compact.edges;
    cs.incident.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < comp_compact.edges.size(); ++i)
        for (int v : comp_compact.edges[i])
            if (v >= 0) cs.incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    cs.search(std::move(color));
    return cs.best;
}

void append_u16(std::string& out, std::size_t x) {
    out += static_cast<char>(static_cast<unsigned char>(x >> 8));
    out += static_cast<char>(static_cast<unsigned char>(x & 0xff));
}

} // namespace

std::string exact_key(const Hypergraph& h) {
    Hypergraph c = compact(h);
    return encode_compact(c.num_vertices(), c.edges);
}

std::string canonical_key(const Hypergraph& h) {
    std::vector<std::string> parts;
    std::size_t isolated = 0;
    for (const Hypergraph& comp : components(h)) {
        if (comp.edges.empty()) {
            isolated += comp.vertices.size();
            continue;
        }
        parts.push_back(canon_component(compact(comp)));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    append_u16(out, isolated);
    append_u16(out, parts.size());
    for (const std::string& p : parts) {
        append_u16(out, p.size());
        out += p;
    }
    return out;
}

std::vector<int> automorphism_orbits(const Hypergraph& h) {
    const int n = h.num_vertices();
    std::vector<int> orbit(static_cast<std::size_t>(n), -1);
    if (n == 0) return orbit;
    // All isolated vertices form one orbit; only the core needs search.
    std::vector<bool> in_edge(static_cast<std::size_t>(n), false);
    auto rank = [&h](int x) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), x) -
                                h.vertices.begin());
    };
    for (const HEdge& e : h.edges)
        for (int v : e)
            if (v >= 0) in_edge[static_cast<std::size_t>(rank(v))] = true;
    Hypergraph core;
    std::vector<int> core_pos;   // index into h.vertices
    for (int i = 0; i < n; ++i)
        if (in_edge[static_cast<std::size_t>(i)]) {
            core.vertices.push_back(h.vertices[static_cast<std::size_t>(i)]);
            core_pos.push_back(i);
        }
    core.edges = h.edges;
    core.normalize();
    const int k = core.num_vertices();
    int next = 0;
    if (k > 0) {
        Hypergraph c = compact(core);
        std::vector<std::string> keys(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::vector<int> init(static_cast<std::size_t>(k), 0);
            init[static_cast<std::size_t>(i)] = 1;
            keys[static_cast<std::size_t>(i)] = canon_component(c, &init);
        }
        std::vector<int> core_orbit(static_cast<std::size_t>(k), -1);
        for (int i = 0; i < k; ++i) {
            if (core_orbit[static_cast<std::size_t>(i)] >= 0) continue;
            core_orbit[static_cast<std::size_t>(i)] = next;
            for (int j = i + 1; j < k; ++j)
                if (core_orbit[static_cast<std::size_t>(j)] < 0 &&
                    keys[static_cast<std::size_t>(j)] == keys[static_cast<std::size_t>(i)])
                    core_orbit[static_cast<std::size_t>(j)] = next;
            ++next;
        }
        for (int i = 0; i < k; ++i)
            orbit[static_cast<std::size_t>(core_pos[static_cast<std::size_t>(i)])] =
                core_orbit[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        if (orbit[static_cast<std::size_t>(i)] < 0) orbit[static_cast<std::size_t>(i)] = next;
    return orbit;
}

bool vertex_transitive(const Hypergraph& h) {
    if (h.num_vertices() == 0) return true;
    std::vector<int> orbit = automorphism_orbits(h);
    return std::all_of(orbit.begin(), orbit.end(), [](int o) { return o == 0; });
}

} // namespace nofil
