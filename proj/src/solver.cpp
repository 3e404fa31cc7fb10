#include "nofil/solver.hpp"

#include <algorithm>
#include <deque>

namespace nofil {

int mex(const std::vector<int>& values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values)
        if (v >= 0 && v <= static_cast<int>(values.size())) seen[static_cast<std::size_t>(v)] = true;
    int m = 0;
    while (seen[static_cast<std::size_t>(m)]) ++m;
    return m;
}

std::optional<int> ValueCache::get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    lru_.splice(lru_.begin(), lru_, it->second.lru_it);
    return it->second.value;
}

void ValueCache::put(const std::string& key, int value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
        it->second.value = value;
        lru_.splice(lru_.begin(), lru_, it->second.lru_it);
        return;
    }
    lru_.push_front(key);
    map_.emplace(key, Entry{value, lru_.begin()});
    if (map_.size() > max_entries_) {
        map_.erase(lru_.back());
        lru_.pop_back();
    }
}

std::size_t ValueCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

Solver::Solver(SolverOptions opts) : cache_(opts.cache_entries) {}

int Solver::grundy(const Hypergraph& h) {
    int value = 0;
    for (const Hypergraph& comp : components(h)) value ^= component_value(comp);
    return value;
}

int Solver::grundy(const Position& pos) { return grundy(available_hypergraph(pos)); }

int Solver::component_value(const Hypergraph& comp) {
    if (comp.edges.empty())
        return static_cast<int>(comp.vertices.size() & 1);   // nim-heap parity of lone points
    std::string ekey = "E" + exact_key(comp);
    if (auto hit = cache_.get(ekey)) return *hit;
    std::string ckey = "C" + canonical_key(comp);
    if (auto hit = cache_.get(ckey)) {
        cache_.put(ekey, *hit);
        return *hit;
    }
    std::vector<int> options;
    options.reserve(comp.vertices.size());
    for (int x : comp.vertices) options.push_back(grundy(play_vertex(comp, x)));
    int value = mex(options);
    cache_.put(ckey, value);
    cache_.put(ekey, value);
    return value;
}

std::vector<int> Solver::best_moves(const Position& pos) {
    std::vector<int> out;
    for (int x : pos.available())
        if (grundy(pos.apply(x)) == 0) out.push_back(x);
    return out;
}

Outcome Solver::outcome(const Position& pos) {
    return grundy(pos) == 0 ? Outcome::P : Outcome::N;
}

std::optional<int> Solver::vertex_transitive_shortcut(const Hypergraph& h) {
    if (h.vertices.empty()) return 0;   // ended game; trivially transitive
    if (!vertex_transitive(h)) return std::nullopt;
    int option = grundy(play_vertex(h, h.vertices.front()));
    return option == 0 ? 1 : 0;
}

int grundy_bruteforce(const Hypergraph& h) {
    std::vector<int> options;
    options.reserve(h.vertices.size());
    for (int x : h.vertices) options.push_back(grundy_bruteforce(play_vertex(h, x)));
    return mex(options);
}

int grundy_bruteforce(const Position& pos) {
    return grundy_bruteforce(available_hypergraph(pos));
}

GameTree game_tree(Solver& solver, const Position& root, const GameTreeOptions& opts) {
    GameTree tree;
    tree.iso_reduced = opts.iso_reduce;
    std::deque<std::pair<int, Position>> frontier;   // node id, position
    tree.nodes.push_back(GameTreeNode{});
    tree.nodes[0].value = solver.grundy(root);
    frontier.emplace_back(0, root);
    while (!frontier.empty()) {
        auto [id, pos] = std::move(frontier.front());
        frontier.pop_front();
        int depth = tree.nodes[static_cast<std::size_t>(id)].depth;
        if (opts.max_depth >= 0 && depth >= opts.max_depth) continue;
        struct Child {
            int move;
            int merged = 1;
            Position pos;
        };
        std::vector<Child> children;
        if (opts.iso_reduce) {
            std::vector<std::pair<std::string, std::size_t>> seen;   // key -> index in children
            for (int x : pos.available()) {
                Position next = pos.apply(x);
                std::string key = canonical_key(available_hypergraph(next));
                auto it = std::find_if(seen.begin(), seen.end(),
                                       [&key](const auto& kv) { return kv.first == key; });
                if (it == seen.end()) {
                    seen.emplace_back(std::move(key), children.size());
                    children.push_back(Child{x, 1, std::move(next)});
                } else {
                    ++children[it->second].merged;
                }
            }
        } else {
            for (int x : pos.available()) children.push_back(Child{x, 1, pos.apply(x)});
        }
        for (Child& c : children) {
            if (tree.nodes.size() >= opts.node_cap)
                throw DomainError(DomainError::Code::BudgetExceeded,
                                  "game tree exceeds node cap of " +
                                      std::to_string(opts.node_cap));
            GameTreeNode node;
            node.parent = id;
            node.move = c.move;
            node.merged = c.merged;
            node.depth = depth + 1;
            node.value = solver.grundy(c.pos);
            int child_id = static_cast<int>(tree.nodes.size());
            tree.nodes[static_cast<std::size_t>(id)].children.push_back(child_id);
            tree.nodes.push_back(std::move(node));
            frontier.emplace_back(child_id, std::move(c.pos));
        }
    }
    return tree;
}

std::string to_dot(const GameTree& tree) {
    std::string out = "digraph gametree {\n";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const GameTreeNode& node = tree.nodes[i];
        out += "  n" + std::to_string(i) + " [label=\"" + std::to_string(node.value) + "\"];\n";
    }
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const GameTreeNode& node = tree.nodes[i];
        if (node.parent < 0) continue;
        out += "  n" + std::to_string(node.parent) + " -> n" + std::to_string(i) +
               " [label=\"" + std::to_string(node.move);
        if (node.merged > 1) out += " x" + std::to_string(node.merged);
        out += "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace nofil
