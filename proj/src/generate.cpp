#include "nofil/generate.hpp"

#include <algorithm>

#include "nofil/rng.hpp"

namespace nofil {

namespace {

struct Climber {
    int v;
    std::int64_t max_steps;
    std::int64_t restart_interval;
    int ec_max_pairs;
    std::int64_t ec_node_cap;
    Rng rng;

    std::vector<int> cover;          // pair -> block slot, or -1
    std::vector<Triple> slot_block;
    std::vector<bool> slot_used;
    std::vector<bool> slot_fixed;
    std::vector<int> free_slots;
    std::vector<int> degree;         // blocks through each point
    int covered = 0;                 // covered pairs
    int total_pairs;
    std::vector<Triple> fixed;

    Climber(int v_, std::vector<Triple> fixed_, std::uint64_t seed, const HillClimbOptions& o)
        : v(v_),
          max_steps(o.max_steps >= 0 ? o.max_steps : 100LL * v_ * v_),
          restart_interval(o.restart_interval >= 0 ? o.restart_interval : 10LL * v_ * v_),
          ec_max_pairs(o.exact_cover_max_pairs),
          ec_node_cap(o.exact_cover_node_cap),
          rng(seed),
          total_pairs(v_ * (v_ - 1) / 2),
          fixed(std::move(fixed_)) {
        reset();
    }

    int slot_of_pair(int x, int y) const { return cover[static_cast<std::size_t>(x) * v + y]; }

    void reset() {
        cover.assign(static_cast<std::size_t>(v) * v, -1);
        slot_block.clear();
        slot_used.clear();
        slot_fixed.clear();
        free_slots.clear();
        degree.assign(static_cast<std::size_t>(v), 0);
        covered = 0;
        for (const Triple& t : fixed) add_block(t, true);
    }

    int add_block(const Triple& t, bool is_fixed) {
        int slot;
        if (free_slots.empty()) {
            slot = static_cast<int>(slot_block.size());
            slot_block.push_back(t);
            slot_used.push_back(true);
            slot_fixed.push_back(is_fixed);
        } else {
            slot = free_slots.back();
            free_slots.pop_back();
            slot_block[static_cast<std::size_t>(slot)] = t;
            slot_used[static_cast<std::size_t>(slot)] = true;
            slot_fixed[static_cast<std::size_t>(slot)] = is_fixed;
        }
        for (int i = 0; i < 3; ++i) {
            ++degree[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < 3; ++j) {
                int x = t[static_cast<std::size_t>(i)], y = t[static_cast<std::size_t>(j)];
                cover[static_cast<std::size_t>(x) * v + y] = slot;
                cover[static_cast<std::size_t>(y) * v + x] = slot;
                ++covered;
            }
        }
        return slot;
    }

    void remove_block(int slot) {
        const Triple t = slot_block[static_cast<std::size_t>(slot)];
        for (int i = 0; i < 3; ++i) {
            --degree[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < 3; ++j) {
                int x = t[static_cast<std::size_t>(i)], y = t[static_cast<std::size_t>(j)];
                cover[static_cast<std::size_t>(x) * v + y] = -1;
                cover[static_cast<std::size_t>(y) * v + x] = -1;
                --covered;
            }
        }
        slot_used[static_cast<std::size_t>(slot)] = false;
        free_slots.push_back(slot);
    }

    // One hill-climbing move; false when it only switched or stalled.
    bool step() {
        // point of minimum degree among those with an uncovered pair
        int best_deg = v;
        for (int x = 0; x < v; ++x) {
            int unc = (v - 1) - 2 * degree[static_cast<std::size_t>(x)];
            if (unc > 0 && degree[static_cast<std::size_t>(x)] < best_deg)
                best_deg = degree[static_cast<std::size_t>(x)];
        }
        std::vector<int> candidates;
        for (int x = 0; x < v; ++x) {
            int unc = (v - 1) - 2 * degree[static_cast<std::size_t>(x)];
            if (unc > 0 && degree[static_cast<std::size_t>(x)] == best_deg)
                candidates.push_back(x);
        }
        int x = candidates[static_cast<std::size_t>(rng.pick(static_cast<int>(candidates.size())))];
        std::vector<int> partners;
        for (int y = 0; y < v; ++y)
            if (y != x && slot_of_pair(x, y) < 0) partners.push_back(y);
        // v odd makes the uncovered count at a point even, so >= 2 here
        for (int attempt = 0; attempt < 10; ++attempt) {
            int i = rng.pick(static_cast<int>(partners.size()));
            int j = rng.pick(static_cast<int>(partners.size() - 1));
            if (j >= i) ++j;
            int y = partners[static_cast<std::size_t>(i)], z = partners[static_cast<std::size_t>(j)];
            int blocking = slot_of_pair(y, z);
            if (blocking < 0) {
                add_block(make_triple(x, y, z), false);
                return true;
            }
            if (!slot_fixed[static_cast<std::size_t>(blocking)]) {
                remove_block(blocking);
                add_block(make_triple(x, y, z), false);
                return false;
            }
            // the displaced block is immovable; try another pair of partners
        }
        return false;
    }

    // Bounded exact cover of the remaining pairs by new triples. The leave
    // can only shrink during the search, so the pair list frozen here stays
    // a superset of the active one.
    bool exact_cover_finish() {
        std::vector<std::array<int, 2>> leave;
        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y)
                if (slot_of_pair(x, y) < 0) leave.push_back({x, y});
        std::int64_t budget = ec_node_cap;
        std::vector<int> placed;
        if (ec_rec(leave, budget, placed)) return true;
        for (auto it = placed.rbegin(); it != placed.rend(); ++it) remove_block(*it);
        return false;
    }

    bool ec_rec(const std::vector<std::array<int, 2>>& leave, std::int64_t& budget,
                std::vector<int>& placed) {
        if (covered == total_pairs) return true;
        if (--budget <= 0) return false;
        // still-uncovered pair with the fewest completions
        int bx = -1, by = -1;
        int best = v + 1;
        for (const auto& pr : leave) {
            if (slot_of_pair(pr[0], pr[1]) >= 0) continue;
            int count = 0;
            for (int z = 0; z < v; ++z) {
                if (z == pr[0] || z == pr[1]) continue;
                if (slot_of_pair(pr[0], z) < 0 && slot_of_pair(pr[1], z) < 0) ++count;
            }
            if (count < best) {
                best = count;
                bx = pr[0];
                by = pr[1];
                if (best == 0) break;
            }
        }
        if (bx < 0) return covered == total_pairs;
        if (best == 0) return false;
        for (int z = 0; z < v; ++z) {
            if (z == bx || z == by) continue;
            if (slot_of_pair(bx, z) >= 0 || slot_of_pair(by, z) >= 0) continue;
            int slot = add_block(make_triple(bx, by, z), false);
            placed.push_back(slot);
            if (ec_rec(leave, budget, placed)) return true;
            placed.pop_back();
            remove_block(slot);
            if (budget <= 0) return false;
        }
        return false;
    }

    std::optional<SteinerTripleSystem> run() {
        std::int64_t steps = 0;
        std::int64_t stagnant = 0;
        const std::int64_t ec_after = std::max<std::int64_t>(50, restart_interval / 20);
        int best_covered = covered;
        int last_ec_uncovered = total_pairs + 1;
        while (covered < total_pairs) {
            // the exact-cover finish only pays off once the climb is stuck
            int uncovered = total_pairs - covered;
            if (uncovered <= ec_max_pairs && stagnant >= ec_after &&
                uncovered < last_ec_uncovered) {
                last_ec_uncovered = uncovered;
                if (exact_cover_finish()) break;
            }
            if (steps >= max_steps) return std::nullopt;
            step();
            ++steps;
            if (covered > best_covered) {
                best_covered = covered;
                stagnant = 0;
            } else if (++stagnant > restart_interval) {
                reset();
                best_covered = covered;
                stagnant = 0;
                last_ec_uncovered = total_pairs + 1;
            }
        }
        std::vector<Triple> blocks;
        for (std::size_t s = 0; s < slot_block.size(); ++s)
            if (slot_used[s]) blocks.push_back(slot_block[s]);
        std::sort(blocks.begin(), blocks.end());
        ValidationResult res = validate_sts(v, blocks);
        if (!res.ok())
            throw DomainError(DomainError::Code::NotAnSts, "hill climb produced a broken system");
        return *std::move(res.system);
    }
};

void check_fixed(int v, const std::vector<Triple>& fixed) {
    std::vector<bool> seen(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), false);
    for (const Triple& raw : fixed) {
        Triple t = make_triple(raw[0], raw[1], raw[2]);
        if (t[0] < 0 || t[2] >= v || t[0] == t[1] || t[1] == t[2])
            throw DomainError(DomainError::Code::BadFixedTriples,
                              "fixed triple is malformed for order " + std::to_string(v));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::size_t key = static_cast<std::size_t>(t[static_cast<std::size_t>(i)]) *
                                      static_cast<std::size_t>(v) +
                                  static_cast<std::size_t>(t[static_cast<std::size_t>(j)]);
                if (seen[key])
                    throw DomainError(DomainError::Code::BadFixedTriples,
                                      "fixed triples share the pair {" +
                                          std::to_string(t[static_cast<std::size_t>(i)]) + "," +
                                          std::to_string(t[static_cast<std::size_t>(j)]) + "}");
                seen[key] = true;
            }
    }
}

} // namespace

std::optional<SteinerTripleSystem> hill_climb_sts(int v, std::uint64_t seed,
                                                  const HillClimbOptions& opts) {
    return hill_climb_with_fixed(v, {}, seed, opts);
}

std::optional<SteinerTripleSystem> hill_climb_with_fixed(int v, const std::vector<Triple>& fixed,
                                                         std::uint64_t seed,
                                                         const HillClimbOptions& opts) {
    if (!admissible_order(v))
        throw DomainError(DomainError::Code::OrderInvalid,
                          "order " + std::to_string(v) + " is not 1 or 3 mod 6");
    check_fixed(v, fixed);
    std::vector<Triple> norm;
    norm.reserve(fixed.size());
    for (const Triple& t : fixed) norm.push_back(make_triple(t[0], t[1], t[2]));
    Climber climber(v, std::move(norm), seed, opts);
    return climber.run();
}

DistinctBatch generate_distinct(int v, int count, std::uint64_t seed, std::int64_t max_attempts,
                                const HillClimbOptions& opts) {
    if (max_attempts < 0) max_attempts = std::max<std::int64_t>(50LL * count, 500);
    DistinctBatch batch;
    std::vector<IsoCertificate> certs;
    std::uint64_t stream = seed;
    while (static_cast<int>(batch.systems.size()) < count && batch.attempts < max_attempts) {
        ++batch.attempts;
        stream = splitmix64(stream);
        auto sys = hill_climb_sts(v, stream, opts);
        if (!sys) continue;
        IsoCertificate cert = certificate(*sys);
        bool fresh = std::none_of(certs.begin(), certs.end(),
                                  [&cert](const IsoCertificate& c) { return c == cert; });
        if (fresh) {
            certs.push_back(std::move(cert));
            batch.systems.push_back(*std::move(sys));
        }
    }
    batch.exhausted = static_cast<int>(batch.systems.size()) < count;
    return batch;
}

} // namespace nofil
