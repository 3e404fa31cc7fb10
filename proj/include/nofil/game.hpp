#pragma once

#include <memory>
#include <vector>

#include "nofil/hypergraph.hpp"
#include "nofil/sts.hpp"

namespace nofil {

enum class PointState : unsigned char { Available = 0, Played = 1, Unplayable = 2 };

// Game state over a fixed system: the partition of points into played,
// available and unplayable. The played set determines the rest, so equality
// and keys are over (system, played). Immutable; apply() returns a new value.
class Position {
public:
    static Position initial(std::shared_ptr<const SteinerTripleSystem> sts);

    // Recomputes unplayable/available from an arbitrary played set.
    // Throws DomainError(FilledBlock) if some block lies inside it.
    static Position from_played(std::shared_ptr<const SteinerTripleSystem> sts,
                                const std::vector<int>& played);

    const SteinerTripleSystem& sts() const { return *sts_; }
    const std::shared_ptr<const SteinerTripleSystem>& sts_ptr() const { return sts_; }

    PointState state(int x) const { return state_[static_cast<std::size_t>(x)]; }
    bool is_legal(int x) const {
        return x >= 0 && x < sts_->order() && state(x) == PointState::Available;
    }

    std::vector<int> played() const { return collect(PointState::Played); }
    std::vector<int> available() const { return collect(PointState::Available); }
    std::vector<int> unplayable() const { return collect(PointState::Unplayable); }

    int num_played() const { return played_count_; }
    int num_available() const { return available_count_; }
    bool terminal() const { return available_count_ == 0; }

    // Plays x; throws DomainError(IllegalMove) when x is not available.
    Position apply(int x) const;

    bool operator==(const Position& o) const {
        return *sts_ == *o.sts_ && state_ == o.state_;
    }

private:
    std::vector<int> collect(PointState s) const;

    std::shared_ptr<const SteinerTripleSystem> sts_;
    std::vector<PointState> state_;
    int played_count_ = 0;
    int available_count_ = 0;
};

inline Position initial_position(std::shared_ptr<const SteinerTripleSystem> sts) {
    return Position::initial(std::move(sts));
}
inline std::vector<int> legal_moves(const Position& pos) { return pos.available(); }
inline Position apply_move(const Position& pos, int x) { return pos.apply(x); }

// The hypergraph of remaining restrictions: 3-edges are all-available
// blocks, 2-edges are available pairs whose block carries a played point.
// Isolated available points stay as vertices.
Hypergraph available_hypergraph(const Position& pos);

enum class BlockType { PPU = 0, PAA, PAU, PUU, AAA, AAU, AUU, UUU };
constexpr int kNumBlockTypes = 8;
const char* block_type_name(BlockType t);

struct BlockCensus {
    std::array<int, kNumBlockTypes> counts{};
    std::array<std::vector<Triple>, kNumBlockTypes> lists;

    int count(BlockType t) const { return counts[static_cast<std::size_t>(t)]; }
    const std::vector<Triple>& list(BlockType t) const {
        return lists[static_cast<std::size_t>(t)];
    }
    int total() const;
};

// Classifies every block by how its points fall into P/A/U for the given
// played set. Throws DomainError(FilledBlock) when a block is fully played.
BlockCensus census(const SteinerTripleSystem& sts, const std::vector<int>& played);

} // namespace nofil
