#include "nofil/game.hpp"

#include <algorithm>

namespace nofil {

Position Position::initial(std::shared_ptr<const SteinerTripleSystem> sts) {
    Position pos;
    pos.state_.assign(static_cast<std::size_t>(sts->order()), PointState::Available);
    pos.available_count_ = sts->order();
    pos.sts_ = std::move(sts);
    return pos;
}

Position Position::from_played(std::shared_ptr<const SteinerTripleSystem> sts,
                               const std::vector<int>& played) {
    Position pos = initial(sts);
    for (int x : played) {
        if (x < 0 || x >= sts->order())
            throw DomainError(DomainError::Code::IllegalMove,
                              "point " + std::to_string(x) + " out of range");
        pos.state_[static_cast<std::size_t>(x)] = PointState::Played;
    }
    pos.played_count_ = 0;
    for (PointState s : pos.state_)
        if (s == PointState::Played) ++pos.played_count_;
    for (const Triple& b : sts->blocks()) {
        int np = 0;
        for (int p : b)
            if (pos.state_[static_cast<std::size_t>(p)] == PointState::Played) ++np;
        if (np == 3)
            throw DomainError(DomainError::Code::FilledBlock,
                              "block {" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                                  std::to_string(b[2]) + "} is fully played");
        if (np == 2) {
            for (int p : b)
                if (pos.state_[static_cast<std::size_t>(p)] != PointState::Played)
                    pos.state_[static_cast<std::size_t>(p)] = PointState::Unplayable;
        }
    }
    pos.available_count_ = 0;
    for (PointState s : pos.state_)
        if (s == PointState::Available) ++pos.available_count_;
    return pos;
}

Position Position::apply(int x) const {
    if (!is_legal(x))
        throw DomainError(DomainError::Code::IllegalMove,
                          "point " + std::to_string(x) + " is not available");
    Position next = *this;
    next.state_[static_cast<std::size_t>(x)] = PointState::Played;
    ++next.played_count_;
    --next.available_count_;
    // Only blocks through x can create new unplayable points.
    for (int bi : sts_->blocks_through(x)) {
        const Triple& b = sts_->block(bi);
        int other_played = 0;
        int free_point = -1;
        for (int p : b) {
            if (p == x) continue;
            if (next.state_[static_cast<std::size_t>(p)] == PointState::Played)
                ++other_played;
            else
                free_point = p;
        }
        if (other_played == 1 &&
            next.state_[static_cast<std::size_t>(free_point)] == PointState::Available) {
            next.state_[static_cast<std::size_t>(free_point)] = PointState::Unplayable;
            --next.available_count_;
        }
    }
    return next;
}

std::vector<int> Position::collect(PointState s) const {
    std::vector<int> out;
    for (int x = 0; x < sts_->order(); ++x)
        if (state_[static_cast<std::size_t>(x)] == s) out.push_back(x);
    return out;
}

Hypergraph available_hypergraph(const Position& pos) {
    Hypergraph h;
    h.vertices = pos.available();
    for (const Triple& b : pos.sts().blocks()) {
        int np = 0, na = 0;
        int a1 = -1, a2 = -1, a3 = -1;
        for (int p : b) {
            switch (pos.state(p)) {
            case PointState::Played: ++np; break;
            case PointState::Available:
                ++na;
                if (a1 < 0) a1 = p;
                else if (a2 < 0) a2 = p;
                else a3 = p;
                break;
            case PointState::Unplayable: break;
            }
        }
        if (na == 3)
            h.edges.push_back(triple_edge(a1, a2, a3));
        else if (na == 2 && np == 1)
            h.edges.push_back(pair_edge(a1, a2));
    }
    h.normalize();
    return h;
}

const char* block_type_name(BlockType t) {
    static const char* names[kNumBlockTypes] = {"PPU", "PAA", "PAU", "PUU",
                                                "AAA", "AAU", "AUU", "UUU"};
    return names[static_cast<std::size_t>(t)];
}

int BlockCensus::total() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
}

BlockCensus census(const SteinerTripleSystem& sts, const std::vector<int>& played) {
    Position pos = Position::from_played(
        std::make_shared<const SteinerTripleSystem>(sts), played);
    BlockCensus out;
    for (const Triple& b : sts.blocks()) {
        int np = 0, na = 0, nu = 0;
        for (int p : b) {
            switch (pos.state(p)) {
            case PointState::Played: ++np; break;
            case PointState::Available: ++na; break;
            case PointState::Unplayable: ++nu; break;
            }
        }
        BlockType t;
        if (np == 2 && nu == 1) t = BlockType::PPU;
        else if (np == 1 && na == 2) t = BlockType::PAA;
        else if (np == 1 && na == 1 && nu == 1) t = BlockType::PAU;
        else if (np == 1 && nu == 2) t = BlockType::PUU;
        else if (na == 3) t = BlockType::AAA;
        else if (na == 2 && nu == 1) t = BlockType::AAU;
        else if (na == 1 && nu == 2) t = BlockType::AUU;
        else if (nu == 3) t = BlockType::UUU;
        else
            // np==2,na==1 cannot happen: two played points force the third
            // point unplayable; np==3 was rejected by from_played.
            throw DomainError(DomainError::Code::FilledBlock,
                              "impossible block pattern in census");
        out.counts[static_cast<std::size_t>(t)]++;
        out.lists[static_cast<std::size_t>(t)].push_back(b);
    }
    return out;
}

} // namespace nofil
