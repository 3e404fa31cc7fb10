#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nofil/common.hpp"

namespace nofil {

// Steiner triple system on points 0..v-1: every unordered pair of points
// lies in exactly one block. Immutable once built; construct through
// validate_sts, from_cyclic_base_blocks or builtin_sts.
class SteinerTripleSystem {
public:
    int order() const { return v_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Triple>& blocks() const { return blocks_; }
    const Triple& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

    // Index of the unique block containing {x, y}, x != y.
    int block_through(int x, int y) const { return pair_index_[pair_slot(x, y)]; }

    // Third point of the block containing {x, y}.
    int third_point(int x, int y) const;

    // Blocks incident to a point, as indices.
    const std::vector<int>& blocks_through(int x) const {
        return point_blocks_[static_cast<std::size_t>(x)];
    }

    bool operator==(const SteinerTripleSystem& other) const {
        return v_ == other.v_ && blocks_ == other.blocks_;
    }

private:
    friend struct StsBuilder;
    std::size_t pair_slot(int x, int y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(v_) +
               static_cast<std::size_t>(y);
    }

    int v_ = 0;
    std::vector<Triple> blocks_;
    std::vector<int> pair_index_;              // v*v, -1 off-diagonal never queried
    std::vector<std::vector<int>> point_blocks_;
};

struct Violation {
    enum class Kind { OrderInvalid, MalformedBlock, PairUncovered, PairDuplicated };
    Kind kind;
    std::array<int, 2> pair{-1, -1};
    Triple block{-1, -1, -1};
    std::string message;
};

struct ValidationResult {
    std::optional<SteinerTripleSystem> system;
    std::vector<Violation> violations;
    bool ok() const { return system.has_value(); }
};

bool admissible_order(int v);

// Checks the defining property pair by pair; collects every violation
// instead of stopping at the first.
ValidationResult validate_sts(int v, const std::vector<Triple>& blocks);

// Develops each base block additively mod v and validates the result.
// The short orbit {0, v/3, 2v/3} (v = 3 mod 6) must be supplied explicitly
// if wanted; repeated translates are deduplicated.
SteinerTripleSystem from_cyclic_base_blocks(int v, const std::vector<Triple>& base_blocks);

// Named systems: STS7, STS9, STS13_CYCLIC, STS13_OTHER, STS15_GRUNDY3,
// STS15_GRUNDY4. Throws DomainError(UnknownName) otherwise.
SteinerTripleSystem builtin_sts(const std::string& name);
std::vector<std::string> builtin_names();

// --- text codec ---------------------------------------------------------
//
// Single system:          multi-system archive:
//     v 7                     systems separated by a line holding "---"
//     0 1 3
//     ...
// '#' starts a comment, blank lines are skipped.

std::string serialize_sts(const SteinerTripleSystem& sts);
std::string serialize_archive(const std::vector<SteinerTripleSystem>& systems);

// Parses and validates; throws DomainError(ParseError) with the offending
// line, or DomainError(NotAnSts) when a parsed system fails validation.
std::vector<SteinerTripleSystem> parse_archive(const std::string& text);
SteinerTripleSystem parse_sts(const std::string& text);

// --- isomorphism certificate ---------------------------------------------

// Canonical byte string; equal certificates iff isomorphic systems.
struct IsoCertificate {
    std::string bytes;
    bool operator==(const IsoCertificate& o) const { return bytes == o.bytes; }
    bool operator!=(const IsoCertificate& o) const { return bytes != o.bytes; }
    bool operator<(const IsoCertificate& o) const { return bytes < o.bytes; }
    std::string hex() const;
};

IsoCertificate certificate(const SteinerTripleSystem& sts);

// Relabels points by a permutation (perm[old] = new); test helper and
// CLI utility.
SteinerTripleSystem relabel(const SteinerTripleSystem& sts, const std::vector<int>& perm);

} // namespace nofil
