#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nofil/rng.hpp"
#include "nofil/sts.hpp"

using namespace nofil;
using namespace nofil::testing;

namespace {

// the order-9 system used throughout: rows/columns/diagonals of a 3x3 array
const std::vector<Triple> kNine = {
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
    {0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6},
};

} // namespace

TEST_CASE("validate accepts the order-9 block list") {
    ValidationResult res = validate_sts(9, kNine);
    REQUIRE(res.ok());
    CHECK(res.system->num_blocks() == 12);
    CHECK(res.system->order() == 9);
}

TEST_CASE("removing a block uncovers exactly its three pairs") {
    std::vector<Triple> blocks(kNine.begin() + 1, kNine.end());
    ValidationResult res = validate_sts(9, blocks);
    REQUIRE_FALSE(res.ok());
    std::set<std::pair<int, int>> uncovered;
    for (const Violation& v : res.violations) {
        CHECK(v.kind == Violation::Kind::PairUncovered);
        uncovered.insert({v.pair[0], v.pair[1]});
    }
    CHECK(uncovered == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("orders 2 mod 6 are rejected") {
    ValidationResult res = validate_sts(8, {});
    REQUIRE_FALSE(res.ok());
    CHECK(res.violations.front().kind == Violation::Kind::OrderInvalid);
}

TEST_CASE("duplicated pair and malformed block are both reported") {
    std::vector<Triple> blocks = kNine;
    blocks.push_back({0, 1, 5});   // pair {0,1} twice
    blocks.push_back({2, 2, 9});   // repeated point, out of range
    ValidationResult res = validate_sts(9, blocks);
    REQUIRE_FALSE(res.ok());
    bool dup = false, malformed = false;
    for (const Violation& v : res.violations) {
        dup |= v.kind == Violation::Kind::PairDuplicated;
        malformed |= v.kind == Violation::Kind::MalformedBlock;
    }
    CHECK(dup);
    CHECK(malformed);
}

TEST_CASE("cyclic development over Z13") {
    SteinerTripleSystem sts = from_cyclic_base_blocks(13, {{0, 3, 4}, {0, 5, 7}});
    CHECK(sts.num_blocks() == 26);
    // the shift x -> x+1 maps blocks to blocks
    std::set<Triple> blocks(sts.blocks().begin(), sts.blocks().end());
    for (const Triple& b : sts.blocks())
        CHECK(blocks.count(make_triple((b[0] + 1) % 13, (b[1] + 1) % 13, (b[2] + 1) % 13)) == 1);
}

TEST_CASE("difference-set base block gives the order-7 system") {
    SteinerTripleSystem sts = from_cyclic_base_blocks(7, {{0, 1, 3}});
    CHECK(sts.num_blocks() == 7);
}

TEST_CASE("colliding differences are rejected") {
    CHECK_THROWS_AS(from_cyclic_base_blocks(13, {{0, 1, 2}, {0, 3, 6}}), DomainError);
}

TEST_CASE("short orbit must be supplied explicitly") {
    // {0,5,10} develops into only 5 distinct blocks of the order-15 system
    SteinerTripleSystem sts = from_cyclic_base_blocks(15, {{0, 1, 4}, {0, 2, 9}, {0, 5, 10}});
    CHECK(sts.num_blocks() == 35);
    CHECK_THROWS_AS(from_cyclic_base_blocks(15, {{0, 1, 4}, {0, 2, 9}}), DomainError);
}

TEST_CASE("builtins validate and carry the advertised shapes") {
    for (const std::string& name : builtin_names()) {
        SteinerTripleSystem sts = builtin_sts(name);
        CHECK(validate_sts(sts.order(), sts.blocks()).ok());
    }
    CHECK(builtin_sts("STS9").num_blocks() == 12);
    CHECK(builtin_sts("STS15_GRUNDY3").num_blocks() == 35);
    CHECK(builtin_sts("STS15_GRUNDY4").num_blocks() == 35);
    CHECK_THROWS_AS(builtin_sts("NOPE"), DomainError);
}

TEST_CASE("the two order-13 builtins are not isomorphic") {
    IsoCertificate c1 = certificate(builtin_sts("STS13_CYCLIC"));
    IsoCertificate c2 = certificate(builtin_sts("STS13_OTHER"));
    CHECK(c1 != c2);
}

TEST_CASE("certificates are invariant under relabeling") {
    Rng rng(7);
    for (const std::string& name : {"STS7", "STS9", "STS13_CYCLIC", "STS13_OTHER",
                                    "STS15_GRUNDY3", "STS15_GRUNDY4"}) {
        SteinerTripleSystem sts = builtin_sts(name);
        IsoCertificate base = certificate(sts);
        for (int trial = 0; trial < (sts.order() <= 9 ? 30 : 20); ++trial) {
            std::vector<int> perm = random_permutation(sts.order(), rng);
            CHECK(certificate(relabel(sts, perm)) == base);
        }
    }
}

TEST_CASE("certificate equality matches brute-force isomorphism") {
    SteinerTripleSystem s7 = builtin_sts("STS7");
    SteinerTripleSystem s9 = builtin_sts("STS9");
    Rng rng(99);
    // exhaustive pairings at small orders, including relabeled copies
    std::vector<SteinerTripleSystem> pool{s7, s9, relabel(s7, random_permutation(7, rng)),
                                          relabel(s9, random_permutation(9, rng))};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            bool brute = sts_isomorphic_bruteforce(pool[i], pool[j]);
            bool certs = certificate(pool[i]) == certificate(pool[j]);
            CHECK(brute == certs);
        }
    }
    // the two order-13 classes differ under brute force as well
    CHECK_FALSE(
        sts_isomorphic_bruteforce(builtin_sts("STS13_CYCLIC"), builtin_sts("STS13_OTHER")));
}

TEST_CASE("pair index touches every block three times") {
    for (const std::string& name : {"STS7", "STS9", "STS13_CYCLIC"}) {
        SteinerTripleSystem sts = builtin_sts(name);
        std::vector<int> touched(static_cast<std::size_t>(sts.num_blocks()), 0);
        for (int x = 0; x < sts.order(); ++x)
            for (int y = x + 1; y < sts.order(); ++y) {
                int bi = sts.block_through(x, y);
                const Triple& b = sts.block(bi);
                CHECK((b[0] == x || b[1] == x || b[2] == x));
                CHECK((b[0] == y || b[1] == y || b[2] == y));
                ++touched[static_cast<std::size_t>(bi)];
            }
        for (int t : touched) CHECK(t == 3);
    }
}

TEST_CASE("codec round trips") {
    SteinerTripleSystem sts = builtin_sts("STS7");
    std::string text = serialize_sts(sts);
    SteinerTripleSystem back = parse_sts(text);
    CHECK(back.blocks() == sts.blocks());
    CHECK(serialize_sts(back) == text);

    std::vector<SteinerTripleSystem> archive{builtin_sts("STS7"), builtin_sts("STS9")};
    std::string bundle = serialize_archive(archive);
    std::vector<SteinerTripleSystem> parsed = parse_archive(bundle);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].blocks() == archive[0].blocks());
    CHECK(parsed[1].blocks() == archive[1].blocks());
    CHECK(serialize_archive(parsed) == bundle);
}

TEST_CASE("parser reports the offending line") {
    std::string bad = "v 7\n0 1 3\n1 2\n";   // two-point block on line 3
    try {
        parse_sts(bad);
        FAIL("expected a parse error");
    } catch (const DomainError& err) {
        CHECK(err.code() == DomainError::Code::ParseError);
        CHECK(err.line() == 3);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = "# a seven point system\n\nv 7\n0 1 3  # first block\n1 2 4\n2 3 5\n"
                       "3 4 6\n0 4 5\n1 5 6\n0 2 6\n";
    CHECK(parse_sts(text).num_blocks() == 7);
}
