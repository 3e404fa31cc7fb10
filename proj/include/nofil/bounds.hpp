#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nofil/common.hpp"
#include "nofil/kayles.hpp"

namespace nofil {

// Reduced rational with positive denominator.
struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac of(long long n, long long d = 1);
    bool is_integer() const { return den == 1; }
    bool nonnegative() const { return num >= 0; }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Frac&) const = default;
};

// Exact value (a + b*sqrt(r)) / d with integers a, b, r >= 0, d > 0.
// All comparisons are by integer arithmetic; no floating point decisions.
class Surd {
public:
    Surd() : a_(0), b_(0), r_(0), d_(1) {}
    static Surd rational(long long num, long long den = 1);
    static Surd make(long long a, long long b, long long r, long long d);

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long r() const { return r_; }
    long long d() const { return d_; }

    double approx() const;
    int cmp(const Surd& other) const;              // -1, 0, +1
    int cmp_int(long long n) const { return cmp(rational(n)); }
    int cmp_frac(long long num, long long den) const { return cmp(rational(num, den)); }
    long long floor_value() const;
    long long ceil_value() const;
    std::string str() const;

    bool operator<(const Surd& o) const { return cmp(o) < 0; }
    bool operator==(const Surd& o) const { return cmp(o) == 0; }

private:
    long long a_, b_, r_, d_;
};

Surd max_surd(const Surd& x, const Surd& y);
Surd min_surd(const Surd& x, const Surd& y);

// --- block census predictions ---------------------------------------------

// The seven counts forced by a (p, a, u, e) parameter choice when the
// available hypergraph is a graph. Negative or fractional predictions flag
// an impossible parameter set.
struct CensusPrediction {
    Frac ppu, paa, pau, puu, aau, auu, uuu;
    std::array<Frac, 7> as_array() const { return {ppu, paa, pau, puu, aau, auu, uuu}; }
    bool feasible() const;
};

CensusPrediction census_formulas(long long p, long long a, long long u, long long e);

// --- bounds on the unplayable count ----------------------------------------

struct BoundEntry {
    std::string name;
    bool is_lower = false;
    bool evaluated = false;   // chromatic-index bounds need chi supplied
    Surd value;
};

struct FeasibilityReport {
    int a = 0;
    long long e = 0;
    int v = 0;
    std::vector<BoundEntry> bounds;
    Surd real_lower, real_upper;    // tightest evaluated bounds
    bool real_empty = false;
    long long u_lo = 0, u_hi = -1;  // integer window; empty iff u_lo > u_hi
    bool disjunction_active = false;   // the UUU quadratic splits the range
    Surd gap_lo, gap_hi;               // open interval u must avoid when active
    std::vector<long long> feasible_u;
    bool feasible() const { return !feasible_u.empty(); }
    std::string str() const;
};

// Evaluates every applicable bound on u = |U| for embedding an a-vertex,
// e-edge graph in a system of order v; chi = (chi'(G), chi'(complement))
// enables the two colouring bounds.
FeasibilityReport u_interval(int a, long long e, int v,
                             std::optional<std::pair<int, int>> chi = std::nullopt);

// --- admissible orders ------------------------------------------------------

struct AdmissibleV {
    Surd formula;    // closed-form lower bound on v for this (a, e)
    int v_min = -1;  // smallest order 1,3 mod 6 with a feasible u
    std::vector<std::array<long long, 3>> skipped_exceptions;
};

AdmissibleV min_admissible_v(int a, long long e);

// Triples (a, e, v) whose u-window closes under the quadratic bound pair
// even though the four closed-form order bounds permit them. With integral
// set, orders are restricted to 1,3 mod 6 and the window is decided on
// integers.
std::vector<std::array<long long, 3>> enumerate_exceptions(bool integral);

// --- chromatic index ---------------------------------------------------------

// Exact by backtracking between the trivial bounds; vertices capped at 12.
int chromatic_index_exact(const SimpleGraph& g);
std::pair<int, int> chromatic_index_bounds(const SimpleGraph& g);

} // namespace nofil
