#include "nofil/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>

namespace nofil {

namespace {

using i128 = __int128;

int sgn128(i128 x) { return (x > 0) - (x < 0); }

// Sign of A + B*sqrt(R), R >= 0.
int sign_linear_surd(i128 A, i128 B, i128 R) {
    if (R == 0 || B == 0) return sgn128(A);
    if (B > 0 && A >= 0) return 1;
    if (B < 0 && A <= 0) return -1;
    i128 lhs = B * B * R;
    i128 rhs = A * A;
    int s = sgn128(lhs - rhs);
    return B > 0 ? s : -s;
}

// Sign of A + B*sqrt(R1) + C*sqrt(R2), R1, R2 >= 0.
int sign_two_surds(i128 A, i128 B, i128 R1, i128 C, i128 R2) {
    if (R1 == 0 || B == 0) return sign_linear_surd(A, C, R2);
    if (R2 == 0 || C == 0) return sign_linear_surd(A, B, R1);
    if (R1 == R2) return sign_linear_surd(A, B + C, R1);
    // sign of T = B*sqrt(R1) + C*sqrt(R2)
    int st;
    if (B > 0 && C > 0) st = 1;
    else if (B < 0 && C < 0) st = -1;
    else {
        int mag = sgn128(B * B * R1 - C * C * R2);
        if (mag == 0) st = 0;
        else st = (mag > 0) ? sgn128(B) : sgn128(C);
    }
    if (st == 0) return sgn128(A);
    if (A == 0) return st;
    int sa = sgn128(A);
    if (sa == st) return sa;
    // |A| vs |T|: T^2 = (B^2 R1 + C^2 R2) + 2BC sqrt(R1 R2)
    i128 M = B * B * R1 + C * C * R2;
    i128 N = 2 * B * C;
    int mag = sign_linear_surd(A * A - M, -N, R1 * R2);
    if (mag > 0) return sa;
    if (mag < 0) return st;
    return 0;
}

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

} // namespace

Frac Frac::of(long long n, long long d) {
    if (d == 0) throw DomainError(DomainError::Code::SizeLimit, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = gcd_ll(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Frac{n, d};
}

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Surd Surd::rational(long long num, long long den) { return make(num, 0, 0, den); }

Surd Surd::make(long long a, long long b, long long r, long long d) {
    if (d == 0) throw DomainError(DomainError::Code::SizeLimit, "zero denominator");
    if (r < 0) throw DomainError(DomainError::Code::SizeLimit, "negative radicand");
    if (d < 0) {
        a = -a;
        b = -b;
        d = -d;
    }
    if (b == 0) r = 0;
    if (r > 0) {
        long long s = isqrt_ll(r);
        if (s * s == r) {   // perfect square folds into the rational part
            a += b * s;
            b = 0;
            r = 0;
        }
    }
    if (r == 0) b = 0;
    long long g = gcd_ll(gcd_ll(a, b), d);
    if (g > 1) {
        a /= g;
        b /= g;
        d /= g;
    }
    Surd s;
    s.a_ = a;
    s.b_ = b;
    s.r_ = r;
    s.d_ = d;
    return s;
}

double Surd::approx() const {
    return (static_cast<double>(a_) +
            static_cast<double>(b_) * std::sqrt(static_cast<double>(r_))) /
           static_cast<double>(d_);
}

int Surd::cmp(const Surd& o) const {
    // difference numerator over d * o.d
    i128 A = static_cast<i128>(a_) * o.d_ - static_cast<i128>(o.a_) * d_;
    i128 B = static_cast<i128>(b_) * o.d_;
    i128 C = -static_cast<i128>(o.b_) * d_;
    return sign_two_surds(A, B, r_, C, o.r_);
}

long long Surd::floor_value() const {
    long long n = static_cast<long long>(std::floor(approx())) - 2;
    while (cmp_int(n + 1) >= 0) ++n;
    return n;
}

long long Surd::ceil_value() const {
    long long f = floor_value();
    return cmp_int(f) == 0 ? f : f + 1;
}

std::string Surd::str() const {
    std::string num;
    if (b_ == 0) {
        num = std::to_string(a_);
    } else {
        num = "(" + std::to_string(a_) + (b_ > 0 ? " + " : " - ") +
              (std::abs(b_) == 1 ? "" : std::to_string(std::abs(b_)) + "*") + "sqrt(" +
              std::to_string(r_) + "))";
    }
    if (d_ == 1) return num;
    return num + "/" + std::to_string(d_);
}

Surd max_surd(const Surd& x, const Surd& y) { return x.cmp(y) >= 0 ? x : y; }
Surd min_surd(const Surd& x, const Surd& y) { return x.cmp(y) <= 0 ? x : y; }

// --- census predictions -----------------------------------------------------

CensusPrediction census_formulas(long long p, long long a, long long u, long long e) {
    CensusPrediction c;
    long long w = u - p - a + 1;
    c.ppu = Frac::of(p * (p - 1), 2);
    c.paa = Frac::of(e);
    c.pau = Frac::of(p * a - 2 * e);
    c.puu = Frac::of(p * w + 2 * e, 2);
    c.aau = Frac::of(a * (a - 1) - 2 * e, 2);
    c.auu = Frac::of(a * w + 4 * e, 2);
    c.uuu = Frac::of(u * u - u - (a + p) * w - 6 * e, 6);
    return c;
}

bool CensusPrediction::feasible() const {
    for (const Frac& f : as_array())
        if (!f.is_integer() || !f.nonnegative()) return false;
    return true;
}

// --- bounds on u -------------------------------------------------------------

FeasibilityReport u_interval(int a, long long e, int v,
                             std::optional<std::pair<int, int>> chi) {
    FeasibilityReport rep;
    rep.a = a;
    rep.e = e;
    rep.v = v;
    const long long m = v - a;   // p + u

    auto add = [&rep](const std::string& name, bool lower, Surd value) {
        rep.bounds.push_back(BoundEntry{name, lower, true, value});
    };
    auto skip = [&rep](const std::string& name, bool lower) {
        rep.bounds.push_back(BoundEntry{name, lower, false, Surd{}});
    };

    add("u >= 0", true, Surd::rational(0));
    add("u <= v - a", false, Surd::rational(m));
    if (chi) {
        add("chi'(G) colouring of PAA", false, Surd::rational(m - chi->first));
        add("chi'(comp G) colouring of AAU", true, Surd::rational(chi->second));
    } else {
        skip("chi'(G) colouring of PAA", false);
        skip("chi'(comp G) colouring of AAU", true);
    }
    add("PPU colouring needs p-1 colours", true, Surd::rational(v - a - 1, 2));
    add("AUU >= 0", true, Surd::rational(a * (v - 1) - 4 * e, 2 * a));
    long long r5 = (v - 2LL * a + 1) * (v - 2LL * a + 1) + 16 * e;
    add("PUU >= 0 (lower root)", true, Surd::make(3LL * v - 2 * a - 1, -1, r5, 4));
    add("PUU >= 0 (upper root)", false, Surd::make(3LL * v - 2 * a - 1, 1, r5, 4));
    add("PAU >= 0", false, Surd::rational(m * a - 2 * e, a));
    add("u <= C(p,2)", false, Surd::make(2 * m + 1, -1, 8 * m + 1, 2));

    rep.real_lower = Surd::rational(0);
    rep.real_upper = Surd::rational(m);
    for (const BoundEntry& b : rep.bounds) {
        if (!b.evaluated) continue;
        if (b.is_lower) rep.real_lower = max_surd(rep.real_lower, b.value);
        else rep.real_upper = min_surd(rep.real_upper, b.value);
    }
    rep.real_empty = rep.real_lower.cmp(rep.real_upper) > 0;
    rep.u_lo = rep.real_lower.ceil_value();
    rep.u_hi = rep.real_upper.floor_value();

    long long uuu_disc = 72 * e - 3LL * v * v + 12LL * v;
    rep.disjunction_active = uuu_disc >= 0;   // v^2 - 4v <= 24e
    if (rep.disjunction_active) {
        rep.gap_lo = Surd::make(3LL * v, -1, uuu_disc, 6);
        rep.gap_hi = Surd::make(3LL * v, 1, uuu_disc, 6);
        rep.bounds.push_back(BoundEntry{"UUU >= 0 (below lower root)", false, true, rep.gap_lo});
        rep.bounds.push_back(BoundEntry{"UUU >= 0 (above upper root)", true, true, rep.gap_hi});
    }
    for (long long u = rep.u_lo; u <= rep.u_hi; ++u) {
        if (rep.disjunction_active) {
            bool below = rep.gap_lo.cmp_int(u) >= 0;   // u <= lower root
            bool above = rep.gap_hi.cmp_int(u) <= 0;   // u >= upper root
            if (!below && !above) continue;
        }
        rep.feasible_u.push_back(u);
    }
    return rep;
}

std::string FeasibilityReport::str() const {
    std::string out = "a=" + std::to_string(a) + " e=" + std::to_string(e) +
                      " v=" + std::to_string(v) + "\n";
    for (const BoundEntry& b : bounds) {
        out += std::string("  ") + (b.is_lower ? "lower" : "upper") + "  " + b.name + ": ";
        out += b.evaluated ? b.value.str() + "  (~" + std::to_string(b.value.approx()) + ")"
                           : std::string("not evaluated");
        out += "\n";
    }
    out += "  real window: [" + real_lower.str() + ", " + real_upper.str() + "]";
    out += "  (~[" + std::to_string(real_lower.approx()) + ", " +
           std::to_string(real_upper.approx()) + "])\n";
    if (u_lo > u_hi) {
        out += "  integer window: EMPTY\n";
    } else {
        out += "  integer window: [" + std::to_string(u_lo) + ", " + std::to_string(u_hi) + "]\n";
    }
    if (disjunction_active)
        out += "  u must avoid (" + gap_lo.str() + ", " + gap_hi.str() + ")\n";
    out += "  feasible u:";
    if (feasible_u.empty()) out += " none";
    for (long long u : feasible_u) out += " " + std::to_string(u);
    out += "\n";
    return out;
}

// --- admissible orders --------------------------------------------------------

namespace {

// The closed-form lower bound on v, selected by the (a, e) region.
Surd order_bound_formula(long long a, long long e) {
    Surd f_ratio = Surd::rational(a * (a - 1) + 4 * e, a);          // a - 1 + 4e/a
    Surd f_double = Surd::rational(2 * a - 1);
    Surd f_plus3 = Surd::rational(a + 3);
    long long rad = a * (8 * a * a + a - 32 * e);
    Surd f_sqrt = rad >= 0 ? Surd::make(2 * a * a + 2 * a - 4 * e, 1, rad, a)
                           : Surd::rational(2 * a - 1);   // radicand < 0: pair never binds
    if (a >= 4) {
        // boundary e* = (-a + sqrt(8a^3 - 7a^2)) / 4, compared exactly:
        // e >= e*  iff  (4e + a)^2 >= 8a^3 - 7a^2
        bool e_above_star = (4 * e + a) * (4 * e + a) >= 8 * a * a * a - 7 * a * a;
        if (4 * e >= a * a) return f_ratio;
        if (e_above_star) return f_double;
        return f_sqrt;
    }
    if (e >= a) return f_ratio;
    if (4 * e >= a * a) return f_plus3;
    return f_sqrt;
}

// Quadratic-pair window on u for (a, e, v): lower root of PUU >= 0 against
// the C(p,2) cover bound.
Surd puu_lower(long long a, long long e, long long v) {
    long long r = (v - 2 * a + 1) * (v - 2 * a + 1) + 16 * e;
    return Surd::make(3 * v - 2 * a - 1, -1, r, 4);
}

Surd cover_upper(long long a, long long v) {
    long long m = v - a;
    return Surd::make(2 * m + 1, -1, 8 * m + 1, 2);
}

Surd auu_lower(long long a, long long e, long long v) {
    return Surd::rational(a * (v - 1) - 4 * e, 2 * a);
}

bool closed_form_bounds_permit(long long a, long long e, long long v) {
    if (a * v < a * (a - 1) + 4 * e) return false;   // v >= a - 1 + 4e/a
    if (v < 2 * a - 1) return false;
    if (v < a + 3) return false;
    long long rad = a * (8 * a * a + a - 32 * e);
    if (rad >= 0) {
        Surd bound = Surd::make(2 * a * a + 2 * a - 4 * e, 1, rad, a);
        if (bound.cmp_int(v) > 0) return false;
    }
    return true;
}

bool is_exception(long long a, long long e, long long v, bool integral) {
    if (!closed_form_bounds_permit(a, e, v)) return false;
    Surd lo5 = puu_lower(a, e, v);
    Surd hi8 = cover_upper(a, v);
    if (!integral) return lo5.cmp(hi8) > 0;
    if (v % 6 != 1 && v % 6 != 3) return false;
    long long lo5_int = std::max(lo5.ceil_value(), 0LL);
    long long lo4_int = std::max(auu_lower(a, e, v).ceil_value(), 0LL);
    long long hi8_int = hi8.floor_value();
    return lo5_int > hi8_int && lo4_int <= hi8_int;
}

} // namespace

std::vector<std::array<long long, 3>> enumerate_exceptions(bool integral) {
    std::vector<std::array<long long, 3>> out;
    // Scan ranges deliberately cover more than the windows where exceptions
    // can exist, then filter exactly.
    for (long long a = 1; a <= 26; ++a) {
        long long e_max = a * (a - 1) / 2;
        long long v_max = 4 * a + 2 + isqrt_ll(8 * a + 1) + 2;
        for (long long e = 0; e <= e_max; ++e)
            for (long long v = 3; v <= v_max; ++v)
                if (is_exception(a, e, v, integral)) out.push_back({a, e, v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

AdmissibleV min_admissible_v(int a, long long e) {
    AdmissibleV res;
    res.formula = order_bound_formula(a, e);
    long long start = std::max<long long>(res.formula.ceil_value(), 1);
    for (long long v = start; v <= start + 10000; ++v) {
        if (v % 6 != 1 && v % 6 != 3) continue;
        if (is_exception(a, e, v, true)) {
            res.skipped_exceptions.push_back({static_cast<long long>(a), e, v});
            continue;
        }
        FeasibilityReport rep = u_interval(a, e, static_cast<int>(v));
        if (rep.feasible()) {
            res.v_min = static_cast<int>(v);
            return res;
        }
    }
    throw DomainError(DomainError::Code::BudgetExceeded,
                      "no admissible order found in scan window");
}

// --- chromatic index ------------------------------------------------------------

namespace {

int max_degree(const SimpleGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        ++deg[static_cast<std::size_t>(e[0])];
        ++deg[static_cast<std::size_t>(e[1])];
    }
    int d = 0;
    for (int x : deg) d = std::max(d, x);
    return d;
}

bool colorable_with(const SimpleGraph& g, int k) {
    if (g.edges.empty()) return true;
    if (k <= 0) return false;
    // order edges by constraint: higher endpoint degree first
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        ++deg[static_cast<std::size_t>(e[0])];
        ++deg[static_cast<std::size_t>(e[1])];
    }
    std::vector<std::array<int, 2>> order = g.edges;
    std::sort(order.begin(), order.end(), [&deg](const auto& x, const auto& y) {
        return deg[static_cast<std::size_t>(x[0])] + deg[static_cast<std::size_t>(x[1])] >
               deg[static_cast<std::size_t>(y[0])] + deg[static_cast<std::size_t>(y[1])];
    });
    // depth-first assignment with fresh-colour symmetry breaking
    std::vector<unsigned> used(static_cast<std::size_t>(g.n), 0);
    std::int64_t nodes = 0;
    const std::int64_t cap = 20000000;
    std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned seen) {
        if (i == order.size()) return true;
        if (++nodes > cap)
            throw DomainError(DomainError::Code::BudgetExceeded,
                              "edge colouring search exceeded node budget");
        const auto& e = order[i];
        unsigned busy = used[static_cast<std::size_t>(e[0])] | used[static_cast<std::size_t>(e[1])];
        for (int c = 0; c < k; ++c) {
            unsigned bit = 1u << c;
            if (busy & bit) continue;
            bool fresh = !(seen & bit);
            used[static_cast<std::size_t>(e[0])] |= bit;
            used[static_cast<std::size_t>(e[1])] |= bit;
            if (rec(i + 1, seen | bit)) return true;
            used[static_cast<std::size_t>(e[0])] &= ~bit;
            used[static_cast<std::size_t>(e[1])] &= ~bit;
            if (fresh) break;   // first unused colour stands for all of them
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace

int chromatic_index_exact(const SimpleGraph& g) {
    if (g.n > 12)
        throw DomainError(DomainError::Code::SizeLimit,
                          "exact chromatic index capped at 12 vertices");
    if (g.edges.empty()) return 0;
    int delta = max_degree(g);
    if (colorable_with(g, delta)) return delta;
    return delta + 1;   // Vizing
}

std::pair<int, int> chromatic_index_bounds(const SimpleGraph& g) {
    int delta = max_degree(g);
    if (delta == 0) return {0, 0};
    return {delta, delta + 1};
}

} // namespace nofil
