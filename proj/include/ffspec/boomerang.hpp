#pragma once

// Boomerang connectivity of power maps on F_{q^2}: the full row beta_f(1, .)
// by fiber-pair enumeration, its four-way split by the degenerating
// coordinates, the regime quintics whose root counts realize the generic
// cell, closed-form uniformity where available, and witness searches.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "diff_spectrum.hpp"
#include "poly.hpp"
#include "tower.hpp"

namespace ffspec {

struct BctRow {
    const TowerCtx* T = nullptr;
    std::vector<long long> raw;  // raw[b] = #{(x,y): f(x)-f(y)=b, D_1f(x)=D_1f(y)}

    // the quarter-scaled view beta(b) = beta_f(1, b/4)
    long long beta(long long b) const { return raw[T->mul(b, T->inv(T->scalar(4)))]; }

    long long max_nonzero() const {
        long long m = 0;
        for (size_t b = 1; b < raw.size(); ++b) m = std::max(m, raw[b]);
        return m;
    }

    std::map<long long, long long> nu_table() const {
        std::map<long long, long long> nu;
        for (size_t b = 1; b < raw.size(); ++b) ++nu[raw[b]];
        return nu;
    }

    long long total_mass() const {
        long long s = 0;
        for (long long v : raw) s += v;
        return s;
    }
};

// fibers of D_1 f processed in ascending derivative value, pairs in
// lexicographic (x, y); cost is the sum of squared fiber sizes
inline BctRow bct_row(const PowerMap& f) {
    const TowerCtx& T = *f.T;
    const long long Q = T.size();
    std::vector<long long> fx(Q), dv(Q);
    for (long long x = 0; x < Q; ++x) fx[x] = f.eval(x);
    for (long long x = 0; x < Q; ++x) dv[x] = T.sub(fx[T.add(x, 1)], fx[x]);
    std::vector<long long> order(Q);
    for (long long x = 0; x < Q; ++x) order[x] = x;
    std::sort(order.begin(), order.end(),
              [&](long long a, long long b) { return dv[a] != dv[b] ? dv[a] < dv[b] : a < b; });
    BctRow row;
    row.T = &T;
    row.raw.assign(Q, 0);
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j < order.size() && dv[order[j]] == dv[order[i]]) ++j;
        for (size_t a = i; a < j; ++a)
            for (size_t b = i; b < j; ++b) ++row.raw[T.sub(fx[order[a]], fx[order[b]])];
        i = j;
    }
    return row;
}

struct BetaDecomposition {
    long long b11 = 0, b10 = 0, b01 = 0, b00 = 0;
    long long sum() const { return b11 + b10 + b01 + b00; }
};

namespace detail {

inline long long root_count_in(const FieldCtx& F, const PolyFq& f) {
    long long n = 0;
    for (long long x = 0; x < F.q(); ++x)
        if (f.eval(x) == 0) ++n;
    return n;
}

inline long long nonzero_root_count(const FieldCtx& F, const PolyFq& f) {
    long long n = 0;
    for (long long x = 1; x < F.q(); ++x)
        if (f.eval(x) == 0) ++n;
    return n;
}

inline long long square_root_pair_count(const FieldCtx& F, long long rhs) {
    // #{x in F_q^* : x^2 = rhs}
    if (rhs == 0) return 0;
    return F.eta(rhs) == QuadClass::Square ? 2 : 0;
}

}  // namespace detail

// quintic for the regime q = 1 (mod 6), governing the generic cell at index
// (2c, 2dZ): 16c^2 z^5 - 16c^2 z^4 + 4(c^2 - alpha d^2 + 3) z^3 - 16 z^2 + 7z - 1
inline PolyFq boomerang_quintic_q1mod6(const TowerCtx& T, long long c, long long d) {
    const FieldCtx& F = T.base();
    if (c == 0 || d == 0) throw std::invalid_argument("quintic needs c, d != 0");
    long long c2 = F.mul(c, c);
    long long lead = F.mul(F.scalar(16), c2);
    long long cubic = F.mul(F.scalar(4), F.add(F.sub(c2, F.mul(T.alpha(), F.mul(d, d))), F.scalar(3)));
    return PolyFq(F, {F.neg(F.scalar(1)), F.scalar(7), F.neg(F.scalar(16)), cubic, F.neg(lead), lead});
}

// characteristic-3 quintic z^5 - A z^3 - (1 + B) z^2 + A with A non-square,
// B square, governing the generic cell at index (c, d), A = d^2 alpha / c^2,
// B = 1/c^2
inline PolyFq boomerang_quintic_char3(const FieldCtx& F, long long A, long long B) {
    return PolyFq(F, {A, 0, F.neg(F.add(1, B)), F.neg(A), 0, 1});
}

inline long long quintic_root_count_q1mod6(const TowerCtx& T, long long c, long long d) {
    return detail::root_count_in(T.base(), boomerang_quintic_q1mod6(T, c, d));
}

inline long long quintic_root_count_char3(const FieldCtx& F, long long A, long long B) {
    if (F.eta(A) != QuadClass::NonSquare || F.eta(B) != QuadClass::Square)
        throw std::invalid_argument("need A non-square and B square");
    return detail::root_count_in(F, boomerang_quintic_char3(F, A, B));
}

// Direct four-way counter for the defining system, used where no coefficient
// formulas apply (q = 5 mod 6) and as the cross-check oracle elsewhere.
class BetaSystemBrute {
public:
    explicit BetaSystemBrute(const TowerCtx& T) : T_(T), F_(T.base()) {
        const FieldCtx& F = F_;
        long long q = F.q(), alpha = T.alpha();
        for (long long x = 0; x < q; ++x) {
            for (long long y = 0; y < q; ++y) {
                long long x2 = F.mul(x, x), y2 = F.mul(y, y);
                long long key = F.sub(F.mul(F.scalar(3), x2), F.mul(alpha, y2)) + q * F.mul(x, y);
                long long gc = F.add(F.mul(F.scalar(4), F.sub(F.mul(x, x2), F.mul(alpha, F.mul(x, y2)))),
                                     F.mul(F.scalar(3), x));
                long long gd = F.add(F.mul(F.scalar(4), F.sub(F.mul(x2, y), F.mul(alpha, F.mul(y, y2)))), y);
                groups_[key].push_back({x, y, gc, gd});
            }
        }
    }

    BetaDecomposition decompose(long long c, long long d) const {
        const FieldCtx& F = F_;
        BetaDecomposition out;
        for (const auto& [key, members] : groups_) {
            for (const auto& first : members) {
                for (const auto& second : members) {
                    if (F.sub(first.gc, second.gc) != c || F.sub(first.gd, second.gd) != d) continue;
                    bool s_zero = second.x == 0, y_zero = first.y == 0;
                    if (s_zero && y_zero)
                        ++out.b11;
                    else if (s_zero)
                        ++out.b10;
                    else if (y_zero)
                        ++out.b01;
                    else
                        ++out.b00;
                }
            }
        }
        return out;
    }

private:
    struct Entry {
        long long x, y, gc, gd;
    };
    const TowerCtx& T_;
    const FieldCtx& F_;
    std::unordered_map<long long, std::vector<Entry>> groups_;
};

// solution counts of the defining system at index c + dZ, split by the
// zero-indicators of the two degenerate coordinates
inline BetaDecomposition beta_decompose(const TowerCtx& T, long long c, long long d) {
    const FieldCtx& F = T.base();
    if (c == 0 && d == 0) throw std::invalid_argument("beta_decompose needs (c,d) != (0,0)");
    long long q = F.q();
    BetaDecomposition out;
    long long half = F.inv(F.scalar(2));

    if (T.p() == 3) {
        out.b11 = (d == 0) ? 1 : 0;
        if (c == 0 && d != 0)
            out.b10 = detail::nonzero_root_count(
                F, PolyFq(F, {F.neg(F.mul(d, half)), 1, 0, F.neg(T.alpha())}));  // -alpha y^3 + y = d/2
        if (d == 0 && c != 0) out.b01 = q - 1;
        if (c != 0 && d != 0) {
            long long c2 = F.mul(c, c);
            long long A = F.div(F.mul(F.mul(d, d), T.alpha()), c2);
            long long B = F.inv(c2);
            out.b00 = detail::root_count_in(F, boomerang_quintic_char3(F, A, B));
        } else if (c != 0) {
            out.b00 = detail::square_root_pair_count(F, F.div(F.add(F.mul(c, c), 1), T.alpha()));
        }
        return out;
    }

    if (q % 6 == 1) {
        out.b11 = 0;
        long long ch = F.mul(c, half), dh = F.mul(d, half);
        if (c == 0 && d != 0)
            out.b10 = detail::nonzero_root_count(
                F, PolyFq(F, {F.neg(dh), 1, 0, F.neg(F.mul(F.scalar(4), T.alpha()))}));  // -4 alpha y^3 + y = d/2
        if (d == 0 && c != 0)
            out.b01 = detail::nonzero_root_count(F, PolyFq(F, {F.neg(ch), F.scalar(3), 0, F.scalar(4)}));
        if (c != 0 && d != 0) {
            out.b00 = detail::root_count_in(F, boomerang_quintic_q1mod6(T, ch, dh));
        } else if (c != 0) {
            out.b00 = detail::square_root_pair_count(
                F, F.div(F.add(F.mul(ch, ch), 1), F.mul(F.scalar(4), T.alpha())));
        } else {
            out.b00 = detail::square_root_pair_count(
                F, F.div(F.sub(F.mul(F.mul(dh, dh), T.alpha()), F.scalar(3)), F.scalar(4)));
        }
        return out;
    }

    // q = 5 (mod 6): no coefficient formulas; fall back to direct counting
    return BetaSystemBrute(T).decompose(c, d);
}

enum class BoomerangCoverage { Covered, NotCovered };

struct BoomerangSummary {
    long long beta_f = 0;
    std::map<long long, long long> nu;  // complete in brute-force mode, pinned entries otherwise
    bool nu_complete = false;
    BoomerangCoverage coverage = BoomerangCoverage::Covered;
};

inline BoomerangSummary boomerang_summary_bruteforce(const PowerMap& f) {
    BctRow row = bct_row(f);
    BoomerangSummary s;
    s.beta_f = row.max_nonzero();
    s.nu = row.nu_table();
    s.nu_complete = true;
    return s;
}

inline BoomerangSummary boomerang_summary_closed_form(const PowerMap& f) {
    const TowerCtx& T = *f.T;
    if (f.d != T.q() + 2) throw std::invalid_argument("closed form is defined for exponent q + 2 only");
    long long q = T.q();
    BoomerangSummary s;
    if (T.p() == 3) {
        s.beta_f = q + 2;
        if (q >= 9) {
            if (q % 4 == 1) {
                s.nu[q + 2] = (q - 1) / 2;
                s.nu[q] = (q - 1) / 2;
            } else {
                s.nu[q + 2] = (q + 1) / 2;
                s.nu[q] = (q - 3) / 2;
            }
        }
        return s;
    }
    if (T.p() > 5 && q % 6 == 1) {
        if (q == 7)
            s.beta_f = 3;
        else if (q == 19)
            s.beta_f = 4;
        else if (q == 313)
            s.beta_f = 3;
        else
            s.beta_f = 5;
        return s;
    }
    s.coverage = BoomerangCoverage::NotCovered;
    return s;
}

inline BoomerangSummary boomerang_summary(const PowerMap& f, SpectrumMode mode) {
    return mode == SpectrumMode::Bruteforce ? boomerang_summary_bruteforce(f) : boomerang_summary_closed_form(f);
}

enum class BoomerangWitness { Nu1, Nu2, Nu5 };

struct WitnessResult {
    bool found = false;
    long long b = 0;                 // index with beta(b) equal to the target
    bool classification_ok = false;  // base-line values match the q/q+2 split
};

// characteristic-3 witness scan; also re-checks the base-line classification
// beta(c) = q + 2 iff c^2 + 1 is a non-square, else q
inline WitnessResult witness_search(const PowerMap& f, BoomerangWitness target) {
    const TowerCtx& T = *f.T;
    if (T.p() != 3) throw std::invalid_argument("witness search applies at characteristic 3 only");
    long long want = target == BoomerangWitness::Nu1 ? 1 : (target == BoomerangWitness::Nu2 ? 2 : 5);
    if (target == BoomerangWitness::Nu2 && T.q() < 9) throw std::invalid_argument("nu_2 witness needs q >= 9");
    if (target == BoomerangWitness::Nu5 && T.q() < 27) throw std::invalid_argument("nu_5 witness needs q >= 27");
    BctRow row = bct_row(f);
    WitnessResult out;
    for (long long b = 1; b < T.size(); ++b) {
        if (row.beta(b) == want) {
            out.found = true;
            out.b = b;
            break;
        }
    }
    const FieldCtx& F = T.base();
    out.classification_ok = true;
    for (long long c = 1; c < T.q(); ++c) {
        long long expect = F.eta(F.add(F.mul(c, c), 1)) == QuadClass::NonSquare ? T.q() + 2 : T.q();
        if (row.beta(T.embed(c)) != expect) out.classification_ok = false;
    }
    return out;
}

}  // namespace ffspec
