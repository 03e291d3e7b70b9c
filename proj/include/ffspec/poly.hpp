#pragma once

// Dense univariate polynomials over a FieldCtx, plus the classification
// machinery built on them: discriminants via Sylvester resultants, distinct
// root counting along two independent routes, cubic factor types, the
// discriminant/factor-count parity test, quadratic character sums, Weil-bound
// verification and the square/trace counting bounds used at characteristic 3.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"

namespace ffspec {

struct PolyFq {
    const FieldCtx* F = nullptr;
    std::vector<long long> c;  // ascending degree

    PolyFq() = default;
    PolyFq(const FieldCtx& f, std::vector<long long> coeffs) : F(&f), c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    long long lc() const { return c.back(); }
    long long coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }

    long long eval(long long x) const {
        long long r = 0;
        for (size_t i = c.size(); i-- > 0;) r = F->add(F->mul(r, x), c[i]);
        return r;
    }

    friend bool operator==(const PolyFq& a, const PolyFq& b) { return a.c == b.c; }
};

inline PolyFq poly_x(const FieldCtx& F) { return PolyFq(F, {0, 1}); }
inline PolyFq poly_const(const FieldCtx& F, long long v) { return PolyFq(F, {v}); }

inline PolyFq poly_add(const PolyFq& a, const PolyFq& b) {
    const FieldCtx& F = *a.F;
    std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return PolyFq(F, std::move(r));
}

inline PolyFq poly_sub(const PolyFq& a, const PolyFq& b) {
    const FieldCtx& F = *a.F;
    std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return PolyFq(F, std::move(r));
}

inline PolyFq poly_mul(const PolyFq& a, const PolyFq& b) {
    if (a.is_zero() || b.is_zero()) return PolyFq(*a.F, {});
    const FieldCtx& F = *a.F;
    std::vector<long long> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return PolyFq(F, std::move(r));
}

inline PolyFq poly_scale(const PolyFq& a, long long k) {
    const FieldCtx& F = *a.F;
    std::vector<long long> r = a.c;
    for (auto& x : r) x = F.mul(x, k);
    return PolyFq(F, std::move(r));
}

inline std::pair<PolyFq, PolyFq> poly_divmod(const PolyFq& a, const PolyFq& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldCtx& F = *a.F;
    std::vector<long long> rem = a.c;
    int db = b.deg();
    long long inv_lb = F.inv(b.lc());
    std::vector<long long> quo(a.deg() >= db ? a.deg() - db + 1 : 0, 0);
    for (int d = a.deg(); d >= db; --d) {
        long long cd = rem[d];
        if (cd == 0) continue;
        long long f = F.mul(cd, inv_lb);
        quo[d - db] = f;
        for (int j = 0; j <= db; ++j) rem[d - db + j] = F.sub(rem[d - db + j], F.mul(f, b.c[j]));
    }
    return {PolyFq(F, std::move(quo)), PolyFq(F, std::move(rem))};
}

inline PolyFq poly_mod(const PolyFq& a, const PolyFq& b) { return poly_divmod(a, b).second; }
inline PolyFq poly_div_exact(const PolyFq& a, const PolyFq& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("division was not exact");
    return q;
}

inline PolyFq poly_monic(const PolyFq& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return poly_scale(a, a.F->inv(a.lc()));
}

inline PolyFq poly_gcd(PolyFq a, PolyFq b) {
    while (!b.is_zero()) {
        PolyFq r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return poly_monic(a);
}

inline PolyFq poly_derivative(const PolyFq& a) {
    const FieldCtx& F = *a.F;
    if (a.deg() < 1) return PolyFq(F, {});
    std::vector<long long> r(a.c.size() - 1, 0);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = F.mul(a.c[i], F.scalar(static_cast<long long>(i)));
    return PolyFq(F, std::move(r));
}

inline PolyFq poly_pow_mod(PolyFq base, long long e, const PolyFq& mod) {
    const FieldCtx& F = *mod.F;
    PolyFq r = poly_const(F, 1);
    base = poly_mod(base, mod);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base), mod);
        base = poly_mod(poly_mul(base, base), mod);
        e >>= 1;
    }
    return r;
}

// ---- resultant and discriminant (Sylvester determinant) --------------------

inline long long poly_resultant(const PolyFq& f, const PolyFq& g) {
    const FieldCtx& F = *f.F;
    int n = f.deg(), m = g.deg();
    if (n < 0 || m < 0) return 0;
    if (n == 0 && m == 0) return 1;
    int N = n + m;
    std::vector<std::vector<long long>> M(N, std::vector<long long>(N, 0));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[r][r + j] = f.c[n - j];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[m + r][r + j] = g.c[m - j];
    // Gaussian elimination
    long long det = 1;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = F.neg(det);
        }
        det = F.mul(det, M[col][col]);
        long long ip = F.inv(M[col][col]);
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col] == 0) continue;
            long long factor = F.mul(M[r][col], ip);
            for (int cc = col; cc < N; ++cc) M[r][cc] = F.sub(M[r][cc], F.mul(factor, M[col][cc]));
        }
    }
    return det;
}

// D(f) = (-1)^{n(n-1)/2} lc^{n-2-deg f'} Res(f, f'); zero iff f has a
// repeated root in its splitting field
inline long long discriminant(const PolyFq& f) {
    const FieldCtx& F = *f.F;
    int n = f.deg();
    if (n < 2) throw std::invalid_argument("discriminant requires degree >= 2");
    PolyFq fp = poly_derivative(f);
    if (fp.is_zero()) return 0;
    long long res = poly_resultant(f, fp);
    long long d = F.pow(f.lc(), n - 2 - fp.deg());  // negative exponents reduce mod q-1
    d = F.mul(d, res);
    if ((static_cast<long long>(n) * (n - 1) / 2) % 2 == 1) d = F.neg(d);
    return d;
}

// ---- root counting ----------------------------------------------------------

// number of distinct roots in the coefficient field, computed by full
// evaluation and by deg gcd(f, x^q - x); the two routes must agree
inline long long count_distinct_roots(const PolyFq& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    const FieldCtx& F = *f.F;
    long long direct = 0;
    for (long long x = 0; x < F.q(); ++x)
        if (f.eval(x) == 0) ++direct;
    long long via_gcd;
    if (f.deg() == 0) {
        via_gcd = 0;
    } else {
        PolyFq xq = poly_pow_mod(poly_x(F), F.q(), f);
        PolyFq g = poly_gcd(f, poly_sub(xq, poly_x(F)));
        via_gcd = g.deg();
    }
    if (direct != via_gcd) throw std::logic_error("root-count routes disagree");
    return direct;
}

// ---- squarefree machinery ----------------------------------------------------

inline PolyFq poly_pth_root(const PolyFq& f) {
    const FieldCtx& F = *f.F;
    long long p = F.p();
    std::vector<long long> r(f.deg() / p + 1, 0);
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % p != 0) throw std::logic_error("not a p-th power");
        r[i / p] = F.pow(f.coeff(i), F.q() / p);
    }
    return PolyFq(F, std::move(r));
}

// product of the distinct irreducible factors (monic)
inline PolyFq poly_radical(PolyFq f) {
    const FieldCtx& F = *f.F;
    f = poly_monic(f);
    if (f.deg() <= 0) return poly_const(F, 1);
    PolyFq fp = poly_derivative(f);
    if (fp.is_zero()) return poly_radical(poly_pth_root(f));
    PolyFq u = poly_gcd(f, fp);
    PolyFq v = poly_div_exact(f, u);
    PolyFq w = u;
    for (;;) {
        PolyFq g = poly_gcd(w, v);
        if (g.deg() <= 0) break;
        w = poly_div_exact(w, g);
    }
    if (w.deg() <= 0) return poly_monic(v);
    return poly_monic(poly_mul(v, poly_radical(poly_pth_root(w))));
}

// exact k-th root of a monic polynomial, for k coprime to the characteristic
inline std::optional<PolyFq> poly_kth_root(const PolyFq& f, int k) {
    const FieldCtx& F = *f.F;
    if (f.is_zero() || f.lc() != 1 || f.deg() % k != 0) return std::nullopt;
    int t = f.deg() / k;
    PolyFq g(F, {});
    g.c.assign(t + 1, 0);
    g.c[t] = 1;
    long long inv_k = F.inv(F.scalar(k));
    for (int j = 1; j <= t; ++j) {
        // match the coefficient of x^{deg f - j}
        PolyFq h = poly_const(F, 1);
        for (int i = 0; i < k; ++i) h = poly_mul(h, g);
        long long want = f.coeff(f.deg() - j);
        long long have = h.coeff(f.deg() - j);
        g.c[t - j] = F.mul(F.sub(want, have), inv_k);
    }
    PolyFq h = poly_const(F, 1);
    for (int i = 0; i < k; ++i) h = poly_mul(h, g);
    if (h == f) return g;
    return std::nullopt;
}

// ---- factor types -------------------------------------------------------------

using FactorType = std::vector<int>;  // sorted degrees of the irreducible factors

inline std::string factor_type_string(const FactorType& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// factor type of x^3 + ax + b by criteria on the coefficients; requires a
// squarefree cubic (discriminant nonzero; at p = 3 this means a != 0)
inline FactorType cubic_classify(const FieldCtx& F, long long a, long long b) {
    if (F.p() == 3) {
        if (a == 0) throw std::invalid_argument("cubic classification needs a != 0 at p = 3");
        long long na = F.neg(a);
        if (F.eta(na) == QuadClass::NonSquare) return {1, 2};
        long long c = F.sqrt(na).first;
        long long t = F.tr_abs(F.div(b, F.pow(c, 3)));
        return t == 0 ? FactorType{1, 1, 1} : FactorType{3};
    }
    // p > 3: D = -4a^3 - 27b^2
    long long D = F.sub(F.neg(F.mul(F.scalar(4), F.pow(a, 3))), F.mul(F.scalar(27), F.mul(b, b)));
    if (D == 0) throw std::invalid_argument("cubic classification needs a nonzero discriminant");
    if (F.eta(D) == QuadClass::NonSquare) return {1, 2};
    long long c = F.sqrt(F.div(D, F.scalar(81))).first;
    long long nb = F.neg(b);
    bool cube;
    if (F.q() % 3 == 1) {
        long long w = F.sqrt(F.neg(F.scalar(3))).first;
        long long u = F.div(F.add(nb, F.mul(c, w)), F.scalar(2));
        if (u == 0) u = F.div(F.sub(nb, F.mul(c, w)), F.scalar(2));
        cube = F.is_cube(u);
    } else {
        // test in F_{q^2}, represented as pairs (r, s) = r + sW with W^2 = alpha
        long long alpha = 2;
        while (F.eta(alpha) != QuadClass::NonSquare) ++alpha;
        long long wd = F.sqrt(F.div(F.neg(F.scalar(3)), alpha)).first;  // sqrt(-3) = wd * W
        long long ur = F.div(nb, F.scalar(2));
        long long us = F.div(F.mul(c, wd), F.scalar(2));
        if (ur == 0 && us == 0) us = F.neg(us);  // cannot happen with D != 0, kept for symmetry
        auto pair_mul = [&](std::pair<long long, long long> x, std::pair<long long, long long> y) {
            return std::make_pair(F.add(F.mul(x.first, y.first), F.mul(alpha, F.mul(x.second, y.second))),
                                  F.add(F.mul(x.first, y.second), F.mul(x.second, y.first)));
        };
        auto pair_pow = [&](std::pair<long long, long long> x, long long e) {
            std::pair<long long, long long> r{1, 0};
            while (e > 0) {
                if (e & 1) r = pair_mul(r, x);
                x = pair_mul(x, x);
                e >>= 1;
            }
            return r;
        };
        long long Q = F.q() * F.q();
        auto probe = pair_pow({ur, us}, (Q - 1) / 3);
        cube = (probe == std::make_pair(1LL, 0LL));
    }
    return cube ? FactorType{1, 1, 1} : FactorType{3};
}

// brute-force comparator: factor type of a squarefree cubic from its root count
inline FactorType cubic_type_by_roots(const FieldCtx& F, long long a, long long b) {
    PolyFq f(F, {b, a, 0, 1});
    long long roots = 0;
    for (long long x = 0; x < F.q(); ++x)
        if (f.eval(x) == 0) ++roots;
    if (roots == 3) return {1, 1, 1};
    if (roots == 1) return {1, 2};
    return {3};
}

// ---- discriminant parity ------------------------------------------------------

struct ParityCheck {
    int factor_count = 0;
    bool parity_ok = false;
};

// distinct-degree factor count of a squarefree polynomial, then the parity
// identity eta(D(f)) == (-1)^{deg f - k}
inline ParityCheck stickelberger_check(const PolyFq& f) {
    const FieldCtx& F = *f.F;
    if (f.deg() < 2) throw std::invalid_argument("degree must be at least 2");
    long long D = discriminant(f);
    if (D == 0) throw std::invalid_argument("discriminant is zero");
    int n = f.deg();
    int k = 0;
    PolyFq fr = poly_monic(f);
    PolyFq h = poly_mod(poly_x(F), fr);
    int i = 0;
    while (fr.deg() > 0) {
        ++i;
        if (2 * i > fr.deg()) {
            k += 1;
            break;
        }
        h = poly_pow_mod(h, F.q(), fr);
        PolyFq g = poly_gcd(fr, poly_sub(h, poly_x(F)));
        if (g.deg() > 0) {
            k += g.deg() / i;
            fr = poly_div_exact(fr, g);
            h = poly_mod(h, fr);
        }
    }
    int sign = ((n - k) % 2 == 0) ? 1 : -1;
    return {k, F.eta_value(D) == sign};
}

// ---- character sums -------------------------------------------------------------

inline CycInt canonical_additive_character_sum(const FieldCtx& F, const PolyFq& f) {
    std::vector<long long> hist(F.p(), 0);
    for (long long x = 0; x < F.q(); ++x) ++hist[f.eval(x) == 0 ? 0 : F.tr_abs(f.eval(x))];
    return CycInt::from_histogram(hist);
}

inline CycInt gauss_sum(const FieldCtx& F) {
    std::vector<long long> hist_sq(F.p(), 0), hist_ns(F.p(), 0);
    for (long long x = 1; x < F.q(); ++x) {
        if (F.eta(x) == QuadClass::Square)
            ++hist_sq[F.tr_abs(x)];
        else
            ++hist_ns[F.tr_abs(x)];
    }
    return CycInt::from_histogram(hist_sq) - CycInt::from_histogram(hist_ns);
}

struct QuadCharSums {
    CycInt additive_direct;
    CycInt additive_closed;
    long long mult_direct = 0;
    long long mult_closed = 0;
    bool ok = false;
};

// both evaluations of sum_c psi(f(c)) and sum_c eta(f(c)) for a quadratic f
inline QuadCharSums char_sum_identities(const FieldCtx& F, long long a2, long long a1, long long a0) {
    if (a2 == 0) throw std::invalid_argument("leading coefficient must be nonzero");
    PolyFq f(F, {a0, a1, a2});
    QuadCharSums out{CycInt(static_cast<int>(F.p())), CycInt(static_cast<int>(F.p()))};
    out.additive_direct = canonical_additive_character_sum(F, f);

    long long shift = F.sub(a0, F.div(F.mul(a1, a1), F.mul(F.scalar(4), a2)));
    CycInt psi_shift = CycInt::root_power(static_cast<int>(F.p()), shift == 0 ? 0 : F.tr_abs(shift));
    CycInt closed = psi_shift * gauss_sum(F);
    if (F.eta(a2) == QuadClass::NonSquare) closed = -closed;
    out.additive_closed = closed;

    for (long long x = 0; x < F.q(); ++x) out.mult_direct += F.eta_value(f.eval(x));
    long long d = F.sub(F.mul(a1, a1), F.mul(F.scalar(4), F.mul(a0, a2)));
    out.mult_closed = (d != 0) ? -F.eta_value(a2) : (F.q() - 1) * F.eta_value(a2);

    out.ok = out.additive_direct == out.additive_closed && out.mult_direct == out.mult_closed;
    return out;
}

// ---- Weil bound -------------------------------------------------------------------

struct WeilCheck {
    long long modulus_squared = 0;  // |S|^2, a rational integer
    long long bound = 0;            // (d-1)^2 * q
    long long distinct_roots = 0;
    bool ok = false;
};

// exact |sum_x chi(f(x))|^2 <= (d-1)^2 q for a concrete character chi of order
// n; supported orders are those whose value ring has rational norms
inline WeilCheck weil_bound_check(const FieldCtx& F, const PolyFq& f, int n) {
    if (f.is_zero() || f.lc() != 1 || f.deg() < 1) throw std::invalid_argument("f must be monic of positive degree");
    if (n <= 1 || (F.q() - 1) % n != 0) throw std::invalid_argument("character order must divide q - 1");
    if (n != 2 && n != 3 && n != 4 && n != 6)
        throw std::invalid_argument("unsupported character order (need 2, 3, 4 or 6)");
    if (f.deg() % n == 0) {
        if (auto r = poly_kth_root(f, n)) {
            (void)r;
            throw std::domain_error("f is an n-th power; the bound does not apply");
        }
    }
    WeilCheck out;
    out.distinct_roots = poly_radical(f).deg();
    out.bound = (out.distinct_roots - 1) * (out.distinct_roots - 1) * F.q();

    if (n == 2) {
        long long s = 0;
        for (long long x = 0; x < F.q(); ++x) s += F.eta_value(f.eval(x));
        out.modulus_squared = s * s;
    } else if (n == 4) {
        long long re = 0, im = 0;
        for (long long x = 0; x < F.q(); ++x) {
            long long v = f.eval(x);
            if (v == 0) continue;
            switch (F.log_of(v) % 4) {
                case 0: ++re; break;
                case 1: ++im; break;
                case 2: --re; break;
                default: --im; break;
            }
        }
        out.modulus_squared = re * re + im * im;
    } else {  // n == 3 or 6, values in Z[xi_3]
        CycInt s(3);
        for (long long x = 0; x < F.q(); ++x) {
            long long v = f.eval(x);
            if (v == 0) continue;
            long long k = F.log_of(v) % n;
            CycInt term = (n == 3) ? CycInt::root_power(3, k)
                                   : CycInt::root_power(3, 2 * k).scaled((k % 2) ? -1 : 1);
            s += term;
        }
        out.modulus_squared = s.norm_squared().rational_value();
    }
    out.ok = out.modulus_squared <= out.bound;
    return out;
}

// ---- counting bounds at p = 3 -----------------------------------------------------

// #{x in F_q^*: x, x+1, x-1 all squares}; bounded by (q + 2 sqrt(q) + 9)/8,
// compared in integers as 8c - q - 9 <= 0 or (8c - q - 9)^2 <= 4q
struct CountBound {
    long long count = 0;
    bool bound_ok = false;
};

inline CountBound consecutive_squares_bound(const FieldCtx& F) {
    if (F.p() != 3) throw std::invalid_argument("requires characteristic 3");
    long long c = 0;
    for (long long x = 1; x < F.q(); ++x) {
        if (F.eta(x) != QuadClass::Square) continue;
        long long xp = F.add(x, 1), xm = F.sub(x, 1);
        if (xp != 0 && xm != 0 && F.eta(xp) == QuadClass::Square && F.eta(xm) == QuadClass::Square) ++c;
    }
    long long lhs = 8 * c - F.q() - 9;
    return {c, lhs <= 0 || lhs * lhs <= 4 * F.q()};
}

// #{x: Tr(x) = i, Tr(x^2) = 0} >= (q - 6 sqrt(q))/9, i.e.
// q - 9c <= 0 or (q - 9c)^2 <= 36q
inline CountBound trace_pair_bound(const FieldCtx& F, int i) {
    if (F.p() != 3) throw std::invalid_argument("requires characteristic 3");
    long long c = 0;
    for (long long x = 0; x < F.q(); ++x)
        if (F.tr_abs(x) == i && F.tr_abs(F.mul(x, x)) == 0) ++c;
    long long lhs = F.q() - 9 * c;
    return {c, lhs <= 0 || lhs * lhs <= 36 * F.q()};
}

struct CubeDiffWitness {
    long long x = 0;
    long long b = 0;
};

// a non-square x with x^3 - x = b^2, b != 0, Tr(b) = i
inline std::optional<CubeDiffWitness> nonsquare_cube_witness(const FieldCtx& F, int i) {
    if (F.p() != 3) throw std::invalid_argument("requires characteristic 3");
    if (F.q() < 81) throw std::invalid_argument("requires q >= 81");
    for (long long x = 1; x < F.q(); ++x) {
        if (F.eta(x) != QuadClass::NonSquare) continue;
        long long v = F.sub(F.pow(x, 3), x);
        if (v == 0 || F.eta(v) != QuadClass::Square) continue;
        auto [b, nb] = F.sqrt(v);
        if (F.tr_abs(b) == i) return CubeDiffWitness{x, b};
        if (F.tr_abs(nb) == i) return CubeDiffWitness{x, nb};
    }
    return std::nullopt;
}

}  // namespace ffspec
