#pragma once

// Differential spectrum of the power map x^d on F_{q^2}. The brute-force
// route histograms the derivative D_1 f over the whole field in one pass; the
// pointwise route evaluates delta(b) from base-field data only; the closed
// form covers d = q + 2 in its three regimes. A full DDT over all (a, b)
// exists as a debug path for small fields.

#include <map>
#include <stdexcept>
#include <vector>

#include "tower.hpp"

namespace ffspec {

struct PowerMap {
    const TowerCtx* T = nullptr;
    long long d = 0;

    PowerMap(const TowerCtx& t, long long exponent) : T(&t), d(exponent) {}
    explicit PowerMap(const TowerCtx& t) : T(&t), d(t.q() + 2) {}

    long long eval(long long x) const { return x == 0 ? 0 : T->exp_of(T->log_of(x) * (d % (T->size() - 1))); }
};

struct DiffSpectrum {
    long long field_size = 0;
    std::map<long long, long long> omega;  // i -> omega_i, including omega_0

    long long uniformity() const {
        long long m = 0;
        for (auto& [i, w] : omega)
            if (w > 0 && i > m) m = i;
        return m;
    }

    bool mass_identities_hold() const {
        long long s0 = 0, s1 = 0;
        for (auto& [i, w] : omega) {
            s0 += w;
            s1 += i * w;
        }
        return s0 == field_size && s1 == field_size;
    }

    friend bool operator==(const DiffSpectrum& a, const DiffSpectrum& b) {
        return a.field_size == b.field_size && a.omega == b.omega;
    }
};

enum class SpectrumMode { Bruteforce, ClosedForm };

// histogram of D_1 f(x) = f(x+1) - f(x) over all x; total mass q^2
inline std::vector<long long> derivative_histogram(const PowerMap& f) {
    const TowerCtx& T = *f.T;
    std::vector<long long> hist(T.size(), 0);
    for (long long x = 0; x < T.size(); ++x) ++hist[T.sub(f.eval(T.add(x, 1)), f.eval(x))];
    return hist;
}

// Caches both the derivative histogram and the shifted histogram of
// 2u^{q+1} + u^2, verifying delta(b) = delta_f(1, b + 1/4) across all b once.
class DiffAnalysis {
public:
    explicit DiffAnalysis(const PowerMap& f) : f_(f), T_(*f.T) {
        deriv_hist_ = derivative_histogram(f);
        delta_hist_.assign(T_.size(), 0);
        long long qp1 = T_.q() + 1;
        for (long long u = 0; u < T_.size(); ++u) {
            long long n = u == 0 ? 0 : T_.pow(u, qp1);
            long long v = T_.add(T_.add(n, n), T_.mul(u, u));
            ++delta_hist_[v];
        }
        if (f.d == T_.q() + 2) {
            long long quarter = T_.inv(T_.scalar(4));
            for (long long b = 0; b < T_.size(); ++b) {
                if (delta_hist_[b] != deriv_hist_[T_.add(b, quarter)])
                    throw std::logic_error("substitution shift mismatch");
            }
        }
    }

    const PowerMap& map() const { return f_; }
    const std::vector<long long>& derivative_hist() const { return deriv_hist_; }

    // delta(b) = #{u : 2u^{q+1} + u^2 = b}
    long long delta(long long b) const { return delta_hist_[b]; }

    DiffSpectrum spectrum() const {
        DiffSpectrum s;
        s.field_size = T_.size();
        for (long long b = 0; b < T_.size(); ++b) ++s.omega[deriv_hist_[b]];
        return s;
    }

    bool locally_apn() const {
        long long best = 0;
        for (long long b = 0; b < T_.size(); ++b) {
            if (b < T_.p() && T_.d_of(b) == 0) continue;  // prime-field encodings are 0..p-1
            if (deriv_hist_[b] > best) best = deriv_hist_[b];
        }
        return best == 2;
    }

private:
    PowerMap f_;
    const TowerCtx& T_;
    std::vector<long long> deriv_hist_;
    std::vector<long long> delta_hist_;
};

// delta(b) for a single b by direct count over u
inline long long delta_b(const PowerMap& f, long long b) {
    const TowerCtx& T = *f.T;
    long long qp1 = T.q() + 1;
    long long count = 0;
    for (long long u = 0; u < T.size(); ++u) {
        long long n = u == 0 ? 0 : T.pow(u, qp1);
        if (T.add(T.add(n, n), T.mul(u, u)) == b) ++count;
    }
    return count;
}

// delta(c + dZ) for (c,d) != (0,0) from base-field data only:
//   d = 0: root counts of 3x^2 = c and y^2 = -c/alpha
//   d != 0: 2 * #{y square class C_0 : 3y^2 - cy - d^2 alpha / 4 = 0}
inline long long delta_formula(const TowerCtx& T, long long c, long long d) {
    const FieldCtx& F = T.base();
    if (c == 0 && d == 0) throw std::invalid_argument("delta_formula needs (c,d) != (0,0)");
    long long alpha = T.alpha();
    if (d == 0) {
        long long count = 0;
        long long three = F.scalar(3);
        if (three != 0) {
            long long r = F.div(c, three);
            count += (F.eta(r) == QuadClass::Square) ? 2 : 0;
        }
        long long s = F.neg(F.div(c, alpha));
        count += (F.eta(s) == QuadClass::Square) ? 2 : 0;
        return count;
    }
    long long three = F.scalar(3);
    long long rhs = F.div(F.mul(F.mul(d, d), alpha), F.scalar(4));  // d^2 alpha / 4
    if (three == 0) {
        // linear: -cy = d^2 alpha / 4
        if (c == 0) return 0;
        long long y = F.neg(F.div(rhs, c));
        return F.eta(y) == QuadClass::Square ? 2 : 0;
    }
    // quadratic 3y^2 - cy - rhs = 0
    long long disc = F.add(F.mul(c, c), F.mul(F.scalar(12), rhs));  // c^2 + 3 d^2 alpha
    if (F.eta(disc) == QuadClass::NonSquare) return 0;
    long long six_inv = F.inv(F.scalar(6));
    if (disc == 0) {
        long long y = F.mul(c, six_inv);
        return F.eta(y) == QuadClass::Square ? 2 : 0;
    }
    long long r = F.sqrt(disc).first;
    long long count = 0;
    for (long long root : {F.mul(F.add(c, r), six_inv), F.mul(F.sub(c, r), six_inv)})
        if (F.eta(root) == QuadClass::Square) count += 2;
    return count;
}

inline DiffSpectrum closed_form_spectrum(const PowerMap& f) {
    const TowerCtx& T = *f.T;
    if (f.d != T.q() + 2) throw std::invalid_argument("closed form is defined for exponent q + 2 only");
    long long q = T.q();
    DiffSpectrum s;
    s.field_size = q * q;
    if (T.p() == 3) {
        s.omega[0] = (q * q + q - 2) / 2;
        s.omega[2] = (q * q - q) / 2;
        s.omega[q] = 1;
    } else if (q % 6 == 1) {
        s.omega[0] = (q * q - 1) / 2;
        s.omega[1] = 1;
        s.omega[2] = (q * q - 1) / 2;
    } else {
        s.omega[0] = (3 * q + 1) * (q - 1) / 4;
        s.omega[1] = 1;
        s.omega[2] = q - 1;
        s.omega[4] = (q - 1) * (q - 1) / 4;
    }
    return s;
}

inline DiffSpectrum diff_spectrum(const PowerMap& f, SpectrumMode mode) {
    if (mode == SpectrumMode::ClosedForm) return closed_form_spectrum(f);
    return DiffAnalysis(f).spectrum();
}

inline bool is_locally_apn(const PowerMap& f) { return DiffAnalysis(f).locally_apn(); }

// full difference table over all (a, b), a != 0 — debug path for small fields
inline std::vector<std::vector<long long>> full_ddt(const PowerMap& f) {
    const TowerCtx& T = *f.T;
    std::vector<std::vector<long long>> ddt(T.size(), std::vector<long long>(T.size(), 0));
    for (long long a = 1; a < T.size(); ++a)
        for (long long x = 0; x < T.size(); ++x) ++ddt[a][T.sub(f.eval(T.add(x, a)), f.eval(x))];
    return ddt;
}

}  // namespace ffspec
