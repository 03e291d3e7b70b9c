#pragma once

// Exact Walsh spectrum of power maps on F_{q^2}. Values are cyclotomic
// integers; nothing is ever evaluated in floating point. Two engines produce
// the value distribution: a direct per-pair sum and a per-column transform
// over the additive group viewed as F_p^{2m} in the coefficient basis of the
// encoding digits, costing O(q^2 m) ring operations per column.

#include <map>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"
#include "diff_spectrum.hpp"
#include "parallel.hpp"
#include "tower.hpp"

namespace ffspec {

struct WalshDistribution {
    std::map<CycInt, long long> counts;  // value -> multiplicity over (a,b), b != 0

    long long total() const {
        long long s = 0;
        for (auto& [v, c] : counts) s += c;
        return s;
    }

    friend bool operator==(const WalshDistribution& x, const WalshDistribution& y) { return x.counts == y.counts; }
};

enum class WalshEngine { Direct, GroupTransform };

inline CycInt walsh_at(const PowerMap& f, long long a, long long b) {
    const TowerCtx& T = *f.T;
    int p = static_cast<int>(T.p());
    std::vector<long long> hist(p, 0);
    for (long long x = 0; x < T.size(); ++x) ++hist[T.tr_abs(T.sub(T.mul(b, f.eval(x)), T.mul(a, x)))];
    return CycInt::from_histogram(hist);
}

namespace detail {

// in-place multidimensional transform over F_p^n on a flat buffer of
// coefficient vectors: buf[x*p + k] is the xi^k coordinate of entry x;
// afterwards entry t holds sum_x v[x] xi^{-<x,t>}
inline void additive_group_transform(std::vector<long long>& buf, long long n_entries, int p) {
    std::vector<long long> tmp(static_cast<size_t>(p) * p);
    for (long long stride = 1; stride < n_entries; stride *= p) {
        for (long long base = 0; base < n_entries; base += stride * p) {
            for (long long off = 0; off < stride; ++off) {
                long long idx0 = base + off;
                // gather p entries idx0, idx0+stride, ...
                for (int j = 0; j < p; ++j) {
                    long long* out = tmp.data() + static_cast<size_t>(j) * p;
                    for (int k = 0; k < p; ++k) out[k] = 0;
                    for (int jp = 0; jp < p; ++jp) {
                        const long long* in = buf.data() + (idx0 + jp * stride) * p;
                        int rot = (j * jp) % p;  // multiply by xi^{-rot}: coord k reads in[(k+rot) mod p]
                        for (int k = 0; k < p; ++k) out[k] += in[(k + rot) % p];
                    }
                }
                for (int j = 0; j < p; ++j) {
                    long long* dst = buf.data() + (idx0 + j * stride) * p;
                    const long long* src = tmp.data() + static_cast<size_t>(j) * p;
                    for (int k = 0; k < p; ++k) dst[k] = src[k];
                }
            }
        }
    }
}

}  // namespace detail

// One Walsh column: all values W(a, b) for fixed b, as canonical cyclotomic
// integers indexed by a.
class WalshColumnEngine {
public:
    explicit WalshColumnEngine(const PowerMap& f) : f_(f), T_(*f.T), p_(static_cast<int>(T_.p())) {
        fvals_.resize(T_.size());
        for (long long x = 0; x < T_.size(); ++x) fvals_[x] = f.eval(x);
        // character index of a: digits Tr(a * e_i) over the encoding basis e_i = p^i
        long long dims = 1;
        int n = 0;
        while (dims < T_.size()) {
            dims *= p_;
            ++n;
        }
        ndims_ = n;
        char_index_.assign(T_.size(), 0);
        std::vector<long long> basis(ndims_);
        long long e = 1;
        for (int i = 0; i < ndims_; ++i) {
            basis[i] = e;
            e *= p_;
        }
        for (long long a = 0; a < T_.size(); ++a) {
            long long idx = 0, scale = 1;
            for (int i = 0; i < ndims_; ++i) {
                idx += T_.tr_abs(T_.mul(a, basis[i])) * scale;
                scale *= p_;
            }
            char_index_[a] = idx;
        }
    }

    // flat buffer of size Q*p: entry t holds the transform value; use
    // value_of(buf, a) to read W(a, b)
    std::vector<long long> column(long long b) const {
        std::vector<long long> buf(static_cast<size_t>(T_.size()) * p_, 0);
        for (long long x = 0; x < T_.size(); ++x) ++buf[x * p_ + T_.tr_abs(T_.mul(b, fvals_[x]))];
        detail::additive_group_transform(buf, T_.size(), p_);
        return buf;
    }

    CycInt value_of(const std::vector<long long>& buf, long long a) const {
        long long t = char_index_[a];
        std::vector<long long> v(buf.begin() + t * p_, buf.begin() + (t + 1) * p_);
        return CycInt::from_histogram(v);
    }

    void accumulate_distribution(const std::vector<long long>& buf, std::map<CycInt, long long>& into) const {
        for (long long t = 0; t < T_.size(); ++t) {
            std::vector<long long> v(buf.begin() + t * p_, buf.begin() + (t + 1) * p_);
            ++into[CycInt::from_histogram(v)];
        }
    }

    const TowerCtx& tower() const { return T_; }

private:
    PowerMap f_;
    const TowerCtx& T_;
    int p_;
    int ndims_ = 0;
    std::vector<long long> fvals_;
    std::vector<long long> char_index_;
};

inline WalshDistribution walsh_distribution(const PowerMap& f, WalshEngine engine, int jobs = 0) {
    const TowerCtx& T = *f.T;
    WalshDistribution dist;
    if (engine == WalshEngine::Direct) {
        for (long long b = 1; b < T.size(); ++b)
            for (long long a = 0; a < T.size(); ++a) ++dist.counts[walsh_at(f, a, b)];
        return dist;
    }
    WalshColumnEngine eng(f);
    auto partials = parallel_map_chunks<std::map<CycInt, long long>>(
        T.size() - 1, jobs, [&](long long lo, long long hi, std::map<CycInt, long long>& acc) {
            for (long long i = lo; i < hi; ++i) {
                auto buf = eng.column(i + 1);
                eng.accumulate_distribution(buf, acc);
            }
        });
    for (auto& part : partials)
        for (auto& [v, c] : part) dist.counts[v] += c;
    return dist;
}

// the four-point distribution at characteristic 3
inline WalshDistribution closed_form_walsh_distribution(const TowerCtx& T) {
    if (T.p() != 3) throw std::invalid_argument("closed form requires characteristic 3");
    long long q = T.q();
    long long base = q * q * q * q - q * q * q - q * q + q;  // q^4 - q^3 - q^2 + q
    WalshDistribution d;
    d.counts[CycInt::integer(3, -q)] = base / 3;
    d.counts[CycInt::integer(3, 0)] = base / 2;
    d.counts[CycInt::integer(3, q)] = q * q * q - q;
    d.counts[CycInt::integer(3, 2 * q)] = base / 6;
    return d;
}

struct MomentReport {
    bool sum_ok = false;       // sum over all (a, b != 0) equals q^4 - q^2
    bool parseval_ok = false;  // per-column |W|^2 sums equal q^4
    bool cube_ok = false;      // third central-style moment, characteristic 3 only
    long long cube_value = 0;
};

inline MomentReport moment_checks(const PowerMap& f, int jobs = 0) {
    const TowerCtx& T = *f.T;
    long long Q = T.size();
    int p = static_cast<int>(T.p());
    WalshColumnEngine eng(f);

    struct Acc {
        CycInt sum;
        bool parseval_ok = true;
        long long cube = 0;
        bool rational_ok = true;
        Acc() : sum(3) {}
    };
    auto partials = parallel_map_chunks<Acc>(Q - 1, jobs, [&](long long lo, long long hi, Acc& acc) {
        if (acc.sum.order() != p) acc.sum = CycInt::zero(p);
        CycInt q4 = CycInt::integer(p, Q * Q);
        for (long long i = lo; i < hi; ++i) {
            auto buf = eng.column(i + 1);
            CycInt parseval = CycInt::zero(p);
            for (long long t = 0; t < Q; ++t) {
                std::vector<long long> v(buf.begin() + t * p, buf.begin() + (t + 1) * p);
                CycInt w = CycInt::from_histogram(v);
                acc.sum += w;
                parseval += w.norm_squared();
                if (p == 3) {
                    if (!w.is_rational()) {
                        acc.rational_ok = false;
                        continue;
                    }
                    long long wv = w.rational_value() - 1;
                    acc.cube += wv * wv * wv;
                }
            }
            if (!(parseval == q4)) acc.parseval_ok = false;
        }
    });
    CycInt total = CycInt::zero(p);
    MomentReport rep;
    rep.parseval_ok = true;
    bool rational_ok = true;
    for (auto& a : partials) {
        if (a.sum.order() == p) total += a.sum;
        rep.parseval_ok = rep.parseval_ok && a.parseval_ok;
        rep.cube_value += a.cube;
        rational_ok = rational_ok && a.rational_ok;
    }
    rep.sum_ok = total == CycInt::integer(p, Q * Q - Q);
    if (p == 3) {
        long long q = T.q();
        long long expect = q * q * (q * q - 1) * (q * q * q - 3 * q * q + 2);
        rep.cube_ok = rational_ok && rep.cube_value == expect;
    }
    return rep;
}

struct LambdaCubicCheck {
    long long lambda_count = 0;
    bool identity_ok = false;
};

// counts the cubic's solutions restricted to the split of the squares of the
// norm-one circle, and checks W(a,b) = -q + q * count (characteristic 3)
inline LambdaCubicCheck lambda_cubic_identity(const PowerMap& f, long long a, long long b) {
    const TowerCtx& T = *f.T;
    if (T.p() != 3) throw std::invalid_argument("identity applies at characteristic 3 only");
    if (b == 0) throw std::invalid_argument("b must be nonzero");
    std::vector<long long> domain = T.unit_circle_squares();
    size_t half = domain.size();
    if (T.q() % 4 == 1) {
        for (size_t i = 0; i < half; ++i) domain.push_back(T.neg(domain[i]));
    } else {
        long long l2 = T.mul(T.lambda(), T.lambda());
        for (size_t i = 0; i < half; ++i) domain.push_back(T.mul(l2, domain[i]));
    }
    long long a3 = T.pow(a, 3), a3q = T.frob(a3), bq = T.frob(b);
    LambdaCubicCheck out;
    for (long long s : domain) {
        long long v = T.mul(a3, T.pow(s, 3));
        v = T.sub(v, T.mul(b, T.mul(s, s)));
        v = T.sub(v, T.mul(bq, s));
        v = T.add(v, a3q);
        if (v == 0) ++out.lambda_count;
    }
    CycInt w = walsh_at(f, a, b);
    out.identity_ok = w.is_rational() && w.rational_value() == -T.q() + T.q() * out.lambda_count;
    return out;
}

}  // namespace ffspec
