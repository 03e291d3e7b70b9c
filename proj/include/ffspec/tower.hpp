#pragma once

// F_{q^2} as a degree-2 extension of F_q via Z^2 = alpha, alpha a fixed
// non-square of the base field. Elements are pairs (c, d) for c + dZ, encoded
// as c + q*d; base-p digits of the encoding are the coordinates over the
// F_p-basis {1, t, ..., t^{m-1}, Z, tZ, ..., t^{m-1}Z}. On top of the pair
// formulas the context carries exp/log tables for the full multiplicative
// group, found from the smallest pair encoding of order q^2 - 1.

#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace ffspec {

enum class AlphaPolicy { SmallestNonSquare, ForceMinus3, Explicit };

class TowerCtx {
public:
    TowerCtx(const FieldCtx& base, AlphaPolicy policy = AlphaPolicy::SmallestNonSquare,
             long long explicit_alpha = -1, long long cap = default_enum_cap())
        : base_(base), q_(base.q()), Q_(base.q() * base.q()) {
        if (Q_ > cap) throw std::invalid_argument("tower size exceeds enumeration cap");
        switch (policy) {
            case AlphaPolicy::SmallestNonSquare:
                alpha_ = 0;
                for (long long a = 2; a < q_; ++a)
                    if (base_.eta(a) == QuadClass::NonSquare) { alpha_ = a; break; }
                break;
            case AlphaPolicy::ForceMinus3:
                alpha_ = base_.neg(base_.scalar(3));
                if (base_.eta(alpha_) != QuadClass::NonSquare)
                    throw std::invalid_argument("-3 is a square in this base field");
                break;
            case AlphaPolicy::Explicit:
                if (explicit_alpha < 0 || explicit_alpha >= q_ || base_.eta(explicit_alpha) != QuadClass::NonSquare)
                    throw std::invalid_argument("explicit alpha is not a non-square");
                alpha_ = explicit_alpha;
                break;
        }
        build_tables();
    }

    const FieldCtx& base() const { return base_; }
    long long p() const { return base_.p(); }
    long long q() const { return q_; }
    long long size() const { return Q_; }
    long long alpha() const { return alpha_; }
    long long generator() const { return generator_; }
    long long lambda() const { return lambda_; }

    // ---- pair coordinates -------------------------------------------------

    long long code(long long c, long long d) const { return c + q_ * d; }
    long long c_of(long long x) const { return x % q_; }
    long long d_of(long long x) const { return x / q_; }
    long long embed(long long c) const { return c; }
    long long zeta() const { return code(0, 1); }  // the element Z

    // ---- arithmetic --------------------------------------------------------

    long long add(long long x, long long y) const {
        return code(base_.add(x % q_, y % q_), base_.add(x / q_, y / q_));
    }
    long long neg(long long x) const { return code(base_.neg(x % q_), base_.neg(x / q_)); }
    long long sub(long long x, long long y) const { return add(x, neg(y)); }

    // product via the (c,d) formulas; mul() goes through the tables
    long long mul_formula(long long x, long long y) const {
        long long c1 = x % q_, d1 = x / q_, c2 = y % q_, d2 = y / q_;
        long long c = base_.add(base_.mul(c1, c2), base_.mul(alpha_, base_.mul(d1, d2)));
        long long d = base_.add(base_.mul(c1, d2), base_.mul(d1, c2));
        return code(c, d);
    }

    long long mul(long long x, long long y) const {
        if (x == 0 || y == 0) return 0;
        long long e = log_[x] + log_[y];
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    long long inv(long long x) const {
        if (x == 0) throw std::domain_error("division by zero");
        return exp_[(ord_ - log_[x]) % ord_];
    }

    long long div(long long x, long long y) const { return mul(x, inv(y)); }

    long long pow(long long x, long long e) const {
        if (x == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::domain_error("negative power of zero");
        }
        long long em = ((e % ord_) + ord_) % ord_;
        return exp_[(log_[x] * em) % ord_];
    }

    long long pow_formula(long long x, long long e) const {
        if (e < 0) return pow(x, e);
        long long r = 1;
        while (e > 0) {
            if (e & 1) r = mul_formula(r, x);
            x = mul_formula(x, x);
            e >>= 1;
        }
        return r;
    }

    long long scalar(long long k) const { return base_.scalar(k); }
    long long minus_one() const { return base_.minus_one(); }

    int log_of(long long x) const {
        if (x == 0) throw std::domain_error("log of zero");
        return log_[x];
    }
    long long exp_of(long long i) const { return exp_[((i % ord_) + ord_) % ord_]; }

    long long frob(long long x) const { return code(x % q_, base_.neg(x / q_)); }  // x^q

    // ---- relative trace / norm, characters ---------------------------------

    long long trace_rel(long long x) const { return base_.add(x % q_, x % q_); }  // 2c
    long long norm_rel(long long x) const {                                       // c^2 - d^2 alpha
        long long c = x % q_, d = x / q_;
        return base_.sub(base_.mul(c, c), base_.mul(alpha_, base_.mul(d, d)));
    }

    long long tr_abs(long long x) const { return tr2_[x % q_]; }  // trace to F_p

    QuadClass eta(long long x) const {
        if (x == 0) return QuadClass::Zero;
        return (log_[x] & 1) ? QuadClass::NonSquare : QuadClass::Square;
    }

    std::pair<long long, long long> sqrt(long long x) const {
        if (x == 0) return {0, 0};
        if (log_[x] & 1) throw std::domain_error("square root of a non-square");
        long long r = exp_[log_[x] / 2];
        return {r, neg(r)};
    }

    // unique cube root when p = 3 (the inverse Frobenius image)
    long long cube_root(long long x) const {
        if (x == 0) return 0;
        if (ord_ % 3 != 0) {
            long long inv3 = 1;
            while ((3 * inv3) % ord_ != 1 % ord_) ++inv3;
            return exp_[(log_[x] * inv3) % ord_];
        }
        if (log_[x] % 3 != 0) throw std::domain_error("not a cube");
        return exp_[log_[x] / 3];
    }

    // ---- distinguished subsets ---------------------------------------------

    // the norm-one subgroup U = {z : z^{q+1} = 1}, ascending by generator power
    std::vector<long long> unit_circle() const {
        std::vector<long long> u;
        u.reserve(q_ + 1);
        for (long long k = 0; k <= q_; ++k) u.push_back(exp_[(k * (q_ - 1)) % ord_]);
        return u;
    }

    std::vector<long long> unit_circle_squares() const {
        std::vector<long long> u;
        u.reserve((q_ + 1) / 2);
        for (long long k = 0; k < (q_ + 1) / 2; ++k) u.push_back(exp_[(2 * k * (q_ - 1)) % ord_]);
        return u;
    }

    // decompose a non-zero square x as x = yz with y in F_q^*, z^{q+1} = 1;
    // the two solutions are (y, z) and (-y, -z)
    std::pair<std::pair<long long, long long>, std::pair<long long, long long>>
    unit_circle_decompose(long long x) const {
        if (x == 0) throw std::domain_error("cannot decompose zero");
        if (eta(x) != QuadClass::Square) throw std::domain_error("cannot decompose a non-square");
        long long n = norm_rel(x);
        long long y = base_.sqrt(n).first;
        long long z = div(x, embed(y));
        return {{y, z}, {base_.neg(y), neg(z)}};
    }

    std::string record() const {
        return base_.record() + " alpha=" + std::to_string(alpha_) +
               " top_generator=" + std::to_string(generator_) + " lambda=" + std::to_string(lambda_);
    }

private:
    FieldCtx base_;
    long long q_, Q_;
    long long alpha_ = 0;
    long long ord_ = 0;
    long long generator_ = 0;
    long long lambda_ = 0;
    std::vector<int32_t> exp_;
    std::vector<int32_t> log_;
    std::vector<int8_t> tr2_;

    void build_tables() {
        ord_ = Q_ - 1;
        auto factors = prime_factors(ord_);
        auto order_is_full = [&](long long x) {
            for (long long r : factors)
                if (pow_formula(x, ord_ / r) == 1) return false;
            return true;
        };
        generator_ = 0;
        for (long long x = 2; x < Q_; ++x) {
            if (order_is_full(x)) {
                generator_ = x;
                break;
            }
        }
        if (generator_ == 0) throw std::logic_error("no tower generator found");

        exp_.assign(ord_, 0);
        log_.assign(Q_, 0);
        long long cur = 1;
        for (long long i = 0; i < ord_; ++i) {
            exp_[i] = static_cast<int32_t>(cur);
            log_[cur] = static_cast<int32_t>(i);
            cur = mul_formula(cur, generator_);
        }
        if (cur != 1) throw std::logic_error("tower generator order mismatch");

        lambda_ = (q_ % 4 == 1) ? exp_[(q_ + 1) / 2] : exp_[(q_ - 1) / 2];

        tr2_.assign(q_, 0);
        for (long long c = 0; c < q_; ++c) tr2_[c] = static_cast<int8_t>(base_.tr_abs(base_.add(c, c)));
    }
};

inline TowerCtx build_tower(const FieldCtx& base, AlphaPolicy policy = AlphaPolicy::SmallestNonSquare,
                            long long explicit_alpha = -1) {
    return TowerCtx(base, policy, explicit_alpha);
}

}  // namespace ffspec
