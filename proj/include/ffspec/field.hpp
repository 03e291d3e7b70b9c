#pragma once

// Table-backed arithmetic for F_{p^m}, p an odd prime. Contexts are built
// deterministically: the modulus is the lexicographically smallest monic
// irreducible (low-degree coefficients compared first) and the generator is
// the smallest element encoding of multiplicative order q-1. Elements are
// encoded as base-p integer encodings of their coefficient vectors; 0 is zero.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffspec {

inline long long default_enum_cap() {
    if (const char* s = std::getenv("FFSPEC_ENUM_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1LL << 24;
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

enum class QuadClass { Zero, Square, NonSquare };

inline int eta_int(QuadClass c) {
    return c == QuadClass::Zero ? 0 : (c == QuadClass::Square ? 1 : -1);
}

struct FieldParams {
    long long p = 0;
    int m = 0;
    long long q = 0;

    bool operator==(const FieldParams& o) const { return p == o.p && m == o.m; }
};

class FieldCtx {
public:
    FieldCtx(long long p, int m, long long cap = default_enum_cap()) {
        if (p < 3 || !is_prime_ll(p)) throw std::invalid_argument("field characteristic must be an odd prime");
        if (m < 1) throw std::invalid_argument("extension degree must be positive");
        long long q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            if (q > cap) throw std::invalid_argument("field size exceeds enumeration cap");
        }
        if (q > cap / q) throw std::invalid_argument("q^2 exceeds enumeration cap");
        params_ = {p, m, q};
        modulus_ = find_modulus();
        build_tables();
    }

    const FieldParams& params() const { return params_; }
    long long p() const { return params_.p; }
    int m() const { return params_.m; }
    long long q() const { return params_.q; }
    const std::vector<int>& modulus() const { return modulus_; }
    long long generator() const { return generator_; }

    bool same_field(const FieldCtx& o) const { return params_ == o.params_; }

    // ---- arithmetic on integer encodings -------------------------------

    long long add(long long a, long long b) const {
        long long r = 0, scale = 1;
        const long long p = params_.p;
        while (a != 0 || b != 0) {
            r += ((a % p) + (b % p)) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }

    long long neg(long long a) const { return neg_[a]; }
    long long sub(long long a, long long b) const { return add(a, neg_[b]); }

    long long mul(long long a, long long b) const {
        if (a == 0 || b == 0) return 0;
        long long e = log_[a] + log_[b];
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    long long inv(long long a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return exp_[(ord_ - log_[a]) % ord_];
    }

    long long div(long long a, long long b) const { return mul(a, inv(b)); }

    long long pow(long long x, long long e) const {
        if (x == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::domain_error("negative power of zero");
        }
        long long em = ((e % ord_) + ord_) % ord_;
        return exp_[(log_[x] * em) % ord_];
    }

    long long scalar(long long k) const { return ((k % params_.p) + params_.p) % params_.p; }
    long long one() const { return 1; }
    long long minus_one() const { return neg_[1]; }

    int log_of(long long x) const {
        if (x == 0) throw std::domain_error("log of zero");
        return log_[x];
    }
    long long exp_of(long long i) const { return exp_[((i % ord_) + ord_) % ord_]; }

    long long frob(long long x) const { return pow(x, params_.p); }

    // absolute trace down to F_p, returned as a value in [0, p)
    long long tr_abs(long long x) const { return trabs_[x]; }

    // ---- quadratic character, square and cube roots --------------------

    QuadClass eta(long long x) const {
        if (x == 0) return QuadClass::Zero;
        return (log_[x] & 1) ? QuadClass::NonSquare : QuadClass::Square;
    }

    int eta_value(long long x) const { return eta_int(eta(x)); }

    // the two square roots {r, -r}; throws on a non-square input
    std::pair<long long, long long> sqrt(long long x) const {
        if (x == 0) return {0, 0};
        if (log_[x] & 1) throw std::domain_error("square root of a non-square");
        long long r = exp_[log_[x] / 2];
        return {r, neg_[r]};
    }

    std::optional<std::pair<long long, long long>> try_sqrt(long long x) const {
        if (x != 0 && (log_[x] & 1)) return std::nullopt;
        return sqrt(x);
    }

    // the full set of cube roots: one element when gcd(3, q-1) = 1, zero or
    // three elements when 3 | q-1
    std::vector<long long> cube_roots(long long x) const {
        if (x == 0) return {0};
        long long L = log_[x];
        if (ord_ % 3 != 0) {
            // cubing is a bijection; invert the exponent
            long long inv3 = 1;
            while ((3 * inv3) % ord_ != 1 % ord_) ++inv3;
            return {exp_[(L * inv3) % ord_]};
        }
        if (L % 3 != 0) return {};
        long long step = ord_ / 3;
        long long r0 = L / 3;
        std::vector<long long> roots = {exp_[r0], exp_[(r0 + step) % ord_], exp_[(r0 + 2 * step) % ord_]};
        return roots;
    }

    bool is_cube(long long x) const {
        if (x == 0) return true;
        return ord_ % 3 != 0 || log_[x] % 3 == 0;
    }

    // ---- digits ---------------------------------------------------------

    int digit(long long x, int i) const {
        for (int k = 0; k < i; ++k) x /= params_.p;
        return static_cast<int>(x % params_.p);
    }

    // ---- canonical text record ------------------------------------------

    std::string record() const {
        std::ostringstream os;
        os << "field p=" << params_.p << " m=" << params_.m << " modulus=";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ',';
            os << modulus_[i];
        }
        os << " generator=" << generator_;
        return os.str();
    }

private:
    using Coeffs = std::vector<int>;  // dense coefficient vector over F_p, ascending

    FieldParams params_;
    std::vector<int> modulus_;  // ascending degree, size m+1, monic
    long long ord_ = 0;         // q - 1
    long long generator_ = 0;
    std::vector<int32_t> exp_;  // size q-1
    std::vector<int32_t> log_;  // size q, log_[0] unused
    std::vector<int32_t> neg_;  // size q
    std::vector<int8_t> trabs_; // size q

    // -- bootstrap polynomial arithmetic over F_p (used before tables exist)

    static void trim(Coeffs& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    Coeffs poly_mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& mod) const {
        const long long p = params_.p;
        Coeffs r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
        }
        // reduce by the monic modulus
        int dm = static_cast<int>(mod.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= dm; --d) {
            int c = r[d];
            if (c == 0) continue;
            r[d] = 0;
            for (int j = 0; j < dm; ++j)
                r[d - dm + j] = static_cast<int>(((r[d - dm + j] - 1LL * c * mod[j]) % p + p) % p);
        }
        trim(r);
        return r;
    }

    Coeffs poly_pow_mod(Coeffs base, long long e, const Coeffs& mod) const {
        Coeffs r = {1};
        while (e > 0) {
            if (e & 1) r = poly_mul_mod(r, base, mod);
            base = poly_mul_mod(base, base, mod);
            e >>= 1;
        }
        return r;
    }

    static Coeffs poly_gcd_fp(Coeffs a, Coeffs b, long long p) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b
            int db = static_cast<int>(b.size()) - 1;
            long long lb = b[db];
            long long ilb = 1;
            while ((lb * ilb) % p != 1) ++ilb;
            Coeffs r = a;
            for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
                long long c = r[d];
                if (c == 0) continue;
                long long f = (c * ilb) % p;
                for (int j = 0; j <= db; ++j)
                    r[d - db + j] = static_cast<int>(((r[d - db + j] - f * b[j]) % p + p) % p);
            }
            trim(r);
            a = b;
            b = r;
        }
        return a;
    }

    bool is_irreducible(const Coeffs& f) const {
        const long long p = params_.p;
        const int m = params_.m;
        if (m == 1) return true;
        Coeffs x = {0, 1};
        // x^{p^m} == x mod f, and gcd(x^{p^{m/r}} - x, f) == 1 for prime r | m
        std::vector<Coeffs> frob_powers(m + 1);
        frob_powers[1] = poly_pow_mod(x, p, f);
        for (int i = 2; i <= m; ++i) frob_powers[i] = poly_pow_mod(frob_powers[i - 1], p, f);
        if (frob_powers[m] != x) return false;
        for (long long r : prime_factors(m)) {
            Coeffs diff = frob_powers[m / r];
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
            trim(diff);
            Coeffs g = poly_gcd_fp(diff, f, p);
            if (static_cast<int>(g.size()) - 1 != 0) return false;
        }
        return true;
    }

    std::vector<int> find_modulus() const {
        const long long p = params_.p;
        const int m = params_.m;
        if (m == 1) return {0, 1};  // the polynomial x
        // lexicographic order: low-degree coefficients compared first
        long long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (long long k = 0; k < count; ++k) {
            Coeffs f(m + 1, 0);
            f[m] = 1;
            long long t = k;
            for (int i = m - 1; i >= 0; --i) {
                f[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (f[0] == 0) continue;  // divisible by x
            if (is_irreducible(f)) return f;
        }
        throw std::logic_error("no irreducible modulus found");
    }

    long long encode(const Coeffs& a) const {
        long long e = 0;
        for (size_t i = a.size(); i-- > 0;) e = e * params_.p + a[i];
        return e;
    }

    Coeffs decode(long long x) const {
        Coeffs a(params_.m, 0);
        for (int i = 0; i < params_.m; ++i) {
            a[i] = static_cast<int>(x % params_.p);
            x /= params_.p;
        }
        trim(a);
        return a;
    }

    void build_tables() {
        const long long p = params_.p;
        const long long q = params_.q;
        ord_ = q - 1;
        Coeffs mod(modulus_.begin(), modulus_.end());

        auto order_is_full = [&](long long e) {
            Coeffs v = decode(e);
            for (long long r : prime_factors(ord_)) {
                if (poly_pow_mod(v, ord_ / r, mod) == Coeffs{1}) return false;
            }
            return true;
        };
        generator_ = 0;
        for (long long e = 2; e < q; ++e) {
            if (order_is_full(e)) {
                generator_ = e;
                break;
            }
        }
        if (generator_ == 0) throw std::logic_error("no generator found");

        exp_.assign(ord_, 0);
        log_.assign(q, 0);
        Coeffs g = decode(generator_);
        Coeffs cur = {1};
        for (long long i = 0; i < ord_; ++i) {
            long long e = encode(cur);
            exp_[i] = static_cast<int32_t>(e);
            log_[e] = static_cast<int32_t>(i);
            cur = poly_mul_mod(cur, g, mod);
        }
        if (encode(cur) != 1) throw std::logic_error("generator order mismatch");

        neg_.assign(q, 0);
        for (long long x = 0; x < q; ++x) {
            long long r = 0, scale = 1, t = x;
            while (t != 0) {
                r += ((p - t % p) % p) * scale;
                t /= p;
                scale *= p;
            }
            neg_[x] = static_cast<int32_t>(r);
        }

        trabs_.assign(q, 0);
        for (long long x = 1; x < q; ++x) {
            long long acc = x, fx = x;
            for (int i = 1; i < params_.m; ++i) {
                fx = pow(fx, p);
                acc = add(acc, fx);
            }
            if (acc >= p) throw std::logic_error("trace not in the prime field");
            trabs_[x] = static_cast<int8_t>(acc);
        }
    }
};

inline FieldCtx build_field(long long p, int m, long long cap = default_enum_cap()) {
    return FieldCtx(p, m, cap);
}

// A context-bound element with checked operators; hot paths use the raw
// encoding interface on FieldCtx instead.
struct Felt {
    const FieldCtx* F = nullptr;
    long long v = 0;

    Felt() = default;
    Felt(const FieldCtx& f, long long val) : F(&f), v(val) {}

    static void check(const Felt& a, const Felt& b) {
        if (!a.F || !b.F || !a.F->same_field(*b.F)) throw std::invalid_argument("field context mismatch");
    }

    friend Felt operator+(const Felt& a, const Felt& b) { check(a, b); return {*a.F, a.F->add(a.v, b.v)}; }
    friend Felt operator-(const Felt& a, const Felt& b) { check(a, b); return {*a.F, a.F->sub(a.v, b.v)}; }
    friend Felt operator*(const Felt& a, const Felt& b) { check(a, b); return {*a.F, a.F->mul(a.v, b.v)}; }
    friend Felt operator/(const Felt& a, const Felt& b) { check(a, b); return {*a.F, a.F->div(a.v, b.v)}; }
    Felt operator-() const { return {*F, F->neg(v)}; }
    Felt pow(long long e) const { return {*F, F->pow(v, e)}; }
    friend bool operator==(const Felt& a, const Felt& b) { return a.F->same_field(*b.F) && a.v == b.v; }
};

// cyclotomic number (i,j) = #((C_i + 1) ∩ C_j), by direct enumeration
inline long long cyclotomic_number(const FieldCtx& F, int i, int j) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw std::invalid_argument("cyclotomic index must be 0 or 1");
    QuadClass ci = i == 0 ? QuadClass::Square : QuadClass::NonSquare;
    QuadClass cj = j == 0 ? QuadClass::Square : QuadClass::NonSquare;
    long long count = 0;
    for (long long x = 1; x < F.q(); ++x) {
        if (F.eta(x) != ci) continue;
        long long y = F.add(x, 1);
        if (y != 0 && F.eta(y) == cj) ++count;
    }
    return count;
}

inline long long cyclotomic_closed_form(long long q, int i, int j) {
    if (q % 4 == 1) return (i == 0 && j == 0) ? (q - 5) / 4 : (q - 1) / 4;
    return (i == 0 && j == 1) ? (q + 1) / 4 : (q - 3) / 4;
}

}  // namespace ffspec
