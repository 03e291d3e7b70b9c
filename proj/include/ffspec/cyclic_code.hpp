#pragma once

// The ternary cyclic code of length q^2 - 1 cut out by the parity-check
// polynomial p1(x) p2(x), the minimal polynomials over F_3 of the inverses of
// the tower generator and of its (q+2)-nd power. Codewords are trace vectors
// c_{a,b}[i] = Tr(a g^{i(q+2)} + b g^i); weights come either from direct
// evaluation or from the Walsh transform identity w = 2q^2/3 - (2/3) W(-b, a).

#include <map>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "poly.hpp"
#include "tower.hpp"
#include "walsh.hpp"

namespace ffspec {

// minimal polynomial of a tower element over F_3 via its Frobenius orbit
inline PolyFq minimal_polynomial(const TowerCtx& T, long long e, const FieldCtx& F3) {
    if (T.p() != 3 || F3.q() != 3) throw std::invalid_argument("requires characteristic 3");
    std::vector<long long> orbit;
    long long cur = e;
    do {
        orbit.push_back(cur);
        cur = T.pow(cur, 3);
    } while (cur != e);
    // product of (x - o) with tower coefficients
    std::vector<long long> poly = {1};
    for (long long o : orbit) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = T.add(next[i + 1], poly[i]);
            next[i] = T.add(next[i], T.mul(T.neg(o), poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<long long> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] >= 3) throw std::logic_error("minimal polynomial coefficient outside F_3");
        out[i] = poly[i];
    }
    return PolyFq(F3, std::move(out));
}

struct CodeSpec {
    int m = 0;
    long long n = 0;  // q^2 - 1
    long long k = 0;  // 4m
    long long min_weight = 0;
    TowerCtx tower;
    FieldCtx f3;
    PolyFq parity1, parity2, parity;  // p1, p2 and their product

    explicit CodeSpec(int m_)
        : m(m_), tower(build_field(3, m_), AlphaPolicy::SmallestNonSquare), f3(build_field(3, 1)) {
        long long q = tower.q();
        n = q * q - 1;
        k = 4LL * m;
        min_weight = 2 * q * (q - 2) / 3;
        long long g = tower.generator();
        parity1 = minimal_polynomial(tower, tower.inv(g), f3);
        parity2 = minimal_polynomial(tower, tower.inv(tower.pow(g, q + 2)), f3);
        parity = poly_mul(parity1, parity2);
        if (parity1.deg() != 2 * m || parity2.deg() != 2 * m)
            throw std::logic_error("parity-check factors have unexpected degree");
        if (gcd_ll(n, q + 2) != 1) throw std::logic_error("gcd(q^2 - 1, q + 2) != 1");
    }

    static long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }
};

inline CodeSpec build_code(int m) { return CodeSpec(m); }

enum class WeightEngine { Direct, ViaWalsh };

inline std::vector<int> codeword(const CodeSpec& code, long long a, long long b) {
    const TowerCtx& T = code.tower;
    long long q = T.q();
    std::vector<int> word(code.n);
    for (long long i = 0; i < code.n; ++i) {
        long long gi = T.exp_of(i);
        long long gie = T.exp_of(i * (q + 2));
        word[i] = static_cast<int>(T.tr_abs(T.add(T.mul(a, gie), T.mul(b, gi))));
    }
    return word;
}

inline long long codeword_weight(const CodeSpec& code, long long a, long long b, WeightEngine engine) {
    const TowerCtx& T = code.tower;
    long long q = T.q();
    if (engine == WeightEngine::Direct) {
        long long w = 0;
        for (long long i = 0; i < code.n; ++i) {
            long long gi = T.exp_of(i);
            long long gie = T.exp_of(i * (q + 2));
            if (T.tr_abs(T.add(T.mul(a, gie), T.mul(b, gi))) != 0) ++w;
        }
        return w;
    }
    PowerMap f(T);
    CycInt w = walsh_at(f, T.neg(b), a);
    long long wv = w.rational_value();
    return (2 * q * q - 2 * wv) / 3;
}

struct WeightDistribution {
    std::map<long long, long long> counts;

    long long total() const {
        long long s = 0;
        for (auto& [w, c] : counts) s += c;
        return s;
    }
};

inline WeightDistribution weight_distribution(const CodeSpec& code, WeightEngine engine, int jobs = 0) {
    const TowerCtx& T = code.tower;
    long long Q = T.size();
    WeightDistribution dist;
    if (engine == WeightEngine::Direct) {
        auto partials = parallel_map_chunks<std::map<long long, long long>>(
            Q, jobs, [&](long long lo, long long hi, std::map<long long, long long>& acc) {
                for (long long a = lo; a < hi; ++a)
                    for (long long b = 0; b < Q; ++b) ++acc[codeword_weight(code, a, b, WeightEngine::Direct)];
            });
        for (auto& part : partials)
            for (auto& [w, c] : part) dist.counts[w] += c;
        return dist;
    }
    // codewords with a = 0 contribute weight 0 once and 2q^2/3 for b != 0;
    // the rest aggregate the Walsh distribution through the weight identity
    long long q = T.q();
    dist.counts[0] += 1;
    dist.counts[2 * q * q / 3] += Q - 1;
    PowerMap f(T);
    WalshDistribution wd = walsh_distribution(f, WalshEngine::GroupTransform, jobs);
    for (auto& [w, c] : wd.counts) dist.counts[(2 * q * q - 2 * w.rational_value()) / 3] += c;
    return dist;
}

// Table-3 weight distribution from the closed-form Walsh counts
inline WeightDistribution closed_form_weight_distribution(long long q) {
    long long base = q * q * q * q - q * q * q - q * q + q;
    WeightDistribution d;
    d.counts[0] = 1;
    d.counts[2 * q * (q - 2) / 3] = base / 6;
    d.counts[2 * q * (q - 1) / 3] = q * q * q - q;
    d.counts[2 * q * q / 3] = (q * q * q * q - q * q * q + q * q + q) / 2 - 1;
    d.counts[2 * q * (q + 1) / 3] = base / 3;
    return d;
}

// membership via the parity-check polynomial: c(x) p(x) = 0 mod (x^n - 1)
inline bool is_codeword(const CodeSpec& code, const std::vector<int>& word) {
    const FieldCtx& F3 = code.f3;
    long long n = code.n;
    std::vector<long long> prod(n, 0);
    for (long long i = 0; i < n; ++i) {
        if (word[i] == 0) continue;
        for (int j = 0; j <= code.parity.deg(); ++j) {
            if (code.parity.c[j] == 0) continue;
            long long k = (i + j) % n;
            prod[k] = F3.add(prod[k], F3.mul(word[i], code.parity.c[j]));
        }
    }
    for (long long v : prod)
        if (v != 0) return false;
    return true;
}

inline std::vector<int> cyclic_shift(const std::vector<int>& word) {
    std::vector<int> out(word.size());
    for (size_t i = 0; i < word.size(); ++i) out[(i + 1) % word.size()] = word[i];
    return out;
}

}  // namespace ffspec
