#pragma once

// Named verification suites over a single field: every closed form, identity
// and bound the library implements, emitted as check records. The CLI maps
// these to `verify --suite ...`; the acceptance driver aggregates them over
// its field lists. Exhaustive where the field is small, deterministically
// sampled otherwise.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boomerang.hpp"
#include "cyclic_code.hpp"
#include "diff_spectrum.hpp"
#include "io.hpp"
#include "poly.hpp"
#include "tower.hpp"
#include "walsh.hpp"

namespace ffspec {

namespace detail {

inline std::string spectrum_string(const DiffSpectrum& s) { return format_pairs(s.omega); }

inline std::mt19937_64 seeded_rng(long long q, long long salt) {
    return std::mt19937_64(0x5fec5ULL * 1000003ULL + static_cast<unsigned long long>(q) * 131 + salt);
}

}  // namespace detail

// ---------------------------------------------------------------- diff suite

inline std::vector<CheckRecord> verify_diff(const TowerCtx& T) {
    std::vector<CheckRecord> out;
    const FieldCtx& F = T.base();
    long long q = T.q();
    PowerMap f(T);
    DiffAnalysis an(f);

    DiffSpectrum brute = an.spectrum();
    DiffSpectrum closed = closed_form_spectrum(f);
    out.push_back(make_check("diff-spectrum", "brute-force spectrum equals the closed form",
                             detail::spectrum_string(closed), detail::spectrum_string(brute), brute == closed));
    out.push_back(make_check("diff-mass", "sum w_i = sum i*w_i = q^2", "true",
                             brute.mass_identities_hold() ? "true" : "false", brute.mass_identities_hold()));

    bool pointwise = true;
    for (long long b = 1; b < T.size() && pointwise; ++b) {
        long long via_formula = delta_formula(T, T.c_of(b), T.d_of(b));
        if (via_formula != an.delta(b)) pointwise = false;
        if (an.delta(b) % 2 != 0 || an.delta(b) > 4) pointwise = false;
    }
    out.push_back(make_check("delta-pointwise",
                             "coordinate formulas match direct counts on every b != 0; values even and <= 4",
                             "agree", pointwise ? "agree" : "disagree", pointwise));

    long long d0 = an.delta(0);
    long long d0_expect = T.p() == 3 ? q : 1;
    out.push_back(make_check("delta-zero", "delta(0) = q at p=3, else 1", std::to_string(d0_expect),
                             std::to_string(d0), d0 == d0_expect));

    if (T.p() > 3) {
        long long d3 = an.delta(T.embed(F.scalar(3)));
        long long d3_expect = (q % 6 == 5) ? 4 : 2;
        out.push_back(make_check("delta-three", "delta(3) = 4 iff q = 5 (mod 6), else 2", std::to_string(d3_expect),
                                 std::to_string(d3), d3 == d3_expect));
    }

    if (T.p() == 3) {
        bool trace_rule = true;
        for (long long b = 1; b < T.size() && trace_rule; ++b) {
            long long tr = T.trace_rel(b);
            long long expect = (tr != 0 && F.eta(tr) == QuadClass::NonSquare) ? 2 : 0;
            if (an.delta(b) != expect) trace_rule = false;
        }
        out.push_back(make_check("delta-trace-rule",
                                 "delta(b) = 2 exactly when the relative trace of b is a non-square", "holds",
                                 trace_rule ? "holds" : "fails", trace_rule));
    }

    if (q % 6 == 5) {
        long long twos = 0;
        for (long long b = 1; b < T.size(); ++b)
            if (an.delta(b) == 2) ++twos;
        out.push_back(make_check("delta-two-count", "exactly q - 1 elements with delta(b) = 2",
                                 std::to_string(q - 1), std::to_string(twos), twos == q - 1));

        // with alpha = -3 the delta(b)=2 set is exactly {2c(3 +/- Z) : c square}
        TowerCtx T3(F, AlphaPolicy::ForceMinus3);
        PowerMap f3(T3);
        DiffAnalysis an3(f3);
        std::set<long long> expected_set, observed_set;
        for (long long c = 1; c < q; ++c) {
            if (F.eta(c) != QuadClass::Square) continue;
            long long c6 = F.mul(F.scalar(6), c), c2 = F.mul(F.scalar(2), c);
            expected_set.insert(T3.code(c6, c2));
            expected_set.insert(T3.code(c6, F.neg(c2)));
        }
        for (long long b = 1; b < T3.size(); ++b)
            if (an3.delta(b) == 2) observed_set.insert(b);
        bool charac = expected_set == observed_set;
        out.push_back(make_check("delta-two-set", "delta(b) = 2 exactly at b = 2c(3 +/- Z), c square, alpha = -3",
                                 std::to_string(expected_set.size()) + " elements",
                                 charac ? "same set" : "different set", charac));
    }

    bool lapn = an.locally_apn();
    bool lapn_expect = (T.p() == 3) || (q % 6 == 1);
    out.push_back(make_check("locally-apn", "max of delta_f(1,b) over b outside the prime field equals 2",
                             lapn_expect ? "true" : "false", lapn ? "true" : "false", lapn == lapn_expect));
    return out;
}

// ----------------------------------------------------------- boomerang suite

inline std::vector<CheckRecord> verify_boomerang(const TowerCtx& T, int jobs = 0) {
    (void)jobs;
    std::vector<CheckRecord> out;
    const FieldCtx& F = T.base();
    long long q = T.q();
    PowerMap f(T);
    BctRow row = bct_row(f);
    DiffAnalysis an(f);

    long long mass = row.total_mass();
    long long expect_mass = 0;
    for (long long v = 0; v < T.size(); ++v) {
        long long d = an.derivative_hist()[v];
        expect_mass += d * d;
    }
    out.push_back(make_check("bct-mass", "total row mass equals the sum of squared derivative counts",
                             std::to_string(expect_mass), std::to_string(mass), mass == expect_mass));

    BoomerangSummary brute = boomerang_summary_bruteforce(f);
    BoomerangSummary closed = boomerang_summary_closed_form(f);
    if (closed.coverage == BoomerangCoverage::Covered) {
        out.push_back(make_check("boomerang-uniformity", "brute-force uniformity equals the closed form",
                                 std::to_string(closed.beta_f), std::to_string(brute.beta_f),
                                 brute.beta_f == closed.beta_f));
        bool nu_ok = true;
        std::ostringstream exp_nu, obs_nu;
        for (auto& [i, v] : closed.nu) {
            long long got = brute.nu.count(i) ? brute.nu.at(i) : 0;
            if (got != v) nu_ok = false;
            exp_nu << "nu_" << i << "=" << v << " ";
            obs_nu << "nu_" << i << "=" << got << " ";
        }
        if (!closed.nu.empty())
            out.push_back(make_check("boomerang-nu", "pinned spectrum entries match", exp_nu.str(), obs_nu.str(),
                                     nu_ok));
    } else {
        CheckStatus st = (T.p() == 5) ? CheckStatus::Observation : CheckStatus::NotCovered;
        out.push_back({"boomerang-uniformity", "no closed form in this regime; value reported only", "-",
                       std::to_string(brute.beta_f), st});
    }

    long long nu_mass = 0;
    for (auto& [i, v] : brute.nu) nu_mass += v;
    out.push_back(make_check("boomerang-nu-mass", "nu table counts sum to q^2 - 1", std::to_string(T.size() - 1),
                             std::to_string(nu_mass), nu_mass == T.size() - 1));

    // split sums against the row: exhaustive up to q = 31, else 200 sampled points
    {
        bool ok = true;
        auto check_point = [&](long long c, long long d) {
            if (c == 0 && d == 0) return;
            if (beta_decompose(T, c, d).sum() != row.beta(T.code(c, d))) ok = false;
        };
        if (q <= 31) {
            for (long long c = 0; c < q; ++c)
                for (long long d = 0; d < q; ++d) check_point(c, d);
        } else {
            auto rng = detail::seeded_rng(q, 7);
            std::uniform_int_distribution<long long> pick(0, q - 1);
            for (int i = 0; i < 200; ++i) check_point(pick(rng), pick(rng));
        }
        out.push_back(make_check("beta-split-sums", "four-way split sums equal the row at every checked index",
                                 "agree", ok ? "agree" : "disagree", ok));
    }

    if (T.p() == 3) {
        bool quintic_ok = true;
        for (long long A = 1; A < q && quintic_ok; ++A) {
            if (F.eta(A) != QuadClass::NonSquare) continue;
            for (long long B = 1; B < q && quintic_ok; ++B) {
                if (F.eta(B) != QuadClass::Square) continue;
                long long n = quintic_root_count_char3(F, A, B);
                if (n != 0 && n != 1 && n != 2 && n != 5) quintic_ok = false;
            }
        }
        out.push_back(make_check("quintic-root-counts", "characteristic-3 quintic root counts lie in {0,1,2,5}",
                                 "{0,1,2,5}", quintic_ok ? "within" : "outside", quintic_ok));

        auto w1 = witness_search(f, BoomerangWitness::Nu1);
        out.push_back(make_check("witness-nu1", "some b with beta(b) = 1 exists; base-line split q/q+2 holds",
                                 "found", w1.found && w1.classification_ok ? "found" : "missing",
                                 w1.found && w1.classification_ok));
        if (q >= 9) {
            auto w2 = witness_search(f, BoomerangWitness::Nu2);
            out.push_back(make_check("witness-nu2", "some b with beta(b) = 2 exists", "found",
                                     w2.found ? "found" : "missing", w2.found));
        }
        if (q >= 27) {
            auto w5 = witness_search(f, BoomerangWitness::Nu5);
            out.push_back(make_check("witness-nu5", "some b with beta(b) = 5 exists", "found",
                                     w5.found ? "found" : "missing", w5.found));
        }
    }

    if (T.p() > 3 && q % 6 == 1) {
        bool split_ok = true;
        for (long long c = 1; c < q && split_ok; ++c) {
            long long v = row.beta(T.embed(F.mul(F.scalar(2), c)));
            long long t = F.add(F.mul(c, c), 1);
            if (t == 0) {
                if (v != 0 && v != 1 && v != 2) split_ok = false;
            } else if (F.eta(t) == QuadClass::NonSquare) {
                if (v != 3) split_ok = false;
            } else {
                if (v != 0 && v != 3) split_ok = false;
            }
        }
        out.push_back(make_check("beta-base-line-split", "beta(2c) lies in {3} / {0,3} / {0,1,2} by eta(c^2+1)",
                                 "holds", split_ok ? "holds" : "fails", split_ok));
    }

    if (T.p() == 5 && q % 6 == 1) {
        bool split_ok = true;
        for (long long d = 1; d < q && split_ok; ++d) {
            long long v = row.beta(T.code(0, F.mul(F.scalar(2), d)));
            long long t = F.add(F.mul(T.alpha(), F.mul(d, d)), F.scalar(2));
            if (F.eta(t) == QuadClass::Square) {
                if (v != 3) split_ok = false;
            } else {
                if (v != 0 && v != 3) split_ok = false;
            }
        }
        out.push_back(make_check("beta-z-line-split", "beta(2dZ) lies in {3} / {0,3} by eta(d^2 alpha + 2)", "holds",
                                 split_ok ? "holds" : "fails", split_ok));
    }

    if (T.p() > 3 && q <= 49) {
        bool none = true;
        for (long long b = 0; b < q && none; ++b) {
            for (long long c = 1; c < q && none; ++c) {
                if (F.sub(F.mul(b, b), F.mul(F.scalar(4), c)) == 0) continue;
                PolyFq sextic(F, {c, 0, 0, b, 0, 0, 1});
                if (auto r = poly_kth_root(sextic, 2)) none = false;
            }
        }
        out.push_back(make_check("sextic-square-criterion",
                                 "x^6 + bx^3 + c with c != 0 is a square only when b^2 = 4c", "no counterexample",
                                 none ? "no counterexample" : "counterexample", none));
    }

    return out;
}

// ---------------------------------------------------------------- walsh suite

inline std::vector<CheckRecord> verify_walsh(const TowerCtx& T, int jobs = 0) {
    std::vector<CheckRecord> out;
    long long q = T.q();
    PowerMap f(T);

    WalshDistribution dist = walsh_distribution(f, WalshEngine::GroupTransform, jobs);
    out.push_back(make_check("walsh-total", "distribution covers q^2 (q^2 - 1) pairs",
                             std::to_string(T.size() * (T.size() - 1)), std::to_string(dist.total()),
                             dist.total() == T.size() * (T.size() - 1)));

    if (T.p() == 3) {
        WalshDistribution closed = closed_form_walsh_distribution(T);
        std::ostringstream exp_s, obs_s;
        for (auto& [v, c] : closed.counts) exp_s << v.to_string() << ':' << c << ' ';
        for (auto& [v, c] : dist.counts) obs_s << v.to_string() << ':' << c << ' ';
        out.push_back(make_check("walsh-distribution", "transform distribution equals the four-value closed form",
                                 exp_s.str(), obs_s.str(), dist == closed));
        bool valset = true;
        for (auto& [v, c] : dist.counts) {
            if (!v.is_rational()) valset = false;
            else {
                long long x = v.rational_value();
                if (x != -q && x != 0 && x != q && x != 2 * q) valset = false;
            }
        }
        out.push_back(make_check("walsh-value-set", "every value lies in {-q, 0, q, 2q}", "subset",
                                 valset ? "subset" : "outside", valset));
    } else {
        out.push_back({"walsh-distribution", "no closed form at this characteristic; distinct values reported", "-",
                       std::to_string(dist.counts.size()) + " distinct values", CheckStatus::Observation});
    }

    // engines agree: full for q <= 9, else 1000 sampled pairs
    {
        bool agree = true;
        if (q <= 9) {
            WalshDistribution direct = walsh_distribution(f, WalshEngine::Direct, jobs);
            agree = direct == dist;
        } else {
            WalshColumnEngine eng(f);
            auto rng = detail::seeded_rng(q, 13);
            std::uniform_int_distribution<long long> pa(0, T.size() - 1), pb(1, T.size() - 1);
            long long cached_b = -1;
            std::vector<long long> buf;
            for (int i = 0; i < 1000; ++i) {
                long long a = pa(rng), b = pb(rng);
                if (b != cached_b) {
                    buf = eng.column(b);
                    cached_b = b;
                }
                if (!(eng.value_of(buf, a) == walsh_at(f, a, b))) {
                    agree = false;
                    break;
                }
            }
        }
        out.push_back(make_check("walsh-engines", "direct and transform engines agree", "agree",
                                 agree ? "agree" : "disagree", agree));
    }

    MomentReport mom = moment_checks(f, jobs);
    out.push_back(make_check("walsh-sum", "sum of all values equals q^4 - q^2", "holds",
                             mom.sum_ok ? "holds" : "fails", mom.sum_ok));
    out.push_back(make_check("walsh-parseval", "per-column squared-modulus sums equal q^4", "holds",
                             mom.parseval_ok ? "holds" : "fails", mom.parseval_ok));
    if (T.p() == 3) {
        long long expect = q * q * (q * q - 1) * (q * q * q - 3 * q * q + 2);
        out.push_back(make_check("walsh-cube-moment", "sum of (W - 1)^3 over all pairs", std::to_string(expect),
                                 std::to_string(mom.cube_value), mom.cube_ok));

        bool lambda_ok = true;
        if (q <= 9) {
            for (long long a = 0; a < T.size() && lambda_ok; ++a)
                for (long long b = 1; b < T.size() && lambda_ok; ++b)
                    if (!lambda_cubic_identity(f, a, b).identity_ok) lambda_ok = false;
        } else {
            auto rng = detail::seeded_rng(q, 17);
            std::uniform_int_distribution<long long> pa(0, T.size() - 1), pb(1, T.size() - 1);
            for (int i = 0; i < 1000 && lambda_ok; ++i)
                if (!lambda_cubic_identity(f, pa(rng), pb(rng)).identity_ok) lambda_ok = false;
        }
        out.push_back(make_check("walsh-lambda-identity", "W(a,b) = -q + q * (restricted cubic solution count)",
                                 "holds", lambda_ok ? "holds" : "fails", lambda_ok));
    } else {
        // conjugate-orbit form of the trivial pointwise bound, exact in integers
        bool bound_ok = true;
        auto rng = detail::seeded_rng(q, 19);
        std::uniform_int_distribution<long long> pa(0, T.size() - 1), pb(1, T.size() - 1);
        long long p = T.p();
        for (int i = 0; i < 50 && bound_ok; ++i) {
            CycInt w = walsh_at(f, pa(rng), pb(rng));
            if (w.norm_squared().galois_trace() > (p - 1) * T.size() * T.size()) bound_ok = false;
        }
        out.push_back(make_check("walsh-modulus-bound",
                                 "Galois trace of |W|^2 at most (p-1) q^4 on sampled pairs", "holds",
                                 bound_ok ? "holds" : "fails", bound_ok));
    }
    return out;
}

// ----------------------------------------------------------------- code suite

inline std::vector<CheckRecord> verify_code(int m, int jobs = 0) {
    std::vector<CheckRecord> out;
    CodeSpec code(m);
    long long q = code.tower.q();

    WeightDistribution wd = weight_distribution(code, WeightEngine::ViaWalsh, jobs);
    long long min_w = 0;
    for (auto& [w, c] : wd.counts)
        if (w > 0) {
            min_w = w;
            break;
        }
    std::ostringstream params_exp, params_obs;
    params_exp << '[' << (q * q - 1) << ',' << 4 * m << ',' << 2 * q * (q - 2) / 3 << ']';
    params_obs << '[' << code.n << ',' << code.k << ',' << min_w << ']';
    bool params_ok = code.n == q * q - 1 && code.k == 4 * m && min_w == 2 * q * (q - 2) / 3;
    out.push_back(make_check("code-parameters", "[n, k, d] match the trace construction", params_exp.str(),
                             params_obs.str(), params_ok));

    WeightDistribution closed = closed_form_weight_distribution(q);
    out.push_back(make_check("code-weights", "weight distribution equals the closed form",
                             format_pairs(closed.counts), format_pairs(wd.counts), wd.counts == closed.counts));

    long long expect_total = 1;
    for (int i = 0; i < 4 * m; ++i) expect_total *= 3;
    out.push_back(make_check("code-size", "weight counts sum to 3^{4m}", std::to_string(expect_total),
                             std::to_string(wd.total()), wd.total() == expect_total));

    // engine agreement: exhaustive for q <= 9, sampled at larger q
    bool engines_ok = true;
    if (q <= 9) {
        WeightDistribution direct = weight_distribution(code, WeightEngine::Direct, jobs);
        engines_ok = direct.counts == wd.counts;
    }
    {
        auto rng = detail::seeded_rng(q, 23);
        std::uniform_int_distribution<long long> pick(0, code.tower.size() - 1);
        for (int i = 0; i < 100 && engines_ok; ++i) {
            long long a = pick(rng), b = pick(rng);
            if (codeword_weight(code, a, b, WeightEngine::Direct) !=
                codeword_weight(code, a, b, WeightEngine::ViaWalsh))
                engines_ok = false;
        }
    }
    out.push_back(make_check("code-engines", "direct and Walsh-side weights agree", "agree",
                             engines_ok ? "agree" : "disagree", engines_ok));

    bool shift_ok = true;
    {
        auto rng = detail::seeded_rng(q, 29);
        std::uniform_int_distribution<long long> pick(0, code.tower.size() - 1);
        for (int i = 0; i < 100 && shift_ok; ++i) {
            auto w = codeword(code, pick(rng), pick(rng));
            if (!is_codeword(code, w) || !is_codeword(code, cyclic_shift(w))) shift_ok = false;
        }
    }
    out.push_back(make_check("code-shift-closure", "cyclic shifts of random codewords remain codewords", "closed",
                             shift_ok ? "closed" : "violated", shift_ok));
    return out;
}

// --------------------------------------------------------------- lemmas suite

inline std::vector<CheckRecord> verify_lemmas(const FieldCtx& F) {
    std::vector<CheckRecord> out;
    long long q = F.q();

    {
        bool ok = true;
        std::ostringstream exp_s, obs_s;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                long long brute = cyclotomic_number(F, i, j);
                long long closed = cyclotomic_closed_form(q, i, j);
                if (brute != closed) ok = false;
                exp_s << '(' << i << ',' << j << ")=" << closed << ' ';
                obs_s << '(' << i << ',' << j << ")=" << brute << ' ';
            }
        out.push_back(make_check("cyclotomic-numbers", "enumerated (i,j) counts match the closed forms", exp_s.str(),
                                 obs_s.str(), ok));
    }

    {
        bool ok = true;
        auto defined = [&](long long a, long long b) {
            if (F.p() == 3) return a != 0;
            return F.sub(F.neg(F.mul(F.scalar(4), F.pow(a, 3))), F.mul(F.scalar(27), F.mul(b, b))) != 0;
        };
        auto check_one = [&](long long a, long long b) {
            if (defined(a, b) && cubic_classify(F, a, b) != cubic_type_by_roots(F, a, b)) ok = false;
        };
        if (q <= 27) {
            for (long long a = 0; a < q && ok; ++a)
                for (long long b = 0; b < q && ok; ++b) check_one(a, b);
        } else {
            auto rng = detail::seeded_rng(q, 3);
            std::uniform_int_distribution<long long> pick(0, q - 1);
            for (int i = 0; i < 200 && ok; ++i) check_one(pick(rng), pick(rng));
        }
        out.push_back(make_check("cubic-classify", "criterion agrees with factorization on all tested cubics",
                                 "agree", ok ? "agree" : "disagree", ok));
    }

    {
        bool ok = true;
        if (q <= 27) {
            for (long long a = 0; a < q && ok; ++a)
                for (long long b = 0; b < q && ok; ++b) {
                    PolyFq f(F, {b, a, 0, 1});
                    PolyFq fp = poly_derivative(f);
                    if (fp.is_zero()) continue;
                    if (discriminant(f) == 0) continue;
                    if (!stickelberger_check(f).parity_ok) ok = false;
                }
        }
        if (q <= 9) {
            for (long long a = 0; a < q && ok; ++a)
                for (long long b = 0; b < q && ok; ++b)
                    for (long long c = 0; c < q && ok; ++c) {
                        PolyFq f(F, {c, b, a, 0, 1});
                        if (poly_derivative(f).is_zero() || discriminant(f) == 0) continue;
                        if (!stickelberger_check(f).parity_ok) ok = false;
                    }
        }
        auto rng = detail::seeded_rng(q, 31);
        std::uniform_int_distribution<long long> pick(0, q - 1);
        int samples = q <= 81 ? 10000 : 1000;
        for (int i = 0; i < samples && ok; ++i) {
            PolyFq f(F, {pick(rng), pick(rng), pick(rng), pick(rng), pick(rng), 1});
            if (discriminant(f) == 0) continue;
            if (!stickelberger_check(f).parity_ok) ok = false;
        }
        out.push_back(make_check("discriminant-parity",
                                 "eta(D(f)) = (-1)^{deg f - k} on every squarefree polynomial tested", "holds",
                                 ok ? "holds" : "fails", ok));
    }

    {
        bool ok = true;
        if (q <= 9) {
            for (long long a2 = 1; a2 < q && ok; ++a2)
                for (long long a1 = 0; a1 < q && ok; ++a1)
                    for (long long a0 = 0; a0 < q && ok; ++a0)
                        if (!char_sum_identities(F, a2, a1, a0).ok) ok = false;
        } else {
            auto rng = detail::seeded_rng(q, 37);
            std::uniform_int_distribution<long long> pick(0, q - 1), pick1(1, q - 1);
            for (int i = 0; i < 200 && ok; ++i)
                if (!char_sum_identities(F, pick1(rng), pick(rng), pick(rng)).ok) ok = false;
        }
        out.push_back(make_check("quadratic-char-sums", "direct sums equal the closed forms on every tested quadratic",
                                 "equal", ok ? "equal" : "unequal", ok));

        CycInt g = gauss_sum(F);
        bool norm_ok = g.norm_squared() == CycInt::integer(static_cast<int>(F.p()), q);
        out.push_back(make_check("gauss-sum-norm", "|G(eta, psi_1)|^2 = q", std::to_string(q),
                                 g.norm_squared().to_string(), norm_ok));
    }

    {
        bool ok = true;
        // x^3 - x with the quadratic character, plus x and x^2 - 1
        ok = ok && weil_bound_check(F, PolyFq(F, {0, F.minus_one(), 0, 1}), 2).ok;
        ok = ok && weil_bound_check(F, PolyFq(F, {0, 1}), 2).ok;
        ok = ok && weil_bound_check(F, PolyFq(F, {F.minus_one(), 0, 1}), 2).ok;
        auto rng = detail::seeded_rng(q, 41);
        std::uniform_int_distribution<long long> pick(0, q - 1);
        for (int i = 0; i < 100 && ok; ++i) {
            PolyFq f(F, {pick(rng), pick(rng), pick(rng), 1});
            if (f.deg() % 2 == 0 && poly_kth_root(f, 2)) continue;
            ok = ok && weil_bound_check(F, f, 2).ok;
        }
        if ((q - 1) % 3 == 0) {
            ok = ok && weil_bound_check(F, PolyFq(F, {F.minus_one(), 0, 1}), 3).ok;
            ok = ok && weil_bound_check(F, PolyFq(F, {0, F.minus_one(), 0, 1}), 3).ok;
        }
        if ((q - 1) % 4 == 0) ok = ok && weil_bound_check(F, PolyFq(F, {F.minus_one(), 0, 1}), 4).ok;
        if ((q - 1) % 6 == 0) ok = ok && weil_bound_check(F, PolyFq(F, {F.minus_one(), 0, 1}), 6).ok;
        out.push_back(
            make_check("weil-bound", "|S|^2 <= (d-1)^2 q for every tested character sum", "holds",
                       ok ? "holds" : "fails", ok));
    }

    if (F.p() == 3) {
        auto cs = consecutive_squares_bound(F);
        out.push_back(make_check("square-run-bound", "8c - q - 9 <= 0 or (8c - q - 9)^2 <= 4q",
                                 "bounded", cs.bound_ok ? "bounded (count " + std::to_string(cs.count) + ")" : "exceeded",
                                 cs.bound_ok));
        bool tp_ok = true;
        std::ostringstream tp_obs;
        for (int i = 0; i < 3; ++i) {
            auto tb = trace_pair_bound(F, i);
            tp_ok = tp_ok && tb.bound_ok;
            tp_obs << "i=" << i << ":" << tb.count << ' ';
        }
        out.push_back(make_check("trace-pair-bound", "q - 9c <= 0 or (q - 9c)^2 <= 36q for each residue", "bounded",
                                 tp_ok ? "bounded (" + tp_obs.str() + ")" : "exceeded", tp_ok));
        if (q >= 81) {
            bool w_ok = true;
            for (int i = 0; i < 3; ++i)
                if (!nonsquare_cube_witness(F, i)) w_ok = false;
            out.push_back(make_check("cube-difference-witnesses",
                                     "a non-square x with x^3 - x = b^2 and Tr(b) = i exists for every residue",
                                     "found", w_ok ? "found" : "missing", w_ok));
        }
    }

    // tower consistency: pair formulas against the top tables
    if (F.q() * F.q() <= default_enum_cap()) {
        TowerCtx T(F);
        bool ok = true;
        ok = ok && T.frob(T.zeta()) == T.neg(T.zeta());
        if (q % 4 == 3) ok = ok && T.pow(T.lambda(), q + 1) == T.minus_one();
        if (q % 4 == 1) ok = ok && T.frob(T.lambda()) == T.neg(T.lambda());
        for (long long x = 0; x < T.size() && ok; ++x) {
            if ((T.frob(x) == x) != (T.d_of(x) == 0)) ok = false;
        }
        auto rng = detail::seeded_rng(q, 43);
        std::uniform_int_distribution<long long> pick(0, T.size() - 1);
        int samples = T.size() <= 729 ? 0 : 2000;
        if (samples == 0) {
            for (long long x = 0; x < T.size() && ok; ++x)
                for (long long y = 0; y < T.size() && ok; ++y)
                    if (T.mul(x, y) != T.mul_formula(x, y)) ok = false;
        } else {
            for (int i = 0; i < samples && ok; ++i) {
                long long x = pick(rng), y = pick(rng);
                if (T.mul(x, y) != T.mul_formula(x, y)) ok = false;
            }
        }
        for (long long x = 0; x < T.size() && ok; ++x) {
            long long n1 = T.norm_rel(x);
            long long n2 = x == 0 ? 0 : T.pow(x, q + 1);
            if (n1 != n2) ok = false;
            long long t1 = T.trace_rel(x);
            long long t2 = T.add(x, T.frob(x));
            if (T.embed(t1) != t2) ok = false;
        }
        out.push_back(make_check("tower-consistency",
                                 "table and pair-formula arithmetic agree; trace/norm match their definitions",
                                 "agree", ok ? "agree" : "disagree", ok));

        bool ucd_ok = true;
        long long limit = std::min<long long>(T.size(), 27 * 27 + 1);
        for (long long x = 1; x < limit && ucd_ok; ++x) {
            if (T.eta(x) != QuadClass::Square) continue;
            auto [p1, p2] = T.unit_circle_decompose(x);
            for (auto& pr : {p1, p2}) {
                if (T.mul(T.embed(pr.first), pr.second) != x) ucd_ok = false;
                if (T.pow(pr.second, q + 1) != 1) ucd_ok = false;
            }
        }
        out.push_back(make_check("unit-circle-decompose", "square elements split as y*z with y in the base line",
                                 "valid", ucd_ok ? "valid" : "invalid", ucd_ok));
    }

    return out;
}

// ------------------------------------------------------------------- dispatch

struct VerifyProfile {
    long long p = 3;
    int m = 1;
    std::string suite = "all";
    int jobs = 0;
    OutputFormat format = OutputFormat::Records;
};

inline std::vector<CheckRecord> run_verify(const VerifyProfile& prof) {
    FieldCtx F = build_field(prof.p, prof.m);
    std::vector<CheckRecord> out;
    bool all = prof.suite == "all";
    auto want = [&](const char* s) { return all || prof.suite == s; };
    if (want("lemmas")) {
        auto r = verify_lemmas(F);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (want("diff") || want("boomerang") || want("walsh")) {
        TowerCtx T(F);
        if (want("diff")) {
            auto r = verify_diff(T);
            out.insert(out.end(), r.begin(), r.end());
        }
        if (want("boomerang")) {
            auto r = verify_boomerang(T, prof.jobs);
            out.insert(out.end(), r.begin(), r.end());
        }
        if (want("walsh")) {
            auto r = verify_walsh(T, prof.jobs);
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    if (want("code")) {
        if (prof.p == 3) {
            auto r = verify_code(prof.m, prof.jobs);
            out.insert(out.end(), r.begin(), r.end());
        } else if (!all) {
            out.push_back({"code", "the trace code construction is defined at characteristic 3 only", "-", "-",
                           CheckStatus::NotCovered});
        }
    }
    return out;
}

}  // namespace ffspec
