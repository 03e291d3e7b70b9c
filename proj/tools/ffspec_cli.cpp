// Command-line surface: build field contexts, run the spectrum engines, and
// run the verification suites. Reports are deterministic for fixed flags,
// independent of the parallelism degree; exit status is nonzero exactly when
// some check fails.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ffspec/boomerang.hpp"
#include "ffspec/cyclic_code.hpp"
#include "ffspec/diff_spectrum.hpp"
#include "ffspec/io.hpp"
#include "ffspec/verify.hpp"
#include "ffspec/walsh.hpp"

using namespace ffspec;

namespace {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    return OutputFormat::Records;
}

struct FieldArgs {
    long long p = 3;
    int m = 1;
};

void add_field_options(CLI::App* app, FieldArgs& fa) {
    app->add_option("-p,--characteristic", fa.p, "field characteristic (odd prime)")->required();
    app->add_option("-m,--degree", fa.m, "extension degree of the base field")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of power maps over odd-characteristic field towers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "records";
    app.add_option("--format", format, "output format: records or csv")->capture_default_str();

    // field info
    auto* field = app.add_subcommand("field", "field context commands");
    auto* info = field->add_subcommand("info", "print the canonical context record");
    FieldArgs info_args;
    add_field_options(info, info_args);
    bool with_tower = false;
    std::string expect_record;
    info->add_flag("--tower", with_tower, "include the quadratic extension record");
    info->add_option("--expect", expect_record, "fail unless the record matches this string exactly");

    // spectrum diff/boomerang/walsh
    auto* spectrum = app.add_subcommand("spectrum", "spectrum engines");
    auto* sdiff = spectrum->add_subcommand("diff", "differential spectrum over the quadratic extension");
    FieldArgs diff_args;
    add_field_options(sdiff, diff_args);
    long long exponent = -1;
    std::string mode = "bruteforce";
    sdiff->add_option("--exponent", exponent, "power map exponent (default q+2)");
    sdiff->add_option("--mode", mode, "bruteforce or closed")->capture_default_str();

    auto* sboom = spectrum->add_subcommand("boomerang", "boomerang connectivity row and spectrum");
    FieldArgs boom_args;
    add_field_options(sboom, boom_args);
    std::string boom_mode = "bruteforce";
    sboom->add_option("--mode", boom_mode, "bruteforce or closed")->capture_default_str();

    auto* swalsh = spectrum->add_subcommand("walsh", "Walsh value distribution");
    FieldArgs walsh_args;
    add_field_options(swalsh, walsh_args);
    std::string engine = "transform";
    int jobs = 0;
    swalsh->add_option("--engine", engine, "direct or transform")->capture_default_str();
    swalsh->add_option("--jobs", jobs, "worker count (0 = all cores)");

    // code weights
    auto* code = app.add_subcommand("code", "trace-defined ternary cyclic code");
    auto* weights = code->add_subcommand("weights", "weight distribution");
    int code_m = 1;
    std::string code_engine = "walsh";
    int code_jobs = 0;
    weights->add_option("-m,--degree", code_m, "base degree m (code lives over F_3, length 3^{2m}-1)")->required();
    weights->add_option("--engine", code_engine, "direct or walsh")->capture_default_str();
    weights->add_option("--jobs", code_jobs, "worker count (0 = all cores)");
    bool emit_parity = false;
    weights->add_flag("--parity", emit_parity, "also print the parity-check polynomial coefficients");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    FieldArgs verify_args;
    add_field_options(verify, verify_args);
    std::string suite = "all";
    int verify_jobs = 0;
    verify->add_option("--suite", suite, "diff, boomerang, walsh, code, lemmas or all")->capture_default_str();
    verify->add_option("--jobs", verify_jobs, "worker count (0 = all cores)");

    CLI11_PARSE(app, argc, argv);
    OutputFormat fmt = parse_format(format);

    try {
        if (info->parsed()) {
            FieldCtx F = build_field(info_args.p, info_args.m);
            std::string rec = F.record();
            if (with_tower) {
                TowerCtx T(F);
                rec = T.record();
            }
            std::cout << rec << '\n';
            if (!expect_record.empty() && rec != expect_record) {
                std::cerr << "record mismatch\n";
                return 1;
            }
            return 0;
        }

        if (sdiff->parsed()) {
            FieldCtx F = build_field(diff_args.p, diff_args.m);
            TowerCtx T(F);
            PowerMap f = exponent < 0 ? PowerMap(T) : PowerMap(T, exponent);
            DiffSpectrum s =
                diff_spectrum(f, mode == "closed" ? SpectrumMode::ClosedForm : SpectrumMode::Bruteforce);
            write_pairs(std::cout, s.omega, "omega", fmt);
            return 0;
        }

        if (sboom->parsed()) {
            FieldCtx F = build_field(boom_args.p, boom_args.m);
            TowerCtx T(F);
            PowerMap f(T);
            BoomerangSummary s =
                boomerang_summary(f, boom_mode == "closed" ? SpectrumMode::ClosedForm : SpectrumMode::Bruteforce);
            if (s.coverage == BoomerangCoverage::NotCovered) {
                std::cout << "status not-covered\n";
                return 0;
            }
            std::cout << "beta_f " << s.beta_f << '\n';
            write_pairs(std::cout, s.nu, "nu", fmt);
            return 0;
        }

        if (swalsh->parsed()) {
            FieldCtx F = build_field(walsh_args.p, walsh_args.m);
            TowerCtx T(F);
            PowerMap f(T);
            WalshDistribution d = walsh_distribution(
                f, engine == "direct" ? WalshEngine::Direct : WalshEngine::GroupTransform, jobs);
            if (fmt == OutputFormat::Csv) std::cout << "value,count\n";
            for (auto& [v, c] : d.counts) {
                if (fmt == OutputFormat::Csv)
                    std::cout << csv_quote(v.to_string()) << ',' << c << '\n';
                else
                    std::cout << "walsh " << v.to_string() << ' ' << c << '\n';
            }
            return 0;
        }

        if (weights->parsed()) {
            CodeSpec spec = build_code(code_m);
            if (emit_parity) {
                std::cout << "parity";
                for (long long c : spec.parity.c) std::cout << ' ' << c;
                std::cout << '\n';
            }
            WeightDistribution d = weight_distribution(
                spec, code_engine == "direct" ? WeightEngine::Direct : WeightEngine::ViaWalsh, code_jobs);
            write_pairs(std::cout, d.counts, "weight", fmt);
            return 0;
        }

        if (verify->parsed()) {
            VerifyProfile prof;
            prof.p = verify_args.p;
            prof.m = verify_args.m;
            prof.suite = suite;
            prof.jobs = verify_jobs;
            prof.format = fmt;
            auto recs = run_verify(prof);
            write_checks(std::cout, recs, fmt);
            return all_pass(recs) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
