#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "fibroot/recurrence.hpp"
#include "fibroot/report_io.hpp"
#include "fibroot/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCantWrite = 74;

struct Options {
    std::string k_spec;
    long bits = 128;
    double target_radius = 1e-40;
    int max_escalations = 6;
    std::string out_path;
    std::string format;
    int parallel = 0;
    long n = 0;
};

struct KRange {
    int lo, hi;
};

std::optional<KRange> parse_k_spec(const std::string& spec) {
    static const std::regex form(R"(^(\d+)(?:\.\.(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(spec, m, form)) return std::nullopt;
    try {
        int lo = std::stoi(m[1].str());
        int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
        return KRange{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

fibroot::PrecisionConfig make_precision(const Options& opt) {
    fibroot::PrecisionConfig prec;
    prec.working_bits = opt.bits;
    prec.target_radius = opt.target_radius;
    prec.max_escalations = opt.max_escalations;
    prec.validate();
    return prec;
}

// Writes to opt.out_path when set (exit 74 on failure), stdout otherwise.
int emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return kExitPass;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << opt.out_path
                  << "' for writing\n";
        return kExitCantWrite;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::cerr << "error: short write to '" << opt.out_path << "'\n";
        return kExitCantWrite;
    }
    return kExitPass;
}

fibroot::OutputFormat resolve_format(const Options& opt,
                                     fibroot::OutputFormat fallback) {
    if (opt.format.empty()) return fallback;
    auto f = fibroot::format_from_name(opt.format);
    return f ? *f : fallback;
}

int cmd_verify(const Options& opt) {
    auto range = parse_k_spec(opt.k_spec);
    if (!range || range->lo < 2 || range->lo > range->hi) {
        std::cerr << "error: --k expects N or A..B with 2 <= A <= B\n";
        return kExitUsage;
    }
    fibroot::PrecisionConfig prec = make_precision(opt);
    fibroot::Report report = fibroot::verify_range(range->lo, range->hi, prec,
                                                   opt.parallel);
    fibroot::OutputFormat fmt = resolve_format(
        opt, opt.out_path.empty() ? fibroot::OutputFormat::human
                                  : fibroot::OutputFormat::json);
    int rc = emit(opt, fibroot::serialize_report(report, fmt));
    if (rc != kExitPass) return rc;
    if (!opt.out_path.empty())
        std::cerr << "wrote report to " << opt.out_path << " (verdict "
                  << fibroot::status_name(report.verdict) << ")\n";
    switch (report.verdict) {
        case fibroot::Status::Fail:
            return kExitFail;
        case fibroot::Status::Unresolved:
            return kExitUnresolved;
        default:
            return kExitPass;
    }
}

int cmd_roots(const Options& opt) {
    auto range = parse_k_spec(opt.k_spec);
    if (!range || range->lo != range->hi) {
        std::cerr << "error: roots expects a single --k value\n";
        return kExitUsage;
    }
    fibroot::FamilyIndex k(range->lo);
    fibroot::PrecisionConfig prec = make_precision(opt);
    fibroot::RootSet rs = fibroot::solve_all(k, prec);
    if (!rs.certified) {
        std::cerr << "error: certification failed at "
                  << rs.precision_used.working_bits << " bits ("
                  << rs.failure << ")\n";
        return kExitUnresolved;
    }
    fibroot::OutputFormat fmt =
        resolve_format(opt, fibroot::OutputFormat::human);
    return emit(opt, fibroot::serialize_roots(rs, fmt));
}

int cmd_disc(const Options& opt) {
    auto range = parse_k_spec(opt.k_spec);
    if (!range || range->lo != range->hi) {
        std::cerr << "error: disc expects a single --k value\n";
        return kExitUsage;
    }
    fibroot::FamilyIndex k(range->lo);
    fibroot::BigInt closed = fibroot::discriminant_closed_form(k);
    std::string payload = "disc_g=" + closed.get_str() + "\n";
    bool mismatch = false;
    if (k.k <= fibroot::kResultantOracleCap) {
        fibroot::BigInt oracle = fibroot::discriminant_resultant_oracle(k);
        payload += "oracle=" + oracle.get_str() + "\n";
        mismatch = closed != oracle;
    }
    payload += "disc_f=" + fibroot::disc_f_from_disc_g(k).get_str() + "\n";
    int rc = emit(opt, payload);
    if (rc != kExitPass) return rc;
    if (mismatch) {
        std::cerr << "error: closed form and exact resultant disagree\n";
        return kExitFail;
    }
    return kExitPass;
}

int cmd_fib(const Options& opt) {
    auto range = parse_k_spec(opt.k_spec);
    if (!range || range->lo != range->hi) {
        std::cerr << "error: fib expects a single --k value\n";
        return kExitUsage;
    }
    fibroot::FamilyIndex k(range->lo);
    return emit(opt, fibroot::kfib(k, opt.n).get_str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "certified roots, discriminants, and bound verification for the "
        "k-step Fibonacci polynomial family"};
    app.require_subcommand(1);
    Options opt;

    auto add_precision_flags = [&](CLI::App* sub) {
        sub->add_option("--bits", opt.bits,
                        "working precision in bits (>= 53)")
            ->envname("FIBROOT_DEFAULT_BITS");
        sub->add_option("--target-radius", opt.target_radius,
                        "certification radius target");
        sub->add_option("--max-escalations", opt.max_escalations,
                        "precision-doubling attempts");
        sub->add_option("--out", opt.out_path, "write output to this path");
        sub->add_option("--format", opt.format, "json | csv | human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
    };

    CLI::App* verify =
        app.add_subcommand("verify", "evaluate every claim over a k range");
    verify->add_option("--k", opt.k_spec, "single k or range A..B")
        ->required();
    add_precision_flags(verify);
    verify->add_option("--parallel", opt.parallel,
                       "worker threads across k (0 = auto)");

    CLI::App* roots =
        app.add_subcommand("roots", "solve and print certified root balls");
    roots->add_option("--k", opt.k_spec, "family index")->required();
    add_precision_flags(roots);

    CLI::App* disc = app.add_subcommand(
        "disc", "exact discriminants (closed form, resultant, deflated)");
    disc->add_option("--k", opt.k_spec, "family index")->required();
    disc->add_option("--out", opt.out_path, "write output to this path");

    CLI::App* fib =
        app.add_subcommand("fib", "exact k-step sequence values");
    fib->add_option("--k", opt.k_spec, "family index")->required();
    fib->add_option("--n", opt.n, "sequence index")->required();
    fib->add_option("--out", opt.out_path, "write output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(roots)) return cmd_roots(opt);
        if (app.got_subcommand(disc)) return cmd_disc(opt);
        if (app.got_subcommand(fib)) return cmd_fib(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
