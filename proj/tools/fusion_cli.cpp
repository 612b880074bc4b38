// fusion: fusion tables and invariant checks for affine Lie algebras.
//
//   fusion table  --type A1~1 --level 1 [--method verlinde|ideal|kacwalton|all]
//                 [--format pretty|json|csv] [--output FILE] [--rank-limit N] [--tol X]
//   fusion verify --type A2~2 --level 2 [--format pretty|json] [--seed N]
//   fusion info   --type D4~3
//
// Exit status: 0 ok, 1 integrity failure, 2 usage error, 3 certificate failure.

#include "fusion/errors.hpp"
#include "fusion/serialize.hpp"
#include "fusion/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace fusion;

enum Exit { ok = 0, integrity = 1, usage = 2, certificate = 3 };

struct RunConfig {
    std::string type;
    int level = 0;
    std::string method = "verlinde";
    std::string format = "pretty";
    std::string output;
    std::optional<int> rank_limit;
    double tol = 1e-6;
    std::uint64_t seed = VerifyOptions{}.seed;
};

ContextPtr make_context(const RunConfig& cfg) {
    if (cfg.level < 1) throw UsageError("level must be a positive integer, got " + std::to_string(cfg.level));
    return Context::make(cfg.type, cfg.level, cfg.rank_limit.value_or(default_rank_limit()));
}

std::string label(const Weight& w) {
    if (w.size() == 1) return "χ" + std::to_string(w[0]);
    return "χ" + to_string(w);
}

// Number of terminal columns a UTF-8 string occupies (one per code point).
std::size_t columns(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - std::min(width, columns(s)), ' '); }

std::string product_cell(const FusionTable& t, std::size_t a, std::size_t b) {
    std::string out;
    for (std::size_t c = 0; c < t.p(); ++c) {
        const Int n = t(a, b, c);
        if (n == 0) continue;
        if (!out.empty()) out += n < 0 ? " - " : " + ";
        else if (n < 0) out += "-";
        const Int m = std::abs(n);
        if (m != 1) out += std::to_string(m);
        out += label(t.weights[c]);
    }
    return out.empty() ? "0" : out;
}

std::string render_pretty(const FusionTable& t) {
    const std::size_t p = t.p();
    std::vector<std::vector<std::string>> grid(p + 1, std::vector<std::string>(p + 1));
    grid[0][0] = "×";
    for (std::size_t i = 0; i < p; ++i) grid[0][i + 1] = grid[i + 1][0] = label(t.weights[i]);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) grid[a + 1][b + 1] = product_cell(t, a, b);
    std::vector<std::size_t> width(p + 1, 0);
    for (const auto& row : grid)
        for (std::size_t j = 0; j <= p; ++j) width[j] = std::max(width[j], columns(row[j]));
    std::ostringstream os;
    os << t.type.to_string() << " level " << t.level << ", method " << t.method << ", " << p
       << (p == 1 ? " weight" : " weights") << "\n";
    for (std::size_t i = 0; i <= p; ++i) {
        for (std::size_t j = 0; j <= p; ++j) os << (j ? " | " : "") << pad(grid[i][j], width[j]);
        os << "\n";
        if (i == 0) {
            for (std::size_t j = 0; j <= p; ++j) os << (j ? "-+-" : "") << std::string(width[j], '-');
            os << "\n";
        }
    }
    return os.str();
}

std::string render(const FusionTable& t, const std::string& format) {
    if (format == "json") return table_to_json(t) + "\n";
    if (format == "csv") return table_to_csv(t);
    return render_pretty(t);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + cfg.output);
    f << text;
}

FusionTable compute(const ContextPtr& ctx, FusionMethod m, double tol) {
    switch (m) {
        case FusionMethod::verlinde: return verlinde_fusion(modular_matrices(ctx), tol);
        case FusionMethod::ideal: return ideal_fusion(ctx, tol);
        case FusionMethod::kacwalton: return kac_walton_fusion(ctx);
    }
    throw UsageError("unknown method");
}

void require_invariants(const ContextPtr& ctx, const FusionTable& t) {
    const std::string v = table_invariant_violation(t, ctx->data().type.twist == 1);
    if (!v.empty()) throw IntegrityError(t.method + " table: " + v);
}

int cmd_table(const RunConfig& cfg) {
    const ContextPtr ctx = make_context(cfg);
    if (cfg.method != "all") {
        const FusionTable t = compute(ctx, parse_method(cfg.method), cfg.tol);
        require_invariants(ctx, t);
        emit(cfg, render(t, cfg.format));
        return ok;
    }
    std::vector<FusionTable> tables;
    for (auto m : {FusionMethod::verlinde, FusionMethod::ideal, FusionMethod::kacwalton}) {
        tables.push_back(compute(ctx, m, cfg.tol));
        require_invariants(ctx, tables.back());
    }
    const double dv = table_discrepancy(tables[0], tables[2]);
    const double di = table_discrepancy(tables[1], tables[2]);
    std::ostringstream report;
    report << "max per-cell discrepancy vs kacwalton: verlinde " << dv << ", ideal " << di << "\n";
    report << "max rounding error: verlinde " << tables[0].max_rounding_error << ", ideal "
           << tables[1].max_rounding_error << "; χ-matrix condition number " << tables[1].condition_number << "\n";
    const bool agree = dv == 0 && di == 0;
    report << (agree ? "three-way agreement: verlinde = ideal = kacwalton\n"
                     : "THREE-WAY DISAGREEMENT between fusion engines\n");
    if (cfg.format == "pretty") {
        emit(cfg, render_pretty(tables[2]) + "\n" + report.str());
    } else {
        emit(cfg, render(tables[2], cfg.format));
        std::cerr << report.str();
    }
    return agree ? ok : integrity;
}

int cmd_verify(const RunConfig& cfg) {
    const ContextPtr ctx = make_context(cfg);
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.integrality_tol = cfg.tol;
    const VerifyReport r = verify_context(ctx, opt);
    if (cfg.format == "json") {
        emit(cfg, report_to_json(r) + "\n");
    } else {
        std::ostringstream os;
        os << std::setprecision(6);
        os << r.type << " level " << r.level << ": |G_l| = " << r.g << ", p = " << r.p << "\n";
        os << "S entry moduli in [" << r.s_modulus_min << ", " << r.s_modulus_max << "], global phase S00/|S00| = "
           << r.s_global_phase.real() << (r.s_global_phase.imag() < 0 ? " - " : " + ")
           << std::abs(r.s_global_phase.imag()) << "i\n";
        for (const auto& c : r.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << c.name << "  deviation " << c.deviation << " (tol " << c.tolerance
               << ")";
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
        os << (r.passed() ? "all checks passed\n" : "some checks FAILED\n");
        emit(cfg, os.str());
    }
    if (r.passed()) return ok;
    for (const auto& c : r.checks)
        if (!c.pass && c.error == "certificate") return certificate;
    return integrity;
}

int cmd_info(const RunConfig& cfg) {
    emit(cfg, affine_data_to_json(build_affine_data(parse_affine_type(cfg.type))) + "\n");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion rings of affine Lie algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_level) {
        sub->add_option("--type", cfg.type, "affine type, e.g. A1~1, A3~2, D4~3")->required();
        if (with_level) sub->add_option("--level", cfg.level, "positive integer level")->required();
        sub->add_option("--output", cfg.output, "write to this file instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "compute a fusion table");
    common(table, true);
    table->add_option("--method", cfg.method, "verlinde|ideal|kacwalton|all")
        ->check(CLI::IsMember({"verlinde", "ideal", "kacwalton", "all"}));
    table->add_option("--format", cfg.format, "pretty|json|csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
    table->add_option("--rank-limit", cfg.rank_limit, "override the finite-rank bound (default 4 or $FUSION_RANK_LIMIT)");
    table->add_option("--tol", cfg.tol, "integrality tolerance for the floating-point engines");

    CLI::App* verify = app.add_subcommand("verify", "run every invariant check for one (type, level)");
    common(verify, true);
    verify->add_option("--format", cfg.format, "pretty|json")->check(CLI::IsMember({"pretty", "json"}));
    verify->add_option("--rank-limit", cfg.rank_limit, "override the finite-rank bound");
    verify->add_option("--tol", cfg.tol, "integrality tolerance for the floating-point engines");
    verify->add_option("--seed", cfg.seed, "seed for the randomized suites");

    CLI::App* info = app.add_subcommand("info", "print the affine data tables as JSON");
    common(info, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*table) return cmd_table(cfg);
        if (*verify) return cmd_verify(cfg);
        return cmd_info(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "unsupported request: " << e.what() << "\n";
        return usage;
    } catch (const CertificateError& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return certificate;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return integrity;
    } catch (const std::exception& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return integrity;
    }
}
