// nbpc: search for non-binary parity-check coefficient sets over GF(2^m)
// that have no weight-2 binary codewords and few weight-3 ones.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nbpc/combinatorics.hpp"
#include "nbpc/errors.hpp"
#include "nbpc/galois.hpp"
#include "nbpc/golden.hpp"
#include "nbpc/report_json.hpp"
#include "nbpc/sampler.hpp"
#include "nbpc/search.hpp"
#include "nbpc/spectrum.hpp"
#include "nbpc/verify.hpp"
#include "nbpc/weight3.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 ok, 1 failure (incl. verification mismatch), 2 usage, 3 size/budget refusal

int field_degree_for_q(int q, bool allow_small) {
    for (int m = 3; m <= 10; ++m) {
        if ((1 << m) == q) {
            if (m < 6 && !allow_small) {
                throw CLI::ValidationError(
                    "--q", "q=" + std::to_string(q) +
                               " is a test-scale field; pass --allow-small-fields to use it");
            }
            return m;
        }
    }
    throw CLI::ValidationError("--q", "q must be a power of two in [8, 1024] (got " +
                                          std::to_string(q) + ")");
}

std::vector<int> parse_exponent_list(const std::string& csv) {
    std::vector<int> exps;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) exps.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return exps;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw nbpc::integrity_error("cannot open output file " + path);
    return file;
}

void write_histogram_csv(const std::string& path, const nbpc::StatsResult& stats) {
    std::ofstream out(path);
    if (!out) throw nbpc::integrity_error("cannot open output file " + path);
    out << "s3,count\n";
    for (const auto& [s3, count] : stats.histogram) out << s3 << "," << count << "\n";
}

nbpc::CoeffSet load_report_exponents(const std::string& path, int m) {
    std::ifstream in(path);
    if (!in) throw nbpc::integrity_error("cannot open report file " + path);
    json j = json::parse(in);
    if (!j.contains("exponents") || !j["exponents"].is_array()) {
        throw nbpc::integrity_error(path + ": no exponents array");
    }
    if (j.contains("q") && j["q"].get<int>() != (1 << m)) {
        throw nbpc::integrity_error(path + ": report is for q=" + std::to_string(j["q"].get<int>()));
    }
    return nbpc::make_coeff_set(m, j["exponents"].get<std::vector<int>>());
}

struct Options {
    int threads = 0;
    bool allow_small = false;
    int q = 0;
    int m_gamma = 0;
    int dc = 0;
    int dc_min = 0, dc_max = 0;
    int p_max = 0, n_max = 0;
    int max_degree = 4;
    std::string coeffs;
    std::string out_path;
    std::string tables_path;
    std::string hist_out;
    std::string enrich_from;
    std::string golden_path;
    std::string scope = "all";
    double enrich_fraction = 0.25;
    std::uint64_t seed = 0;
    std::uint64_t attempts = 0;  // 0 = default for q
    std::uint64_t samples = 0;
    std::uint64_t budget = 100'000'000;
};

nbpc::Weight3Tables tables_for(const nbpc::FieldContext& ctx, const Options& opt) {
    std::optional<std::filesystem::path> path;
    if (!opt.tables_path.empty()) path = opt.tables_path;
    return nbpc::load_or_build(ctx, path);
}

std::uint64_t default_attempts(int q) { return q <= 256 ? 20'000 : 5'000; }

int run_gf_tables(const Options& opt) {
    const nbpc::FieldContext ctx = nbpc::build_field(opt.m_gamma);
    std::ofstream file;
    std::ostream& out = open_out(file, opt.out_path);
    out << "exponent,element,weight\n";
    for (int a = 0; a < ctx.q - 1; ++a) {
        const nbpc::gf_elem x = ctx.antilog[static_cast<std::size_t>(a)];
        out << a << "," << x << "," << static_cast<int>(ctx.weight[x]) << "\n";
    }
    return 0;
}

int run_gamma(const Options& opt) {
    nbpc::GammaTable table(opt.m_gamma);
    table.ensure(opt.p_max, opt.n_max);
    std::ofstream file;
    std::ostream& out = open_out(file, opt.out_path);
    out << "p";
    for (int n = 1; n <= opt.n_max; ++n) out << "," << n;
    out << "\n";
    for (int p = 1; p <= opt.p_max; ++p) {
        out << p;
        for (int n = 1; n <= opt.n_max; ++n) out << "," << table.value(p, n).to_decimal();
        out << "\n";
    }
    return 0;
}

int run_count(const Options& opt) {
    field_degree_for_q(opt.q, opt.allow_small);
    const int m = [&] {
        int v = 0;
        while ((1 << v) < opt.q) ++v;
        return v;
    }();
    if (opt.dc > 0) {
        const nbpc::BigUint count = nbpc::xi(m, opt.dc);
        json j{{"q", opt.q},
               {"dc", opt.dc},
               {"xi", count.to_decimal()},
               {"xi_scientific", count.to_scientific(3)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ofstream file;
    std::ostream& out = open_out(file, opt.out_path);
    out << "dc,xi,xi_scientific\n";
    for (int dc = opt.dc_min; dc <= opt.dc_max; ++dc) {
        const nbpc::BigUint count = nbpc::xi(m, dc);
        out << dc << "," << count.to_decimal() << "," << count.to_scientific(3) << "\n";
    }
    return 0;
}

int run_precompute(const Options& opt) {
    const int m = field_degree_for_q(opt.q, opt.allow_small);
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::Weight3Tables tables = nbpc::build_tables(ctx);
    nbpc::save_tables(tables, opt.out_path);
    const auto bytes = std::filesystem::file_size(opt.out_path);
    json j{{"q", opt.q},
           {"m", m},
           {"primitive_poly", ctx.primitive_poly},
           {"path", opt.out_path},
           {"bytes", bytes}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_spectrum(const Options& opt) {
    const int m = field_degree_for_q(opt.q, opt.allow_small);
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::CoeffSet H = nbpc::make_coeff_set(m, parse_exponent_list(opt.coeffs));
    const nbpc::Spectrum s = nbpc::compute_spectrum(ctx, H, opt.max_degree);
    std::cout << nbpc::to_json(ctx, H, s).dump(2) << "\n";
    return 0;
}

int run_search_exhaustive(const Options& opt) {
    const int m = field_degree_for_q(opt.q, opt.allow_small);
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::Weight3Tables tables = tables_for(ctx, opt);
    const nbpc::SearchReport report =
        nbpc::exhaustive(ctx, tables, opt.dc, nbpc::ExhaustiveOptions{opt.budget});
    std::cout << nbpc::to_json(report).dump(2) << "\n";
    return 0;
}

int run_search_greedy(const Options& opt) {
    const int m = field_degree_for_q(opt.q, opt.allow_small);
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::Weight3Tables tables = tables_for(ctx, opt);
    nbpc::GreedyOptions gopt;
    gopt.attempts = opt.attempts ? opt.attempts : default_attempts(opt.q);
    gopt.seed = opt.seed;
    if (!opt.enrich_from.empty()) {
        gopt.enrich_from = load_report_exponents(opt.enrich_from, m);
        gopt.enrich_fraction = opt.enrich_fraction;
    }
    const nbpc::SearchReport report = nbpc::repeated_greedy(ctx, tables, opt.dc, gopt);
    std::cout << nbpc::to_json(report).dump(2) << "\n";
    return 0;
}

int run_stats(const Options& opt) {
    const int m = field_degree_for_q(opt.q, opt.allow_small);
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::Weight3Tables tables = tables_for(ctx, opt);
    const nbpc::StatsResult stats =
        nbpc::estimate_stats(ctx, tables, opt.dc, opt.samples, opt.seed);
    if (!opt.hist_out.empty()) write_histogram_csv(opt.hist_out, stats);
    std::cout << nbpc::to_json(opt.q, opt.dc, stats).dump(2) << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    const int m = field_degree_for_q(opt.q, false);
    const auto scope = nbpc::verify_scope_from_string(opt.scope);
    if (!scope) throw CLI::ValidationError("--scope", "must be exhaustive, greedy or all");
    const nbpc::FieldContext ctx = nbpc::build_field(m);
    const nbpc::Weight3Tables tables = tables_for(ctx, opt);
    const auto& records = opt.golden_path.empty() ? nbpc::golden_records()
                                                  : nbpc::load_golden_csv(opt.golden_path);
    const nbpc::VerifyReport report =
        nbpc::verify_field(ctx, tables, *scope, opt.budget, records);

    int failures = 0;
    for (const auto& row : report.rows) {
        std::printf("gf%-4d dc=%-2d s3=%-6llu", row.row.q, row.row.dc,
                    static_cast<unsigned long long>(row.s3_computed));
        if (row.s4_computed) {
            std::printf(" s4=%-7llu", static_cast<unsigned long long>(*row.s4_computed));
        }
        if (row.s3_rederived) {
            std::printf(" rederived=%llu", static_cast<unsigned long long>(*row.s3_rederived));
        }
        if (row.row.advisory) {
            std::printf(" ADVISORY %s", row.detail.c_str());
        } else if (row.failed) {
            std::printf(" FAIL %s", row.detail.c_str());
            ++failures;
        } else {
            std::printf(" ok");
            if (!row.detail.empty()) std::printf(" (%s)", row.detail.c_str());
        }
        std::printf("\n");
    }
    std::printf("verify gf%d [%s]: %zu rows, %d failures\n", report.q, opt.scope.c_str(),
                report.rows.size(), failures);
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"non-binary parity-check coefficient search over GF(2^m)"};
    app.require_subcommand(1);
    app.add_option("--threads", opt.threads, "cap worker threads (default: all cores)");

    auto add_q = [&](CLI::App* cmd) {
        cmd->add_option("--q", opt.q, "field size (64..1024; 8/16/32 with --allow-small-fields)")
            ->required();
        cmd->add_flag("--allow-small-fields", opt.allow_small, "permit the test-scale fields");
    };
    auto add_tables = [&](CLI::App* cmd) {
        cmd->add_option("--tables", opt.tables_path,
                        "table cache path (loaded if present, else built and saved)");
    };

    CLI::App* gf_tables = app.add_subcommand("gf-tables", "dump log/antilog/weight tables as CSV");
    gf_tables->add_option("--m", opt.m_gamma, "field degree (3..10)")
        ->required()
        ->check(CLI::Range(3, 10));
    gf_tables->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "gap-constrained tuple counts as CSV");
    gamma_cmd->add_option("--m", opt.m_gamma, "minimum gap")->required()->check(CLI::Range(1, 64));
    gamma_cmd->add_option("--p-max", opt.p_max, "largest tuple length")->required();
    gamma_cmd->add_option("--n-max", opt.n_max, "largest window size")->required();
    gamma_cmd->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* count_cmd = app.add_subcommand("count", "number of admissible coefficient sets");
    add_q(count_cmd);
    count_cmd->add_option("--dc", opt.dc, "check degree");
    count_cmd->add_option("--dc-min", opt.dc_min, "range start (CSV output)");
    count_cmd->add_option("--dc-max", opt.dc_max, "range end (CSV output)");
    count_cmd->add_option("--out", opt.out_path, "output file (default stdout)");

    CLI::App* precompute = app.add_subcommand("precompute", "build and save the pair/triple tables");
    add_q(precompute);
    precompute->add_option("--out", opt.out_path, "cache file path")->required();

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "truncated weight spectrum as JSON");
    add_q(spectrum_cmd);
    spectrum_cmd->add_option("--coeffs", opt.coeffs, "comma-separated exponents a1,a2,...")
        ->required();
    spectrum_cmd->add_option("--max-degree", opt.max_degree, "highest tracked weight (default 4)");

    CLI::App* search_cmd = app.add_subcommand("search", "find low-S3 coefficient sets");
    search_cmd->require_subcommand(1);
    CLI::App* sx = search_cmd->add_subcommand("exhaustive", "enumerate every admissible set");
    add_q(sx);
    sx->add_option("--dc", opt.dc, "check degree")->required();
    sx->add_option("--budget", opt.budget, "refuse enumerations larger than this (default 1e8)");
    add_tables(sx);
    CLI::App* sg = search_cmd->add_subcommand("greedy", "restarted greedy descent");
    add_q(sg);
    sg->add_option("--dc", opt.dc, "check degree")->required();
    sg->add_option("--attempts", opt.attempts, "restarts (default 20000 for q<=256, else 5000)");
    sg->add_option("--seed", opt.seed, "master seed (default 0)");
    sg->add_option("--enrich-from", opt.enrich_from,
                   "JSON report of a degree dc-1 set to seed a fraction of restarts from");
    sg->add_option("--enrich-fraction", opt.enrich_fraction,
                   "fraction of restarts seeded by insertion (default 0.25)");
    add_tables(sg);

    CLI::App* stats_cmd = app.add_subcommand("stats", "S3 statistics of uniform admissible sets");
    add_q(stats_cmd);
    stats_cmd->add_option("--dc", opt.dc, "check degree")->required();
    stats_cmd->add_option("--samples", opt.samples, "number of draws")->required();
    stats_cmd->add_option("--seed", opt.seed, "master seed (default 0)");
    stats_cmd->add_option("--hist-out", opt.hist_out, "write the S3 histogram CSV here");
    add_tables(stats_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-score the reference coefficient sets");
    verify_cmd->add_option("--q", opt.q, "field size (64..1024)")->required();
    verify_cmd->add_option("--scope", opt.scope, "exhaustive | greedy | all (default all)");
    verify_cmd->add_option("--budget", opt.budget, "re-derivation budget (default 1e8)");
    verify_cmd->add_option("--golden", opt.golden_path, "override the embedded reference CSV");
    add_tables(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

    try {
        if (gf_tables->parsed()) return run_gf_tables(opt);
        if (gamma_cmd->parsed()) return run_gamma(opt);
        if (count_cmd->parsed()) {
            if (opt.dc == 0 && (opt.dc_min < 2 || opt.dc_max < opt.dc_min)) {
                std::cerr << json{{"error", "count: give --dc, or --dc-min/--dc-max >= 2"}}.dump()
                          << "\n";
                return 2;
            }
            return run_count(opt);
        }
        if (precompute->parsed()) return run_precompute(opt);
        if (spectrum_cmd->parsed()) return run_spectrum(opt);
        if (search_cmd->parsed()) {
            return sx->parsed() ? run_search_exhaustive(opt) : run_search_greedy(opt);
        }
        if (stats_cmd->parsed()) return run_stats(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
    } catch (const nbpc::size_error& e) {
        std::cerr << json{{"error", e.what()}, {"code", 3}}.dump() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
        return 1;
    }
    return 2;
}
