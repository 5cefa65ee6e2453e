#include "nbpc/verify.hpp"

#include <string>

#include "nbpc/combinatorics.hpp"
#include "nbpc/errors.hpp"
#include "nbpc/search.hpp"

namespace nbpc {

std::optional<VerifyScope> verify_scope_from_string(const std::string& s) {
    if (s == "exhaustive") return VerifyScope::exhaustive;
    if (s == "greedy") return VerifyScope::greedy;
    if (s == "all") return VerifyScope::all;
    return std::nullopt;
}

VerifyReport verify_field(const FieldContext& ctx, const Weight3Tables& tables, VerifyScope scope,
                          std::uint64_t budget, const std::vector<GoldenRecord>& records) {
    VerifyReport report;
    report.q = ctx.q;
    report.scope = scope;

    // exhaustive re-derivations are shared between same-dc rows
    std::vector<std::optional<SearchReport>> rederived(32);

    for (const GoldenRecord& row : records) {
        if (row.q != ctx.q) continue;
        const bool starred_scope = scope != VerifyScope::greedy;
        const bool greedy_scope = scope != VerifyScope::exhaustive;
        if (row.starred ? !starred_scope : !greedy_scope) continue;

        VerifyRowResult res;
        res.row = row;

        const CoeffSet given = make_coeff_set(ctx.m, row.exponents);
        res.s3_computed = s3_fast(tables, given);
        if (given.exponents.front() != 0) {
            // published set with a nonzero leading exponent: check its
            // canonical translate scores identically
            const std::uint64_t s3_canon = s3_fast(tables, canonicalize(ctx, given));
            if (s3_canon != res.s3_computed) {
                res.failed = true;
                res.detail += "canonical translate scores " + std::to_string(s3_canon) + "; ";
            }
        }
        if (row.s4 || row.starred) {
            res.s4_computed = compute_spectrum(ctx, given, 4).at(4);
        }

        if (row.advisory) {
            res.detail += "advisory (" + row.note + "): recomputed s3=" +
                          std::to_string(res.s3_computed);
            if (res.s4_computed) res.detail += ", s4=" + std::to_string(*res.s4_computed);
            res.detail += "; ";
        } else {
            if (res.s3_computed != row.s3) {
                res.failed = true;
                res.detail += "s3 mismatch: computed " + std::to_string(res.s3_computed) +
                              ", published " + std::to_string(row.s3) + "; ";
            }
            if (row.s4 && res.s4_computed && *res.s4_computed != *row.s4) {
                if (row.starred) {
                    res.failed = true;
                    res.detail += "s4 mismatch: computed " + std::to_string(*res.s4_computed) +
                                  ", published " + std::to_string(*row.s4) + "; ";
                } else {
                    res.detail += "advisory s4: computed " + std::to_string(*res.s4_computed) +
                                  ", published " + std::to_string(*row.s4) + "; ";
                }
            }

            if (row.starred && scope != VerifyScope::greedy &&
                xi(ctx.m, row.dc) <= BigUint(budget)) {
                auto& cached = rederived[static_cast<std::size_t>(row.dc)];
                if (!cached) cached = exhaustive(ctx, tables, row.dc, ExhaustiveOptions{budget});
                res.s3_rederived = cached->s3;
                if (cached->s3 != row.s3) {
                    res.failed = true;
                    res.detail += "re-derived optimum s3=" + std::to_string(cached->s3) +
                                  " differs from published " + std::to_string(row.s3) + "; ";
                }
                if (row.s4 && row.s3 == 0 && cached->s4 && *cached->s4 != *row.s4) {
                    res.failed = true;
                    res.detail += "re-derived optimum s4=" + std::to_string(*cached->s4) +
                                  " differs from published " + std::to_string(*row.s4) + "; ";
                }
            }
        }

        report.all_pass = report.all_pass && !res.failed;
        report.rows.push_back(std::move(res));
    }

    if (report.rows.empty()) {
        throw config_error("verify: no reference rows for q=" + std::to_string(ctx.q));
    }
    return report;
}

}  // namespace nbpc
