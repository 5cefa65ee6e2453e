#include "nbpc/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nbpc/combinatorics.hpp"
#include "nbpc/errors.hpp"
#include "nbpc/sampler.hpp"

namespace nbpc {

std::string to_string(SearchMethod method) {
    return method == SearchMethod::exhaustive ? "exhaustive" : "greedy";
}

namespace {

std::vector<int> canonical_exponents(int m, const std::vector<int>& sorted) {
    const int L = (1 << m) - 1;
    const std::size_t n = sorted.size();
    std::vector<int> best;
    std::vector<int> cand(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int shift = sorted[i];
        for (std::size_t j = 0; j < n; ++j) {
            int e = sorted[j] - shift;
            if (e < 0) e += L;
            cand[j] = e;
        }
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

// Pair/triple table sums of a sorted exponent vector, same reads as s3_fast.
std::pair<std::int64_t, std::int64_t> full_sums(const Weight3Tables& T, const std::vector<int>& a) {
    const int L = T.q - 1;
    const int dc = static_cast<int>(a.size());
    std::int64_t sc = 0;
    std::int64_t st = 0;
    for (int i = 0; i < dc - 1; ++i) {
        for (int j = i + 1; j < dc; ++j) {
            int d = (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]) % L;
            if (d < 0) d += L;
            sc += T.t2_at(d);
        }
    }
    for (int i = 0; i < dc - 2; ++i) {
        for (int j = i + 1; j < dc - 1; ++j) {
            int dj = (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]) % L;
            if (dj < 0) dj += L;
            for (int k = j + 1; k < dc; ++k) {
                int dk = (a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(i)]) % L;
                if (dk < 0) dk += L;
                st += T.t3_at(dj, dk);
            }
        }
    }
    return {sc, st};
}

inline std::int64_t s3_from_sums(int dc, std::int64_t sc, std::int64_t st) {
    return st - static_cast<std::int64_t>(dc - 3) * sc;
}

// Pair/triple terms involving position i with its exponent replaced by b.
// Index order equals value order (b stays inside its neighbour window), so
// the anchor of each triple is the position with the smallest index.
std::pair<std::int64_t, std::int64_t> position_terms(const Weight3Tables& T,
                                                     const std::vector<int>& a, int i, int b) {
    const int L = T.q - 1;
    const int dc = static_cast<int>(a.size());
    std::int64_t c = 0;
    std::int64_t t = 0;
    for (int j = 0; j < dc; ++j) {
        if (j == i) continue;
        int d = (b - a[static_cast<std::size_t>(j)]) % L;
        if (d < 0) d += L;
        c += T.t2_at(d);
    }
    for (int j = 0; j < i; ++j) {
        const int aj = a[static_cast<std::size_t>(j)];
        for (int k = j + 1; k < i; ++k) t += T.t3_at(a[static_cast<std::size_t>(k)] - aj, b - aj);
        for (int k = i + 1; k < dc; ++k) t += T.t3_at(b - aj, a[static_cast<std::size_t>(k)] - aj);
    }
    for (int j = i + 1; j < dc - 1; ++j) {
        for (int k = j + 1; k < dc; ++k) {
            t += T.t3_at(a[static_cast<std::size_t>(j)] - b, a[static_cast<std::size_t>(k)] - b);
        }
    }
    return {c, t};
}

struct BestCandidate {
    std::uint64_t s3 = UINT64_MAX;
    std::uint64_t s4 = UINT64_MAX;  // real value only when s3 == 0
    std::vector<int> canonical;
    bool valid = false;
};

// Strict total order; the min over any partition order is well defined.
bool better_than(const BestCandidate& x, const BestCandidate& y) {
    if (!x.valid || !y.valid) return x.valid && !y.valid;
    if (x.s3 != y.s3) return x.s3 < y.s3;
    if (x.s4 != y.s4) return x.s4 < y.s4;
    return x.canonical < y.canonical;
}

std::uint64_t spectrum_s4(const FieldContext& ctx, const std::vector<int>& exps) {
    return compute_spectrum(ctx, CoeffSet{ctx.m, exps}, 4).at(4);
}

void consider_candidate(const FieldContext& ctx, BestCandidate& best,
                        const std::vector<int>& exps, std::uint64_t s3) {
    if (best.valid && s3 > best.s3) return;
    BestCandidate cand;
    cand.valid = true;
    cand.s3 = s3;
    if (s3 == 0) cand.s4 = spectrum_s4(ctx, exps);
    if (!best.valid || cand.s3 < best.s3 || cand.s4 < best.s4) {
        cand.canonical = canonical_exponents(ctx.m, exps);
        best = std::move(cand);
        return;
    }
    if (cand.s4 > best.s4) return;
    cand.canonical = canonical_exponents(ctx.m, exps);
    if (cand.canonical < best.canonical) best = std::move(cand);
}

void fill_stats(SearchReport& r, std::uint64_t count, std::uint64_t sum, unsigned __int128 sumsq) {
    r.samples_for_stats = count;
    if (count == 0) return;
    const long double mean = static_cast<long double>(sum) / static_cast<long double>(count);
    r.m3 = static_cast<double>(mean);
    if (count >= 2) {
        long double var = (static_cast<long double>(sumsq) -
                           static_cast<long double>(sum) * static_cast<long double>(sum) /
                               static_cast<long double>(count)) /
                          static_cast<long double>(count - 1);
        if (var < 0) var = 0;
        r.sigma3 = static_cast<double>(std::sqrt(static_cast<double>(var)));
    }
    r.delta3 = r.sigma3 > 0 ? (r.m3 - static_cast<double>(r.s3)) / r.sigma3 : 0.0;
    r.r3_percent = r.m3 > 0 ? 100.0 * static_cast<double>(r.s3) / r.m3 : 0.0;
}

}  // namespace

CoeffSet canonicalize(const FieldContext& ctx, const CoeffSet& H) {
    if (H.m != ctx.m) throw integrity_error("canonicalize: set built for a different field");
    return CoeffSet{H.m, canonical_exponents(H.m, H.exponents)};
}

CoeffSet canonicalize_elements(const FieldContext& ctx, const std::vector<gf_elem>& coeffs) {
    std::vector<int> exps;
    exps.reserve(coeffs.size());
    for (gf_elem c : coeffs) {
        if (c == 0) throw std::invalid_argument("canonicalize: zero coefficient");
        if (c >= ctx.q) throw std::invalid_argument("canonicalize: element out of field range");
        exps.push_back(ctx.log[c]);
    }
    return canonicalize(ctx, make_coeff_set(ctx.m, std::move(exps)));
}

// --- exhaustive enumeration --------------------------------------------------

namespace {

struct EnumAccum {
    BestCandidate best;
    std::uint64_t visits = 0;
    std::uint64_t sum = 0;
    unsigned __int128 sumsq = 0;
};

struct EnumJob {
    const FieldContext& ctx;
    const Weight3Tables& T;
    int dc;
    int m;
    int q1;
};

// Places value v at stack position k = stack.size(), carrying the partial
// pair/triple sums of the prefix; recurses until the set is complete.
void place_value(const EnumJob& job, std::vector<int>& stack, int v, std::int64_t sc,
                 std::int64_t st, EnumAccum& acc) {
    const int k = static_cast<int>(stack.size());
    std::int64_t dsc = 0;
    std::int64_t dst = 0;
    for (int j = 0; j < k; ++j) dsc += job.T.t2_at(v - stack[static_cast<std::size_t>(j)]);
    for (int j = 0; j + 1 < k; ++j) {
        const int aj = stack[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l) {
            dst += job.T.t3_at(stack[static_cast<std::size_t>(l)] - aj, v - aj);
        }
    }
    sc += dsc;
    st += dst;
    if (k == job.dc - 1) {
        const std::int64_t s3 = s3_from_sums(job.dc, sc, st);
        if (s3 < 0) throw integrity_error("exhaustive: negative count (corrupt tables?)");
        ++acc.visits;
        acc.sum += static_cast<std::uint64_t>(s3);
        acc.sumsq += static_cast<unsigned __int128>(s3) * static_cast<unsigned __int128>(s3);
        if (static_cast<std::uint64_t>(s3) <= acc.best.s3) {
            stack.push_back(v);
            consider_candidate(job.ctx, acc.best, stack, static_cast<std::uint64_t>(s3));
            stack.pop_back();
        }
        return;
    }
    stack.push_back(v);
    const int lo = v + job.m;
    const int hi = job.q1 - job.m * (job.dc - k - 1);
    for (int nv = lo; nv <= hi; ++nv) place_value(job, stack, nv, sc, st, acc);
    stack.pop_back();
}

SearchReport finish_exhaustive(const EnumJob& job, const EnumAccum& acc, std::uint64_t xi_count) {
    if (acc.visits != xi_count) {
        throw integrity_error("exhaustive: visited " + std::to_string(acc.visits) +
                              " sets, expected xi = " + std::to_string(xi_count));
    }
    if (!acc.best.valid) {
        throw config_error("exhaustive: no admissible set for dc=" + std::to_string(job.dc) +
                           " over GF(" + std::to_string(job.ctx.q) + ")");
    }
    SearchReport r;
    r.q = job.ctx.q;
    r.dc = job.dc;
    r.method = SearchMethod::exhaustive;
    r.exponents = acc.best.canonical;
    r.s3 = acc.best.s3;
    if (acc.best.s3 == 0) r.s4 = acc.best.s4;
    r.attempts = acc.visits;
    r.seed = 0;
    r.is_exhaustive_optimum = true;
    fill_stats(r, acc.visits, acc.sum, acc.sumsq);
    return r;
}

std::uint64_t checked_xi(const FieldContext& ctx, int dc, std::uint64_t budget) {
    if (dc < 2) throw std::invalid_argument("exhaustive: dc must be >= 2");
    const BigUint count = xi(ctx.m, dc);
    if (count > BigUint(budget)) {
        throw size_error("exhaustive: xi_" + std::to_string(ctx.m) + "(" + std::to_string(dc) +
                         ") = " + count.to_scientific(3) + " exceeds budget " +
                         std::to_string(budget) + "; use the greedy search instead");
    }
    return count.is_zero() ? 0 : count.as_u64();
}

}  // namespace

SearchReport exhaustive(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                        const ExhaustiveOptions& opt) {
    if (tables.m != ctx.m) throw integrity_error("exhaustive: tables built for a different field");
    const std::uint64_t xi_count = checked_xi(ctx, dc, opt.budget);
    const EnumJob job{ctx, tables, dc, ctx.m, ctx.q - 1};

    EnumAccum total;
    const int lo0 = job.m;
    const int hi0 = job.q1 - job.m * (dc - 1);

#pragma omp parallel
    {
        EnumAccum local;
        std::vector<int> stack;
        stack.reserve(static_cast<std::size_t>(dc));
        stack.push_back(0);
#pragma omp for schedule(dynamic) nowait
        for (int v0 = lo0; v0 <= hi0; ++v0) {
            stack.resize(1);
            place_value(job, stack, v0, 0, 0, local);
        }
#pragma omp critical(nbpc_exhaustive_merge)
        {
            total.visits += local.visits;
            total.sum += local.sum;
            total.sumsq += local.sumsq;
            if (better_than(local.best, total.best)) total.best = std::move(local.best);
        }
    }
    return finish_exhaustive(job, total, xi_count);
}

SearchReport exhaustive_reference(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                                  const ExhaustiveOptions& opt) {
    if (tables.m != ctx.m) throw integrity_error("exhaustive: tables built for a different field");
    const std::uint64_t xi_count = checked_xi(ctx, dc, opt.budget);
    const EnumJob job{ctx, tables, dc, ctx.m, ctx.q - 1};

    EnumAccum acc;
    std::vector<int> stack{0};
    // plain nested enumeration, every leaf scored with a full s3_fast call
    auto recurse = [&](auto&& self) -> void {
        const int k = static_cast<int>(stack.size());
        if (k == dc) {
            const std::uint64_t s3 = s3_fast(tables, CoeffSet{ctx.m, stack});
            ++acc.visits;
            acc.sum += s3;
            acc.sumsq += static_cast<unsigned __int128>(s3) * s3;
            if (s3 <= acc.best.s3) consider_candidate(ctx, acc.best, stack, s3);
            return;
        }
        const int lo = stack.back() + job.m;
        const int hi = job.q1 - job.m * (dc - k);
        for (int v = lo; v <= hi; ++v) {
            stack.push_back(v);
            self(self);
            stack.pop_back();
        }
    };
    recurse(recurse);
    return finish_exhaustive(job, acc, xi_count);
}

// --- greedy descent ----------------------------------------------------------

namespace {

void validate_greedy_start(const FieldContext& ctx, const Weight3Tables& tables,
                           const CoeffSet& start) {
    if (tables.m != ctx.m) throw integrity_error("greedy: tables built for a different field");
    if (start.m != ctx.m) throw integrity_error("greedy: start set built for a different field");
    if (start.dc() < 2) throw std::invalid_argument("greedy: need dc >= 2");
    if (start.exponents.front() != 0) {
        throw std::invalid_argument("greedy: start set must be in canonical form (a1 = 0)");
    }
    if (!circular_gaps_ok(ctx.m, start.exponents)) {
        throw std::invalid_argument("greedy: start set is not admissible (a circular gap < m)");
    }
}

}  // namespace

CoeffSet greedy_descent(const FieldContext& ctx, const Weight3Tables& tables, CoeffSet start,
                        std::vector<std::uint64_t>* sweep_s3) {
    validate_greedy_start(ctx, tables, start);
    std::vector<int>& a = start.exponents;
    const int dc = static_cast<int>(a.size());
    const int m = ctx.m;
    const int q1 = ctx.q - 1;

    auto [sc, st] = full_sums(tables, a);
    std::int64_t s3_opt = s3_from_sums(dc, sc, st);
    if (sweep_s3) sweep_s3->push_back(static_cast<std::uint64_t>(s3_opt));

    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 1; i < dc; ++i) {
            const int lo = a[static_cast<std::size_t>(i - 1)] + m;
            const int hi = i + 1 < dc ? a[static_cast<std::size_t>(i + 1)] - m : q1 - m;
            if (lo > hi) continue;
            const auto [c_cur, t_cur] = position_terms(tables, a, i, a[static_cast<std::size_t>(i)]);
            const std::int64_t rest_c = sc - c_cur;
            const std::int64_t rest_t = st - t_cur;
            int best_b = a[static_cast<std::size_t>(i)];
            std::int64_t best_s3 = s3_opt;
            std::int64_t best_c = c_cur;
            std::int64_t best_t = t_cur;
            for (int b = lo; b <= hi; ++b) {
                const auto [cb, tb] = position_terms(tables, a, i, b);
                const std::int64_t s3b = s3_from_sums(dc, rest_c + cb, rest_t + tb);
                if (s3b < best_s3) {
                    best_s3 = s3b;
                    best_b = b;
                    best_c = cb;
                    best_t = tb;
                }
            }
            if (best_b != a[static_cast<std::size_t>(i)]) {
                a[static_cast<std::size_t>(i)] = best_b;
                sc = rest_c + best_c;
                st = rest_t + best_t;
                s3_opt = best_s3;
                improved = true;
            }
        }
        if (sweep_s3) sweep_s3->push_back(static_cast<std::uint64_t>(s3_opt));
    }
    return start;
}

CoeffSet greedy_descent_reference(const FieldContext& ctx, const Weight3Tables& tables,
                                  CoeffSet start, std::vector<std::uint64_t>* sweep_s3) {
    validate_greedy_start(ctx, tables, start);
    std::vector<int>& a = start.exponents;
    const int dc = static_cast<int>(a.size());
    const int m = ctx.m;
    const int q1 = ctx.q - 1;

    auto eval = [&](const std::vector<int>& v) {
        const auto [c, t] = full_sums(tables, v);
        return s3_from_sums(dc, c, t);
    };

    std::int64_t s3_opt = eval(a);
    if (sweep_s3) sweep_s3->push_back(static_cast<std::uint64_t>(s3_opt));
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 1; i < dc; ++i) {
            const int lo = a[static_cast<std::size_t>(i - 1)] + m;
            const int hi = i + 1 < dc ? a[static_cast<std::size_t>(i + 1)] - m : q1 - m;
            std::vector<int> trial = a;
            for (int b = lo; b <= hi; ++b) {
                trial[static_cast<std::size_t>(i)] = b;
                const std::int64_t s3b = eval(trial);
                if (s3b < s3_opt) {
                    s3_opt = s3b;
                    a[static_cast<std::size_t>(i)] = b;
                    improved = true;
                }
            }
        }
        if (sweep_s3) sweep_s3->push_back(static_cast<std::uint64_t>(s3_opt));
    }
    return start;
}

SearchReport repeated_greedy(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                             const GreedyOptions& opt) {
    if (tables.m != ctx.m) throw integrity_error("greedy: tables built for a different field");
    if (opt.attempts == 0) throw std::invalid_argument("greedy: need at least one attempt");
    GammaTable gamma_table(ctx.m);
    const SamplerConfig scfg = make_sampler_config(ctx.m, dc, gamma_table, opt.seed);

    std::uint64_t enrich_n = 0;
    if (opt.enrich_from && opt.enrich_fraction > 0.0) {
        // user input: fully validated here, before the parallel region
        if (opt.enrich_from->m != ctx.m) {
            throw integrity_error("greedy: enrichment seed built for a different field");
        }
        if (opt.enrich_from->dc() != dc - 1) {
            throw std::invalid_argument("greedy: enrichment seed must have degree dc-1");
        }
        if (opt.enrich_from->exponents.front() != 0 ||
            !circular_gaps_ok(ctx.m, opt.enrich_from->exponents)) {
            throw std::invalid_argument("greedy: enrichment seed is not an admissible canonical set");
        }
        const double f = std::min(1.0, opt.enrich_fraction);
        enrich_n = static_cast<std::uint64_t>(f * static_cast<double>(opt.attempts));
    }

    BestCandidate best;
    std::uint64_t uniform_n = 0;
    std::uint64_t sum = 0;
    unsigned __int128 sumsq = 0;

#pragma omp parallel
    {
        BestCandidate lbest;
        std::uint64_t ln = 0;
        std::uint64_t ls = 0;
        unsigned __int128 lsq = 0;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long k = 0; k < static_cast<long long>(opt.attempts); ++k) {
            CoeffSet h0;
            bool uniform_draw = true;
            if (static_cast<std::uint64_t>(k) < enrich_n) {
                auto enriched = enrich_from_lower_degree(*opt.enrich_from, scfg,
                                                         static_cast<std::uint64_t>(k));
                if (enriched) {
                    h0 = std::move(*enriched);
                    uniform_draw = false;
                } else {
                    h0 = sample_uniform(scfg, static_cast<std::uint64_t>(k));
                }
            } else {
                h0 = sample_uniform(scfg, static_cast<std::uint64_t>(k));
            }
            if (uniform_draw) {
                const std::uint64_t s30 = s3_fast(tables, h0);
                ++ln;
                ls += s30;
                lsq += static_cast<unsigned __int128>(s30) * s30;
            }
            const CoeffSet hf = greedy_descent(ctx, tables, std::move(h0));
            const std::uint64_t s3f = s3_fast(tables, hf);
            if (s3f <= lbest.s3) consider_candidate(ctx, lbest, hf.exponents, s3f);
        }
#pragma omp critical(nbpc_greedy_merge)
        {
            uniform_n += ln;
            sum += ls;
            sumsq += lsq;
            if (better_than(lbest, best)) best = std::move(lbest);
        }
    }

    SearchReport r;
    r.q = ctx.q;
    r.dc = dc;
    r.method = SearchMethod::greedy;
    r.exponents = best.canonical;
    r.s3 = best.s3;
    if (best.s3 == 0) r.s4 = best.s4;
    r.attempts = opt.attempts;
    r.seed = opt.seed;
    r.is_exhaustive_optimum = false;
    fill_stats(r, uniform_n, sum, sumsq);
    return r;
}

StatsResult estimate_stats(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                           std::uint64_t samples, std::uint64_t seed) {
    if (tables.m != ctx.m) throw integrity_error("stats: tables built for a different field");
    if (samples < 2) throw std::invalid_argument("stats: need at least 2 samples");
    GammaTable gamma_table(ctx.m);
    const SamplerConfig scfg = make_sampler_config(ctx.m, dc, gamma_table, seed);

    std::uint64_t sum = 0;
    unsigned __int128 sumsq = 0;
    std::map<std::uint32_t, std::uint64_t> hist;

#pragma omp parallel
    {
        std::uint64_t ls = 0;
        unsigned __int128 lsq = 0;
        std::map<std::uint32_t, std::uint64_t> lhist;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long k = 0; k < static_cast<long long>(samples); ++k) {
            const CoeffSet h0 = sample_uniform(scfg, static_cast<std::uint64_t>(k));
            const std::uint64_t s3 = s3_fast(tables, h0);
            ls += s3;
            lsq += static_cast<unsigned __int128>(s3) * s3;
            ++lhist[static_cast<std::uint32_t>(s3)];
        }
#pragma omp critical(nbpc_stats_merge)
        {
            sum += ls;
            sumsq += lsq;
            for (const auto& [value, count] : lhist) hist[value] += count;
        }
    }

    StatsResult out;
    out.samples = samples;
    out.seed = seed;
    out.histogram = std::move(hist);
    const long double mean = static_cast<long double>(sum) / static_cast<long double>(samples);
    out.m3 = static_cast<double>(mean);
    long double var = (static_cast<long double>(sumsq) -
                       static_cast<long double>(sum) * static_cast<long double>(sum) /
                           static_cast<long double>(samples)) /
                      static_cast<long double>(samples - 1);
    if (var < 0) var = 0;
    out.sigma3 = static_cast<double>(std::sqrt(static_cast<double>(var)));
    return out;
}

}  // namespace nbpc
