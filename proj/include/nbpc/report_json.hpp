#pragma once

#include <json.hpp>

#include "nbpc/search.hpp"
#include "nbpc/spectrum.hpp"

namespace nbpc {

// JSON shapes match the schemas under docs/schemas/.

inline nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json j{
        {"q", r.q},
        {"dc", r.dc},
        {"method", to_string(r.method)},
        {"exponents", r.exponents},
        {"s3", r.s3},
        {"m3", r.m3},
        {"sigma3", r.sigma3},
        {"delta3", r.delta3},
        {"r3_percent", r.r3_percent},
        {"attempts", r.attempts},
        {"samples_for_stats", r.samples_for_stats},
        {"seed", r.seed},
        {"is_exhaustive_optimum", r.is_exhaustive_optimum},
    };
    if (r.s4) j["s4"] = *r.s4;
    return j;
}

inline nlohmann::json to_json(const FieldContext& ctx, const CoeffSet& H, const Spectrum& s) {
    nlohmann::json j{
        {"q", ctx.q},
        {"m", ctx.m},
        {"coeffs", H.exponents},
        {"max_degree", s.max_degree},
        {"counts", s.counts},
        {"truncated", s.truncated},
    };
    j["d_min"] = s.d_min ? nlohmann::json(*s.d_min) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(int q, int dc, const StatsResult& s) {
    return nlohmann::json{
        {"q", q},           {"dc", dc},         {"samples", s.samples},
        {"seed", s.seed},   {"m3", s.m3},       {"sigma3", s.sigma3},
    };
}

}  // namespace nbpc
