#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace nbpc {

// One published reference result (see data/golden_sets.csv).
struct GoldenRecord {
    int q = 0;
    int dc = 0;
    bool starred = false;   // s3 is the proven optimum
    bool advisory = false;  // reported by verify but never asserted
    std::uint64_t s3 = 0;
    std::optional<std::uint64_t> s4;
    std::optional<double> m3, sigma3, delta3, r3_percent;
    std::string note;
    std::vector<int> exponents;
};

// Records embedded from data/golden_sets.csv at build time.
const std::vector<GoldenRecord>& golden_records();

std::vector<GoldenRecord> parse_golden_csv(std::istream& in);
std::vector<GoldenRecord> load_golden_csv(const std::string& path);

}  // namespace nbpc
