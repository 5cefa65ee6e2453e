#include "nbpc/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "golden_embedded.inc"  // generated: kGoldenCsv from data/golden_sets.csv

namespace nbpc {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<GoldenRecord> parse_golden_csv(std::istream& in) {
    std::vector<GoldenRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (cells.size() != 12) {
            throw std::runtime_error("golden csv: expected 12 columns, got " +
                                     std::to_string(cells.size()) + " in: " + line);
        }
        GoldenRecord r;
        r.q = std::stoi(cells[0]);
        r.dc = std::stoi(cells[1]);
        r.starred = cells[2] == "1";
        r.advisory = cells[3] == "1";
        r.s3 = std::stoull(cells[4]);
        if (!cells[5].empty()) r.s4 = std::stoull(cells[5]);
        if (!cells[6].empty()) r.m3 = std::stod(cells[6]);
        if (!cells[7].empty()) r.sigma3 = std::stod(cells[7]);
        if (!cells[8].empty()) r.delta3 = std::stod(cells[8]);
        if (!cells[9].empty()) r.r3_percent = std::stod(cells[9]);
        r.note = cells[10];
        std::istringstream exps(cells[11]);
        int e = 0;
        while (exps >> e) r.exponents.push_back(e);
        if (r.exponents.empty()) throw std::runtime_error("golden csv: empty exponent list: " + line);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<GoldenRecord> load_golden_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden csv: " + path);
    return parse_golden_csv(in);
}

const std::vector<GoldenRecord>& golden_records() {
    static const std::vector<GoldenRecord> records = [] {
        std::istringstream in(kGoldenCsv);
        return parse_golden_csv(in);
    }();
    return records;
}

}  // namespace nbpc
