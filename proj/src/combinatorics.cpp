#include "nbpc/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "nbpc/errors.hpp"

namespace nbpc {

GammaTable::GammaTable(int m) : m_(m), one_(1) {
    if (m < 1) throw std::invalid_argument("GammaTable: gap m must be >= 1");
}

void GammaTable::ensure(int p_max, int n_max) {
    if (p_max < 1 || n_max < 0) return;
    if (p_max <= filled_p_ && n_max <= filled_n_) return;
    const int new_p = std::max(p_max, filled_p_);
    const int new_n = std::max(n_max, filled_n_);
    if (static_cast<int>(rows_.size()) < new_p + 1) rows_.resize(static_cast<std::size_t>(new_p) + 1);
    for (int p = 1; p <= new_p; ++p) {
        auto& row = rows_[static_cast<std::size_t>(p)];
        const int old_n = static_cast<int>(row.size()) - 1;
        if (old_n >= new_n) continue;
        row.resize(static_cast<std::size_t>(new_n) + 1);
        for (int n = std::max(old_n + 1, 0); n <= new_n; ++n) {
            auto& cell = row[static_cast<std::size_t>(n)];
            if (p == 1) {
                cell = BigUint(static_cast<std::uint64_t>(n));
            } else {
                cell = n >= 1 ? row[static_cast<std::size_t>(n - 1)] : BigUint();
                if (n - m_ >= 1) cell += rows_[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(n - m_)];
            }
        }
    }
    filled_p_ = new_p;
    filled_n_ = new_n;
}

const BigUint& GammaTable::value(int p, int n) const {
    if (p == 0) return one_;
    if (p < 0) throw std::invalid_argument("gamma: p must be >= 0");
    if (n <= 0) return zero_;
    if (p > filled_p_ || n > filled_n_) {
        throw std::logic_error("GammaTable::value out of ensured range (p=" + std::to_string(p) +
                               ", n=" + std::to_string(n) + ")");
    }
    return rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
}

BigUint gamma(int m, int p, int n) {
    if (p < 1) throw std::invalid_argument("gamma: p must be >= 1");
    if (n <= 0) return BigUint();
    GammaTable table(m);
    table.ensure(p, n);
    return table.value(p, n);
}

BigUint gamma_closed_p2(int m, int n) {
    if (n < m - 1) throw std::invalid_argument("gamma_closed_p2: requires n >= m-1");
    if (n <= m) return BigUint();  // no room for a pair
    const std::uint64_t d = static_cast<std::uint64_t>(n - m);
    // (n-m+1)(n-m)/2 fits u64 for every n this project deals with
    return BigUint((d + 1) * d / 2);
}

BigUint xi(int m, int dc) {
    if (dc < 2) throw std::invalid_argument("xi: dc must be >= 2");
    return gamma(m, dc - 1, (1 << m) - 2 * m);
}

}  // namespace nbpc
