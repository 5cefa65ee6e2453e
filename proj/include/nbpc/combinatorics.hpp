#pragma once

#include "nbpc/biguint.hpp"

namespace nbpc {

// Counts of p-tuples over {0..n-1} whose adjacent gaps are >= m, built
// bottom-up from gamma(p, n) = gamma(p, n-1) + gamma(p-1, n-m) with
// gamma(1, n) = n. Values grow past 64 bits quickly, hence BigUint cells.
//
// ensure() must be called (single-threaded) before value lookups; the table
// is then immutable and safe to read concurrently.
class GammaTable {
public:
    explicit GammaTable(int m);

    int gap() const { return m_; }

    // Extends the memo to cover all (p, n) with p <= p_max, n <= n_max.
    void ensure(int p_max, int n_max);

    // gamma_m(p, n). Conventions: p == 0 -> 1 (empty tuple, any n);
    // p >= 1 with n <= 0 -> 0. Requires ensure(p, n) beforehand for the
    // in-range cases.
    const BigUint& value(int p, int n) const;

private:
    int m_;
    int filled_p_ = 0;
    int filled_n_ = -1;
    std::vector<std::vector<BigUint>> rows_;  // rows_[p][n], p >= 1
    BigUint zero_;
    BigUint one_;
};

// Convenience one-shot gamma_m(p, n) (p >= 1; n < 0 counts as 0).
BigUint gamma(int m, int p, int n);

// Closed form for p = 2: (n-m+1)(n-m)/2, valid for n >= m-1.
BigUint gamma_closed_p2(int m, int n);

// Number of canonical coefficient sets with all circular exponent gaps >= m:
// xi_m(dc) = gamma_m(dc-1, 2^m - 2m). Requires dc >= 2.
BigUint xi(int m, int dc);

}  // namespace nbpc
