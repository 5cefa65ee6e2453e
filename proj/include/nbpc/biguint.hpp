#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nbpc {

struct SplitMix64;

// Unsigned arbitrary-precision integer (little-endian 64-bit limbs).
// Covers exactly what the counting/sampling code needs: add, subtract,
// compare, decimal rendering and uniform random draws.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit by design
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const;  // throws std::overflow_error if too wide

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs);  // pre: *this >= rhs
    friend BigUint operator+(BigUint a, const BigUint& b) {
        a += b;
        return a;
    }
    friend BigUint operator-(BigUint a, const BigUint& b) {
        a -= b;
        return a;
    }

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    std::size_t bit_length() const;  // 0 for zero
    std::size_t limb_count() const { return limbs_.size(); }
    std::uint64_t limb(std::size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

    // In-place division by a small divisor; returns the remainder.
    std::uint64_t divmod_u64(std::uint64_t divisor);

    double to_double() const;
    std::string to_decimal() const;
    // "2.39e+22"-style rendering with the given number of significant digits.
    std::string to_scientific(int significant = 3) const;

    static BigUint from_limbs(std::vector<std::uint64_t> limbs);

private:
    void normalize();
    std::vector<std::uint64_t> limbs_;
};

// Uniform draw in [0, bound) for arbitrary-width bounds (bound >= 1);
// masks to bit_length(bound) bits and rejects draws >= bound.
BigUint uniform_below(SplitMix64& g, const BigUint& bound);

}  // namespace nbpc
