#include "nbpc/biguint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "nbpc/rng.hpp"

namespace nbpc {

void BigUint::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_limbs(std::vector<std::uint64_t> limbs) {
    BigUint v;
    v.limbs_ = std::move(limbs);
    v.normalize();
    return v;
}

std::uint64_t BigUint::as_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigUint does not fit in 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        carry += limbs_[i];
        if (i < rhs.limbs_.size()) carry += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(carry);
        carry >>= 64;
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw std::underflow_error("BigUint subtraction would go negative");
    unsigned __int128 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const unsigned __int128 sub = static_cast<unsigned __int128>(rhs.limb(i)) + borrow;
        if (limbs_[i] >= sub) {
            limbs_[i] -= static_cast<std::uint64_t>(sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) +
                                                   limbs_[i] - sub);
            borrow = 1;
        }
        if (borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    normalize();
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) +
           (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

std::uint64_t BigUint::divmod_u64(std::uint64_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    normalize();
    return static_cast<std::uint64_t>(rem);
}

double BigUint::to_double() const {
    double acc = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        acc = acc * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    }
    return acc;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t chunk = tmp.divmod_u64(10000000000000000000ULL);  // 10^19
        char buf[20];
        for (int d = 0; d < 19; ++d) {
            buf[d] = static_cast<char>('0' + chunk % 10);
            chunk /= 10;
        }
        out.append(buf, buf + 19);
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

std::string BigUint::to_scientific(int significant) const {
    if (significant < 1) significant = 1;
    const std::string dec = to_decimal();
    int exp10 = static_cast<int>(dec.size()) - 1;
    std::string digits = dec.substr(0, static_cast<std::size_t>(significant));
    // round half-up on the next digit
    if (static_cast<int>(dec.size()) > significant && dec[static_cast<std::size_t>(significant)] >= '5') {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
            digits[static_cast<std::size_t>(i)] = '0';
            --i;
        }
        if (i >= 0) {
            ++digits[static_cast<std::size_t>(i)];
        } else {
            digits.insert(digits.begin(), '1');  // 99..9 -> 100..0
            digits.pop_back();
            ++exp10;
        }
    }
    while (static_cast<int>(digits.size()) < significant) digits.push_back('0');
    std::string out;
    out.push_back(digits[0]);
    if (significant > 1) {
        out.push_back('.');
        out.append(digits.begin() + 1, digits.end());
    }
    out += "e+" + std::to_string(exp10);
    return out;
}

BigUint uniform_below(SplitMix64& g, const BigUint& bound) {
    if (bound.is_zero()) throw std::domain_error("uniform_below: empty range");
    if (bound.fits_u64()) return BigUint(uniform_below(g, bound.as_u64()));
    const std::size_t bits = bound.bit_length();
    const std::size_t n_limbs = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (n_limbs - 1);
    const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    for (;;) {
        std::vector<std::uint64_t> limbs(n_limbs);
        for (std::size_t i = 0; i < n_limbs; ++i) limbs[i] = g.next();
        limbs.back() &= top_mask;
        BigUint candidate = BigUint::from_limbs(std::move(limbs));
        if (candidate < bound) return candidate;
    }
}

}  // namespace nbpc
