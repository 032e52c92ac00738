#include "cartcode/bigint.hpp"

#include <algorithm>
#include <cassert>

#include "cartcode/errors.hpp"

namespace cartcode {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
    BigUint result(1);
    BigUint b(base);
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw TooLarge("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    assert(*this >= rhs && "BigUint subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
        borrow = 0;
        if (diff < 0) {
            diff += (std::int64_t{1} << 32);
            borrow = 1;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

std::uint32_t BigUint::div_small_inplace(std::uint32_t divisor) {
    assert(divisor != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::div_exact(std::uint64_t divisor) {
    if (divisor == 0) throw BadParameters("division by zero");
    if (divisor >> 32) {
        // 64-bit divisor: long division with a 128-bit running remainder
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
            rem = cur % divisor;
        }
        trim();
        if (rem != 0) throw BadParameters("inexact BigUint division");
        return *this;
    }
    std::uint32_t rem = div_small_inplace(static_cast<std::uint32_t>(divisor));
    if (rem != 0) throw BadParameters("inexact BigUint division");
    return *this;
}

std::uint64_t BigUint::mod(std::uint64_t divisor) const {
    if (divisor == 0) throw BadParameters("division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        rem = ((rem << 32) | limbs_[i]) % divisor;
    return static_cast<std::uint64_t>(rem);
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    BigUint tmp(*this);
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.div_small_inplace(1'000'000'000u);
        std::string digits = std::to_string(chunk);
        if (!tmp.is_zero()) digits.insert(0, 9 - digits.size(), '0');
        out.insert(0, digits);
    }
    return out;
}

} // namespace cartcode
