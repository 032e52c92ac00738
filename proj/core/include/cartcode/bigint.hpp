#ifndef CARTCODE_BIGINT_HPP
#define CARTCODE_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cartcode {

/// Unsigned arbitrary-precision integer.
///
/// Codeword counts and code sizes (q^dim) exceed 64 bits on the instances
/// this library targets, so every count is carried as a BigUint. Only the
/// operations the counting formulas need are provided; subtraction requires
/// the result to be nonnegative and division must be exact.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // throws TooLarge if the value does not fit

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs); // requires *this >= rhs
    BigUint& operator*=(const BigUint& rhs);
    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    /// Divides by a small divisor, asserting that the division is exact.
    BigUint& div_exact(std::uint64_t divisor);

    std::uint64_t mod(std::uint64_t divisor) const;

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

    std::string str() const; // decimal

private:
    // base 2^32 limbs, least significant first, no trailing zero limbs
    std::vector<std::uint32_t> limbs_;

    void trim();
    std::uint32_t div_small_inplace(std::uint32_t divisor); // returns remainder
};

inline std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.str(); }

} // namespace cartcode

#endif // CARTCODE_BIGINT_HPP
