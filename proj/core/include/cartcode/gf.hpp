#ifndef CARTCODE_GF_HPP
#define CARTCODE_GF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cartcode/errors.hpp"

namespace cartcode {

class FieldCtx;

/// Element of a finite field, held as a discrete logarithm with respect to
/// the context's primitive element. rep == kZeroRep marks the zero element,
/// otherwise rep is the exponent e with value g^e, 0 <= e <= q-2.
struct FieldElem {
    static constexpr std::int32_t kZeroRep = -1;

    const FieldCtx* ctx = nullptr;
    std::int32_t rep = kZeroRep;

    bool is_zero() const { return rep == kZeroRep; }
    bool operator==(const FieldElem&) const = default;
};

/// Arithmetic context for GF(p^R) together with its full lattice of subfields
/// GF(p^r), r | R.
///
/// The representation is a Zech-logarithm table: multiplication is exponent
/// addition and addition goes through the precomputed table, so every field
/// operation is O(1) after construction. The context is immutable once built
/// and safe to share across threads. It is intentionally non-copyable;
/// FieldElem values keep a pointer to it.
class FieldCtx {
public:
    /// Builds GF(p^R) using the built-in modulus table (deterministic
    /// lexicographically-smallest irreducible fallback for entries not in
    /// the table). Throws NotPrime / FieldTooLarge.
    FieldCtx(std::int64_t p, int R);

    /// Builds GF(p^R) with a caller-supplied monic irreducible modulus,
    /// coefficients low-to-high of degree exactly R. Throws BadParameters
    /// if the polynomial is not monic of degree R or not irreducible.
    FieldCtx(std::int64_t p, int R, const std::vector<std::int64_t>& modulus);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::int64_t characteristic() const { return p_; }
    int degree() const { return R_; }
    std::int64_t size() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    const std::vector<int>& subfield_degrees() const { return subfield_degrees_; }

    FieldElem zero() const { return {this, FieldElem::kZeroRep}; }
    FieldElem one() const { return {this, 0}; }
    FieldElem generator() const { return {this, q_ > 2 ? 1 : 0}; }

    /// g^e for any integer e (reduced mod q-1).
    FieldElem from_exp(std::int64_t e) const;

    /// Canonical element order: index 0 is zero, index 1+e is g^e.
    FieldElem element(std::int64_t index) const;
    std::int64_t index_of(FieldElem x) const;

    /// Image of the integer n under the prime-subfield embedding (n mod p) * 1.
    FieldElem of_int(std::int64_t n) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, std::int64_t e) const; // 0^0 == 1

    // rep-level arithmetic for hot loops (no FieldElem wrapping)
    std::int32_t add_rep(std::int32_t a, std::int32_t b) const;
    std::int32_t mul_rep(std::int32_t a, std::int32_t b) const;

    /// True when d = p^r for some divisor r of R.
    bool is_subfield_size(std::int64_t d) const;

    /// Canonical generator of the size-d subfield: g^{(q-1)/(d-1)}.
    FieldElem subfield_generator(std::int64_t d) const;

    /// The size-d subfield in canonical order: 0 first, then ascending powers
    /// of the canonical subfield generator. Throws NotASubfieldSize.
    std::vector<FieldElem> subfield_elements(std::int64_t d) const;

    /// Membership test x in GF(d), i.e. x^d == x.
    bool in_subfield(FieldElem x, std::int64_t d) const;

    /// Sum of a^s over all a in the size-d subfield: 0 for 0 <= s <= d-2 and
    /// -1 for s = d-1. Throws ExponentOutOfRange outside [0, d-1].
    FieldElem power_sum(std::int64_t d, std::int64_t s) const;

    /// Packed coefficient view sum c_i p^i of the polynomial representative
    /// (used for construction, tests and deterministic orderings).
    std::int64_t packed(FieldElem x) const;
    FieldElem from_packed(std::int64_t v) const;

    std::string label(FieldElem x) const; // "0", "1", "g^3", ...
    FieldElem parse_label(std::string_view s) const;

private:
    std::int64_t p_;
    int R_;
    std::int64_t q_;      // p^R
    std::int64_t order_;  // q - 1
    std::vector<std::int64_t> modulus_;
    std::vector<int> subfield_degrees_;
    std::vector<std::int32_t> log_;     // packed value -> exponent, log_[0] unused
    std::vector<std::int32_t> antilog_; // exponent -> packed value
    std::vector<std::int32_t> zech_;    // zech_[e] = log(g^e + 1), kZeroRep if g^e = -1
    std::int32_t neg_shift_;            // exponent of -1 (0 in characteristic 2)

    void build(const std::vector<std::int64_t>& modulus);
};

/// Canonical multiplicative embedding GF(p^r) -> GF(p^R) for r | R:
/// the generator of the source maps to the canonical subfield generator of
/// its size in the target, zero maps to zero.
FieldElem embed(FieldElem x, const FieldCtx& target);

inline FieldElem operator+(FieldElem a, FieldElem b) { return a.ctx->add(a, b); }
inline FieldElem operator-(FieldElem a, FieldElem b) { return a.ctx->sub(a, b); }
inline FieldElem operator-(FieldElem a) { return a.ctx->neg(a); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return a.ctx->mul(a, b); }
inline FieldElem operator/(FieldElem a, FieldElem b) { return a.ctx->div(a, b); }

/// Parses a field spec string "p^R" (e.g. "2^2", "9" meaning 9 = 3^2 is not
/// accepted; the base must be prime). Throws ParseError.
std::pair<std::int64_t, int> parse_field_spec(std::string_view spec);

} // namespace cartcode

#endif // CARTCODE_GF_HPP
