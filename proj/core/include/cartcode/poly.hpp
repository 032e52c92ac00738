#ifndef CARTCODE_POLY_HPP
#define CARTCODE_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartcode/domain.hpp"

namespace cartcode {

struct AffineTransform; // groups.hpp

/// Evaluation vector (f(P_0), ..., f(P_{n-1})) over a domain, in point order.
class Codeword {
public:
    Codeword(const NestedProduct& prod, std::vector<FieldElem> values);

    const NestedProduct& prod() const { return *prod_; }
    const std::vector<FieldElem>& values() const { return values_; }
    FieldElem operator[](std::int64_t i) const { return values_[i]; }
    std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }

    std::int64_t weight() const;
    std::vector<std::int64_t> support() const;

    /// Canonical fixed-width byte encoding (per-entry index into the field
    /// order), usable as a hash/set key and for deterministic sorting.
    std::string key() const;

    Codeword scaled(FieldElem gamma) const;
    bool operator==(const Codeword& other) const { return values_ == other.values_; }

private:
    const NestedProduct* prod_;
    std::vector<FieldElem> values_;
};

/// Multivariate polynomial in reduced form: every stored exponent vector
/// satisfies e_i <= d_i - 1 (the canonical representative modulo the ideal
/// generated by X_i^{d_i} - X_i), and no zero coefficients are stored.
/// Immutable value semantics; all operations return new polynomials.
class ReducedPoly {
public:
    using Exponents = std::vector<std::int32_t>;
    using TermMap = std::map<Exponents, FieldElem>;

    explicit ReducedPoly(const NestedProduct& prod); // zero polynomial

    static ReducedPoly constant(const NestedProduct& prod, FieldElem c);
    static ReducedPoly monomial(const NestedProduct& prod,
                                const std::vector<std::int64_t>& exps, FieldElem c);
    /// Builds from arbitrary raw terms, reducing exponents via X^{d} -> X and
    /// dropping cancelled coefficients. This is the reduction map.
    static ReducedPoly from_terms(
        const NestedProduct& prod,
        const std::vector<std::pair<std::vector<std::int64_t>, FieldElem>>& raw);

    const NestedProduct& prod() const { return *prod_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; nullopt for the zero polynomial.
    std::optional<std::int64_t> degree() const;

    FieldElem coeff(const Exponents& e) const;

    ReducedPoly operator+(const ReducedPoly& rhs) const;
    ReducedPoly operator-(const ReducedPoly& rhs) const;
    ReducedPoly operator*(const ReducedPoly& rhs) const;
    ReducedPoly scaled(FieldElem c) const;

    FieldElem eval(std::span<const FieldElem> point) const;
    Codeword evaluate() const;

    /// Reduced representative of f(A X + b); the transform must be valid for
    /// the domain (matrix in the block group, shift a domain point), else
    /// InvalidTransform.
    ReducedPoly compose_affine(const AffineTransform& t) const;

    bool operator==(const ReducedPoly& rhs) const { return terms_ == rhs.terms_; }

private:
    const NestedProduct* prod_;
    TermMap terms_;

    void add_term(Exponents e, FieldElem c); // assumes already reduced exponents
};

/// The canonical minimum-weight polynomial
///   h_k^Omega = prod_{i != k, i <= j+1} (1 - X_i^{d_i-1}) * prod_{w in Omega} (X_k - w)
/// for a decomposition of u. Requires k0 <= k <= j+1 with d_k >= d_{j+1}-ell
/// (KOutOfRange), |Omega| = d_k - (d_{j+1}-ell) (BadOmegaSize) and
/// Omega contained in the coordinate-k subfield (OmegaNotInSubfield).
ReducedPoly build_h(const NestedProduct& prod, const UDecomposition& dec, int k,
                    std::span<const FieldElem> omega);

/// Text form: sum of terms "c*X1^e1*X2^e2" with coefficients "0", "1" or
/// "g^k"; the zero polynomial prints as "0".
std::string format_poly(const ReducedPoly& f);
ReducedPoly parse_poly(const NestedProduct& prod, std::string_view text);

} // namespace cartcode

#endif // CARTCODE_POLY_HPP
