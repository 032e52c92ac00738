#ifndef CARTCODE_CODES_HPP
#define CARTCODE_CODES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cartcode/poly.hpp"

namespace cartcode {

struct CodeSummary {
    std::int64_t u;
    std::int64_t n;
    std::int64_t dim;
    std::int64_t mindist;
};

/// Exponent vectors of the monomial basis: all e with e_i <= d_i - 1 and
/// sum e_i <= u, in point-enumeration order (last coordinate fastest).
/// u >= -1; u = -1 yields the empty basis.
std::vector<std::vector<std::int32_t>> monomial_basis(const NestedProduct& prod,
                                                      std::int64_t u);

/// Dimension by the alternating binomial sum over coordinate subsets, with
/// vanishing binomials for negative lower arguments. Equals the monomial
/// basis count. 0 <= u <= K (DegreeOutOfRange).
std::int64_t dimension(const NestedProduct& prod, std::int64_t u);

/// Minimum distance: n for u = 0, else (d_{j+1} - ell) d_{j+2} ... d_m.
std::int64_t min_distance(const NestedProduct& prod, std::int64_t u);

CodeSummary code_summary(const NestedProduct& prod, std::int64_t u);

/// Dual scaling vector (w_1, ..., w_n): w_j = (prod_i g_i'(P_j))^{-1} with
/// g_i(X) = X^{d_i} - X and the derivative taken formally in characteristic p.
/// The order-u code's dual is the w-scaled order-(K-u-1) code.
std::vector<FieldElem> dual_scaling(const NestedProduct& prod);

/// Evaluations of the monomial basis, in basis order.
std::vector<Codeword> basis_codewords(const NestedProduct& prod, std::int64_t u);

struct ScanResult {
    std::int64_t min_weight; // minimum nonzero weight
    std::uint64_t min_count; // number of codewords attaining it
};

/// Full histogram weight -> count over all q^dim codewords (including the
/// zero word), by incremental odometer scan, partitioned across workers.
/// Throws TooLarge when q^dim > cap.
std::map<std::int64_t, std::uint64_t> weight_distribution(const NestedProduct& prod,
                                                          std::int64_t u,
                                                          std::uint64_t cap,
                                                          int workers = 0);

ScanResult exhaustive_min_weight(const NestedProduct& prod, std::int64_t u,
                                 std::uint64_t cap, int workers = 0);

} // namespace cartcode

#endif // CARTCODE_CODES_HPP
