#ifndef CARTCODE_COUNTING_HPP
#define CARTCODE_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartcode/bigint.hpp"
#include "cartcode/domain.hpp"

namespace cartcode {

/// C(n, k); zero when k < 0 or k > n.
BigUint binomial(std::int64_t n, std::int64_t k);

/// Gaussian binomial [m t]_q: the number of t-dimensional subspaces of an
/// m-dimensional space over a size-q field. Zero when t < 0 or t > m.
BigUint q_binomial(std::int64_t m, std::int64_t t, std::int64_t q);

/// Closed-form count of the minimum-weight codewords of the order-u code.
struct MinWtReport {
    std::int64_t u = 0;
    std::optional<UDecomposition> dec;                 // empty for u <= 0
    std::vector<std::pair<int, BigUint>> per_k;        // block-representative k -> |N^(k)|
    BigUint total;
    /// k0 as the worked examples tabulate it: the definitional least k on the
    /// ell < d_{j+1}-1 branch, j+1 on the ell = d_{j+1}-1 branch (where every
    /// admissible k yields the same set).
    int k0_display = 0;
};

/// Count for one representative coordinate k on the ell < d_{j+1}-1 branch.
/// Requires k0 <= k <= j+1 and d_k >= d_{j+1}-ell (KOutOfRange).
BigUint count_minwt_k(const NestedProduct& prod, const UDecomposition& dec, int k);

/// Count over all minimum-weight codewords, -1 <= u <= K. u = -1 yields 0,
/// u = 0 yields q-1.
MinWtReport count_minwt(const NestedProduct& prod, std::int64_t u);

/// Minimum-weight codeword count of a Reed-Solomon code of length n and
/// dimension k over a size-q field: (q-1) C(n, n-k+1). Requires
/// 1 <= k <= n <= q (BadParameters).
BigUint rs_count(std::int64_t q, std::int64_t n, std::int64_t k_dim);

/// Minimum-weight codeword count of the order-u Reed-Muller code in m
/// variables over a size-q field. Requires 0 <= u <= m(q-1)
/// (DegreeOutOfRange). With u = t(q-1) + s, 0 <= s < q-1:
///   (q-1) q^t [m t]_q              when s = 0
///   (q-1) q^t [m t]_q [m-t 1]_q C(q,s)   otherwise.
BigUint rm_count(std::int64_t q, std::int64_t u, std::int64_t m);

} // namespace cartcode

#endif // CARTCODE_COUNTING_HPP
