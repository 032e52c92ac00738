#ifndef CARTCODE_DOMAIN_HPP
#define CARTCODE_DOMAIN_HPP

#include <cstdint>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

#include "cartcode/gf.hpp"

namespace cartcode {

/// Unique decomposition of a degree 1 <= u <= K as
/// u = sum_{i<=j} (d_i - 1) + ell with 0 <= j < m and 0 < ell <= d_{j+1}-1.
/// r is the block index of coordinate j+1 and k0 the least coordinate k with
/// d_k >= d_{j+1} - ell.
struct UDecomposition {
    std::int64_t u;
    int j;
    std::int64_t ell;
    int r;
    int k0;
};

/// The evaluation domain: a Cartesian product of nested subfields
/// F_1^{mu_1} x ... x F_lambda^{mu_lambda} of the ambient field, with the
/// block bookkeeping (boundaries s_t, per-coordinate block index t_k) and a
/// fixed point enumeration.
///
/// Coordinates k and blocks t are 1-based throughout, matching the usual
/// conventions for these codes; point indices are 0-based.
///
/// Point order contract: mixed-radix lexicographic with the LAST coordinate
/// varying fastest, each coordinate running through subfield_elements order.
///
/// Immutable after construction and safe to share across threads.
class NestedProduct {
public:
    /// blocks = list of (subfield size, multiplicity), sizes strictly
    /// increasing and forming a chain of subfields.
    NestedProduct(const FieldCtx& ctx,
                  const std::vector<std::pair<std::int64_t, int>>& blocks);

    /// Convenience: per-coordinate sizes, e.g. {2,2,4}; consecutive equal
    /// sizes are grouped into blocks.
    static NestedProduct from_sizes(const FieldCtx& ctx,
                                    const std::vector<std::int64_t>& sizes);

    NestedProduct(const NestedProduct&) = delete;
    NestedProduct& operator=(const NestedProduct&) = delete;

    const FieldCtx& ctx() const { return *ctx_; }
    int m() const { return m_; }
    const std::vector<std::int64_t>& sizes() const { return d_; }
    std::int64_t coord_size(int k) const;   // d_k
    int blocks() const { return lambda_; }  // lambda
    int multiplicity(int t) const;          // mu_t
    std::int64_t block_field_size(int t) const;
    int boundary(int t) const;              // s_t, 0 <= t <= lambda
    int block_of(int k) const;              // t_k; throws IndexOutOfRange
    std::int64_t point_count() const { return n_; }
    std::int64_t max_degree() const { return K_; } // K = sum (d_i - 1)

    /// All n points in the contractual order.
    const std::vector<std::vector<FieldElem>>& points() const;
    const std::vector<FieldElem>& point(std::int64_t index) const;
    std::int64_t point_index(std::span<const FieldElem> pt) const;

    /// Elements of the coordinate-k subfield in canonical order.
    const std::vector<FieldElem>& coord_elements(int k) const;

    /// Position of x in coord_elements(k); throws BadParameters if x is not
    /// in that subfield.
    std::int64_t coord_digit(int k, FieldElem x) const;

    UDecomposition decompose(std::int64_t u) const; // throws DegreeOutOfRange

    std::string describe() const; // e.g. "F_2 x F_2 x F_4 over GF(4)"

private:
    const FieldCtx* ctx_;
    int m_;
    std::vector<std::int64_t> d_;       // size m
    int lambda_;
    std::vector<int> mu_;               // size lambda
    std::vector<int> s_;                // size lambda+1, s_[0] = 0
    std::vector<int> tk_;               // size m, block index per coordinate
    std::int64_t n_;
    std::int64_t K_;
    std::vector<std::int64_t> stride_;  // size m, stride_[m-1] = 1
    std::vector<std::vector<FieldElem>> coord_elems_; // per coordinate

    mutable std::once_flag points_once_;
    mutable std::vector<std::vector<FieldElem>> points_;

    void build_points() const;
};

/// Parses a product spec string "d1,d2,..." (e.g. "2,2,4").
std::vector<std::int64_t> parse_product_spec(std::string_view spec);

/// Groups consecutive equal sizes into (size, multiplicity) blocks.
std::vector<std::pair<std::int64_t, int>> group_sizes_into_blocks(
    const std::vector<std::int64_t>& sizes);

} // namespace cartcode

#endif // CARTCODE_DOMAIN_HPP
