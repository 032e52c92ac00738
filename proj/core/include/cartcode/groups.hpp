#ifndef CARTCODE_GROUPS_HPP
#define CARTCODE_GROUPS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cartcode/bigint.hpp"
#include "cartcode/poly.hpp"

namespace cartcode {

/// m x m matrix over the ambient field whose rows respect the block
/// structure of the domain: entry (i,z) lies in the subfield of row i's
/// block and vanishes for columns beyond the row's block boundary
/// (block lower triangular). Invertibility is equivalent to every diagonal
/// block being invertible over its block field.
class BlockMatrix {
public:
    BlockMatrix(const NestedProduct& prod, std::vector<FieldElem> entries);

    const NestedProduct& prod() const { return *prod_; }
    FieldElem at(int i, int z) const { return entries_[i * prod_->m() + z]; } // 0-based
    const std::vector<FieldElem>& entries() const { return entries_; }

    bool operator==(const BlockMatrix& rhs) const { return entries_ == rhs.entries_; }

private:
    const NestedProduct* prod_;
    std::vector<FieldElem> entries_;
};

/// Checks all three membership conditions (row subfields, block-triangular
/// zeros, invertible diagonal blocks) for a raw m x m matrix.
bool is_in_G(const NestedProduct& prod, std::span<const FieldElem> entries);

BlockMatrix identity_matrix(const NestedProduct& prod);

/// X -> A X + b with A in the block group and b a domain point; maps the
/// domain bijectively onto itself.
struct AffineTransform {
    BlockMatrix matrix;
    std::vector<FieldElem> shift;

    std::vector<FieldElem> apply(std::span<const FieldElem> pt) const;
};

AffineTransform identity_transform(const NestedProduct& prod);
bool is_valid_transform(const AffineTransform& t);

/// apply(compose(t1, t2), X) == t1.apply(t2.apply(X))
AffineTransform compose(const AffineTransform& t1, const AffineTransform& t2);

/// Index permutation induced on the point list: perm[i] is the index of
/// T(P_i). Throws InvalidTransform when T is not valid for the domain.
std::vector<std::int32_t> point_permutation(const AffineTransform& t);

/// Element of the product group F_q^* x Aff(A) acting on codewords by
/// (gamma, sigma) . c_f = gamma * c_{f o sigma}.
struct GroupElem {
    FieldElem scalar;
    AffineTransform transform;
};

GroupElem identity_element(const NestedProduct& prod);

/// Composition in action order: act(compose(g2, g1), f) == act(g2, act(g1, f)).
/// Note the transform composes in the opposite order of the scalars.
GroupElem compose(const GroupElem& g2, const GroupElem& g1);

ReducedPoly act(const GroupElem& g, const ReducedPoly& f);
Codeword act(const GroupElem& g, const Codeword& c);

/// |Aff(A)| by the closed-form product over blocks.
BigUint aff_group_order(const NestedProduct& prod);

/// |F_q^* x Aff(A)| = (q-1) |Aff(A)|.
BigUint full_group_order(const NestedProduct& prod);

/// Visits every matrix of the block group exactly once (odometer over the
/// allowed cells, filtered by per-block invertibility). Throws TooLarge when
/// the group has more than cap elements. Returns the number visited.
std::uint64_t for_each_matrix_in_G(const NestedProduct& prod, std::uint64_t cap,
                                   const std::function<void(const BlockMatrix&)>& fn);

std::vector<BlockMatrix> enumerate_G(const NestedProduct& prod, std::uint64_t cap);

/// All (a, b) with a != 0 in the size-dk subfield such that a*Omega + b = Omega,
/// by brute force over the dk(dk-1) pairs.
std::vector<std::pair<FieldElem, FieldElem>> stab_delta_omega(
    const FieldCtx& ctx, std::int64_t dk, std::span<const FieldElem> omega);

/// One representative per orbit of the 1-dimensional affine group of the
/// size-dk subfield acting on its s-element subsets, with orbit sizes.
/// Representatives are the lexicographically least subsets of their orbits;
/// orbit sizes sum to C(dk, s).
struct OmegaOrbit {
    std::vector<FieldElem> rep;
    std::uint64_t size;
};
std::vector<OmegaOrbit> orbit_reps_omega(const FieldCtx& ctx, std::int64_t dk,
                                         std::int64_t s);

/// Generating set of Aff(A): per-block elementary transvections and
/// dilations plus per-coordinate translations over a prime-field basis.
std::vector<AffineTransform> aff_generators(const NestedProduct& prod);

struct EnumerateOptions {
    /// Budget on group-element applications (BFS edge applications, or
    /// literal group elements in full_group mode).
    std::uint64_t max_applications = 100'000'000;
    /// Apply every element of the full group to every h_k^Omega instead of
    /// closing over generators. Same result set; used for cross-validation.
    bool full_group = false;
    /// Generate every admissible k instead of one representative per block.
    bool all_k = false;
    /// Worker threads for full_group mode (0 = hardware concurrency).
    int workers = 0;
};

/// The set of minimum-weight codewords of the order-u code, produced as the
/// group orbit(s) of the canonical polynomials h_k^Omega and deduplicated by
/// canonical byte encoding. Codewords are sorted by that encoding.
struct MinWeightSet {
    std::int64_t u = 0;
    std::int64_t weight = 0;
    std::vector<Codeword> codewords;
    std::map<int, std::uint64_t> per_k; // generating k -> |N^(k)|
};

MinWeightSet enumerate_min_weight(const NestedProduct& prod, std::int64_t u,
                                  const EnumerateOptions& opts = {});

/// N^(k) alone (all Omega for that k).
std::vector<Codeword> enumerate_min_weight_k(const NestedProduct& prod, std::int64_t u,
                                             int k, const EnumerateOptions& opts = {});

/// Orbit of an arbitrary codeword under F_q^* x Aff(A).
std::vector<Codeword> orbit_of(const Codeword& c, const EnumerateOptions& opts = {});

/// |stab(c)| by literal iteration over the full group; cap bounds the group
/// order (TooLarge).
std::uint64_t stabilizer_order(const Codeword& c, std::uint64_t cap);

} // namespace cartcode

#endif // CARTCODE_GROUPS_HPP
