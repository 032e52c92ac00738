#include <doctest.h>

#include <memory>
#include <random>
#include <set>
#include <unordered_set>

#include "cartcode/codes.hpp"
#include "cartcode/counting.hpp"
#include "cartcode/groups.hpp"
#include "testutil.hpp"

using namespace cartcode;
using namespace cartcode::testutil;

namespace {

std::set<std::string> key_set(const std::vector<Codeword>& words) {
    std::set<std::string> out;
    for (const auto& c : words) out.insert(c.key());
    return out;
}

/// Closure of the generator transforms as permutations of the domain.
std::uint64_t generator_closure_size(const NestedProduct& prod) {
    std::vector<std::vector<std::int32_t>> gens;
    for (const auto& t : aff_generators(prod)) gens.push_back(point_permutation(t));
    const std::int64_t n = prod.point_count();
    std::vector<std::int32_t> id(n);
    for (std::int64_t i = 0; i < n; ++i) id[i] = static_cast<std::int32_t>(i);
    std::set<std::vector<std::int32_t>> seen{id};
    std::vector<std::vector<std::int32_t>> stack{id};
    while (!stack.empty()) {
        auto cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& g : gens) {
            std::vector<std::int32_t> comp(n);
            for (std::int64_t i = 0; i < n; ++i) comp[i] = cur[g[i]];
            if (seen.insert(comp).second) stack.push_back(comp);
        }
    }
    return seen.size();
}

} // namespace

TEST_CASE("membership in the block matrix group") {
    FieldCtx f4(2, 2);
    NestedProduct p24(f4, {{2, 1}, {4, 1}});
    CHECK(is_in_G(p24, identity_matrix(p24).entries()));

    // entry (1,2) = primitive element violates both the subfield and the
    // triangularity constraint
    std::vector<FieldElem> e = identity_matrix(p24).entries();
    e[0 * 2 + 1] = f4.generator();
    CHECK_FALSE(is_in_G(p24, e));
    // even the value 1 is banned beyond the block boundary
    e[0 * 2 + 1] = f4.one();
    CHECK_FALSE(is_in_G(p24, e));

    // singular matrices are rejected
    std::vector<FieldElem> zero(4, f4.zero());
    CHECK_FALSE(is_in_G(p24, zero));

    // single block: exactly the invertible matrices over the block field
    FieldCtx f2(2, 1);
    NestedProduct p22(f2, {{2, 2}});
    int invertible = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<FieldElem> m(4, f2.zero());
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) m[b] = f2.one();
        const bool det = (!m[0].is_zero() && !m[3].is_zero() && (m[1].is_zero() || m[2].is_zero())) ||
                         (!m[1].is_zero() && !m[2].is_zero() && (m[0].is_zero() || m[3].is_zero()));
        if (is_in_G(p22, m)) ++invertible;
        CHECK(is_in_G(p22, m) == det);
    }
    CHECK(invertible == 6);
}

TEST_CASE("affine group order: closed form vs direct enumeration") {
    FieldCtx f4(2, 2);
    for (std::int64_t q : {2, 3, 4, 5}) {
        FieldCtx f(q == 4 ? 2 : q, q == 4 ? 2 : 1);
        NestedProduct line(f, {{q, 1}});
        CHECK(aff_group_order(line) == BigUint(static_cast<std::uint64_t>(q * (q - 1))));
    }

    NestedProduct p24(f4, {{2, 1}, {4, 1}});
    CHECK(aff_group_order(p24) == BigUint(96));
    CHECK(enumerate_G(p24, 1 << 20).size() == 12);

    FieldCtx f2(2, 1);
    NestedProduct p22(f2, {{2, 2}});
    CHECK(aff_group_order(p22) == BigUint(24));
    CHECK(enumerate_G(p22, 1 << 20).size() == 6);

    NestedProduct p224(f4, {{2, 2}, {4, 1}});
    CHECK(aff_group_order(p224) == BigUint(4608));
    CHECK(full_group_order(p224) == BigUint(3 * 4608));

    // every enumerated matrix passes the membership test, none repeats, and
    // matrices x shifts give bijections
    for (const auto* p : {&p24, &p22}) {
        std::set<std::string> seen;
        std::uint64_t count = for_each_matrix_in_G(*p, 1 << 20, [&](const BlockMatrix& mt) {
            CHECK(is_in_G(*p, mt.entries()));
            std::string key;
            for (const auto& x : mt.entries())
                key += std::to_string(p->ctx().index_of(x)) + ",";
            CHECK(seen.insert(key).second);
            AffineTransform t{mt, std::vector<FieldElem>(p->m(), p->ctx().zero())};
            for (std::int64_t b = 0; b < p->point_count(); ++b) {
                t.shift = p->point(b);
                auto perm = point_permutation(t);
                std::vector<bool> hit(perm.size(), false);
                for (auto idx : perm) {
                    CHECK_FALSE(hit[idx]);
                    hit[idx] = true;
                }
            }
        });
        BigUint expect = aff_group_order(*p);
        expect.div_exact(static_cast<std::uint64_t>(p->point_count()));
        CHECK(BigUint(count) == expect);
    }
    CHECK_THROWS_AS(enumerate_G(p224, 10), TooLarge);
}

TEST_CASE("generator closure recovers the whole affine group") {
    FieldCtx f2(2, 1);
    FieldCtx f4(2, 2);
    FieldCtx f9(3, 2);
    std::vector<std::unique_ptr<NestedProduct>> prods;
    prods.push_back(std::make_unique<NestedProduct>(f2, std::vector<std::pair<std::int64_t, int>>{{2, 2}}));
    prods.push_back(std::make_unique<NestedProduct>(f4, std::vector<std::pair<std::int64_t, int>>{{2, 1}, {4, 1}}));
    prods.push_back(std::make_unique<NestedProduct>(f4, std::vector<std::pair<std::int64_t, int>>{{2, 2}, {4, 1}}));
    prods.push_back(std::make_unique<NestedProduct>(f9, std::vector<std::pair<std::int64_t, int>>{{3, 1}, {9, 1}}));
    prods.push_back(std::make_unique<NestedProduct>(f9, std::vector<std::pair<std::int64_t, int>>{{3, 2}}));
    for (const auto& p : prods)
        CHECK(BigUint(generator_closure_size(*p)) == aff_group_order(*p));
}

TEST_CASE("the group action on polynomials and codewords") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    std::mt19937_64 rng(2024);
    const auto gens = aff_generators(prod);

    auto f = random_reduced_poly(prod, 3, rng);
    CHECK(act(identity_element(prod), f) == f);

    for (int iter = 0; iter < 150; ++iter) {
        auto g1 = random_group_elem(prod, gens, rng);
        auto g2 = random_group_elem(prod, gens, rng);
        auto h = random_reduced_poly(prod, 3, rng);
        // action axiom
        CHECK(act(g2, act(g1, h)) == act(compose(g2, g1), h));
        // polynomial and codeword routes agree
        CHECK(act(g1, h).evaluate() == act(g1, h.evaluate()));
        // weight invariance
        CHECK(act(g1, h.evaluate()).weight() == h.evaluate().weight());
    }
}

TEST_CASE("subset stabilizers under the 1-dimensional affine group") {
    FieldCtx f4(2, 2);
    auto whole = f4.subfield_elements(4);

    CHECK(stab_delta_omega(f4, 4, {}).size() == 12);
    CHECK(stab_delta_omega(f4, 4, whole).size() == 12);

    // Omega = {0}: a arbitrary nonzero, b = 0
    auto fix0 = stab_delta_omega(f4, 4, std::vector<FieldElem>{f4.zero()});
    CHECK(fix0.size() == 3);
    for (const auto& [a, b] : fix0) {
        CHECK_FALSE(a.is_zero());
        CHECK(b.is_zero());
    }

    CHECK_THROWS_AS(
        stab_delta_omega(f4, 2, std::vector<FieldElem>{f4.generator()}),
        OmegaNotInSubfield);
}

TEST_CASE("orbit representatives of subsets") {
    FieldCtx f4(2, 2);
    auto one_orbit = orbit_reps_omega(f4, 4, 1);
    REQUIRE(one_orbit.size() == 1);
    CHECK(one_orbit[0].size == 4);

    std::uint64_t total = 0;
    for (const auto& o : orbit_reps_omega(f4, 4, 2)) total += o.size;
    CHECK(total == 6);

    // reciprocal sum identity as exact rationals, d in {2, 3, 4}
    FieldCtx f9(3, 2);
    for (auto [ctx, d] : std::vector<std::pair<const FieldCtx*, std::int64_t>>{
             {&f4, 2}, {&f4, 4}, {&f9, 3}, {&f9, 9}}) {
        for (std::int64_t s = 0; s <= d; ++s) {
            Rational sum(0, 1);
            std::uint64_t orbit_total = 0;
            for (const auto& o : orbit_reps_omega(*ctx, d, s)) {
                const auto stab = stab_delta_omega(*ctx, d, o.rep);
                sum = sum + Rational(1, static_cast<std::int64_t>(stab.size()));
                // orbit-stabilizer within the subset action
                CHECK(o.size * stab.size() == static_cast<std::uint64_t>(d * (d - 1)));
                orbit_total += o.size;
            }
            CHECK(orbit_total == binomial(d, s).to_u64());
            Rational expect(static_cast<std::int64_t>(binomial(d, s).to_u64()),
                            d * (d - 1));
            CHECK(sum == expect);
        }
    }
    CHECK_THROWS_AS(orbit_reps_omega(f4, 4, 5), SizeOutOfRange);
}

TEST_CASE("minimum-weight enumeration reproduces the worked instances") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});

    auto mw1 = enumerate_min_weight(prod, 1);
    CHECK(mw1.codewords.size() == 18);
    CHECK(mw1.weight == 8);

    auto mw4 = enumerate_min_weight(prod, 4);
    CHECK(mw4.codewords.size() == 360);
    CHECK(mw4.per_k == std::map<int, std::uint64_t>{{2, 288}, {3, 72}});
    for (const auto& c : mw4.codewords) CHECK(c.weight() == 2);

    FieldCtx f9(3, 2);
    NestedProduct p39(f9, {{3, 1}, {9, 1}});
    CHECK(enumerate_min_weight(p39, 10).codewords.size() == 216);

    // u = 0: exactly the q-1 constant words
    auto mw0 = enumerate_min_weight(prod, 0);
    CHECK(mw0.codewords.size() == 3);
    CHECK(mw0.weight == 16);

    CHECK_THROWS_AS(enumerate_min_weight(prod, 6), DegreeOutOfRange);
    EnumerateOptions tight;
    tight.max_applications = 10;
    CHECK_THROWS_AS(enumerate_min_weight(prod, 4, tight), TooLarge);
}

TEST_CASE("generator closure equals literal full-group application") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    EnumerateOptions full;
    full.full_group = true;
    full.max_applications = 200'000'000;
    for (std::int64_t u = 1; u <= 5; ++u) {
        auto bfs = enumerate_min_weight(prod, u);
        auto lit = enumerate_min_weight(prod, u, full);
        CHECK(key_set(bfs.codewords) == key_set(lit.codewords));
    }

    FieldCtx f9(3, 2);
    NestedProduct p39(f9, {{3, 1}, {9, 1}});
    for (std::int64_t u : {1, 2}) {
        auto bfs = enumerate_min_weight(p39, u);
        auto lit = enumerate_min_weight(p39, u, full);
        CHECK(key_set(bfs.codewords) == key_set(lit.codewords));
    }
}

TEST_CASE("per-coordinate sets: equal within a block, disjoint across blocks") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    // u = 4: k in {1, 2} (block 1) and k = 3 (block 2)
    auto n1 = key_set(enumerate_min_weight_k(prod, 4, 1));
    auto n2 = key_set(enumerate_min_weight_k(prod, 4, 2));
    auto n3 = key_set(enumerate_min_weight_k(prod, 4, 3));
    CHECK(n1 == n2);
    CHECK(n1.size() == 288);
    CHECK(n3.size() == 72);
    for (const auto& k : n1) CHECK(n3.count(k) == 0);
    CHECK_THROWS_AS(enumerate_min_weight_k(prod, 3, 2), KOutOfRange);
}

namespace {

/// Span membership over the field by Gaussian elimination: does adding the
/// candidate row increase the rank of the basis matrix?
bool in_span(const NestedProduct& prod, const std::vector<Codeword>& basis,
             const Codeword& candidate) {
    const FieldCtx& f = prod.ctx();
    const std::int64_t n = prod.point_count();
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& b : basis) rows.push_back(b.values());
    rows.push_back(candidate.values());
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < n && rank < static_cast<std::int64_t>(rows.size());
         ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < static_cast<std::int64_t>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        const FieldElem inv = f.inv(rows[rank][col]);
        for (std::int64_t r = rank + 1; r < static_cast<std::int64_t>(rows.size()); ++r) {
            const FieldElem factor = f.mul(rows[r][col], inv);
            if (factor.is_zero()) continue;
            for (std::int64_t cc = col; cc < n; ++cc)
                rows[r][cc] = f.sub(rows[r][cc], f.mul(factor, rows[rank][cc]));
        }
        ++rank;
    }
    // candidate is in the span iff the rank equals the basis rank
    std::vector<std::vector<FieldElem>> base_only;
    for (const auto& b : basis) base_only.push_back(b.values());
    std::int64_t base_rank = 0;
    for (std::int64_t col = 0;
         col < n && base_rank < static_cast<std::int64_t>(base_only.size()); ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = base_rank; r < static_cast<std::int64_t>(base_only.size());
             ++r)
            if (!base_only[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(base_only[pivot], base_only[base_rank]);
        const FieldElem inv = f.inv(base_only[base_rank][col]);
        for (std::int64_t r = base_rank + 1;
             r < static_cast<std::int64_t>(base_only.size()); ++r) {
            const FieldElem factor = f.mul(base_only[r][col], inv);
            if (factor.is_zero()) continue;
            for (std::int64_t cc = col; cc < n; ++cc)
                base_only[r][cc] =
                    f.sub(base_only[r][cc], f.mul(factor, base_only[base_rank][cc]));
        }
        ++base_rank;
    }
    return rank == base_rank;
}

} // namespace

TEST_CASE("enumerated codewords lie in the degree-u code") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    for (std::int64_t u : {1, 2, 3, 4}) {
        const auto basis = basis_codewords(prod, u);
        for (const auto& c : enumerate_min_weight(prod, u).codewords)
            REQUIRE(in_span(prod, basis, c));
    }
}

TEST_CASE("orbit-stabilizer consistency on sampled codewords") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    const BigUint group = full_group_order(prod);
    for (std::int64_t u : {1, 3, 4}) {
        auto dec = prod.decompose(u);
        // |Omega| for k = j+1 is ell
        for (const auto& orbit : orbit_reps_omega(f4, prod.sizes()[dec.j], dec.ell)) {
            auto c = build_h(prod, dec, dec.j + 1, orbit.rep).evaluate();
            const auto orb = orbit_of(c);
            const auto stab = stabilizer_order(c, 1 << 20);
            CHECK(BigUint(orb.size()) * BigUint(stab) == group);
        }
    }
}
