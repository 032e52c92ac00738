#include <doctest.h>

#include <random>
#include <set>

#include "cartcode/codes.hpp"
#include "cartcode/groups.hpp"
#include "cartcode/poly.hpp"
#include "testutil.hpp"

using namespace cartcode;
using namespace cartcode::testutil;

TEST_CASE("reduction sends X^d to X") {
    FieldCtx f2(2, 1);
    NestedProduct p22(f2, {{2, 2}});
    auto f = ReducedPoly::monomial(p22, {2, 0}, f2.one()); // X1^2 -> X1
    auto x1 = ReducedPoly::monomial(p22, {1, 0}, f2.one());
    CHECK(f == x1);

    FieldCtx f4(2, 2);
    NestedProduct p224(f4, {{2, 2}, {4, 1}});
    auto x3e5 = ReducedPoly::monomial(p224, {0, 0, 5}, f4.one());
    auto x3e2 = ReducedPoly::monomial(p224, {0, 0, 2}, f4.one());
    CHECK(x3e5 == x3e2);
    // evaluation agrees with the raw exponent on every element
    for (auto& a : f4.subfield_elements(4)) CHECK(f4.pow(a, 5) == f4.pow(a, 2));

    auto one = ReducedPoly::constant(p224, f4.one());
    CHECK(one == ReducedPoly::monomial(p224, {0, 0, 0}, f4.one()));
    CHECK(one.degree() == 0);
    CHECK_FALSE(ReducedPoly(p224).degree().has_value()); // zero polynomial sentinel
}

TEST_CASE("reduction is idempotent and evaluation-preserving on random input") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 1}, {4, 2}});
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        auto raw = random_raw_terms(prod, 4, 9, rng);
        auto f = ReducedPoly::from_terms(prod, raw);
        // re-reducing the stored terms changes nothing
        std::vector<std::pair<std::vector<std::int64_t>, FieldElem>> again;
        for (const auto& [e, c] : f.terms())
            again.push_back({std::vector<std::int64_t>(e.begin(), e.end()), c});
        CHECK(ReducedPoly::from_terms(prod, again) == f);
        // pointwise agreement with the unreduced terms
        for (const auto& pt : prod.points()) {
            FieldElem direct = f4.zero();
            for (const auto& [e, c] : raw) {
                FieldElem t = c;
                for (int i = 0; i < prod.m(); ++i) t = f4.mul(t, f4.pow(pt[i], e[i]));
                direct = f4.add(direct, t);
            }
            CHECK(f.eval(pt) == direct);
        }
    }
}

TEST_CASE("evaluation map: worked examples") {
    FieldCtx f2(2, 1);
    NestedProduct p22(f2, {{2, 2}});
    auto ones = ReducedPoly::constant(p22, f2.one()).evaluate();
    CHECK(ones.weight() == 4);

    // 1 - X1 evaluates to (1,1,0,0) in point order
    auto f = ReducedPoly::constant(p22, f2.one()) -
             ReducedPoly::monomial(p22, {1, 0}, f2.one());
    auto c = f.evaluate();
    CHECK(c[0] == f2.one());
    CHECK(c[1] == f2.one());
    CHECK(c[2].is_zero());
    CHECK(c[3].is_zero());
    CHECK(c.weight() == 2);
    CHECK(c.support() == std::vector<std::int64_t>{0, 1});

    CHECK(ReducedPoly(p22).evaluate().weight() == 0);
}

TEST_CASE("evaluation is linear and injective on reduced polynomials") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 1}, {4, 1}});
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 500; ++iter) {
        auto f = random_reduced_poly(prod, 3, rng);
        auto g = random_reduced_poly(prod, 3, rng);
        auto alpha = random_elem(f4, rng);
        auto lhs = (f.scaled(alpha) + g).evaluate();
        auto rhs_f = f.evaluate();
        auto rhs_g = g.evaluate();
        for (std::int64_t i = 0; i < lhs.length(); ++i)
            CHECK(lhs[i] == f4.add(f4.mul(alpha, rhs_f[i]), rhs_g[i]));
    }

    // exhaustive injectivity on a tiny domain: 16 reduced polynomials
    FieldCtx f2(2, 1);
    NestedProduct tiny(f2, {{2, 2}});
    std::set<std::string> images;
    int total = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::pair<std::vector<std::int64_t>, FieldElem>> terms;
        const std::vector<std::vector<std::int64_t>> exps = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) terms.push_back({exps[b], f2.one()});
        images.insert(ReducedPoly::from_terms(tiny, terms).evaluate().key());
        ++total;
    }
    CHECK(static_cast<int>(images.size()) == total);
}

TEST_CASE("affine composition: identity, shift, degree preservation") {
    FieldCtx f2(2, 1);
    NestedProduct p22(f2, {{2, 2}});
    auto x1 = ReducedPoly::monomial(p22, {1, 0}, f2.one());

    auto id = identity_transform(p22);
    CHECK(x1.compose_affine(id) == x1);

    // X -> X + (1,0) turns X1 into X1 + 1
    AffineTransform shift = identity_transform(p22);
    shift.shift[0] = f2.one();
    auto composed = x1.compose_affine(shift);
    CHECK(composed == x1 + ReducedPoly::constant(p22, f2.one()));

    // degree preservation and pointwise contract on random polys/transforms
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    std::mt19937_64 rng(7);
    const auto gens = aff_generators(prod);
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_reduced_poly(prod, 3, rng);
        auto g = random_group_elem(prod, gens, rng);
        auto fg = f.compose_affine(g.transform);
        CHECK(fg.degree() == f.degree());
        for (const auto& pt : prod.points())
            CHECK(fg.eval(pt) == f.eval(g.transform.apply(pt)));
    }

    // invalid transforms are rejected
    std::vector<FieldElem> bad(p22.m() * p22.m(), f2.zero()); // singular
    CHECK_THROWS_AS(x1.compose_affine(AffineTransform{BlockMatrix(p22, bad),
                                                      {f2.zero(), f2.zero()}}),
                    InvalidTransform);
}

TEST_CASE("canonical minimum-weight polynomials h_k^Omega") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});

    // full-ell case: h equals prod (1 - X_i^{d_i-1}) independently of k, Omega
    auto dec5 = prod.decompose(5); // ell = d_3 - 1 = 3
    ReducedPoly expect = ReducedPoly::constant(prod, f4.one());
    for (int i = 1; i <= 3; ++i) {
        std::vector<std::int64_t> e(3, 0);
        e[i - 1] = prod.sizes()[i - 1] - 1;
        expect = expect * (ReducedPoly::constant(prod, f4.one()) -
                           ReducedPoly::monomial(prod, e, f4.one()));
    }
    auto all4 = f4.subfield_elements(4);
    std::vector<FieldElem> omega_nonzero(all4.begin() + 1, all4.end());
    CHECK(build_h(prod, dec5, 3, omega_nonzero) == expect);

    // u=3: k=3 with |Omega| = 1 has weight 3
    auto dec3 = prod.decompose(3);
    auto h3 = build_h(prod, dec3, 3, std::vector<FieldElem>{f4.zero()});
    CHECK(h3.evaluate().weight() == 3);
    CHECK(h3.degree() == 3);

    // second domain, u=8: k=1 with empty Omega has weight 3
    FieldCtx f9(3, 2);
    NestedProduct p39(f9, {{3, 1}, {9, 1}});
    auto dec8 = p39.decompose(8);
    auto h8 = build_h(p39, dec8, 1, {});
    CHECK(h8.evaluate().weight() == 3);
    CHECK(h8.degree() == 8);

    // every admissible (k, Omega) realizes the minimum distance
    for (std::int64_t u = 1; u <= prod.max_degree(); ++u) {
        auto dec = prod.decompose(u);
        const std::int64_t delta = min_distance(prod, u);
        for (int k = dec.k0; k <= dec.j + 1; ++k) {
            if (prod.sizes()[k - 1] < prod.sizes()[dec.j] - dec.ell) continue;
            const std::int64_t want =
                prod.sizes()[k - 1] - (prod.sizes()[dec.j] - dec.ell);
            for (const auto& orbit : orbit_reps_omega(f4, prod.sizes()[k - 1], want)) {
                auto h = build_h(prod, dec, k, orbit.rep);
                CHECK(h.evaluate().weight() == delta);
                CHECK(h.degree() == u);
            }
        }
    }

    // error paths
    CHECK_THROWS_AS(build_h(prod, dec3, 1, {}), KOutOfRange); // d_1 = 2 < 3
    CHECK_THROWS_AS(build_h(prod, dec3, 3, {}), BadOmegaSize);
}

TEST_CASE("h_k^Omega rejects Omega outside the coordinate subfield") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    auto dec4 = prod.decompose(4); // j=2, ell=2; k=2 admissible with |Omega| = 0
    // k=1: |Omega| must be 0; a GF(4)-only element in a GF(2) coordinate fails
    auto dec5 = prod.decompose(5);
    CHECK_THROWS_AS(build_h(prod, dec5, 1, std::vector<FieldElem>{f4.generator()}),
                    OmegaNotInSubfield);
    CHECK_NOTHROW(build_h(prod, dec4, 2, {}));
}

TEST_CASE("polynomial text format round-trips") {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_reduced_poly(prod, 4, rng);
        CHECK(parse_poly(prod, format_poly(f)) == f);
    }
    CHECK(format_poly(ReducedPoly(prod)) == "0");
    CHECK(parse_poly(prod, "0").is_zero());
    CHECK(parse_poly(prod, "1*X1^1*X3^2 + g^2") ==
          parse_poly(prod, "g^2 + X1*X3^2"));
    CHECK_THROWS_AS(parse_poly(prod, "1*X9"), ParseError);
    CHECK_THROWS_AS(parse_poly(prod, "g^2*g^1"), ParseError);
    CHECK_THROWS_AS(parse_poly(prod, ""), ParseError);
}
