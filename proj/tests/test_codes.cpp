#include <doctest.h>

#include <memory>

#include "cartcode/codes.hpp"
#include "cartcode/counting.hpp"

using namespace cartcode;

namespace {

struct Fixture {
    FieldCtx f2{2, 1};
    FieldCtx f4{2, 2};
    FieldCtx f9{3, 2};
    std::unique_ptr<NestedProduct> rm22 =
        std::make_unique<NestedProduct>(f2, std::vector<std::pair<std::int64_t, int>>{{2, 2}});
    std::unique_ptr<NestedProduct> p224 = std::make_unique<NestedProduct>(
        f4, std::vector<std::pair<std::int64_t, int>>{{2, 2}, {4, 1}});
    std::unique_ptr<NestedProduct> p39 = std::make_unique<NestedProduct>(
        f9, std::vector<std::pair<std::int64_t, int>>{{3, 1}, {9, 1}});
};

} // namespace

TEST_CASE("monomial basis counts") {
    Fixture fx;
    CHECK(monomial_basis(*fx.rm22, 1).size() == 3);
    CHECK(monomial_basis(*fx.p224, 1).size() == 4);
    CHECK(monomial_basis(*fx.p39, 10).size() == 27);
    CHECK(monomial_basis(*fx.p39, -1).empty());
    // exponent bounds respected
    for (const auto& e : monomial_basis(*fx.p224, 5))
        for (int i = 0; i < 3; ++i) CHECK(e[i] < fx.p224->sizes()[i]);
}

TEST_CASE("dimension formula equals the monomial count") {
    Fixture fx;
    CHECK(dimension(*fx.p224, 2) == 8);
    CHECK(dimension(*fx.p39, 9) == 26);
    CHECK(dimension(*fx.p224, 0) == 1);
    CHECK(dimension(*fx.p39, 0) == 1);
    for (const auto* p : {fx.rm22.get(), fx.p224.get(), fx.p39.get()})
        for (std::int64_t u = 0; u <= p->max_degree(); ++u)
            CHECK(dimension(*p, u) ==
                  static_cast<std::int64_t>(monomial_basis(*p, u).size()));
    CHECK(dimension(*fx.p224, fx.p224->max_degree()) == fx.p224->point_count());
    CHECK_THROWS_AS(dimension(*fx.p224, -1), DegreeOutOfRange);
    CHECK_THROWS_AS(dimension(*fx.p224, 6), DegreeOutOfRange);
}

TEST_CASE("minimum distance closed form") {
    Fixture fx;
    CHECK(min_distance(*fx.p224, 0) == 16);
    CHECK(min_distance(*fx.p224, 1) == 8);
    CHECK(min_distance(*fx.p39, 5) == 6);
    CHECK(min_distance(*fx.p224, fx.p224->max_degree()) == 1);
    CHECK(min_distance(*fx.p39, fx.p39->max_degree()) == 1);
    CHECK(min_distance(*fx.rm22, fx.rm22->max_degree()) == 1);
    // monotonicity
    for (const auto* p : {fx.rm22.get(), fx.p224.get(), fx.p39.get()}) {
        for (std::int64_t u = 1; u <= p->max_degree(); ++u) {
            CHECK(min_distance(*p, u) <= min_distance(*p, u - 1));
            CHECK(dimension(*p, u) >= dimension(*p, u - 1));
        }
    }
}

TEST_CASE("dual scaling vector and duality of the code pair") {
    Fixture fx;
    // over F_2 coordinates every derivative factor is 1
    for (const auto& w : dual_scaling(*fx.rm22)) CHECK(w == fx.f2.one());

    for (const auto* p : {fx.rm22.get(), fx.p224.get(), fx.p39.get()}) {
        const FieldCtx& ctx = p->ctx();
        const auto w = dual_scaling(*p);
        for (const auto& wi : w) CHECK_FALSE(wi.is_zero());
        const std::int64_t K = p->max_degree();
        for (std::int64_t u = 0; u < K; ++u) {
            const auto left = basis_codewords(*p, u);
            const auto right = basis_codewords(*p, K - u - 1);
            for (const auto& c : left)
                for (const auto& cp : right) {
                    FieldElem acc = ctx.zero();
                    for (std::int64_t i = 0; i < p->point_count(); ++i)
                        acc = ctx.add(acc, ctx.mul(w[i], ctx.mul(c[i], cp[i])));
                    CHECK(acc.is_zero());
                }
        }
    }
}

TEST_CASE("exhaustive scans: worked examples") {
    Fixture fx;
    auto r = exhaustive_min_weight(*fx.rm22, 1, 1 << 20);
    CHECK(r.min_weight == 2);
    CHECK(r.min_count == 6);

    auto r224 = exhaustive_min_weight(*fx.p224, 1, 1 << 20);
    CHECK(r224.min_weight == 8);
    CHECK(r224.min_count == 18);

    auto r39 = exhaustive_min_weight(*fx.p39, 1, 1 << 20);
    CHECK(r39.min_weight == 18);
    CHECK(r39.min_count == 24);
}

TEST_CASE("weight distribution is a partition consistent with the min-weight scan") {
    Fixture fx;
    auto hist = weight_distribution(*fx.rm22, 1, 1 << 20);
    CHECK(hist == std::map<std::int64_t, std::uint64_t>{{0, 1}, {2, 6}, {4, 1}});

    for (std::int64_t u : {1, 2, 3}) {
        auto h = weight_distribution(*fx.p224, u, 1 << 24);
        BigUint total(0);
        for (const auto& [w, cnt] : h) total += BigUint(cnt);
        CHECK(total == BigUint::pow(4, dimension(*fx.p224, u)));
        CHECK(h.at(0) == 1);
        auto mw = exhaustive_min_weight(*fx.p224, u, 1 << 24);
        CHECK(h.at(mw.min_weight) == mw.min_count);
        CHECK(mw.min_weight == min_distance(*fx.p224, u));
    }
}

TEST_CASE("scan respects the cap and is deterministic across worker counts") {
    Fixture fx;
    CHECK_THROWS_AS(exhaustive_min_weight(*fx.p39, 5, 1000), TooLarge);
    auto h1 = weight_distribution(*fx.p224, 2, 1 << 24, 1);
    auto h2 = weight_distribution(*fx.p224, 2, 1 << 24, 2);
    auto h3 = weight_distribution(*fx.p224, 2, 1 << 24, 3);
    CHECK(h1 == h2);
    CHECK(h1 == h3);
}
