#include "cartcode/codes.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "cartcode/bigint.hpp"
#include "cartcode/counting.hpp"

namespace cartcode {

std::vector<std::vector<std::int32_t>> monomial_basis(const NestedProduct& prod,
                                                      std::int64_t u) {
    if (u < -1) throw DegreeOutOfRange("u must be at least -1");
    std::vector<std::vector<std::int32_t>> out;
    if (u == -1) return out;
    const int m = prod.m();
    const auto& d = prod.sizes();
    std::vector<std::int32_t> e(m, 0);
    for (;;) {
        std::int64_t total = 0;
        for (auto ei : e) total += ei;
        if (total <= u) out.push_back(e);
        int k = m - 1;
        while (k >= 0) {
            if (++e[k] < d[k]) break;
            e[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

namespace {

// signed binomial helper for the inclusion-exclusion dimension formula;
// values stay far below 2^63 for any constructible domain
std::int64_t binom_i64(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    return static_cast<std::int64_t>(binomial(n, k).to_u64());
}

} // namespace

std::int64_t dimension(const NestedProduct& prod, std::int64_t u) {
    if (u < 0 || u > prod.max_degree()) throw DegreeOutOfRange("u outside [0, K]");
    const int m = prod.m();
    // alternating sum over coordinate subsets, grouped by how many
    // coordinates of each block the subset picks (the subset only enters
    // through the sum of its d_i)
    std::int64_t dim = 0;
    std::vector<int> picks(prod.blocks() + 1, 0);
    for (;;) {
        std::int64_t dsum = 0;
        std::int64_t ways = 1;
        int bits = 0;
        for (int t = 1; t <= prod.blocks(); ++t) {
            dsum += picks[t] * prod.block_field_size(t);
            ways *= binom_i64(prod.multiplicity(t), picks[t]);
            bits += picks[t];
        }
        const std::int64_t term = ways * binom_i64(m + u - dsum, u - dsum);
        dim += (bits % 2 == 0) ? term : -term;
        int t = prod.blocks();
        while (t >= 1) {
            if (++picks[t] <= prod.multiplicity(t)) break;
            picks[t] = 0;
            --t;
        }
        if (t < 1) break;
    }
    return dim;
}

std::int64_t min_distance(const NestedProduct& prod, std::int64_t u) {
    if (u < 0 || u > prod.max_degree()) throw DegreeOutOfRange("u outside [0, K]");
    if (u == 0) return prod.point_count();
    const UDecomposition dec = prod.decompose(u);
    std::int64_t delta = prod.sizes()[dec.j] - dec.ell;
    for (int i = dec.j + 1; i < prod.m(); ++i) delta *= prod.sizes()[i];
    return delta;
}

CodeSummary code_summary(const NestedProduct& prod, std::int64_t u) {
    return {u, prod.point_count(), dimension(prod, u), min_distance(prod, u)};
}

std::vector<FieldElem> dual_scaling(const NestedProduct& prod) {
    const FieldCtx& ctx = prod.ctx();
    const auto& pts = prod.points();
    // g_i'(X) = d_i X^{d_i - 1} - 1 with d_i = 0 in characteristic p
    std::vector<FieldElem> lead(prod.m());
    for (int i = 0; i < prod.m(); ++i) lead[i] = ctx.of_int(prod.sizes()[i]);
    std::vector<FieldElem> w;
    w.reserve(pts.size());
    for (const auto& pt : pts) {
        FieldElem prod_deriv = ctx.one();
        for (int i = 0; i < prod.m(); ++i) {
            FieldElem gi = ctx.sub(
                ctx.mul(lead[i], ctx.pow(pt[i], prod.sizes()[i] - 1)), ctx.one());
            prod_deriv = ctx.mul(prod_deriv, gi);
        }
        w.push_back(ctx.inv(prod_deriv));
    }
    return w;
}

std::vector<Codeword> basis_codewords(const NestedProduct& prod, std::int64_t u) {
    std::vector<Codeword> out;
    for (const auto& e : monomial_basis(prod, u)) {
        std::vector<std::int64_t> exps(e.begin(), e.end());
        out.push_back(ReducedPoly::monomial(prod, exps, prod.ctx().one()).evaluate());
    }
    return out;
}

namespace {

/// Odometer scan over all coefficient vectors of the basis, maintaining
/// per-level partial sums so that each step costs O(n) amortized.
void scan_range(const FieldCtx& ctx, const std::vector<std::vector<std::int32_t>>& rows,
                std::int64_t n, std::int64_t q, std::uint64_t begin, std::uint64_t end,
                std::vector<std::uint64_t>& hist) {
    const std::size_t dim = rows.size() / q;
    std::vector<std::int64_t> digits(dim, 0);
    std::uint64_t idx = begin;
    for (std::size_t lvl = dim; lvl-- > 0 && idx;) {
        digits[lvl] = static_cast<std::int64_t>(idx % q);
        idx /= q;
    }
    // partial[l] = sum of the first l scaled rows
    std::vector<std::vector<std::int32_t>> partial(dim + 1,
                                                   std::vector<std::int32_t>(n, FieldElem::kZeroRep));
    auto recompute_from = [&](std::size_t lvl) {
        for (std::size_t l = lvl; l < dim; ++l) {
            const auto& row = rows[l * q + digits[l]];
            const auto& prev = partial[l];
            auto& cur = partial[l + 1];
            for (std::int64_t i = 0; i < n; ++i) cur[i] = ctx.add_rep(prev[i], row[i]);
        }
    };
    recompute_from(0);

    for (std::uint64_t v = begin; v < end; ++v) {
        const auto& word = partial[dim];
        std::int64_t weight = 0;
        for (std::int64_t i = 0; i < n; ++i)
            if (word[i] != FieldElem::kZeroRep) ++weight;
        ++hist[weight];

        // increment, last digit fastest
        std::size_t lvl = dim;
        while (lvl > 0) {
            --lvl;
            if (++digits[lvl] < q) break;
            digits[lvl] = 0;
        }
        recompute_from(lvl);
    }
}

} // namespace

std::map<std::int64_t, std::uint64_t> weight_distribution(const NestedProduct& prod,
                                                          std::int64_t u,
                                                          std::uint64_t cap,
                                                          int workers) {
    const FieldCtx& ctx = prod.ctx();
    const std::int64_t q = ctx.size();
    const std::int64_t n = prod.point_count();
    const std::int64_t dim = dimension(prod, u);
    const BigUint size = BigUint::pow(static_cast<std::uint64_t>(q),
                                      static_cast<std::uint64_t>(dim));
    if (size > BigUint(cap)) throw TooLarge("code too large to scan");
    const std::uint64_t total = size.to_u64();

    // rows[l*q + c] = evaluation of (c-th field element) * (l-th basis monomial)
    const auto basis = basis_codewords(prod, u);
    std::vector<std::vector<std::int32_t>> rows;
    rows.reserve(static_cast<std::size_t>(dim) * q);
    for (const auto& b : basis) {
        for (std::int64_t c = 0; c < q; ++c) {
            const FieldElem coeff = ctx.element(c);
            std::vector<std::int32_t> row(n);
            for (std::int64_t i = 0; i < n; ++i) row[i] = ctx.mul(coeff, b[i]).rep;
            rows.push_back(std::move(row));
        }
    }

    int nworkers = workers > 0 ? workers
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nworkers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(nworkers), std::max<std::uint64_t>(total / 4096, 1)));

    std::vector<std::uint64_t> counts(n + 1, 0);
    if (nworkers <= 1) {
        scan_range(ctx, rows, n, q, 0, total, counts);
    } else {
        std::vector<std::vector<std::uint64_t>> partials(
            nworkers, std::vector<std::uint64_t>(n + 1, 0));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / nworkers;
        for (int w = 0; w < nworkers; ++w) {
            const std::uint64_t begin = chunk * w;
            const std::uint64_t end = (w == nworkers - 1) ? total : chunk * (w + 1);
            pool.emplace_back([&, w, begin, end] {
                scan_range(ctx, rows, n, q, begin, end, partials[w]);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partials)
            for (std::int64_t wt = 0; wt <= n; ++wt) counts[wt] += p[wt];
    }
    std::map<std::int64_t, std::uint64_t> hist;
    for (std::int64_t wt = 0; wt <= n; ++wt)
        if (counts[wt] != 0) hist[wt] = counts[wt];
    return hist;
}

ScanResult exhaustive_min_weight(const NestedProduct& prod, std::int64_t u,
                                 std::uint64_t cap, int workers) {
    const auto hist = weight_distribution(prod, u, cap, workers);
    for (const auto& [w, cnt] : hist)
        if (w > 0) return {w, cnt};
    return {0, 0}; // dim == 0: only the zero word
}

} // namespace cartcode
