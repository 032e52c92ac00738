#include "cartcode/counting.hpp"

#include <cassert>

namespace cartcode {

BigUint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint out(1);
    for (std::int64_t i = 0; i < k; ++i) {
        out *= BigUint(static_cast<std::uint64_t>(n - i));
        out.div_exact(static_cast<std::uint64_t>(i + 1));
    }
    return out;
}

BigUint q_binomial(std::int64_t m, std::int64_t t, std::int64_t q) {
    if (q < 2) throw BadParameters("q must be at least 2");
    if (t < 0 || t > m) return BigUint(0);
    // prod_{i=0}^{t-1} (q^{m-i} - 1) / (q^{i+1} - 1); every partial product
    // is itself a Gaussian binomial, so the divisions stay exact
    BigUint out(1);
    for (std::int64_t i = 0; i < t; ++i) {
        out *= BigUint::pow(static_cast<std::uint64_t>(q),
                            static_cast<std::uint64_t>(m - i)) -
               BigUint(1);
        BigUint den = BigUint::pow(static_cast<std::uint64_t>(q),
                                   static_cast<std::uint64_t>(i + 1)) -
                      BigUint(1);
        out.div_exact(den.to_u64());
    }
    return out;
}

namespace {

/// ell = d_{j+1}-1 branch: (q-1) (prod_{i<=j+1} d_i) [mu_r, j+1-s_{r-1}]_{d_{j+1}}.
BigUint count_ell_max(const NestedProduct& prod, const UDecomposition& dec) {
    const std::int64_t q = prod.ctx().size();
    const std::int64_t dj1 = prod.sizes()[dec.j];
    BigUint out(static_cast<std::uint64_t>(q - 1));
    for (int i = 0; i <= dec.j; ++i)
        out *= BigUint(static_cast<std::uint64_t>(prod.sizes()[i]));
    out *= q_binomial(prod.multiplicity(dec.r), dec.j + 1 - prod.boundary(dec.r - 1), dj1);
    return out;
}

} // namespace

BigUint count_minwt_k(const NestedProduct& prod, const UDecomposition& dec, int k) {
    const std::int64_t q = prod.ctx().size();
    const auto& d = prod.sizes();
    const std::int64_t dj1 = d[dec.j];
    if (dec.ell >= dj1 - 1)
        throw BadParameters("per-k counts apply only to the ell < d_{j+1}-1 branch");
    if (k < dec.k0 || k > dec.j + 1 || d[k - 1] < dj1 - dec.ell)
        throw KOutOfRange("k outside [k0, j+1] or d_k < d_{j+1}-ell");

    const std::int64_t dk = d[k - 1];
    const int tk = prod.block_of(k);

    BigUint out(static_cast<std::uint64_t>(q - 1));
    for (int i = 0; i <= dec.j; ++i)
        if (i != k - 1) out *= BigUint(static_cast<std::uint64_t>(d[i]));

    if (tk == dec.r) {
        out *= q_binomial(prod.multiplicity(dec.r), dec.j - prod.boundary(dec.r - 1), dj1);
        out *= q_binomial(prod.boundary(dec.r) - dec.j, 1, dk);
    } else {
        // blocks below r; the d_k = d_{j+1}-ell and d_k > d_{j+1}-ell cases
        // share one formula since the binomial factor degenerates to 1
        for (int i = prod.boundary(tk); i <= dec.j; ++i)
            out *= BigUint(static_cast<std::uint64_t>(d[i]));
        out *= q_binomial(prod.multiplicity(dec.r), dec.j + 1 - prod.boundary(dec.r - 1), dj1);
        out *= q_binomial(prod.multiplicity(tk), 1, dk);
    }
    out *= binomial(dk, dj1 - dec.ell);
    return out;
}

MinWtReport count_minwt(const NestedProduct& prod, std::int64_t u) {
    MinWtReport report;
    report.u = u;
    if (u == -1) {
        report.total = BigUint(0);
        return report;
    }
    if (u == 0) {
        report.total = BigUint(static_cast<std::uint64_t>(prod.ctx().size() - 1));
        return report;
    }
    if (u < -1 || u > prod.max_degree()) throw DegreeOutOfRange("u outside [-1, K]");

    const UDecomposition dec = prod.decompose(u);
    report.dec = dec;
    const std::int64_t dj1 = prod.sizes()[dec.j];

    if (dec.ell == dj1 - 1) {
        report.total = count_ell_max(prod, dec);
        report.per_k.push_back({dec.j + 1, report.total});
        report.k0_display = dec.j + 1;
        return report;
    }

    report.k0_display = dec.k0;
    const int t0 = prod.block_of(dec.k0);
    BigUint total(0);
    for (int t = t0; t <= dec.r - 1; ++t) {
        const int k = prod.boundary(t);
        BigUint c = count_minwt_k(prod, dec, k);
        total += c;
        report.per_k.push_back({k, std::move(c)});
    }
    {
        BigUint c = count_minwt_k(prod, dec, dec.j + 1);
        total += c;
        report.per_k.push_back({dec.j + 1, std::move(c)});
    }
    report.total = std::move(total);
    return report;
}

BigUint rs_count(std::int64_t q, std::int64_t n, std::int64_t k_dim) {
    if (!(1 <= k_dim && k_dim <= n && n <= q))
        throw BadParameters("need 1 <= k <= n <= q");
    return BigUint(static_cast<std::uint64_t>(q - 1)) * binomial(n, n - k_dim + 1);
}

BigUint rm_count(std::int64_t q, std::int64_t u, std::int64_t m) {
    if (q < 2 || m < 1) throw BadParameters("need q >= 2 and m >= 1");
    if (u < 0 || u > m * (q - 1)) throw DegreeOutOfRange("u outside [0, m(q-1)]");
    const std::int64_t t = u / (q - 1);
    const std::int64_t s = u % (q - 1);
    BigUint out(static_cast<std::uint64_t>(q - 1));
    out *= BigUint::pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(t));
    out *= q_binomial(m, t, q);
    if (s != 0) {
        out *= q_binomial(m - t, 1, q);
        out *= binomial(q, s);
    }
    return out;
}

} // namespace cartcode
