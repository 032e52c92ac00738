#include "cartcode/gf.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace cartcode {

namespace {

constexpr std::int64_t kMaxFieldSize = std::int64_t{1} << 20;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// --- dense univariate polynomial arithmetic over F_p, used only during
// --- construction (modulus search, primitive element search)

using Poly = std::vector<std::int64_t>; // coefficients low-to-high, no trailing zeros

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod the monic modulus
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        std::int64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            prod[i - deg + j] = ((prod[i - deg + j] - c * mod[j]) % p + p) % p;
    }
    prod.resize(deg);
    poly_trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& mod, std::int64_t p) {
    Poly result{1};
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

std::int64_t inv_mod_p(std::int64_t x, std::int64_t p) {
    std::int64_t r = 1, e = p - 2, b = ((x % p) + p) % p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly r, const Poly& b, std::int64_t p) {
    const std::int64_t lead_inv = inv_mod_p(b.back(), p);
    while (r.size() >= b.size()) {
        std::int64_t c = r.back() * lead_inv % p;
        std::size_t shift = r.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            r[shift + j] = ((r[shift + j] - c * b[j]) % p + p) % p;
        poly_trim(r);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        Poly r = poly_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// f monic of degree R is irreducible over F_p iff gcd(f, x^{p^i} - x) = 1
/// for 1 <= i <= R/2.
bool poly_irreducible(const Poly& f, std::int64_t p) {
    const int R = static_cast<int>(f.size()) - 1;
    if (R < 1) return false;
    if (R == 1) return true;
    Poly x{0, 1};
    Poly xq = x; // will hold x^{p^i} mod f
    for (int i = 1; i <= R / 2; ++i) {
        xq = poly_powmod(xq, p, f, p);
        Poly diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Standard modulus polynomials for common small fields. Coefficients
/// low-to-high; every entry coincides with the deterministic search below
/// (asserted in the unit tests).
struct TableEntry {
    std::int64_t p;
    int R;
    std::vector<std::int64_t> coeffs;
};

const std::vector<TableEntry>& modulus_table() {
    static const std::vector<TableEntry> table = {
        {2, 2, {1, 1, 1}},       // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},    // x^3 + x + 1
        {2, 4, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {3, 2, {1, 0, 1}},       // x^2 + 1
        {3, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
        {5, 2, {2, 0, 1}},       // x^2 + 2
        {7, 2, {1, 0, 1}},       // x^2 + 1
    };
    return table;
}

/// Lexicographically smallest monic irreducible polynomial of degree R over
/// F_p, ordered by the packed value of the non-leading coefficients.
Poly find_modulus(std::int64_t p, int R) {
    for (const auto& e : modulus_table())
        if (e.p == p && e.R == R) return e.coeffs;
    if (R == 1) return {0, 1}; // x: F_p[x]/(x) == F_p
    std::int64_t count = 1;
    for (int i = 0; i < R; ++i) count *= p;
    for (std::int64_t v = 0; v < count; ++v) {
        Poly f(R + 1, 0);
        std::int64_t rem = v;
        for (int i = 0; i < R; ++i) {
            f[i] = rem % p;
            rem /= p;
        }
        f[R] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw BadParameters("no irreducible polynomial found"); // unreachable
}

} // namespace

FieldCtx::FieldCtx(std::int64_t p, int R) : p_(p), R_(R) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (R < 1) throw BadParameters("extension degree must be positive");
    build(find_modulus(p, R));
}

FieldCtx::FieldCtx(std::int64_t p, int R, const std::vector<std::int64_t>& modulus)
    : p_(p), R_(R) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (R < 1) throw BadParameters("extension degree must be positive");
    if (modulus.size() != static_cast<std::size_t>(R) + 1 || modulus.back() != 1)
        throw BadParameters("modulus must be monic of degree R");
    Poly f = modulus;
    for (auto& c : f) c = ((c % p) + p) % p;
    if (R > 1 && !poly_irreducible(f, p))
        throw BadParameters("modulus polynomial is not irreducible");
    build(f);
}

void FieldCtx::build(const std::vector<std::int64_t>& modulus) {
    q_ = 1;
    for (int i = 0; i < R_; ++i) {
        q_ *= p_;
        if (q_ > kMaxFieldSize) throw FieldTooLarge("p^R exceeds 2^20");
    }
    order_ = q_ - 1;
    modulus_ = modulus;

    for (int r = 1; r <= R_; ++r)
        if (R_ % r == 0) subfield_degrees_.push_back(r);

    // packed-coefficient helpers
    auto packed_to_poly = [this](std::int64_t v) {
        Poly f;
        while (v > 0) {
            f.push_back(v % p_);
            v /= p_;
        }
        return f;
    };
    auto poly_to_packed = [this](const Poly& f) {
        std::int64_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * p_ + f[i];
        return v;
    };

    // deterministic primitive element: smallest packed value whose
    // multiplicative order is q-1
    const auto factors = prime_factors(order_);
    std::int64_t gen_packed = 0;
    for (std::int64_t v = 1; v < q_; ++v) {
        Poly cand = packed_to_poly(v);
        bool primitive = order_ == 1;
        if (order_ > 1) {
            primitive = true;
            for (std::int64_t ell : factors) {
                Poly pw = poly_powmod(cand, order_ / ell, modulus_, p_);
                if (pw.size() == 1 && pw[0] == 1) {
                    primitive = false;
                    break;
                }
            }
        }
        if (primitive) {
            gen_packed = v;
            break;
        }
    }
    assert(gen_packed != 0);

    antilog_.assign(order_, 0);
    log_.assign(q_, FieldElem::kZeroRep);
    Poly cur{1};
    const Poly gen = packed_to_poly(gen_packed);
    for (std::int64_t e = 0; e < order_; ++e) {
        std::int64_t v = poly_to_packed(cur);
        antilog_[e] = static_cast<std::int32_t>(v);
        assert(log_[v] == FieldElem::kZeroRep && "generator is not primitive");
        log_[v] = static_cast<std::int32_t>(e);
        cur = poly_mulmod(cur, gen, modulus_, p_);
    }

    // zech_[e] = log(g^e + 1); adding one only touches the constant digit
    zech_.assign(order_, FieldElem::kZeroRep);
    for (std::int64_t e = 0; e < order_; ++e) {
        std::int64_t v = antilog_[e];
        std::int64_t c0 = v % p_;
        std::int64_t v1 = v - c0 + (c0 + 1) % p_;
        zech_[e] = (v1 == 0) ? FieldElem::kZeroRep : log_[v1];
    }
    neg_shift_ = (p_ == 2) ? 0 : static_cast<std::int32_t>(order_ / 2);
}

FieldElem FieldCtx::from_exp(std::int64_t e) const {
    if (order_ == 1) return one();
    e %= order_;
    if (e < 0) e += order_;
    return {this, static_cast<std::int32_t>(e)};
}

FieldElem FieldCtx::element(std::int64_t index) const {
    if (index < 0 || index >= q_) throw IndexOutOfRange("element index out of range");
    return index == 0 ? zero() : FieldElem{this, static_cast<std::int32_t>(index - 1)};
}

std::int64_t FieldCtx::index_of(FieldElem x) const {
    assert(x.ctx == this);
    return x.is_zero() ? 0 : x.rep + 1;
}

FieldElem FieldCtx::of_int(std::int64_t n) const {
    n = ((n % p_) + p_) % p_;
    FieldElem acc = zero();
    FieldElem unit = one();
    for (std::int64_t i = 0; i < n; ++i) acc = add(acc, unit);
    return acc;
}

std::int32_t FieldCtx::add_rep(std::int32_t a, std::int32_t b) const {
    if (a == FieldElem::kZeroRep) return b;
    if (b == FieldElem::kZeroRep) return a;
    std::int32_t d = b - a;
    if (d < 0) d += static_cast<std::int32_t>(order_);
    std::int32_t z = zech_[d];
    if (z == FieldElem::kZeroRep) return FieldElem::kZeroRep;
    std::int32_t e = a + z;
    if (e >= order_) e -= static_cast<std::int32_t>(order_);
    return e;
}

std::int32_t FieldCtx::mul_rep(std::int32_t a, std::int32_t b) const {
    if (a == FieldElem::kZeroRep || b == FieldElem::kZeroRep) return FieldElem::kZeroRep;
    std::int32_t e = a + b;
    if (e >= order_) e -= static_cast<std::int32_t>(order_);
    return e;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    assert(a.ctx == this && b.ctx == this);
    return {this, add_rep(a.rep, b.rep)};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    if (a.is_zero() || p_ == 2) return a;
    std::int32_t e = a.rep + neg_shift_;
    if (e >= order_) e -= static_cast<std::int32_t>(order_);
    return {this, e};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    assert(a.ctx == this && b.ctx == this);
    return {this, mul_rep(a.rep, b.rep)};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw BadParameters("inverse of zero");
    return {this, static_cast<std::int32_t>((order_ - a.rep) % order_)};
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) throw BadParameters("inverse of zero");
        return e == 0 ? one() : zero();
    }
    std::int64_t r = (a.rep * (e % order_)) % order_;
    if (r < 0) r += order_;
    return {this, static_cast<std::int32_t>(r)};
}

bool FieldCtx::is_subfield_size(std::int64_t d) const {
    for (int r : subfield_degrees_) {
        std::int64_t sz = 1;
        for (int i = 0; i < r; ++i) sz *= p_;
        if (sz == d) return true;
    }
    return false;
}

FieldElem FieldCtx::subfield_generator(std::int64_t d) const {
    if (!is_subfield_size(d)) throw NotASubfieldSize(std::to_string(d) + " is not a subfield size");
    if (d == q_) return generator();
    return from_exp(order_ / (d - 1));
}

std::vector<FieldElem> FieldCtx::subfield_elements(std::int64_t d) const {
    FieldElem g = subfield_generator(d);
    std::vector<FieldElem> out;
    out.reserve(d);
    out.push_back(zero());
    FieldElem cur = one();
    for (std::int64_t k = 0; k < d - 1; ++k) {
        out.push_back(cur);
        cur = mul(cur, g);
    }
    return out;
}

bool FieldCtx::in_subfield(FieldElem x, std::int64_t d) const {
    if (!is_subfield_size(d)) throw NotASubfieldSize(std::to_string(d) + " is not a subfield size");
    if (x.is_zero()) return true;
    // x = g^e lies in GF(d) iff (q-1)/(d-1) divides e
    return x.rep % (order_ / (d - 1)) == 0;
}

FieldElem FieldCtx::power_sum(std::int64_t d, std::int64_t s) const {
    if (!is_subfield_size(d)) throw NotASubfieldSize(std::to_string(d) + " is not a subfield size");
    if (s < 0 || s > d - 1) throw ExponentOutOfRange("exponent outside [0, d-1]");
    return s == d - 1 ? neg(one()) : zero();
}

std::int64_t FieldCtx::packed(FieldElem x) const {
    assert(x.ctx == this);
    return x.is_zero() ? 0 : antilog_[x.rep];
}

FieldElem FieldCtx::from_packed(std::int64_t v) const {
    if (v < 0 || v >= q_) throw IndexOutOfRange("packed value out of range");
    return v == 0 ? zero() : FieldElem{this, log_[v]};
}

std::string FieldCtx::label(FieldElem x) const {
    if (x.is_zero()) return "0";
    if (x.rep == 0) return "1";
    return "g^" + std::to_string(x.rep);
}

FieldElem FieldCtx::parse_label(std::string_view s) const {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s == "g") return generator();
    if (s.size() > 2 && s[0] == 'g' && s[1] == '^') {
        std::int64_t e = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), e);
        if (ec == std::errc() && ptr == s.data() + s.size()) return from_exp(e);
    }
    throw ParseError("bad field element '" + std::string(s) + "'");
}

FieldElem embed(FieldElem x, const FieldCtx& target) {
    const FieldCtx& src = *x.ctx;
    if (&src == &target) return x;
    if (src.characteristic() != target.characteristic() ||
        target.degree() % src.degree() != 0)
        throw BadParameters("no canonical embedding between these fields");
    if (x.is_zero()) return target.zero();
    std::int64_t scale = (target.size() - 1) / (src.size() - 1);
    return target.from_exp(x.rep * scale);
}

std::pair<std::int64_t, int> parse_field_spec(std::string_view spec) {
    auto caret = spec.find('^');
    std::int64_t p = 0;
    std::int64_t R = 1;
    std::string_view base = spec.substr(0, caret);
    auto [bp, bec] = std::from_chars(base.data(), base.data() + base.size(), p);
    if (bec != std::errc() || bp != base.data() + base.size())
        throw ParseError("bad field spec '" + std::string(spec) + "'");
    if (caret != std::string_view::npos) {
        std::string_view exp = spec.substr(caret + 1);
        auto [ep, eec] = std::from_chars(exp.data(), exp.data() + exp.size(), R);
        if (eec != std::errc() || ep != exp.data() + exp.size() || R < 1)
            throw ParseError("bad field spec '" + std::string(spec) + "'");
    }
    return {p, static_cast<int>(R)};
}

} // namespace cartcode
