#include "cartcode/poly.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

#include "cartcode/groups.hpp"

namespace cartcode {

namespace {

/// X^e == X^{((e-1) mod (d-1)) + 1} on a size-d subfield, for e >= 1.
std::int32_t reduce_exp(std::int64_t e, std::int64_t d) {
    if (e <= 0) return static_cast<std::int32_t>(e);
    return static_cast<std::int32_t>((e - 1) % (d - 1) + 1);
}

} // namespace

// ---------------------------------------------------------------- Codeword

Codeword::Codeword(const NestedProduct& prod, std::vector<FieldElem> values)
    : prod_(&prod), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != prod.point_count())
        throw BadParameters("codeword length must equal the point count");
}

std::int64_t Codeword::weight() const {
    std::int64_t w = 0;
    for (const auto& v : values_)
        if (!v.is_zero()) ++w;
    return w;
}

std::vector<std::int64_t> Codeword::support() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!values_[i].is_zero()) out.push_back(static_cast<std::int64_t>(i));
    return out;
}

std::string Codeword::key() const {
    const FieldCtx& ctx = prod_->ctx();
    std::string out(values_.size() * 4, '\0');
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto idx = static_cast<std::uint32_t>(ctx.index_of(values_[i]));
        out[4 * i] = static_cast<char>(idx & 0xff);
        out[4 * i + 1] = static_cast<char>((idx >> 8) & 0xff);
        out[4 * i + 2] = static_cast<char>((idx >> 16) & 0xff);
        out[4 * i + 3] = static_cast<char>((idx >> 24) & 0xff);
    }
    return out;
}

Codeword Codeword::scaled(FieldElem gamma) const {
    const FieldCtx& ctx = prod_->ctx();
    std::vector<FieldElem> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = ctx.mul(gamma, values_[i]);
    return Codeword(*prod_, std::move(vals));
}

// -------------------------------------------------------------- ReducedPoly

ReducedPoly::ReducedPoly(const NestedProduct& prod) : prod_(&prod) {}

void ReducedPoly::add_term(Exponents e, FieldElem c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
        return;
    }
    FieldElem sum = prod_->ctx().add(it->second, c);
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

ReducedPoly ReducedPoly::constant(const NestedProduct& prod, FieldElem c) {
    ReducedPoly f(prod);
    f.add_term(Exponents(prod.m(), 0), c);
    return f;
}

ReducedPoly ReducedPoly::monomial(const NestedProduct& prod,
                                  const std::vector<std::int64_t>& exps, FieldElem c) {
    return from_terms(prod, {{exps, c}});
}

ReducedPoly ReducedPoly::from_terms(
    const NestedProduct& prod,
    const std::vector<std::pair<std::vector<std::int64_t>, FieldElem>>& raw) {
    ReducedPoly f(prod);
    for (const auto& [exps, c] : raw) {
        if (static_cast<int>(exps.size()) != prod.m())
            throw BadParameters("exponent vector has wrong arity");
        Exponents e(prod.m());
        for (int i = 0; i < prod.m(); ++i) {
            if (exps[i] < 0) throw BadParameters("negative exponent");
            e[i] = reduce_exp(exps[i], prod.sizes()[i]);
        }
        f.add_term(std::move(e), c);
    }
    return f;
}

std::optional<std::int64_t> ReducedPoly::degree() const {
    std::optional<std::int64_t> deg;
    for (const auto& [e, c] : terms_) {
        std::int64_t total = 0;
        for (auto ei : e) total += ei;
        if (!deg || total > *deg) deg = total;
    }
    return deg;
}

FieldElem ReducedPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? prod_->ctx().zero() : it->second;
}

ReducedPoly ReducedPoly::operator+(const ReducedPoly& rhs) const {
    assert(prod_ == rhs.prod_);
    ReducedPoly out(*this);
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

ReducedPoly ReducedPoly::operator-(const ReducedPoly& rhs) const {
    assert(prod_ == rhs.prod_);
    ReducedPoly out(*this);
    const FieldCtx& ctx = prod_->ctx();
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, ctx.neg(c));
    return out;
}

ReducedPoly ReducedPoly::operator*(const ReducedPoly& rhs) const {
    assert(prod_ == rhs.prod_);
    const FieldCtx& ctx = prod_->ctx();
    const auto& d = prod_->sizes();
    ReducedPoly out(*prod_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(prod_->m());
            for (int i = 0; i < prod_->m(); ++i)
                e[i] = reduce_exp(static_cast<std::int64_t>(ea[i]) + eb[i], d[i]);
            out.add_term(std::move(e), ctx.mul(ca, cb));
        }
    }
    return out;
}

ReducedPoly ReducedPoly::scaled(FieldElem c) const {
    const FieldCtx& ctx = prod_->ctx();
    ReducedPoly out(*prod_);
    for (const auto& [e, coeff] : terms_) out.add_term(e, ctx.mul(c, coeff));
    return out;
}

FieldElem ReducedPoly::eval(std::span<const FieldElem> point) const {
    const FieldCtx& ctx = prod_->ctx();
    FieldElem acc = ctx.zero();
    for (const auto& [e, c] : terms_) {
        FieldElem term = c;
        for (int i = 0; i < prod_->m(); ++i)
            if (e[i] != 0) term = ctx.mul(term, ctx.pow(point[i], e[i]));
        acc = ctx.add(acc, term);
    }
    return acc;
}

Codeword ReducedPoly::evaluate() const {
    const auto& pts = prod_->points();
    std::vector<FieldElem> vals;
    vals.reserve(pts.size());
    for (const auto& pt : pts) vals.push_back(eval(pt));
    return Codeword(*prod_, std::move(vals));
}

ReducedPoly ReducedPoly::compose_affine(const AffineTransform& t) const {
    if (!is_valid_transform(t) || &t.matrix.prod() != prod_)
        throw InvalidTransform("transform is not valid for this domain");
    const FieldCtx& ctx = prod_->ctx();
    const int m = prod_->m();

    // linear substitute L_i + b_i for each variable, then memoized powers
    std::vector<ReducedPoly> linear;
    linear.reserve(m);
    for (int i = 0; i < m; ++i) {
        ReducedPoly li(*prod_);
        for (int z = 0; z < m; ++z) {
            FieldElem a = t.matrix.at(i, z);
            if (a.is_zero()) continue;
            std::vector<std::int64_t> e(m, 0);
            e[z] = 1;
            li = li + monomial(*prod_, e, a);
        }
        li = li + constant(*prod_, t.shift[i]);
        linear.push_back(std::move(li));
    }

    std::vector<std::vector<ReducedPoly>> powers(m);
    for (int i = 0; i < m; ++i) powers[i].push_back(constant(*prod_, ctx.one()));
    auto power_of = [&](int i, std::int32_t e) -> const ReducedPoly& {
        while (static_cast<std::int32_t>(powers[i].size()) <= e)
            powers[i].push_back(powers[i].back() * linear[i]);
        return powers[i][e];
    };

    ReducedPoly out(*prod_);
    for (const auto& [e, c] : terms_) {
        ReducedPoly term = constant(*prod_, c);
        for (int i = 0; i < m; ++i)
            if (e[i] != 0) term = term * power_of(i, e[i]);
        out = out + term;
    }
    return out;
}

// ------------------------------------------------------------------ build_h

ReducedPoly build_h(const NestedProduct& prod, const UDecomposition& dec, int k,
                    std::span<const FieldElem> omega) {
    const FieldCtx& ctx = prod.ctx();
    const auto& d = prod.sizes();
    const std::int64_t dj1 = d[dec.j]; // d_{j+1}
    if (k < dec.k0 || k > dec.j + 1 || d[k - 1] < dj1 - dec.ell)
        throw KOutOfRange("k outside [k0, j+1] or d_k < d_{j+1}-ell");
    const std::int64_t want = d[k - 1] - (dj1 - dec.ell);
    if (static_cast<std::int64_t>(omega.size()) != want)
        throw BadOmegaSize("Omega must have " + std::to_string(want) + " elements");
    for (const auto& w : omega)
        if (!ctx.in_subfield(w, d[k - 1]))
            throw OmegaNotInSubfield("Omega element outside the coordinate subfield");

    ReducedPoly h = ReducedPoly::constant(prod, ctx.one());
    for (int i = 1; i <= dec.j + 1; ++i) {
        if (i == k) continue;
        std::vector<std::int64_t> e(prod.m(), 0);
        e[i - 1] = d[i - 1] - 1;
        ReducedPoly factor = ReducedPoly::constant(prod, ctx.one()) -
                             ReducedPoly::monomial(prod, e, ctx.one());
        h = h * factor;
    }
    for (const auto& w : omega) {
        std::vector<std::int64_t> e(prod.m(), 0);
        e[k - 1] = 1;
        ReducedPoly factor = ReducedPoly::monomial(prod, e, ctx.one()) -
                             ReducedPoly::constant(prod, w);
        h = h * factor;
    }
    return h;
}

// ------------------------------------------------------------------ text io

std::string format_poly(const ReducedPoly& f) {
    if (f.is_zero()) return "0";
    const FieldCtx& ctx = f.prod().ctx();
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += ctx.label(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*X" + std::to_string(i + 1);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

} // namespace

ReducedPoly parse_poly(const NestedProduct& prod, std::string_view text) {
    const FieldCtx& ctx = prod.ctx();
    std::vector<std::pair<std::vector<std::int64_t>, FieldElem>> raw;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string_view term = strip(text.substr(
            pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
        if (term.empty()) throw ParseError("empty term in polynomial");

        std::vector<std::int64_t> exps(prod.m(), 0);
        FieldElem coeff = ctx.one();
        bool saw_coeff = false;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            std::size_t star = term.find('*', fpos);
            std::string_view factor = strip(term.substr(
                fpos, star == std::string_view::npos ? std::string_view::npos : star - fpos));
            if (factor.empty()) throw ParseError("empty factor in term");
            if (factor[0] == 'X') {
                std::size_t caret = factor.find('^');
                std::string_view var = factor.substr(1, caret == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : caret - 1);
                int vi = 0;
                auto [vp, vec] = std::from_chars(var.data(), var.data() + var.size(), vi);
                if (vec != std::errc() || vp != var.data() + var.size() || vi < 1 ||
                    vi > prod.m())
                    throw ParseError("bad variable in '" + std::string(factor) + "'");
                std::int64_t ex = 1;
                if (caret != std::string_view::npos) {
                    std::string_view es = factor.substr(caret + 1);
                    auto [ep, eec] = std::from_chars(es.data(), es.data() + es.size(), ex);
                    if (eec != std::errc() || ep != es.data() + es.size() || ex < 0)
                        throw ParseError("bad exponent in '" + std::string(factor) + "'");
                }
                exps[vi - 1] += ex;
            } else {
                if (saw_coeff) throw ParseError("two coefficients in one term");
                coeff = ctx.parse_label(factor);
                saw_coeff = true;
            }
            if (star == std::string_view::npos) break;
            fpos = star + 1;
        }
        raw.push_back({std::move(exps), coeff});
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return ReducedPoly::from_terms(prod, raw);
}

} // namespace cartcode
