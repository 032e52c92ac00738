#include "cartcode/domain.hpp"

#include <cassert>
#include <charconv>

namespace cartcode {

namespace {
// points() materializes n m-tuples; larger domains can still be constructed
// for formula-only work
constexpr std::int64_t kMaxMaterializedPoints = std::int64_t{1} << 20;
}

NestedProduct::NestedProduct(const FieldCtx& ctx,
                             const std::vector<std::pair<std::int64_t, int>>& blocks)
    : ctx_(&ctx) {
    if (blocks.empty()) throw EmptyBlock("product needs at least one block");
    lambda_ = static_cast<int>(blocks.size());
    s_.push_back(0);
    std::int64_t prev_size = 1;
    int prev_r = 0;
    for (const auto& [size, mult] : blocks) {
        if (mult < 1) throw EmptyBlock("block multiplicity must be positive");
        if (size < 2 || !ctx.is_subfield_size(size))
            throw NotASubfieldSize(std::to_string(size) + " is not a subfield size");
        if (size <= prev_size)
            throw NotNested("block sizes must be strictly increasing");
        int r = 0;
        for (std::int64_t v = 1; v < size; v *= ctx.characteristic()) ++r;
        if (prev_r != 0 && r % prev_r != 0)
            throw NotNested("GF(" + std::to_string(prev_size) + ") is not a subfield of GF(" +
                            std::to_string(size) + ")");
        prev_size = size;
        prev_r = r;
        mu_.push_back(mult);
        s_.push_back(s_.back() + mult);
        for (int i = 0; i < mult; ++i) d_.push_back(size);
    }
    m_ = static_cast<int>(d_.size());

    tk_.resize(m_);
    for (int t = 1; t <= lambda_; ++t)
        for (int k = s_[t - 1]; k < s_[t]; ++k) tk_[k] = t;

    n_ = 1;
    K_ = 0;
    for (std::int64_t di : d_) {
        if (n_ > (std::int64_t{1} << 60) / di) throw TooLarge("point count overflows");
        n_ *= di;
        K_ += di - 1;
    }

    stride_.assign(m_, 1);
    for (int k = m_ - 2; k >= 0; --k) stride_[k] = stride_[k + 1] * d_[k + 1];

    coord_elems_.reserve(m_);
    for (int k = 0; k < m_; ++k) coord_elems_.push_back(ctx.subfield_elements(d_[k]));
}

std::vector<std::pair<std::int64_t, int>> group_sizes_into_blocks(
    const std::vector<std::int64_t>& sizes) {
    std::vector<std::pair<std::int64_t, int>> blocks;
    for (std::int64_t sz : sizes) {
        if (!blocks.empty() && blocks.back().first == sz)
            ++blocks.back().second;
        else
            blocks.push_back({sz, 1});
    }
    return blocks;
}

NestedProduct NestedProduct::from_sizes(const FieldCtx& ctx,
                                        const std::vector<std::int64_t>& sizes) {
    return NestedProduct(ctx, group_sizes_into_blocks(sizes));
}

std::int64_t NestedProduct::coord_size(int k) const {
    if (k < 1 || k > m_) throw IndexOutOfRange("coordinate index out of range");
    return d_[k - 1];
}

int NestedProduct::multiplicity(int t) const {
    if (t < 1 || t > lambda_) throw IndexOutOfRange("block index out of range");
    return mu_[t - 1];
}

std::int64_t NestedProduct::block_field_size(int t) const {
    if (t < 1 || t > lambda_) throw IndexOutOfRange("block index out of range");
    return d_[s_[t] - 1];
}

int NestedProduct::boundary(int t) const {
    if (t < 0 || t > lambda_) throw IndexOutOfRange("block index out of range");
    return s_[t];
}

int NestedProduct::block_of(int k) const {
    if (k < 1 || k > m_) throw IndexOutOfRange("coordinate index out of range");
    return tk_[k - 1];
}

void NestedProduct::build_points() const {
    if (n_ > kMaxMaterializedPoints) throw TooLarge("domain too large to enumerate points");
    points_.resize(n_);
    std::vector<std::int64_t> digit(m_, 0);
    for (std::int64_t i = 0; i < n_; ++i) {
        std::vector<FieldElem> pt(m_, ctx_->zero());
        for (int k = 0; k < m_; ++k) pt[k] = coord_elems_[k][digit[k]];
        points_[i] = std::move(pt);
        // odometer, last coordinate fastest
        for (int k = m_ - 1; k >= 0; --k) {
            if (++digit[k] < d_[k]) break;
            digit[k] = 0;
        }
    }
}

const std::vector<std::vector<FieldElem>>& NestedProduct::points() const {
    std::call_once(points_once_, [this] { build_points(); });
    return points_;
}

const std::vector<FieldElem>& NestedProduct::point(std::int64_t index) const {
    const auto& pts = points();
    if (index < 0 || index >= n_) throw IndexOutOfRange("point index out of range");
    return pts[index];
}

const std::vector<FieldElem>& NestedProduct::coord_elements(int k) const {
    if (k < 1 || k > m_) throw IndexOutOfRange("coordinate index out of range");
    return coord_elems_[k - 1];
}

std::int64_t NestedProduct::coord_digit(int k, FieldElem x) const {
    if (k < 1 || k > m_) throw IndexOutOfRange("coordinate index out of range");
    assert(x.ctx == ctx_);
    if (x.is_zero()) return 0;
    const std::int64_t d = d_[k - 1];
    const std::int64_t step = (ctx_->size() - 1) / (d - 1);
    if (x.rep % step != 0) throw BadParameters("element not in coordinate subfield");
    return 1 + x.rep / step;
}

std::int64_t NestedProduct::point_index(std::span<const FieldElem> pt) const {
    assert(static_cast<int>(pt.size()) == m_);
    std::int64_t idx = 0;
    for (int k = 0; k < m_; ++k) idx += coord_digit(k + 1, pt[k]) * stride_[k];
    return idx;
}

UDecomposition NestedProduct::decompose(std::int64_t u) const {
    if (u < 1 || u > K_) throw DegreeOutOfRange("u outside [1, K]");
    std::int64_t rem = u;
    int j = 0;
    while (rem > d_[j] - 1) {
        rem -= d_[j] - 1;
        ++j;
    }
    // now 0 < rem <= d_{j+1}-1 and j < m
    UDecomposition dec;
    dec.u = u;
    dec.j = j;
    dec.ell = rem;
    dec.r = tk_[j]; // block of coordinate j+1
    dec.k0 = 1;
    while (d_[dec.k0 - 1] < d_[j] - dec.ell) ++dec.k0;
    return dec;
}

std::string NestedProduct::describe() const {
    std::string out;
    for (int k = 0; k < m_; ++k) {
        if (k) out += " x ";
        out += "F_" + std::to_string(d_[k]);
    }
    out += " over GF(" + std::to_string(ctx_->size()) + ")";
    return out;
}

std::vector<std::int64_t> parse_product_spec(std::string_view spec) {
    std::vector<std::int64_t> sizes;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string_view tok = spec.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError("bad product spec '" + std::string(spec) + "'");
        sizes.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (sizes.empty()) throw ParseError("empty product spec");
    return sizes;
}

} // namespace cartcode
