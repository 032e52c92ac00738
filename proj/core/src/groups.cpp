#include "cartcode/groups.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <thread>
#include <unordered_set>

namespace cartcode {

namespace {

using RepVec = std::vector<std::int32_t>;

std::string rep_key(const RepVec& w) {
    std::string key(w.size() * 4, '\0');
    std::memcpy(key.data(), w.data(), key.size());
    return key;
}

RepVec reps_of(const Codeword& c) {
    RepVec out(c.length());
    for (std::int64_t i = 0; i < c.length(); ++i) out[i] = c[i].rep;
    return out;
}

Codeword codeword_from_reps(const NestedProduct& prod, const RepVec& reps) {
    std::vector<FieldElem> vals(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) vals[i] = FieldElem{&prod.ctx(), reps[i]};
    return Codeword(prod, std::move(vals));
}

Codeword codeword_from_key(const NestedProduct& prod, const std::string& key) {
    RepVec reps(key.size() / 4);
    std::memcpy(reps.data(), key.data(), key.size());
    return codeword_from_reps(prod, reps);
}

bool point_in_domain(const NestedProduct& prod, std::span<const FieldElem> pt) {
    if (static_cast<int>(pt.size()) != prod.m()) return false;
    for (int k = 1; k <= prod.m(); ++k)
        if (!prod.ctx().in_subfield(pt[k - 1], prod.coord_size(k))) return false;
    return true;
}

} // namespace

// -------------------------------------------------------------- BlockMatrix

BlockMatrix::BlockMatrix(const NestedProduct& prod, std::vector<FieldElem> entries)
    : prod_(&prod), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(prod.m()) * prod.m())
        throw BadParameters("matrix must be m x m");
}

bool is_in_G(const NestedProduct& prod, std::span<const FieldElem> entries) {
    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();
    if (entries.size() != static_cast<std::size_t>(m) * m) return false;

    for (int i = 0; i < m; ++i) {
        const int t = prod.block_of(i + 1);
        const std::int64_t row_field = prod.block_field_size(t);
        const int st = prod.boundary(t);
        for (int z = 0; z < m; ++z) {
            const FieldElem a = entries[i * m + z];
            if (z >= st) {
                if (!a.is_zero()) return false;
            } else if (!ctx.in_subfield(a, row_field)) {
                return false;
            }
        }
    }

    // each diagonal block must be invertible; Gaussian elimination per block
    for (int t = 1; t <= prod.blocks(); ++t) {
        const int lo = prod.boundary(t - 1);
        const int hi = prod.boundary(t);
        const int mu = hi - lo;
        std::vector<FieldElem> blk(mu * mu, ctx.zero());
        for (int i = 0; i < mu; ++i)
            for (int j = 0; j < mu; ++j) blk[i * mu + j] = entries[(lo + i) * m + (lo + j)];
        int rank = 0;
        for (int col = 0; col < mu; ++col) {
            int pivot = -1;
            for (int row = rank; row < mu; ++row)
                if (!blk[row * mu + col].is_zero()) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) return false;
            for (int j = 0; j < mu; ++j) std::swap(blk[pivot * mu + j], blk[rank * mu + j]);
            const FieldElem inv = ctx.inv(blk[rank * mu + col]);
            for (int row = rank + 1; row < mu; ++row) {
                const FieldElem f = ctx.mul(blk[row * mu + col], inv);
                if (f.is_zero()) continue;
                for (int j = col; j < mu; ++j)
                    blk[row * mu + j] =
                        ctx.sub(blk[row * mu + j], ctx.mul(f, blk[rank * mu + j]));
            }
            ++rank;
        }
    }
    return true;
}

BlockMatrix identity_matrix(const NestedProduct& prod) {
    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();
    std::vector<FieldElem> e(m * m, ctx.zero());
    for (int i = 0; i < m; ++i) e[i * m + i] = ctx.one();
    return BlockMatrix(prod, std::move(e));
}

// ---------------------------------------------------------- AffineTransform

std::vector<FieldElem> AffineTransform::apply(std::span<const FieldElem> pt) const {
    const NestedProduct& prod = matrix.prod();
    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();
    std::vector<FieldElem> out(m, ctx.zero());
    for (int i = 0; i < m; ++i) {
        FieldElem acc = shift[i];
        for (int z = 0; z < m; ++z) {
            const FieldElem a = matrix.at(i, z);
            if (!a.is_zero()) acc = ctx.add(acc, ctx.mul(a, pt[z]));
        }
        out[i] = acc;
    }
    return out;
}

AffineTransform identity_transform(const NestedProduct& prod) {
    return {identity_matrix(prod), std::vector<FieldElem>(prod.m(), prod.ctx().zero())};
}

bool is_valid_transform(const AffineTransform& t) {
    const NestedProduct& prod = t.matrix.prod();
    return is_in_G(prod, t.matrix.entries()) && point_in_domain(prod, t.shift);
}

AffineTransform compose(const AffineTransform& t1, const AffineTransform& t2) {
    const NestedProduct& prod = t1.matrix.prod();
    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();
    std::vector<FieldElem> e(m * m, ctx.zero());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            FieldElem acc = ctx.zero();
            for (int z = 0; z < m; ++z)
                acc = ctx.add(acc, ctx.mul(t1.matrix.at(i, z), t2.matrix.at(z, j)));
            e[i * m + j] = acc;
        }
    std::vector<FieldElem> shift(m, ctx.zero());
    for (int i = 0; i < m; ++i) {
        FieldElem acc = t1.shift[i];
        for (int z = 0; z < m; ++z)
            acc = ctx.add(acc, ctx.mul(t1.matrix.at(i, z), t2.shift[z]));
        shift[i] = acc;
    }
    return {BlockMatrix(prod, std::move(e)), std::move(shift)};
}

std::vector<std::int32_t> point_permutation(const AffineTransform& t) {
    if (!is_valid_transform(t)) throw InvalidTransform("transform not valid for domain");
    const NestedProduct& prod = t.matrix.prod();
    const auto& pts = prod.points();
    std::vector<std::int32_t> perm(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        perm[i] = static_cast<std::int32_t>(prod.point_index(t.apply(pts[i])));
    return perm;
}

// ---------------------------------------------------------------- GroupElem

GroupElem identity_element(const NestedProduct& prod) {
    return {prod.ctx().one(), identity_transform(prod)};
}

GroupElem compose(const GroupElem& g2, const GroupElem& g1) {
    const FieldCtx& ctx = g1.transform.matrix.prod().ctx();
    return {ctx.mul(g1.scalar, g2.scalar), compose(g1.transform, g2.transform)};
}

ReducedPoly act(const GroupElem& g, const ReducedPoly& f) {
    return f.compose_affine(g.transform).scaled(g.scalar);
}

Codeword act(const GroupElem& g, const Codeword& c) {
    const NestedProduct& prod = c.prod();
    const FieldCtx& ctx = prod.ctx();
    const auto perm = point_permutation(g.transform);
    std::vector<FieldElem> vals(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        vals[i] = ctx.mul(g.scalar, c[perm[i]]);
    return Codeword(prod, std::move(vals));
}

// -------------------------------------------------------------- group order

BigUint aff_group_order(const NestedProduct& prod) {
    BigUint order(1);
    for (int t = 1; t <= prod.blocks(); ++t) {
        const std::uint64_t d = static_cast<std::uint64_t>(prod.block_field_size(t));
        const int mu = prod.multiplicity(t);
        const int s_prev = prod.boundary(t - 1);
        order *= BigUint::pow(d, static_cast<std::uint64_t>(mu) * (s_prev + 1));
        for (int i = 0; i < mu; ++i)
            order *= BigUint::pow(d, mu) - BigUint::pow(d, i);
    }
    return order;
}

BigUint full_group_order(const NestedProduct& prod) {
    return aff_group_order(prod) * BigUint(prod.ctx().size() - 1);
}

std::uint64_t for_each_matrix_in_G(const NestedProduct& prod, std::uint64_t cap,
                                   const std::function<void(const BlockMatrix&)>& fn) {
    BigUint size = aff_group_order(prod);
    size.div_exact(static_cast<std::uint64_t>(prod.point_count()));
    if (size > BigUint(cap)) throw TooLarge("block group larger than cap");

    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();

    // cells that may be nonzero, with their allowed subfield elements
    struct Cell {
        int i, z;
        const std::vector<FieldElem>* values;
    };
    std::vector<Cell> cells;
    std::vector<std::vector<FieldElem>> pools(prod.blocks());
    for (int t = 1; t <= prod.blocks(); ++t)
        pools[t - 1] = ctx.subfield_elements(prod.block_field_size(t));
    for (int i = 0; i < m; ++i) {
        const int t = prod.block_of(i + 1);
        for (int z = 0; z < prod.boundary(t); ++z)
            cells.push_back({i, z, &pools[t - 1]});
    }

    auto diag_blocks_invertible = [&](const std::vector<FieldElem>& entries) {
        return is_in_G(prod, entries);
    };

    std::vector<FieldElem> entries(m * m, ctx.zero());
    std::vector<std::size_t> digit(cells.size(), 0);
    std::uint64_t count = 0;
    for (const auto& c : cells) entries[c.i * m + c.z] = (*c.values)[0];
    for (;;) {
        if (diag_blocks_invertible(entries)) {
            ++count;
            fn(BlockMatrix(prod, entries));
        }
        std::size_t pos = cells.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < cells[pos].values->size()) break;
            digit[pos] = 0;
        }
        bool done = true;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            entries[cells[i].i * m + cells[i].z] = (*cells[i].values)[digit[i]];
            if (digit[i] != 0) done = false;
        }
        if (done) break;
    }
    return count;
}

std::vector<BlockMatrix> enumerate_G(const NestedProduct& prod, std::uint64_t cap) {
    std::vector<BlockMatrix> out;
    for_each_matrix_in_G(prod, cap, [&](const BlockMatrix& mt) { out.push_back(mt); });
    return out;
}

// --------------------------------------------------- subset stabilizers

namespace {

std::vector<std::int64_t> subset_signature(const FieldCtx& ctx,
                                           std::span<const FieldElem> omega) {
    std::vector<std::int64_t> sig;
    sig.reserve(omega.size());
    for (const auto& w : omega) sig.push_back(ctx.index_of(w));
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace

std::vector<std::pair<FieldElem, FieldElem>> stab_delta_omega(
    const FieldCtx& ctx, std::int64_t dk, std::span<const FieldElem> omega) {
    for (const auto& w : omega)
        if (!ctx.in_subfield(w, dk))
            throw OmegaNotInSubfield("Omega element outside subfield");
    const auto elems = ctx.subfield_elements(dk);
    const auto target = subset_signature(ctx, omega);
    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (std::int64_t ai = 1; ai < dk; ++ai) {
        for (std::int64_t bi = 0; bi < dk; ++bi) {
            const FieldElem a = elems[ai];
            const FieldElem b = elems[bi];
            std::vector<std::int64_t> image;
            image.reserve(omega.size());
            for (const auto& w : omega)
                image.push_back(ctx.index_of(ctx.add(ctx.mul(a, w), b)));
            std::sort(image.begin(), image.end());
            if (image == target) out.push_back({a, b});
        }
    }
    return out;
}

std::vector<OmegaOrbit> orbit_reps_omega(const FieldCtx& ctx, std::int64_t dk,
                                         std::int64_t s) {
    if (s < 0 || s > dk) throw SizeOutOfRange("subset size outside [0, dk]");
    const auto elems = ctx.subfield_elements(dk); // positions 0..dk-1
    if (s == 0) return {{{}, 1}};

    // position lookup by canonical element index
    std::vector<int> pos_of(static_cast<std::size_t>(ctx.size()) + 1, -1);
    for (std::int64_t i = 0; i < dk; ++i) pos_of[ctx.index_of(elems[i])] = static_cast<int>(i);

    // all s-subsets as sorted position vectors, in lexicographic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> comb(s);
    for (std::int64_t i = 0; i < s; ++i) comb[i] = static_cast<int>(i);
    for (;;) {
        subsets.push_back(comb);
        std::int64_t i = s - 1;
        while (i >= 0 && comb[i] == dk - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (std::int64_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }

    std::map<std::vector<int>, std::size_t> index_of_subset;
    for (std::size_t i = 0; i < subsets.size(); ++i) index_of_subset[subsets[i]] = i;

    // all dk(dk-1) affine maps as position permutations
    std::vector<std::vector<int>> maps;
    for (std::int64_t ai = 1; ai < dk; ++ai)
        for (std::int64_t bi = 0; bi < dk; ++bi) {
            std::vector<int> mp(dk);
            for (std::int64_t x = 0; x < dk; ++x)
                mp[x] = pos_of[ctx.index_of(
                    ctx.add(ctx.mul(elems[ai], elems[x]), elems[bi]))];
            maps.push_back(std::move(mp));
        }

    std::vector<bool> visited(subsets.size(), false);
    std::vector<OmegaOrbit> out;
    for (std::size_t start = 0; start < subsets.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        std::uint64_t orbit_size = 0;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            ++orbit_size;
            for (const auto& mp : maps) {
                std::vector<int> img(s);
                for (std::int64_t i = 0; i < s; ++i) img[i] = mp[subsets[cur][i]];
                std::sort(img.begin(), img.end());
                std::size_t idx = index_of_subset.at(img);
                if (!visited[idx]) {
                    visited[idx] = true;
                    stack.push_back(idx);
                }
            }
        }
        std::vector<FieldElem> rep;
        for (int p : subsets[start]) rep.push_back(elems[p]);
        out.push_back({std::move(rep), orbit_size});
    }
    return out;
}

// ----------------------------------------------------------- generators

std::vector<AffineTransform> aff_generators(const NestedProduct& prod) {
    const FieldCtx& ctx = prod.ctx();
    const int m = prod.m();
    std::vector<AffineTransform> gens;

    auto basis_of = [&](std::int64_t d) {
        // {alpha^e} for e < log_p(d) is an F_p-basis of the size-d subfield
        std::vector<FieldElem> basis;
        FieldElem alpha = ctx.subfield_generator(d);
        FieldElem cur = ctx.one();
        for (std::int64_t sz = 1; sz < d; sz *= ctx.characteristic()) {
            basis.push_back(cur);
            cur = ctx.mul(cur, alpha);
        }
        return basis;
    };

    for (int i = 0; i < m; ++i) {
        const std::int64_t d = prod.sizes()[i];
        const int t = prod.block_of(i + 1);
        const auto basis = basis_of(d);

        // translations along coordinate i
        for (const auto& beta : basis) {
            AffineTransform tr = identity_transform(prod);
            tr.shift[i] = beta;
            gens.push_back(std::move(tr));
        }
        // dilation at coordinate i (trivial torus for d == 2)
        if (d > 2) {
            AffineTransform tr = identity_transform(prod);
            std::vector<FieldElem> e = tr.matrix.entries();
            e[i * m + i] = ctx.subfield_generator(d);
            tr.matrix = BlockMatrix(prod, std::move(e));
            gens.push_back(std::move(tr));
        }
        // elementary transvections I + beta E_{i,z} for allowed columns
        for (int z = 0; z < prod.boundary(t); ++z) {
            if (z == i) continue;
            for (const auto& beta : basis) {
                AffineTransform tr = identity_transform(prod);
                std::vector<FieldElem> e = tr.matrix.entries();
                e[i * m + z] = beta;
                tr.matrix = BlockMatrix(prod, std::move(e));
                gens.push_back(std::move(tr));
            }
        }
    }
    return gens;
}

// ------------------------------------------------- min-weight enumeration

namespace {

struct OrbitEngine {
    const NestedProduct& prod;
    const FieldCtx& ctx;
    std::vector<std::vector<std::int32_t>> perms; // generator permutations
    std::int32_t scalar_rep;                      // primitive scalar, kZeroRep if q == 2
    std::uint64_t budget;

    OrbitEngine(const NestedProduct& p, std::uint64_t max_apps)
        : prod(p), ctx(p.ctx()), budget(max_apps) {
        for (const auto& t : aff_generators(p)) perms.push_back(point_permutation(t));
        scalar_rep = ctx.size() > 2 ? ctx.generator().rep : FieldElem::kZeroRep;
    }

    void spend(std::uint64_t k) {
        if (budget < k) throw TooLarge("orbit enumeration exceeded its application cap");
        budget -= k;
    }

    /// BFS closure of the seeds under generator application, inserted into
    /// the caller's set.
    void close(std::unordered_set<std::string>& set, const RepVec& seed) {
        std::vector<RepVec> stack;
        auto push = [&](RepVec w) {
            auto [it, inserted] = set.insert(rep_key(w));
            (void)it;
            if (inserted) stack.push_back(std::move(w));
        };
        push(seed);
        const std::size_t n = seed.size();
        RepVec next(n);
        while (!stack.empty()) {
            RepVec cur = std::move(stack.back());
            stack.pop_back();
            for (const auto& perm : perms) {
                spend(1);
                for (std::size_t i = 0; i < n; ++i) next[i] = cur[perm[i]];
                push(next);
            }
            if (scalar_rep != FieldElem::kZeroRep) {
                spend(1);
                for (std::size_t i = 0; i < n; ++i)
                    next[i] = ctx.mul_rep(scalar_rep, cur[i]);
                push(next);
            }
        }
    }
};

/// Literal definition: applies every (gamma, M, b) of the full group to every
/// seed. Partitioned across workers; per-worker sets merged by union.
void full_group_closure(const NestedProduct& prod, const std::vector<RepVec>& seeds,
                        const EnumerateOptions& opts,
                        std::unordered_set<std::string>& set) {
    const FieldCtx& ctx = prod.ctx();
    const std::int64_t n = prod.point_count();

    BigUint apps = full_group_order(prod) * BigUint(seeds.size());
    if (apps > BigUint(opts.max_applications))
        throw TooLarge("full-group enumeration exceeds the application cap");

    std::vector<BlockMatrix> mats =
        enumerate_G(prod, opts.max_applications / std::max<std::int64_t>(n, 1) + 1);
    const auto& pts = prod.points();

    int workers = opts.workers > 0
                      ? opts.workers
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(mats.size()));

    std::vector<std::unordered_set<std::string>> partial(workers);
    auto run = [&](int w) {
        RepVec image(n);
        for (std::size_t mi = w; mi < mats.size(); mi += workers) {
            AffineTransform t{mats[mi], std::vector<FieldElem>(prod.m(), ctx.zero())};
            for (std::int64_t b = 0; b < n; ++b) {
                t.shift = pts[b];
                std::vector<std::int32_t> perm(n);
                for (std::int64_t i = 0; i < n; ++i)
                    perm[i] = static_cast<std::int32_t>(prod.point_index(t.apply(pts[i])));
                for (const auto& seed : seeds) {
                    for (std::int64_t i = 0; i < n; ++i) image[i] = seed[perm[i]];
                    RepVec scaled = image;
                    for (std::int64_t g = 0; g < ctx.size() - 1; ++g) {
                        if (g > 0)
                            for (auto& v : scaled)
                                v = ctx.mul_rep(ctx.generator().rep, v);
                        partial[w].insert(rep_key(scaled));
                    }
                }
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (auto& p : partial)
        for (auto& key : p) set.insert(key);
}

/// Representative coordinates k. One per admissible block by default
/// (k = s_t for blocks below r, k = j+1 for block r); every admissible k in
/// all_k mode.
std::vector<int> representative_ks(const NestedProduct& prod, const UDecomposition& dec,
                                   bool all_k) {
    std::vector<int> ks;
    if (all_k) {
        for (int k = dec.k0; k <= dec.j + 1; ++k)
            if (prod.sizes()[k - 1] >= prod.sizes()[dec.j] - dec.ell) ks.push_back(k);
        return ks;
    }
    const int t0 = prod.block_of(dec.k0);
    for (int t = t0; t <= dec.r - 1; ++t) ks.push_back(prod.boundary(t));
    ks.push_back(dec.j + 1);
    return ks;
}

void collect_k(const NestedProduct& prod, const UDecomposition& dec, int k,
               const EnumerateOptions& opts, std::unordered_set<std::string>& set) {
    const std::int64_t sk = prod.sizes()[k - 1] - (prod.sizes()[dec.j] - dec.ell);
    std::vector<RepVec> seeds;
    if (opts.full_group) {
        // every Omega subset, no orbit collapsing
        const auto elems = prod.ctx().subfield_elements(prod.sizes()[k - 1]);
        std::vector<int> comb(sk);
        for (std::int64_t i = 0; i < sk; ++i) comb[i] = static_cast<int>(i);
        const std::int64_t dk = prod.sizes()[k - 1];
        for (;;) {
            std::vector<FieldElem> omega;
            for (std::int64_t i = 0; i < sk; ++i) omega.push_back(elems[comb[i]]);
            seeds.push_back(reps_of(build_h(prod, dec, k, omega).evaluate()));
            if (sk == 0) break;
            std::int64_t i = sk - 1;
            while (i >= 0 && comb[i] == dk - sk + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::int64_t j = i + 1; j < sk; ++j) comb[j] = comb[j - 1] + 1;
        }
        full_group_closure(prod, seeds, opts, set);
        return;
    }
    for (const auto& orbit : orbit_reps_omega(prod.ctx(), prod.sizes()[k - 1], sk))
        seeds.push_back(reps_of(build_h(prod, dec, k, orbit.rep).evaluate()));
    OrbitEngine engine(prod, opts.max_applications);
    for (const auto& seed : seeds) engine.close(set, seed);
}

std::vector<Codeword> sorted_codewords(const NestedProduct& prod,
                                       std::unordered_set<std::string>& set) {
    std::vector<std::string> keys(set.begin(), set.end());
    std::sort(keys.begin(), keys.end());
    std::vector<Codeword> out;
    out.reserve(keys.size());
    for (const auto& key : keys) out.push_back(codeword_from_key(prod, key));
    return out;
}

} // namespace

MinWeightSet enumerate_min_weight(const NestedProduct& prod, std::int64_t u,
                                  const EnumerateOptions& opts) {
    if (u < 1 || u > prod.max_degree()) {
        if (u != 0) throw DegreeOutOfRange("u outside [0, K]");
        // constants: the q-1 scalar multiples of the all-ones word
        MinWeightSet out;
        out.u = 0;
        out.weight = prod.point_count();
        const FieldCtx& ctx = prod.ctx();
        std::unordered_set<std::string> set;
        for (std::int64_t e = 0; e < ctx.size() - 1; ++e) {
            std::vector<FieldElem> vals(prod.point_count(), ctx.from_exp(e));
            set.insert(Codeword(prod, std::move(vals)).key());
        }
        out.codewords = sorted_codewords(prod, set);
        out.per_k.clear();
        return out;
    }

    const UDecomposition dec = prod.decompose(u);
    const std::int64_t dj1 = prod.sizes()[dec.j];

    MinWeightSet out;
    out.u = u;

    std::unordered_set<std::string> total;
    if (dec.ell == dj1 - 1 && !opts.all_k) {
        // h is independent of k and Omega on this branch; a single orbit
        collect_k(prod, dec, dec.j + 1, opts, total);
        out.per_k[dec.j + 1] = total.size();
    } else {
        for (int k : representative_ks(prod, dec, opts.all_k)) {
            std::unordered_set<std::string> set_k;
            collect_k(prod, dec, k, opts, set_k);
            out.per_k[k] = set_k.size();
            total.merge(set_k);
        }
    }
    out.codewords = sorted_codewords(prod, total);

    std::int64_t delta = prod.sizes()[dec.j] - dec.ell;
    for (int i = dec.j + 1; i < prod.m(); ++i) delta *= prod.sizes()[i];
    out.weight = delta;
    return out;
}

std::vector<Codeword> enumerate_min_weight_k(const NestedProduct& prod, std::int64_t u,
                                             int k, const EnumerateOptions& opts) {
    if (u < 1 || u > prod.max_degree()) throw DegreeOutOfRange("u outside [1, K]");
    const UDecomposition dec = prod.decompose(u);
    if (k < dec.k0 || k > dec.j + 1 ||
        prod.sizes()[k - 1] < prod.sizes()[dec.j] - dec.ell)
        throw KOutOfRange("k outside [k0, j+1] or d_k < d_{j+1}-ell");
    std::unordered_set<std::string> set;
    collect_k(prod, dec, k, opts, set);
    return sorted_codewords(prod, set);
}

std::vector<Codeword> orbit_of(const Codeword& c, const EnumerateOptions& opts) {
    const NestedProduct& prod = c.prod();
    std::unordered_set<std::string> set;
    if (opts.full_group) {
        full_group_closure(prod, {reps_of(c)}, opts, set);
    } else {
        OrbitEngine engine(prod, opts.max_applications);
        engine.close(set, reps_of(c));
    }
    return sorted_codewords(prod, set);
}

std::uint64_t stabilizer_order(const Codeword& c, std::uint64_t cap) {
    const NestedProduct& prod = c.prod();
    const FieldCtx& ctx = prod.ctx();
    if (full_group_order(prod) > BigUint(cap))
        throw TooLarge("group too large for stabilizer iteration");
    const std::int64_t n = prod.point_count();
    const auto& pts = prod.points();
    const RepVec base = reps_of(c);

    std::uint64_t stab = 0;
    for_each_matrix_in_G(prod, cap, [&](const BlockMatrix& mt) {
        AffineTransform t{mt, std::vector<FieldElem>(prod.m(), ctx.zero())};
        for (std::int64_t b = 0; b < n; ++b) {
            t.shift = pts[b];
            std::vector<std::int32_t> perm(n);
            for (std::int64_t i = 0; i < n; ++i)
                perm[i] = static_cast<std::int32_t>(prod.point_index(t.apply(pts[i])));
            for (std::int64_t g = 0; g < ctx.size() - 1; ++g) {
                const std::int32_t gamma = ctx.from_exp(g).rep;
                bool fixed = true;
                for (std::int64_t i = 0; i < n && fixed; ++i)
                    fixed = ctx.mul_rep(gamma, base[perm[i]]) == base[i];
                if (fixed) ++stab;
            }
        }
    });
    return stab;
}

} // namespace cartcode
