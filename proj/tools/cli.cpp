#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartcode/codes.hpp"
#include "cartcode/counting.hpp"
#include "cartcode/groups.hpp"

namespace cartcode::cli {

using json = nlohmann::ordered_json;

namespace {

struct Session {
    RunConfig cfg;
    std::unique_ptr<FieldCtx> ctx;
    std::unique_ptr<NestedProduct> prod;
};

std::optional<std::vector<std::int64_t>> lookup_poly_override(const std::string& file,
                                                              std::int64_t p, int R) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open polynomial table '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::int64_t fp = 0;
        int fR = 0;
        if (!(ss >> fp >> fR)) throw ParseError("bad polynomial table line: " + line);
        std::vector<std::int64_t> coeffs;
        std::int64_t c;
        while (ss >> c) coeffs.push_back(c);
        if (static_cast<int>(coeffs.size()) != fR + 1)
            throw ParseError("polynomial table line needs R+1 coefficients: " + line);
        if (fp == p && fR == R) return coeffs;
    }
    return std::nullopt;
}

Session open_session(const RunConfig& cfg) {
    Session s;
    s.cfg = cfg;
    auto [p, R] = parse_field_spec(cfg.field_spec);
    if (!cfg.poly_table.empty()) {
        if (auto coeffs = lookup_poly_override(cfg.poly_table, p, R)) {
            s.ctx = std::make_unique<FieldCtx>(p, R, *coeffs);
        }
    }
    if (!s.ctx) s.ctx = std::make_unique<FieldCtx>(p, R);
    s.prod = std::make_unique<NestedProduct>(
        *s.ctx, group_sizes_into_blocks(parse_product_spec(cfg.prod_spec)));
    return s;
}

std::pair<std::int64_t, std::int64_t> resolve_range(const Session& s, bool need_u) {
    if (s.cfg.u && s.cfg.u_range) throw ParseError("--u and --u-range are exclusive");
    if (s.cfg.u) return {*s.cfg.u, *s.cfg.u};
    if (s.cfg.u_range) {
        auto [a, b] = *s.cfg.u_range;
        if (a > b || a < 0 || b > s.prod->max_degree())
            throw DegreeOutOfRange("u range outside [0, K]");
        return *s.cfg.u_range;
    }
    if (need_u) throw ParseError("this command needs --u");
    return {1, s.prod->max_degree()};
}

std::string code_size_str(const Session& s, std::int64_t u) {
    return std::to_string(s.ctx->size()) + "^" + std::to_string(dimension(*s.prod, u));
}

/// Comma-joined list of the coordinates k whose N^(k) coincides with the
/// representative's (the k values sharing its block, clipped to [k0, j+1]).
std::string k_label(const NestedProduct& prod, const UDecomposition& dec, int rep_k,
                    bool ell_max) {
    if (ell_max) return std::to_string(rep_k);
    const int t = prod.block_of(rep_k);
    const int lo = std::max(dec.k0, prod.boundary(t - 1) + 1);
    const int hi = std::min(dec.j + 1, prod.boundary(t));
    std::string out;
    for (int k = lo; k <= hi; ++k) {
        if (!out.empty()) out += ",";
        out += std::to_string(k);
    }
    return out;
}

struct TableRow {
    std::string u, jl, k0, k, size, delta, nk, total;
};

void print_table(std::ostream& out, const std::vector<TableRow>& rows) {
    const TableRow header{"u", "(j,l)", "k0", "k", "|C|", "delta", "|N^(k)|", "|N|"};
    auto width = [&](auto field) {
        std::size_t w = (header.*field).size();
        for (const auto& r : rows) w = std::max(w, (r.*field).size());
        return w;
    };
    const std::size_t wu = width(&TableRow::u), wjl = width(&TableRow::jl),
                      wk0 = width(&TableRow::k0), wk = width(&TableRow::k),
                      wsz = width(&TableRow::size), wd = width(&TableRow::delta),
                      wnk = width(&TableRow::nk), wt = width(&TableRow::total);
    auto line = [&](const TableRow& r) {
        out << std::left << std::setw(wu + 2) << r.u << std::setw(wjl + 2) << r.jl
            << std::setw(wk0 + 2) << r.k0 << std::setw(wk + 2) << r.k
            << std::setw(wsz + 2) << r.size << std::setw(wd + 2) << r.delta
            << std::setw(wnk + 2) << r.nk << std::setw(wt) << r.total << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::vector<TableRow> count_rows(const Session& s, std::int64_t u) {
    const MinWtReport rep = count_minwt(*s.prod, u);
    std::vector<TableRow> rows;
    if (u == 0) {
        rows.push_back({"0", "-", "-", "-", code_size_str(s, 0),
                        std::to_string(s.prod->point_count()), rep.total.str(),
                        rep.total.str()});
        return rows;
    }
    const auto& dec = *rep.dec;
    const bool ell_max = dec.ell == s.prod->sizes()[dec.j] - 1;
    bool first = true;
    for (const auto& [k, cnt] : rep.per_k) {
        TableRow row;
        if (first) {
            row.u = std::to_string(u);
            row.jl = "(" + std::to_string(dec.j) + "," + std::to_string(dec.ell) + ")";
            row.k0 = std::to_string(rep.k0_display);
            row.size = code_size_str(s, u);
            row.delta = std::to_string(min_distance(*s.prod, u));
            row.total = rep.total.str();
        }
        row.k = k_label(*s.prod, dec, k, ell_max);
        row.nk = cnt.str();
        rows.push_back(std::move(row));
        first = false;
    }
    return rows;
}

json count_json(const Session& s, std::int64_t u) {
    const MinWtReport rep = count_minwt(*s.prod, u);
    json j;
    j["u"] = u;
    if (rep.dec) {
        j["j"] = rep.dec->j;
        j["ell"] = rep.dec->ell;
        j["k0"] = rep.k0_display;
    } else {
        j["j"] = nullptr;
        j["ell"] = nullptr;
        j["k0"] = nullptr;
    }
    json per_k = json::object();
    for (const auto& [k, cnt] : rep.per_k) per_k[std::to_string(k)] = cnt.str();
    j["per_k"] = std::move(per_k);
    j["total"] = rep.total.str();
    return j;
}

int cmd_params(Session& s, std::ostream& out) {
    auto [lo, hi] = resolve_range(s, false);
    if (s.cfg.format == Format::Json) {
        json arr = json::array();
        for (std::int64_t u = lo; u <= hi; ++u) {
            const CodeSummary cs = code_summary(*s.prod, u);
            arr.push_back(json{{"u", cs.u}, {"n", cs.n}, {"dim", cs.dim},
                               {"mindist", cs.mindist}});
        }
        out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
        return kOk;
    }
    if (s.cfg.format == Format::Csv) {
        out << "u,n,dim,mindist\n";
        for (std::int64_t u = lo; u <= hi; ++u) {
            const CodeSummary cs = code_summary(*s.prod, u);
            out << cs.u << "," << cs.n << "," << cs.dim << "," << cs.mindist << "\n";
        }
        return kOk;
    }
    std::vector<TableRow> rows;
    for (std::int64_t u = lo; u <= hi; ++u) {
        TableRow row;
        row.u = std::to_string(u);
        if (u > 0) {
            const auto dec = s.prod->decompose(u);
            row.jl = "(" + std::to_string(dec.j) + "," + std::to_string(dec.ell) + ")";
        } else {
            row.jl = "-";
        }
        row.k0 = row.k = row.nk = row.total = "-";
        row.size = code_size_str(s, u);
        row.delta = std::to_string(min_distance(*s.prod, u));
        rows.push_back(std::move(row));
    }
    print_table(out, rows);
    return kOk;
}

int cmd_count(Session& s, std::ostream& out) {
    auto [lo, hi] = resolve_range(s, false);
    if (s.cfg.format == Format::Json) {
        json arr = json::array();
        for (std::int64_t u = lo; u <= hi; ++u) arr.push_back(count_json(s, u));
        out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
        return kOk;
    }
    if (s.cfg.format == Format::Csv) {
        out << "u,j,ell,k0,k,count_k,total\n";
        for (std::int64_t u = lo; u <= hi; ++u) {
            const MinWtReport rep = count_minwt(*s.prod, u);
            if (!rep.dec) {
                out << u << ",,,,,," << rep.total.str() << "\n";
                continue;
            }
            for (const auto& [k, cnt] : rep.per_k)
                out << u << "," << rep.dec->j << "," << rep.dec->ell << ","
                    << rep.k0_display << "," << k << "," << cnt.str() << ","
                    << rep.total.str() << "\n";
        }
        return kOk;
    }
    std::vector<TableRow> rows;
    for (std::int64_t u = lo; u <= hi; ++u)
        for (auto& r : count_rows(s, u)) rows.push_back(std::move(r));
    print_table(out, rows);
    return kOk;
}

int cmd_enumerate(Session& s, std::ostream& out) {
    auto [lo, hi] = resolve_range(s, true);
    if (lo != hi) throw ParseError("enumerate needs a single --u");
    EnumerateOptions opts;
    opts.max_applications = s.cfg.orbit_cap;
    const MinWeightSet mw = enumerate_min_weight(*s.prod, lo, opts);
    const FieldCtx& ctx = *s.ctx;
    for (const auto& c : mw.codewords) {
        std::string line;
        for (std::int64_t i = 0; i < c.length(); ++i) {
            if (i) line += ",";
            line += ctx.label(c[i]);
        }
        out << line << "\n";
    }
    out << "count=" << mw.codewords.size() << " weight=" << mw.weight << "\n";
    return kOk;
}

int cmd_dist(Session& s, std::ostream& out) {
    auto [lo, hi] = resolve_range(s, true);
    if (lo != hi) throw ParseError("dist needs a single --u");
    const CodeSummary cs = code_summary(*s.prod, lo);
    const auto hist = weight_distribution(*s.prod, lo, s.cfg.scan_cap);
    if (s.cfg.format == Format::Json) {
        json weights = json::object();
        for (const auto& [w, cnt] : hist) weights[std::to_string(w)] = cnt;
        json j{{"u", cs.u}, {"n", cs.n}, {"dim", cs.dim}, {"mindist", cs.mindist},
               {"weights", std::move(weights)}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (s.cfg.format == Format::Csv) {
        out << "weight,count\n";
        for (const auto& [w, cnt] : hist) out << w << "," << cnt << "\n";
        return kOk;
    }
    out << "n=" << cs.n << " dim=" << cs.dim << " mindist=" << cs.mindist << "\n";
    for (const auto& [w, cnt] : hist)
        out << std::setw(6) << w << "  " << cnt << "\n";
    return kOk;
}

/// Seeded spot check: the action of sampled group elements preserves weight.
bool weight_invariance_spot_check(const Session& s, std::int64_t u, std::mt19937_64& rng) {
    const NestedProduct& prod = *s.prod;
    const FieldCtx& ctx = *s.ctx;
    const auto gens = aff_generators(prod);
    const auto basis = basis_codewords(prod, u);
    if (basis.empty() || gens.empty()) return true;
    for (int round = 0; round < 8; ++round) {
        std::vector<FieldElem> vals(prod.point_count(), ctx.zero());
        for (const auto& b : basis) {
            const FieldElem c = ctx.element(rng() % ctx.size());
            for (std::int64_t i = 0; i < prod.point_count(); ++i)
                vals[i] = ctx.add(vals[i], ctx.mul(c, b[i]));
        }
        Codeword word(prod, vals);
        AffineTransform t = gens[rng() % gens.size()];
        for (int hop = 0; hop < 2; ++hop) t = compose(t, gens[rng() % gens.size()]);
        const GroupElem g{ctx.element(1 + rng() % (ctx.size() - 1)), t};
        if (act(g, word).weight() != word.weight()) return false;
    }
    return true;
}

int cmd_verify(Session& s, std::ostream& out) {
    auto [lo, hi] = resolve_range(s, false);
    EnumerateOptions opts;
    opts.max_applications = s.cfg.orbit_cap;
    std::mt19937_64 rng(s.cfg.seed);

    json jout = json::array();
    bool all_pass = true;
    int passed = 0;
    for (std::int64_t u = lo; u <= hi; ++u) {
        const MinWtReport rep = count_minwt(*s.prod, u);
        const MinWeightSet mw = enumerate_min_weight(*s.prod, u, opts);
        const std::int64_t delta = min_distance(*s.prod, u);
        const std::int64_t dim = dimension(*s.prod, u);

        bool ok = rep.total == BigUint(mw.codewords.size());
        ok = ok && mw.weight == delta;
        for (const auto& c : mw.codewords)
            if (c.weight() != delta) ok = false;
        for (const auto& [k, cnt] : rep.per_k) {
            auto it = mw.per_k.find(k);
            if (it == mw.per_k.end() || BigUint(it->second) != cnt) ok = false;
        }
        ok = ok && dim == static_cast<std::int64_t>(monomial_basis(*s.prod, u).size());

        std::string scan_str = "skipped";
        const BigUint code_size = BigUint::pow(s.ctx->size(), dim);
        if (code_size <= BigUint(s.cfg.scan_cap)) {
            const ScanResult sr = exhaustive_min_weight(*s.prod, u, s.cfg.scan_cap);
            const bool scan_ok =
                sr.min_weight == delta && BigUint(sr.min_count) == rep.total;
            ok = ok && scan_ok;
            scan_str = std::to_string(sr.min_count);
        }
        ok = ok && weight_invariance_spot_check(s, u, rng);

        all_pass = all_pass && ok;
        passed += ok ? 1 : 0;

        if (s.cfg.format == Format::Json) {
            json j = count_json(s, u);
            j["enumerated"] = mw.codewords.size();
            j["scanned"] = scan_str;
            j["mindist"] = delta;
            j["pass"] = ok;
            jout.push_back(std::move(j));
        } else {
            out << "u=" << u << " total=" << rep.total.str()
                << " enum=" << mw.codewords.size() << " scan=" << scan_str
                << " delta=" << delta;
            if (!rep.per_k.empty() && rep.per_k.size() > 1) {
                out << " per-k";
                for (const auto& [k, cnt] : rep.per_k) out << " " << k << ":" << cnt.str();
            }
            out << " : " << (ok ? "PASS" : "FAIL") << "\n";
        }
    }
    if (s.cfg.format == Format::Json) {
        out << jout.dump(2) << "\n";
    } else {
        out << "VERIFY: " << passed << "/" << (hi - lo + 1)
            << (all_pass ? " PASS" : " FAIL") << "\n";
    }
    return all_pass ? kOk : kVerifyFailed;
}

int dispatch(Session& s, std::ostream& out) {
    if (s.cfg.command == "params") return cmd_params(s, out);
    if (s.cfg.command == "count") return cmd_count(s, out);
    if (s.cfg.command == "enumerate") return cmd_enumerate(s, out);
    if (s.cfg.command == "dist") return cmd_dist(s, out);
    if (s.cfg.command == "verify") return cmd_verify(s, out);
    throw ParseError("unknown command '" + s.cfg.command + "'");
}

std::pair<std::int64_t, std::int64_t> parse_range_arg(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("--u-range expects A..B");
    try {
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("--u-range expects A..B");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"affine Cartesian codes over nested subfields: parameters, "
                 "minimum-weight counts, orbit enumeration, verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string u_range_text;
    std::string format_text = "text";

    app.add_option("--field", cfg.field_spec, "field spec p^R, e.g. 2^2")->required();
    app.add_option("--prod", cfg.prod_spec, "coordinate sizes, e.g. 2,2,4")->required();
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--scan-cap", cfg.scan_cap, "max codewords for exhaustive scans");
    app.add_option("--orbit-cap", cfg.orbit_cap, "max group applications for enumeration");
    app.add_option("--poly-table", cfg.poly_table, "modulus override file: 'p R c0 .. cR'");
    app.add_option("--seed", cfg.seed, "seed for randomized spot checks");

    std::int64_t u_val = 0;
    bool u_seen = false;
    for (const char* name : {"params", "count", "enumerate", "dist", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->add_option_function<std::int64_t>(
            "--u", [&](std::int64_t v) { u_val = v; u_seen = true; }, "single degree u");
        sub->add_option("--u-range", u_range_text, "degree range A..B");
    }

    std::vector<const char*> argv;
    argv.push_back("cartcode");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kBadInput;
    }

    if (u_seen) cfg.u = u_val;
    if (format_text == "json") cfg.format = Format::Json;
    else if (format_text == "csv") cfg.format = Format::Csv;
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (!u_range_text.empty()) cfg.u_range = parse_range_arg(u_range_text);
        Session s = open_session(cfg);
        return dispatch(s, out);
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const FieldTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return run(args, out, err);
}

} // namespace cartcode::cli
