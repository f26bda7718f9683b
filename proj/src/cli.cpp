#include "charclass/cli.hpp"

#include "charclass/bounds.hpp"
#include "charclass/expr.hpp"
#include "charclass/field.hpp"
#include "charclass/grassmannian.hpp"
#include "charclass/sampler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace charclass {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "1";

struct Options {
    bool json = false;
    std::string regime = "real";
    std::uint64_t seed = 1;
    std::uint64_t trials = 10000;
    std::optional<int> trunc;

    std::string expr;
    std::string cited;
    int m = 0, k = 0, n = 0, p = 0;
    std::uint64_t lucas_n = 0, lucas_k = 0;
    std::string family = "chern";
    std::string element;
    std::string tuple;
    bool search = false;
    int radius = 1;
};

Regime parse_regime(const std::string& s) { return s == "complex" ? Regime::Complex : Regime::Real; }

Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json report_json(const BoundReport& r) {
    Json j;
    j["bound"] = r.bound;
    j["theorem"] = r.theorem;
    Json entries = Json::array();
    for (const auto& e : r.breakdown) {
        entries.push_back({{"piece", e.piece},
                           {"top_degree", e.top_degree},
                           {"exact", e.exact},
                           {"points", e.points},
                           {"contribution", e.contribution()}});
    }
    j["breakdown"] = entries;
    j["tightness"] = r.tightness ? Json{{"N", r.tightness->N}, {"source", r.tightness->source}} : Json(nullptr);
    return j;
}

void print_report(std::ostream& out, const BoundReport& r) {
    out << "N >= " << r.bound << " (" << r.theorem << ")\n";
    for (const auto& e : r.breakdown) {
        out << "  " << e.piece << ": " << (e.exact ? "" : ">= ") << e.top_degree << " + " << e.points << " = "
            << e.contribution() << "\n";
    }
    if (r.tightness) {
        out << "  tight: a map into R^" << r.tightness->N << " exists (" << r.tightness->source << ")\n";
    } else {
        out << "  lower bound only: no matching existence result\n";
    }
}

CitedKind parse_cited(const std::string& s) {
    if (s == "blz") return CitedKind::BlzReal;
    if (s == "bclz-p") return CitedKind::BclzComplexPRegular;
    if (s == "bclz-power") return CitedKind::BclzComplexPrimePower;
    if (s == "handel") return CitedKind::HandelDisjoint;
    if (s == "np") return CitedKind::ComplexNpRegular;
    throw std::invalid_argument("unknown cited bound '" + s + "' (blz, bclz-p, bclz-power, handel, np)");
}

int cmd_bound(const Options& o, std::ostream& out) {
    BoundReport report;
    if (!o.cited.empty()) {
        const CitedKind kind = parse_cited(o.cited);
        CitedParams params{o.m, o.k, o.p, o.n, {}};
        if (kind == CitedKind::HandelDisjoint) {
            if (o.expr.empty()) throw std::invalid_argument("handel needs a query of closed manifolds");
            for (const auto& piece : parse_query(o.expr).pieces) {
                params.manifolds.emplace_back(piece.spec.real_dimension(), top_dual_degree(piece.spec).q);
            }
        }
        report = bound_cited(kind, params);
    } else {
        if (o.expr.empty()) throw std::invalid_argument("bound needs an expression");
        const Regime regime = parse_regime(o.regime);
        const Expression e = parse_manifold_expr(o.expr);
        if (const auto* spec = std::get_if<ManifoldSpec>(&e)) {
            if (regime == Regime::Real && spec->is_closed()) {
                report = bound_product_2regular(*spec);
            } else {
                report = bound_query(RegularQuery{{Piece{*spec, 2}}, regime});
            }
        } else {
            RegularQuery q = std::get<RegularQuery>(e);
            q.regime = regime;
            report = bound_query(q);
        }
    }
    if (o.json) {
        Json j = header("bound");
        if (!o.expr.empty()) j["input"] = o.expr;
        if (o.cited.empty()) j["regime"] = o.regime;
        j.update(report_json(report));
        emit_json(out, j);
    } else {
        print_report(out, report);
    }
    return kExitOk;
}

int cmd_dual_sw(const Options& o, std::ostream& out) {
    const ManifoldSpec spec = parse_product(o.expr);
    const GradedSeries w = total_sw(spec);
    const GradedSeries wbar = series_invert(w);
    const int brute = wbar.top_degree();
    const int closed = top_dual_degree_closed_form(spec).q;
    if (o.json) {
        Json j = header("dual-sw");
        j["input"] = spec.to_string();
        j["total_sw"] = w.to_string();
        j["dual_sw"] = wbar.to_string();
        j["q"] = {{"brute_force", brute}, {"closed_form", closed}};
        j["source"] = "inverse of the total Stiefel-Whitney class in mod 2 cohomology";
        emit_json(out, j);
    } else {
        out << "w(" << spec.to_string() << ") = " << w.to_string() << "\n";
        out << "wbar(" << spec.to_string() << ") = " << wbar.to_string() << "\n";
        out << "q = " << brute << " (brute-force series inversion mod 2)\n";
        out << "q = " << closed << " (closed form per factor)\n";
    }
    return brute == closed ? kExitOk : kExitInconclusive;
}

int cmd_height(const Options& o, std::ostream& out, std::ostream& err) {
    const ClassFamily family = o.family == "sw" ? ClassFamily::StiefelWhitney : ClassFamily::Chern;
    if (o.family != "sw" && o.family != "chern") throw std::invalid_argument("--family must be chern or sw");
    std::optional<int> trunc = o.trunc;
    if (!trunc) {
        const int unit = family == ClassFamily::Chern ? 2 : 1;
        if (o.k < 1 || o.n < o.k) throw std::invalid_argument("need n >= k >= 1");
        // Every positive-degree class vanishes beyond the top degree.
        trunc = unit * (o.k * (o.n + 1 - o.k) + 1);
        err << "height: automatic truncation " << *trunc << " (top degree + one unit)\n";
    }
    const GrassmannPresentation pres = family == ClassFamily::Chern
                                           ? GrassmannPresentation::chern(o.k, o.n, trunc)
                                           : GrassmannPresentation::stiefel_whitney(o.k, o.n, trunc);
    const std::string element = o.element.empty() ? (family == ClassFamily::Chern ? "c1" : "w1") : o.element;
    const auto idx = pres.generator_index(element);
    if (!idx) throw std::invalid_argument("unknown generator '" + element + "' for " + pres.label());
    const Height h = height(pres, pres.generator(*idx));
    const std::string value = h.infinite ? "infinite" : std::to_string(h.value);
    const std::string source = "exact row reduction in H^*(" + pres.label() + "; " + pres.domain().name() + ")";
    if (o.json) {
        Json j = header("height");
        j["k"] = o.k;
        j["n"] = o.n;
        j["family"] = o.family;
        j["element"] = element;
        j["truncation"] = pres.truncation();
        j["height"] = h.infinite ? Json("infinite") : Json(h.value);
        j["source"] = source;
        emit_json(out, j);
    } else {
        out << value << " (height of " << element << ", " << source << ")\n";
    }
    return kExitOk;
}

int cmd_lucas(const Options& o, std::ostream& out) {
    const std::uint64_t r = lucas_binom_mod_p(o.lucas_n, o.lucas_k, static_cast<std::uint64_t>(o.p));
    if (o.json) {
        Json j = header("lucas");
        j["n"] = o.lucas_n;
        j["k"] = o.lucas_k;
        j["p"] = o.p;
        j["residue"] = r;
        j["source"] = "Lucas' theorem";
        emit_json(out, j);
    } else {
        out << r << " (Lucas' theorem: C(" << o.lucas_n << "," << o.lucas_k << ") mod " << o.p << ")\n";
    }
    return kExitOk;
}

int parse_positive(std::string_view s, const std::string& what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
        throw std::invalid_argument("bad " + what + " '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto at = s.find(sep, start);
        parts.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

ExampleMap parse_map(std::string_view s) {
    std::vector<ExampleMap> parts;
    for (const auto part : split(s, '+')) {
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("map must look like vandermonde:K or sphere:M");
        const auto name = part.substr(0, colon);
        const int v = parse_positive(part.substr(colon + 1), "map parameter");
        if (name == "vandermonde") {
            parts.push_back(ExampleMap::vandermonde(v));
        } else if (name == "sphere") {
            parts.push_back(ExampleMap::sphere_one_i(v));
        } else {
            throw std::invalid_argument("unknown map '" + std::string(name) + "' (vandermonde, sphere)");
        }
    }
    return ExampleMap::direct_sum(parts);
}

Json witness_json(const Witness& w) {
    Json pts = Json::array();
    for (const auto& p : w.points) {
        Json coords = Json::array();
        for (const auto& c : p.coords) coords.push_back(c.get_str());
        pts.push_back({{"piece", p.block + 1}, {"coords", coords}});
    }
    return {{"trial", w.trial}, {"rank", w.rank}, {"expected_rank", w.expected_rank}, {"points", pts}};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const ExampleMap map = parse_map(o.expr);
    std::vector<int> sizes = map.claimed_regularity();
    if (!o.tuple.empty()) {
        sizes.clear();
        for (const auto part : split(o.tuple, ',')) sizes.push_back(parse_positive(part, "tuple size"));
    }
    if (o.search) {
        if (map.blocks().size() != 1 || map.blocks().front().kind != MapKind::SphereOneI || sizes.size() != 1) {
            throw std::invalid_argument("--search applies to a single sphere map");
        }
        const int m = map.blocks().front().parameter;
        const auto w = find_sphere_counterexample(m, sizes.front(), o.radius);
        if (o.json) {
            Json j = header("verify");
            j["map"] = map.to_string();
            j["mode"] = "exact rational search";
            j["tuple"] = sizes;
            j["verdict"] = w ? "counterexample" : "no-violation-found";
            j["witness"] = w ? witness_json(*w) : Json(nullptr);
            j["source"] = "definition of regular maps: images of distinct points linearly independent";
            emit_json(out, j);
        } else {
            out << map.to_string() << ", tuple size " << sizes.front() << ", exact search over rational points: "
                << (w ? "counterexample" : "no-violation-found") << "\n";
            if (w) {
                for (const auto& p : w->points) {
                    out << "  (";
                    for (std::size_t i = 0; i < p.coords.size(); ++i) out << (i ? ", " : "") << p.coords[i];
                    out << ")\n";
                }
                out << "  rank " << w->rank << " < " << w->expected_rank << "\n";
            }
        }
        return w ? kExitCounterexample : kExitOk;
    }
    const RegularityReport r = sample_check_regular(map, sizes, o.trials, o.seed);
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    if (o.json) {
        Json j = header("verify");
        j["map"] = r.map;
        j["ambient_dimension"] = r.ambient_dimension;
        j["tuple"] = r.tuple_sizes;
        j["seed"] = r.seed;
        j["trials"] = r.trials;
        j["violations"] = r.violations;
        j["exact_certified"] = r.exact_certified;
        j["min_singular_ratio"] = r.min_singular_ratio ? Json(*r.min_singular_ratio) : Json(nullptr);
        j["warnings"] = r.warnings;
        j["verdict"] = r.verdict();
        j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
        j["source"] = "definition of regular maps: images of distinct points linearly independent";
        emit_json(out, j);
    } else {
        out << r.map << " into R^" << r.ambient_dimension << ", " << r.trials << " trials, seed " << r.seed << ": "
            << r.verdict() << "\n";
        out << "  violations: " << r.violations << ", exactly certified: " << r.exact_certified << "\n";
        if (r.min_singular_ratio) out << "  min sigma_min/sigma_max: " << *r.min_singular_ratio << "\n";
        if (r.witness) out << "  first violation at trial " << r.witness->trial << ": rank " << r.witness->rank
                           << " < " << r.witness->expected_rank << "\n";
    }
    return r.witness ? kExitCounterexample : kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Expression e = parse_manifold_expr(o.expr);
    const auto* spec = std::get_if<ManifoldSpec>(&e);
    std::vector<TableRow> rows;
    std::optional<ExistenceRecord> best;
    if (spec && spec->is_atom() && spec->single().family == Family::RealProj) {
        rows = rp_table_rows(spec->single().m);
        best = rp_table_lookup(spec->single().m);
    } else {
        const RegularQuery q = spec ? RegularQuery{{Piece{*spec, 3}}, Regime::Real} : std::get<RegularQuery>(e);
        best = upper_existence(q);
    }
    if (o.json) {
        Json j = header("table");
        j["input"] = render(e);
        Json jr = Json::array();
        for (const auto& r : rows) jr.push_back({{"condition", r.condition}, {"formula", r.formula}, {"N", r.N}});
        j["rows"] = jr;
        j["existence"] = best ? Json{{"N", best->N}, {"source", best->source}} : Json(nullptr);
        emit_json(out, j);
    } else {
        for (const auto& r : rows) out << "  " << r.condition << ": N >= " << r.formula << " = " << r.N << "\n";
        if (best) {
            out << "exists for N >= " << best->N << " (" << best->source << ")\n";
        } else {
            out << "no existence data for " << render(e) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic-class bounds for regular maps", "charclass"};
    app.require_subcommand(1);
    Options o;
    const auto common = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

    auto* bound = app.add_subcommand("bound", "lower bound on N for a manifold or query");
    common(bound);
    bound->add_option("expr", o.expr, "manifold product or query, e.g. \"S^3 x RP^5\" or \"(S^4,2)+(R^2,8)\"");
    bound->add_option("--regime", o.regime, "real or complex")->check(CLI::IsMember({"real", "complex"}));
    bound->add_option("--cited", o.cited, "cited bound: blz, bclz-p, bclz-power, handel, np");
    bound->add_option("--m", o.m, "dimension parameter for --cited");
    bound->add_option("--k", o.k, "regularity for --cited");
    bound->add_option("--p", o.p, "prime for --cited");
    bound->add_option("--n", o.n, "copy count for --cited np");

    auto* dual = app.add_subcommand("dual-sw", "dual Stiefel-Whitney class and q of a product");
    common(dual);
    dual->add_option("expr", o.expr, "manifold product")->required();

    auto* height_cmd = app.add_subcommand("height", "height of a generator in Grassmannian cohomology");
    common(height_cmd);
    height_cmd->add_option("--k", o.k, "subspace dimension")->required();
    height_cmd->add_option("--n", o.n, "G_k(F^{n+1})")->required();
    height_cmd->add_option("--family", o.family, "chern (Q) or sw (Z/2)");
    height_cmd->add_option("--element", o.element, "generator name (default c1 or w1)");
    height_cmd->add_option("--trunc", o.trunc, "truncation degree override")->check(CLI::PositiveNumber);

    auto* lucas = app.add_subcommand("lucas", "binomial coefficient mod p");
    common(lucas);
    lucas->add_option("n", o.lucas_n)->required();
    lucas->add_option("k", o.lucas_k)->required();
    lucas->add_option("--p", o.p, "prime modulus")->required();

    auto* verify = app.add_subcommand("verify", "sample tuples and test regularity of an example map");
    common(verify);
    verify->add_option("map", o.expr, "vandermonde:K, sphere:M, or a '+'-joined direct sum")->required();
    verify->add_option("--tuple", o.tuple, "points per piece, comma separated (default: claimed regularity)");
    verify->add_option("--seed", o.seed, "RNG seed");
    verify->add_option("--trials", o.trials, "number of sampled tuples");
    verify->add_flag("--search", o.search, "exact search over rational sphere points instead of sampling");
    verify->add_option("--radius", o.radius, "grid radius for --search")->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "existence data: 3-regular RP^m table and known constructions");
    common(table);
    table->add_option("expr", o.expr, "RP^m, another manifold, or a query")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bound) return cmd_bound(o, out);
        if (*dual) return cmd_dual_sw(o, out);
        if (*height_cmd) return cmd_height(o, out, err);
        if (*lucas) return cmd_lucas(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*table) return cmd_table(o, out);
    } catch (const InconclusiveError& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace charclass
