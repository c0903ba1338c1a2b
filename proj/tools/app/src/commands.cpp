#include "tiltlab/app/commands.hpp"

#include "tiltlab/app/cache.hpp"
#include "tiltlab/app/checks.hpp"
#include "tiltlab/app/io.hpp"
#include "tiltlab/cluster_algebra.hpp"
#include "tiltlab/cluster_category.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/tilting.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace tiltlab::app {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Plain aligned text table.
class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    [[nodiscard]] std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            if (width.size() < r.size()) width.resize(r.size(), 0);
            for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
        }
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t k = 0; k < r.size(); ++k) {
                line += r[k];
                if (k + 1 < r.size()) line += std::string(width[k] - r[k].size() + 2, ' ');
            }
            out += line + "\n";
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

struct Context {
    const CommandRequest& req;
    QuiverFile file;
    std::optional<ExceptionalCatalog> catalog_;

    const Quiver& quiver() const { return file.quiver; }
    const ExceptionalCatalog& catalog() {
        if (!catalog_) {
            if (!is_dynkin(file.quiver) && !req.cap)
                throw PreconditionError("quiver is not Dynkin: pass --cap to bound the catalog");
            catalog_ = load_or_build_catalog(file.quiver, file.raw, req.cap, req.use_cache).catalog;
        }
        return *catalog_;
    }
};

struct Output {
    json data;
    std::string table;
    int code = exit_ok;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

std::string summands_string(const ExceptionalCatalog& c, const std::vector<std::size_t>& idx) {
    std::vector<std::string> parts;
    for (auto i : idx) parts.push_back(to_string(c.dims(i)));
    return join(parts, " + ");
}

json summands_json(const ExceptionalCatalog& c, const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(dims_to_json(c.dims(i)));
    return out;
}

std::vector<std::size_t> catalog_indices(Context& ctx, const std::vector<std::string>& args) {
    std::vector<std::size_t> idx;
    for (const auto& a : args) idx.push_back(ctx.catalog().index_of(parse_dim_vector(a, ctx.quiver().vertex_count())));
    std::sort(idx.begin(), idx.end());
    return idx;
}

Representation resolve_module(Context& ctx, const std::string& arg) {
    std::error_code ec;
    if (fs::is_regular_file(arg, ec))
        return representation_from_json(ctx.quiver(), parse_json(read_text(arg), arg));
    const DimVector d = parse_dim_vector(arg, ctx.quiver().vertex_count());
    if (is_dynkin(ctx.quiver()) && !ctx.req.cap) return indec_for_root(ctx.quiver(), d);
    return ctx.catalog().entry(ctx.catalog().index_of(d)).rep;
}

std::optional<std::vector<bool>> support_mask(Context& ctx) {
    if (!ctx.req.support) return std::nullopt;
    std::vector<bool> mask(ctx.quiver().vertex_count(), false);
    for (const auto& id : *ctx.req.support) mask[ctx.quiver().index_of(id)] = true;
    return mask;
}

json rational_matrix(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::string component_name(Component k) {
    switch (k) {
        case Component::preprojective: return "preprojective";
        case Component::preinjective: return "preinjective";
        default: return "regular";
    }
}

Output cmd_roots(Context& ctx) {
    const Quiver& q = ctx.quiver();
    const auto ed = euler_data(q);
    const auto roots = positive_roots(q);
    Output o;
    json list = json::array();
    Table t({"root", "length", "component"});
    for (const auto& d : roots) {
        list.push_back(dims_to_json(d));
        t.add({to_string(d), std::to_string(d.total()), component_name(classify_component(q, d))});
    }
    o.data = {{"quiver", quiver_to_json(q)},
              {"roots", list},
              {"count", roots.size()},
              {"euler_matrix", rational_matrix(ed.euler_matrix)},
              {"coxeter_matrix", rational_matrix(ed.coxeter_matrix)}};
    o.table = t.str() + std::to_string(roots.size()) + " positive roots\n";
    return o;
}

Output cmd_catalog(Context& ctx) {
    const auto& c = ctx.catalog();
    Output o;
    o.data = catalog_to_json(c);
    json info = json::array();
    Table t({"#", "dims", "length", "component", "projective", "injective"});
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto comp = component_name(classify_component(c.quiver(), c.dims(i)));
        info.push_back({{"dims", dims_to_json(c.dims(i))},
                        {"component", comp},
                        {"projective", c.is_projective(i)},
                        {"injective", c.is_injective(i)}});
        t.add({std::to_string(i), to_string(c.dims(i)), std::to_string(c.entry(i).length), comp,
               c.is_projective(i) ? "yes" : "", c.is_injective(i) ? "yes" : ""});
    }
    o.data["summary"] = info;
    o.table = t.str() + std::to_string(c.size()) + " exceptional modules" +
              (c.is_complete() ? "" : " (length <= " + std::to_string(*c.cap()) + ", orbit search)") + "\n";
    return o;
}

Output cmd_homext(Context& ctx) {
    if (ctx.req.modules.size() != 2) throw UsageError("homext takes two modules");
    const Representation v = resolve_module(ctx, ctx.req.modules[0]);
    const Representation w = resolve_module(ctx, ctx.req.modules[1]);
    const auto he = hom_ext(v, w);
    const auto euler = euler_form(ctx.quiver(), v.dims(), w.dims());
    Output o;
    o.data = {{"from", dims_to_json(v.dims())}, {"to", dims_to_json(w.dims())}, {"hom", he.hom_dim},
              {"ext", he.ext_dim},          {"euler_form", euler}};
    std::string extra;
    if (euler == 0) {
        const Rational s = semi_invariant(v, w);
        o.data["semi_invariant"] = to_string(s);
        extra = "semi-invariant " + to_string(s) + "\n";
    }
    o.table = "hom " + std::to_string(he.hom_dim) + "\next " + std::to_string(he.ext_dim) + "\neuler form " +
              std::to_string(euler) + "\n" + extra;
    return o;
}

Output cmd_tilting(Context& ctx) {
    const auto& c = ctx.catalog();
    const auto list = enumerate_tilting(c, support_mask(ctx));
    Output o;
    json arr = json::array();
    Table t({"#", "summands", "total", "slice"});
    for (std::size_t k = 0; k < list.size(); ++k) {
        const bool slice = is_slice(c, list[k]);
        arr.push_back({{"summands", summands_json(c, list[k].indices())},
                       {"total", dims_to_json(list[k].total_dims(c))},
                       {"slice", slice}});
        t.add({std::to_string(k), summands_string(c, list[k].indices()), to_string(list[k].total_dims(c)),
               slice ? "yes" : "no"});
    }
    o.data = {{"tilting_modules", arr}, {"count", list.size()}, {"complete", c.is_complete()}};
    o.table = t.str() + std::to_string(list.size()) + " tilting modules\n";
    return o;
}

Output cmd_complements(Context& ctx) {
    const auto& c = ctx.catalog();
    const std::size_t n = c.vertex_count();
    Output o;
    if (!ctx.req.modules.empty()) {
        const auto almost = PartialTilting::make(c, catalog_indices(ctx, ctx.req.modules));
        const auto comp = complements(c, almost);
        json arr = json::array();
        for (auto i : comp) arr.push_back(dims_to_json(c.dims(i)));
        o.data = {{"almost_complete", summands_json(c, almost.indices())},
                  {"sincere", almost.total_dims(c).is_sincere()},
                  {"complements", arr}};
        std::string table = "complements of " + summands_string(c, almost.indices()) + ": " +
                            summands_string(c, comp) + "\n";
        if (comp.size() == 2) {
            const auto e = exchange_direction(c, comp[0], comp[1]);
            o.data["exchange"] = {{"from", dims_to_json(c.dims(e.from))}, {"to", dims_to_json(c.dims(e.to))}};
            table += "exchange " + to_string(c.dims(e.from)) + " -> " + to_string(c.dims(e.to)) + "\n";
        }
        o.table = table;
        return o;
    }
    const auto rigid = enumerate_cliques(c.size(), [&](std::size_t a, std::size_t b) { return c.compatible(a, b); },
                                         n - 1);
    json arr = json::array();
    Table t({"almost complete", "sincere", "complements"});
    std::size_t exceptions = 0;
    for (const auto& s : rigid) {
        const auto almost = PartialTilting::make(c, s);
        const auto comp = complements(c, almost);
        const bool sincere = almost.total_dims(c).is_sincere();
        if (comp.size() != (sincere ? 2u : 1u)) ++exceptions;
        arr.push_back({{"almost_complete", summands_json(c, s)}, {"sincere", sincere}, {"count", comp.size()}});
        t.add({s.empty() ? "0" : summands_string(c, s), sincere ? "yes" : "no", std::to_string(comp.size())});
    }
    o.data = {{"almost_complete", arr}, {"exceptions", exceptions}, {"complete", c.is_complete()}};
    o.table = t.str() + std::to_string(rigid.size()) + " almost complete modules, " + std::to_string(exceptions) +
              " with a complement count other than 2 iff sincere\n";
    return o;
}

Output cmd_volume(Context& ctx) {
    const VolumeReport r = ctx.req.max_length ? preprojective_volume(ctx.quiver(), *ctx.req.max_length)
                                              : volume_sum(ctx.catalog());
    Output o;
    json terms = json::array();
    for (const auto& t : r.terms) {
        json s = json::array();
        for (const auto& d : t.summands) s.push_back(dims_to_json(d));
        terms.push_back({{"summands", s}, {"volume", to_string(t.volume)}});
    }
    o.data = {{"total", to_string(r.total)}, {"terms", terms}, {"count", r.terms.size()}};
    if (r.cap) o.data["cap"] = *r.cap;
    if (ctx.req.max_length) o.data["max_length"] = *ctx.req.max_length;
    o.table = to_string(r.total) + "\n";
    return o;
}

std::string report_line(const PseudomanifoldReport& r) {
    return std::to_string(r.ridges) + " ridges, " + std::to_string(r.interior.size()) + " interior, " +
           std::to_string(r.boundary.size()) + " boundary, " + std::to_string(r.violations.size()) + " violations" +
           (r.ok() ? "" : " (FAILED)");
}

Output cmd_complex(Context& ctx) {
    const ClusterComplex x(ctx.catalog(), ctx.req.prime);
    const auto r = pseudomanifold_report(x);
    Output o;
    o.data = complex_to_json(x);
    json boundary = json::array();
    for (const auto& f : r.boundary) boundary.push_back(f);
    o.data["pseudomanifold"] = {{"ridges", r.ridges},
                                {"interior", r.interior.size()},
                                {"boundary", boundary},
                                {"violations", r.violations.size()},
                                {"boundary_is_nonsincere", r.boundary_is_nonsincere},
                                {"pure", r.pure},
                                {"ok", r.ok()}};
    std::vector<std::string> fv;
    for (auto k : x.f_vector()) fv.push_back(std::to_string(k));
    std::string table = std::string(x.prime() ? "prime" : "plain") + " complex\nf-vector (" + join(fv, ", ") +
                        ")\nEuler characteristic " + std::to_string(x.euler_characteristic()) + "\n" + report_line(r) +
                        "\nmaximal simplices:\n";
    for (const auto& f : x.maximal_simplices()) table += "  " + to_string(f, x) + "\n";
    o.table = table;
    return o;
}

Output cmd_fan(Context& ctx) {
    const ClusterComplex x(ctx.catalog(), true);
    const auto f = fan_report(x, ctx.req.radius);
    Output o;
    o.data = {{"radius", ctx.req.radius},
              {"duality", f.duality},
              {"adjacent_separated", f.adjacent_separated},
              {"box_points", f.box_points},
              {"uncovered_points", f.uncovered_points},
              {"multiply_covered_interior", f.multiply_covered_interior},
              {"ok", f.ok()}};
    o.table = std::string("dual forms ") + (f.duality ? "ok" : "FAILED") + "\nadjacent cones separated " +
              (f.adjacent_separated ? "ok" : "FAILED") + "\n" + std::to_string(f.box_points) + " box points, " +
              std::to_string(f.uncovered_points) + " uncovered, " + std::to_string(f.multiply_covered_interior) +
              " in two interiors\n";
    return o;
}

Output cmd_clusters(Context& ctx) {
    const auto& names = ctx.file.variables;
    const auto e = enumerate_clusters(ctx.quiver(), ctx.req.depth);
    Output o;
    json vars = json::array();
    Table t({"variable", "denominator"});
    for (const auto& v : e.variables) {
        vars.push_back({{"variable", to_string(v, names)}, {"denominator", dims_to_json(denominator_vector(v))}});
        t.add({to_string(v, names), to_string(denominator_vector(v))});
    }
    json clusters = json::array();
    for (const auto& cl : e.clusters) {
        json s = json::array();
        for (auto i : cl) s.push_back(to_string(e.variables[i], names));
        clusters.push_back(s);
    }
    o.data = {{"variables", vars}, {"clusters", clusters}, {"partial", e.partial}, {"depth", e.depth}};
    o.table = t.str() + std::to_string(e.variables.size()) + " variables, " + std::to_string(e.clusters.size()) +
              " clusters" + (e.partial ? " (partial: depth cap reached)" : "") + "\n";
    return o;
}

Output cmd_mutate(Context& ctx) {
    const auto& names = ctx.file.variables;
    Seed s = initial_seed(ctx.quiver());
    for (const auto& id : ctx.req.sequence) s = mutate(s, ctx.quiver().index_of(id));
    Output o;
    json cluster = json::array();
    std::string table = "cluster:\n";
    for (const auto& v : s.cluster) {
        cluster.push_back(to_string(v, names));
        table += "  " + to_string(v, names) + "\n";
    }
    table += "exchange matrix:\n";
    Table m({});
    for (const auto& row : s.exchange_matrix) {
        std::vector<std::string> cells;
        for (auto b : row) cells.push_back(std::to_string(b));
        m.add(cells);
    }
    std::string rows = m.str();
    rows.erase(0, rows.find('\n') + 1);
    o.data = {{"sequence", ctx.req.sequence}, {"cluster", cluster}, {"exchange_matrix", s.exchange_matrix}};
    o.table = table + rows;
    return o;
}

Output cmd_cta(Context& ctx) {
    Output o;
    if (ctx.req.presentation_path) {
        const auto p = presentation_from_json(parse_json(read_text(*ctx.req.presentation_path), *ctx.req.presentation_path));
        const auto cq = cta_quiver(p);
        json arrows = json::array();
        for (const auto& a : cq.arrows) arrows.push_back({cq.vertices[a.tail], cq.vertices[a.head]});
        json loops = json::array(), cycles = json::array();
        for (auto v : cq.loops) loops.push_back(cq.vertices[v]);
        for (const auto& [u, v] : cq.two_cycles) cycles.push_back({cq.vertices[u], cq.vertices[v]});
        o.data = {{"vertices", cq.vertices}, {"arrows", arrows},      {"added_arrows", cq.added_arrows},
                  {"loops", loops},          {"two_cycles", cycles}, {"valid", cq.valid()}};
        std::string table = "arrows:\n";
        for (const auto& a : cq.arrows) table += "  " + cq.vertices[a.tail] + " -> " + cq.vertices[a.head] + "\n";
        table += std::to_string(cq.added_arrows) + " added, " + (cq.valid() ? "no loops or 2-cycles" : "INVALID") + "\n";
        o.table = table;
        return o;
    }
    if (!ctx.req.quiver_path) throw UsageError("cta needs --presentation or --quiver with tilting summands");
    const auto& c = ctx.catalog();
    const auto t = PartialTilting::make(c, catalog_indices(ctx, ctx.req.modules));
    const auto d = cta_dims(c, t);
    o.data = {{"summands", summands_json(c, t.indices())},
              {"end_a", d.end_a},
              {"j_dim", d.j_dim},
              {"end_c", d.end_c},
              {"hom_t_tau2t", d.hom_t_tau2t},
              {"slice", is_slice(c, t)}};
    o.table = "dim End(T) " + std::to_string(d.end_a) + "\ndim Ext1(T, tau^-1 T) " + std::to_string(d.j_dim) +
              "\ndim cluster tilted algebra " + std::to_string(d.end_c) + "\ndim Hom(T, tau^2 T) " +
              std::to_string(d.hom_t_tau2t) + "\n";
    return o;
}

Output cmd_check(Context& ctx) {
    CheckOptions opts;
    opts.seed = ctx.req.seed;
    const auto results = run_checks(ctx.catalog(), opts);
    Output o;
    json arr = json::array();
    std::string table;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed();
        arr.push_back({{"module", r.module},
                       {"name", r.name},
                       {"cases", r.cases},
                       {"skipped", r.skipped},
                       {"passed", r.passed()},
                       {"failures", r.failures},
                       {"failure_count", r.failure_count}});
        table += std::string(r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL") + "  " + r.module + ": " + r.name +
                 " (" + std::to_string(r.cases) + " cases)\n";
        for (const auto& f : r.failures) table += "      " + f + "\n";
    }
    o.data = {{"checks", arr}, {"passed", all}};
    o.table = table + (all ? "all checks passed\n" : "some checks FAILED\n");
    o.code = all ? exit_ok : exit_check_failure;
    return o;
}

Output dispatch(Context& ctx) {
    const std::string& s = ctx.req.subcommand;
    if (s == "roots") return cmd_roots(ctx);
    if (s == "catalog") return cmd_catalog(ctx);
    if (s == "homext") return cmd_homext(ctx);
    if (s == "tilting") return cmd_tilting(ctx);
    if (s == "complements") return cmd_complements(ctx);
    if (s == "volume") return cmd_volume(ctx);
    if (s == "complex") return cmd_complex(ctx);
    if (s == "fan") return cmd_fan(ctx);
    if (s == "clusters") return cmd_clusters(ctx);
    if (s == "mutate") return cmd_mutate(ctx);
    if (s == "cta") return cmd_cta(ctx);
    if (s == "check") return cmd_check(ctx);
    throw UsageError("unknown subcommand '" + s + "'");
}

}  // namespace

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
    try {
        Context ctx{request, {}, std::nullopt};
        const bool needs_quiver = !(request.subcommand == "cta" && request.presentation_path);
        if (needs_quiver && !request.quiver_path) throw UsageError("--quiver is required");
        if (request.quiver_path) ctx.file = load_quiver(*request.quiver_path);
        if (request.cap && *request.cap < 1) throw InputError("--cap must be positive");
        const Output o = dispatch(ctx);
        const std::string text = request.format == OutputFormat::json ? o.data.dump(2) + "\n" : o.table;
        if (request.output_path)
            write_text(*request.output_path, text);
        else
            out << text;
        return o.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return exit_check_failure;
    } catch (const std::invalid_argument& e) {  // InputError, PreconditionError, UnsupportedError
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const json::exception& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

}  // namespace tiltlab::app
