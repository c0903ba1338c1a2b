#include "tiltlab/app/io.hpp"

#include "tiltlab/errors.hpp"
#include "tiltlab/laurent.hpp"

#include <fstream>
#include <sstream>

namespace tiltlab::app {

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string as_id(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError("vertex ids must be strings");
}

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Quiver quiver_from_json(const json& j) {
    const json& vs = field(j, "vertices");
    const json& as = field(j, "arrows");
    if (!vs.is_array() || !as.is_array()) throw InputError("'vertices' and 'arrows' must be arrays");
    std::vector<std::string> ids;
    for (const auto& v : vs) ids.push_back(as_id(v));
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : as) {
        if (!a.is_array() || a.size() != 2) throw InputError("an arrow is a [tail, head] pair");
        arrows.emplace_back(as_id(a[0]), as_id(a[1]));
    }
    return Quiver(std::move(ids), arrows);
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows()) arrows.push_back({q.id(a.tail), q.id(a.head)});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

QuiverFile load_quiver(const std::filesystem::path& path) {
    QuiverFile f;
    f.raw = read_text(path);
    const json j = parse_json(f.raw, path.string());
    f.quiver = quiver_from_json(j);
    if (j.contains("variables")) {
        const json& names = j.at("variables");
        if (!names.is_array() || names.size() != f.quiver.vertex_count())
            throw InputError("'variables' needs one name per vertex");
        for (const auto& n : names) {
            if (!n.is_string() || n.get<std::string>().empty()) throw InputError("variable names must be strings");
            f.variables.push_back(n.get<std::string>());
        }
    } else {
        f.variables = default_variable_names(f.quiver);
    }
    return f;
}

json matrix_to_json(const QMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(to_string(m(r, c)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix matrix_from_json(const json& j) {
    const auto rows = as_int(field(j, "rows"), "rows");
    const auto cols = as_int(field(j, "cols"), "cols");
    if (rows < 0 || cols < 0) throw InputError("matrix shape must be nonnegative");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols))
        throw InputError("matrix needs rows*cols entries");
    QMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t k = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c, ++k) {
            const json& e = entries[k];
            if (e.is_string())
                m(r, c) = parse_rational(e.get<std::string>());
            else if (e.is_number_integer())
                m(r, c) = Rational(e.get<long>());
            else
                throw InputError("matrix entries are \"p/q\" strings");
        }
    return m;
}

json dims_to_json(const DimVector& d) { return d.entries(); }

DimVector dims_from_json(const json& j, std::size_t n) {
    if (j.is_string()) return parse_dim_vector(j.get<std::string>(), n);
    if (!j.is_array() || j.size() != n) throw InputError("dimension vector of the wrong size");
    DimVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = as_int(j[i], "dimension vector entry");
    return d;
}

json representation_to_json(const Representation& v) {
    json maps = json::array();
    for (const auto& m : v.maps()) maps.push_back(matrix_to_json(m));
    return {{"dims", dims_to_json(v.dims())}, {"maps", maps}};
}

Representation representation_from_json(const Quiver& q, const json& j) {
    const DimVector d = dims_from_json(field(j, "dims"), q.vertex_count());
    const json& ms = field(j, "maps");
    if (!ms.is_array()) throw InputError("'maps' must be an array");
    std::vector<QMatrix> maps;
    for (const auto& m : ms) maps.push_back(matrix_from_json(m));
    return Representation(q, d, std::move(maps));
}

json catalog_to_json(const ExceptionalCatalog& c) {
    json entries = json::array();
    for (const auto& e : c.entries())
        entries.push_back({{"dims", dims_to_json(e.dims)}, {"length", e.length}, {"maps", representation_to_json(e.rep)["maps"]}});
    json cap = c.cap() ? json(*c.cap()) : json(nullptr);
    return {{"format", "tiltlab-catalog"},
            {"version", format_version},
            {"quiver", quiver_to_json(c.quiver())},
            {"cap", cap},
            {"complete", c.is_complete()},
            {"entries", entries},
            {"hom", c.hom_table()},
            {"ext", c.ext_table()}};
}

ExceptionalCatalog catalog_from_json(const Quiver& q, const json& j) {
    if (field(j, "format") != "tiltlab-catalog" || field(j, "version") != format_version)
        throw InputError("not a catalog file of this version");
    if (!(quiver_from_json(field(j, "quiver")) == q)) throw InputError("catalog belongs to a different quiver");
    std::optional<std::int64_t> cap;
    if (!field(j, "cap").is_null()) cap = as_int(j.at("cap"), "cap");
    std::vector<CatalogEntry> entries;
    for (const auto& e : field(j, "entries")) {
        Representation rep = representation_from_json(q, {{"dims", field(e, "dims")}, {"maps", field(e, "maps")}});
        entries.push_back({rep.dims(), rep, rep.dims().total()});
    }
    auto table = [](const json& t) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& row : t) {
            std::vector<std::int64_t> r;
            for (const auto& x : row) r.push_back(as_int(x, "table entry"));
            out.push_back(std::move(r));
        }
        return out;
    };
    return ExceptionalCatalog(q, std::move(entries), cap, table(field(j, "hom")), table(field(j, "ext")));
}

json complex_to_json(const ClusterComplex& x) {
    json vertices = json::array();
    for (std::size_t v = 0; v < x.vertex_count(); ++v)
        vertices.push_back({{"index", v}, {"label", x.vertex_label(v)}, {"generator", dims_to_json(x.generator(v))},
                            {"negative", x.is_negative(v)}});
    json simplices = json::array();
    for (const auto& f : x.maximal_simplices()) {
        json s = {{"vertices", f}};
        json gens = json::array();
        for (auto v : f) gens.push_back(dims_to_json(x.generator(v)));
        s["generators"] = gens;
        if (f.size() == x.rank()) {
            const Cone cone = cone_forms(x, f);
            json forms = json::array();
            for (const auto& row : cone.forms) {
                json r = json::array();
                for (const auto& q : row) r.push_back(to_string(q));
                forms.push_back(r);
            }
            s["forms"] = forms;
        }
        simplices.push_back(s);
    }
    const auto fv = x.f_vector();
    return {{"format", "tiltlab-complex"},
            {"version", format_version},
            {"prime", x.prime()},
            {"quiver", quiver_to_json(x.quiver())},
            {"vertices", vertices},
            {"maximal_simplices", simplices},
            {"summary", {{"f_vector", fv}, {"euler_characteristic", x.euler_characteristic()},
                         {"maximal_simplices", x.maximal_simplices().size()}}}};
}

AlgebraPresentation presentation_from_json(const json& j) {
    const Quiver q = quiver_from_json(j.contains("quiver") ? j.at("quiver") : j);
    std::vector<Relation> relations;
    const json& rs = field(j, "relations");
    if (!rs.is_array()) throw InputError("'relations' must be an array");
    for (const auto& r : rs) {
        if (!r.is_array() || r.size() < 2 || r.size() > 3) throw InputError("a relation is [from, to, multiplicity]");
        const std::int64_t m = r.size() == 3 ? as_int(r[2], "relation multiplicity") : 1;
        relations.push_back({q.index_of(as_id(r[0])), q.index_of(as_id(r[1])), m});
    }
    return make_presentation(q, std::move(relations));
}

}  // namespace tiltlab::app
