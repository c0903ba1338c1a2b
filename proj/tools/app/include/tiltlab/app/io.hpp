#pragma once

#include "tiltlab/catalog.hpp"
#include "tiltlab/cluster_category.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/representation.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tiltlab::app {

using json = nlohmann::json;

inline constexpr int format_version = 1;

// Quiver files: {"vertices": [...], "arrows": [[tail, head], ...]} with an
// optional "variables" list naming the cluster variables.
struct QuiverFile {
    Quiver quiver;
    std::vector<std::string> variables;
    std::string raw;  // file bytes, used as the cache key
};

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
json parse_json(const std::string& text, const std::string& what);

Quiver quiver_from_json(const json& j);
json quiver_to_json(const Quiver& q);
QuiverFile load_quiver(const std::filesystem::path& path);

// Representation JSON: {"dims": [...], "maps": [{"rows": r, "cols": c, "entries": ["p/q", ...]}]},
// one map per arrow in declared order, entries row-major.
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);
json representation_to_json(const Representation& v);
Representation representation_from_json(const Quiver& q, const json& j);

json dims_to_json(const DimVector& d);
DimVector dims_from_json(const json& j, std::size_t n);

// Catalog cache document, byte-stable for identical input.
json catalog_to_json(const ExceptionalCatalog& c);
ExceptionalCatalog catalog_from_json(const Quiver& q, const json& j);

json complex_to_json(const ClusterComplex& x);

// Presentation JSON: a quiver (inline or under "quiver") plus
// "relations": [[from, to, multiplicity], ...] with vertex ids.
AlgebraPresentation presentation_from_json(const json& j);

}  // namespace tiltlab::app
