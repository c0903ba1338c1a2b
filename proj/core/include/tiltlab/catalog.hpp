#pragma once

#include "tiltlab/quiver.hpp"
#include "tiltlab/representation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tiltlab {

struct CatalogEntry {
    DimVector dims;
    Representation rep;
    std::int64_t length = 0;
};

// Where a module sits in the Auslander-Reiten quiver, decided from its
// dimension vector under the Coxeter transformation.
enum class Component { preprojective, preinjective, other };

// Indexed set of exceptional modules with cached Hom/Ext tables.
//
// Entries are sorted lexicographically by dimension vector and have pairwise
// distinct dimension vectors; for a quiver that is not Dynkin the catalog is
// cap-relative (only modules of total dimension <= cap that the orbit search
// reached), and cap() records the bound.
class ExceptionalCatalog {
public:
    ExceptionalCatalog() = default;
    // Sorts, deduplicates by dimension vector, verifies exceptionality and
    // computes both tables.
    ExceptionalCatalog(Quiver quiver, std::vector<CatalogEntry> entries, std::optional<std::int64_t> cap);
    // Restores precomputed tables (e.g. from a cache file). Entries must already
    // be sorted; tables are shape-checked and spot-checked against hom_ext.
    ExceptionalCatalog(Quiver quiver, std::vector<CatalogEntry> entries, std::optional<std::int64_t> cap,
                       std::vector<std::vector<std::int64_t>> hom_table,
                       std::vector<std::vector<std::int64_t>> ext_table);

    [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const CatalogEntry& entry(std::size_t i) const { return entries_.at(i); }
    [[nodiscard]] const DimVector& dims(std::size_t i) const { return entries_.at(i).dims; }
    [[nodiscard]] std::optional<std::int64_t> cap() const noexcept { return cap_; }
    [[nodiscard]] bool is_dynkin() const noexcept { return dynkin_; }
    [[nodiscard]] bool is_complete() const noexcept { return dynkin_ && !cap_; }

    [[nodiscard]] std::int64_t hom(std::size_t i, std::size_t j) const { return hom_.at(i).at(j); }
    [[nodiscard]] std::int64_t ext(std::size_t i, std::size_t j) const { return ext_.at(i).at(j); }
    [[nodiscard]] bool compatible(std::size_t i, std::size_t j) const { return ext(i, j) == 0 && ext(j, i) == 0; }
    [[nodiscard]] const std::vector<std::vector<std::int64_t>>& hom_table() const noexcept { return hom_; }
    [[nodiscard]] const std::vector<std::vector<std::int64_t>>& ext_table() const noexcept { return ext_; }

    [[nodiscard]] std::optional<std::size_t> find(const DimVector& d) const;
    // Throws InputError when no entry has this dimension vector.
    [[nodiscard]] std::size_t index_of(const DimVector& d) const;

    [[nodiscard]] bool is_projective(std::size_t i) const;
    [[nodiscard]] bool is_injective(std::size_t i) const;

private:
    Quiver quiver_;
    std::vector<CatalogEntry> entries_;
    std::optional<std::int64_t> cap_;
    bool dynkin_ = false;
    std::vector<std::vector<std::int64_t>> hom_;
    std::vector<std::vector<std::int64_t>> ext_;
};

// Dynkin: one entry per positive root. Otherwise cap is required
// (PreconditionError) and the catalog holds every exceptional module of length
// <= cap found in the tau-orbits of the simple, projective and injective modules.
ExceptionalCatalog build_catalog(const Quiver& q, std::optional<std::int64_t> cap = std::nullopt);

Component classify_component(const Quiver& q, const DimVector& d);

}  // namespace tiltlab
