#pragma once

#include "tiltlab/catalog.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tiltlab {

// A rigid set of catalog entries: sorted, pairwise without extensions in
// either direction, and of size at most the number of vertices. A value only
// has meaning relative to the catalog it was validated against.
class PartialTilting {
public:
    PartialTilting() = default;
    // Throws InputError on out-of-range or repeated indices, PreconditionError
    // if the set is not rigid or too large.
    static PartialTilting make(const ExceptionalCatalog& c, std::vector<std::size_t> indices);

    [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool contains(std::size_t i) const;
    [[nodiscard]] DimVector total_dims(const ExceptionalCatalog& c) const;

    auto operator<=>(const PartialTilting&) const = default;

private:
    explicit PartialTilting(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}
    std::vector<std::size_t> indices_;
};

bool is_rigid_set(const ExceptionalCatalog& c, const std::vector<std::size_t>& indices);
bool is_tilting(const ExceptionalCatalog& c, const PartialTilting& t);

// Every clique of `compatible` on {0..count-1} (the empty one included), each
// sorted ascending, in lexicographic order. With exact_size set only cliques of that size are returned.
std::vector<std::vector<std::size_t>> enumerate_cliques(std::size_t count,
                                                        const std::function<bool(std::size_t, std::size_t)>& compatible,
                                                        std::optional<std::size_t> exact_size = std::nullopt,
                                                        const std::function<bool(std::size_t)>& admissible = {});

// Tilting modules of the Serre subcategory given by `support` (a vertex mask;
// all vertices when absent): rigid sets of size |support| among the entries
// whose dimension vectors are supported in it. Sorted by dimension-vector tuples.
std::vector<PartialTilting> enumerate_tilting(const ExceptionalCatalog& c,
                                              const std::optional<std::vector<bool>>& support = std::nullopt);

// All entries completing an almost complete partial tilting module (size n-1).
std::vector<std::size_t> complements(const ExceptionalCatalog& c, const PartialTilting& almost);

// For two complements of the same almost complete module: the one with a
// nonzero Ext^1 into the other is the source of the exchange edge.
struct ExchangeEdge {
    std::size_t from;
    std::size_t to;
};
ExchangeEdge exchange_direction(const ExceptionalCatalog& c, std::size_t x, std::size_t y);

enum class TorsionClass { torsion, torsion_free, neither };

struct TorsionEntry {
    TorsionClass cls = TorsionClass::neither;
    std::int64_t hom_to = 0;  // dim Hom(T, M)
    std::int64_t ext_to = 0;  // dim Ext^1(T, M)
};

struct TorsionReport {
    std::vector<TorsionEntry> entries;  // one per catalog entry
};

// M is torsion iff Ext^1(T,M) = 0 and torsion-free iff Hom(T,M) = 0.
TorsionReport torsion_classify(const ExceptionalCatalog& c, const PartialTilting& t);

// Ext^1(tau T, T) = 0, with tau computed by Coxeter functors.
bool is_slice(const ExceptionalCatalog& c, const PartialTilting& t);

struct SchofieldSequence {
    std::size_t e1;  // quotient E_1^{a1}
    std::size_t e2;  // submodule E_2^{a2}
    std::int64_t a1;
    std::int64_t a2;
    std::int64_t t;  // dim Ext^1(E_1, E_2)
    auto operator<=>(const SchofieldSequence&) const = default;
};

// Orthogonal exceptional pairs (E_1, E_2) with t = ext(E_1,E_2) > 0 and
// a_1^2 + a_2^2 - t a_1 a_2 = 1 such that a_2 dim E_2 + a_1 dim E_1 = dim E.
std::vector<SchofieldSequence> schofield_sequences(const ExceptionalCatalog& c, std::size_t e);

struct VolumeTerm {
    std::vector<DimVector> summands;
    Rational volume;  // prod 1/length(T_i)
};

struct VolumeReport {
    Rational total;
    std::vector<VolumeTerm> terms;
    std::optional<std::int64_t> cap;  // copied from the catalog
};

VolumeReport volume_sum(const ExceptionalCatalog& c);

// Sum of the volumes of tilting modules all of whose summands are
// preprojective of length <= max_length. Rigidity is decided from the Euler
// form, which is exact on preprojective modules (at most one of Hom and Ext^1
// is nonzero between them), so no representations are built.
VolumeReport preprojective_volume(const Quiver& q, std::int64_t max_length);

// sum_{t=1..N} 1/((t x + (t-1) y) ((t+1) x + t y)).
Rational weighted_kronecker_partial(const Rational& x, const Rational& y, std::int64_t n_terms);
// (1/(x+y)) (1/x - 1/((N+1) x + N y)).
Rational weighted_kronecker_closed_form(const Rational& x, const Rational& y, std::int64_t n_terms);

struct KroneckerSeriesReport {
    Rational partial;
    Rational closed_form;
    Rational telescoped_limit;  // 1/(x(x+y))
    Rational displayed_limit;   // 1/(2xy), the commonly quoted value
    bool limits_agree = false;  // true exactly when x == y
};
KroneckerSeriesReport weighted_kronecker_report(const Rational& x, const Rational& y, std::int64_t n_terms);

}  // namespace tiltlab
