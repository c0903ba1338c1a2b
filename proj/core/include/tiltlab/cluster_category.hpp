#pragma once

#include "tiltlab/catalog.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/tilting.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tiltlab {

// Object of the fundamental domain of the cluster category: an exceptional
// module (catalog index) or the shift P(i)[1] of an indecomposable projective.
class ClusterObject {
public:
    enum class Kind { module, shifted_projective };

    static ClusterObject module(std::size_t catalog_index) { return {Kind::module, catalog_index}; }
    static ClusterObject shifted_projective(std::size_t vertex) { return {Kind::shifted_projective, vertex}; }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_module() const noexcept { return kind_ == Kind::module; }
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

    auto operator<=>(const ClusterObject&) const = default;

private:
    ClusterObject(Kind kind, std::size_t index) : kind_(kind), index_(index) {}
    Kind kind_;
    std::size_t index_;
};

std::string to_string(const ClusterObject& x, const ExceptionalCatalog& c);

// Every object of the (capped) fundamental domain: catalog modules, then the
// n shifted projectives.
std::vector<ClusterObject> all_objects(const ExceptionalCatalog& c);

// dim Ext^1 in the cluster category: ext(M,N) + ext(N,M) for modules,
// (dim M)_i for P(i)[1] against M, zero between shifted projectives.
std::int64_t ext1_c(const ClusterObject& x, const ClusterObject& y, const ExceptionalCatalog& c);

bool is_cluster_tilting(const std::vector<ClusterObject>& objects, const ExceptionalCatalog& c);

// The two objects completing a rigid set of n-1 objects. Throws
// PreconditionError on bad input and InvariantError if the search does not
// find exactly two (possible only for capped catalogs).
std::pair<ClusterObject, ClusterObject> complements_c(const std::vector<ClusterObject>& almost,
                                                      const ExceptionalCatalog& c);

struct ExchangeGraph {
    std::vector<Face> nodes;  // maximal simplices of the complex
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    [[nodiscard]] std::vector<std::size_t> degrees() const;
    [[nodiscard]] bool is_regular(std::size_t degree) const;
    [[nodiscard]] bool is_connected() const;
};

// Maximal simplices joined when they share all but one vertex.
ExchangeGraph exchange_graph(const ClusterComplex& x);

// Vertex set of the complex spanned by a set of cluster objects (modules map
// to module vertices, P(i)[1] to neg(i)).
Face objects_to_face(const std::vector<ClusterObject>& objects, const ClusterComplex& x);

// Dimensions attached to the cluster tilted algebra of a tilting module T:
// dim End_A(T), dim Ext^1_A(T, tau^{-1} T) and their sum.
struct CtaDims {
    std::int64_t end_a = 0;
    std::int64_t j_dim = 0;
    std::int64_t end_c = 0;
    std::int64_t hom_t_tau2t = 0;  // dim Hom_A(T, tau^2 T), the dual of the bimodule
};
CtaDims cta_dims(const ExceptionalCatalog& c, const PartialTilting& t);

struct Relation {
    std::size_t from;
    std::size_t to;
    std::int64_t multiplicity = 1;
};

// Quiver of an algebra with directed relations.
struct AlgebraPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
};

// Throws InputError when a relation's endpoints are not joined by a path of length >= 2.
AlgebraPresentation make_presentation(Quiver quiver, std::vector<Relation> relations);

// Quiver of the cluster tilted algebra: one reverse arrow per relation. The
// result may contain oriented cycles, so it is returned as bare arrow data.
struct CtaQuiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::size_t added_arrows = 0;
    std::vector<std::size_t> loops;  // vertices carrying a loop
    std::vector<std::pair<std::size_t, std::size_t>> two_cycles;
    [[nodiscard]] bool valid() const { return loops.empty() && two_cycles.empty(); }
};
CtaQuiver cta_quiver(const AlgebraPresentation& p);

}  // namespace tiltlab
