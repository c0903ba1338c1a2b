#pragma once

#include "tiltlab/catalog.hpp"
#include "tiltlab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tiltlab {

using Face = std::vector<std::size_t>;  // sorted vertex ids

// A simplex of the extended complex as a pair (M, U): a rigid set of catalog
// entries together with the Serre subcategory U, given by the simples it
// contains. Module vertices come first, then one negative vertex for every
// simple outside U.
struct SimplexMU {
    std::vector<std::size_t> module_indices;
    std::vector<bool> serre_support;
    bool operator==(const SimplexMU&) const = default;
};

// Simplicial complex of partial tilting modules (plain) or its extension by n
// negative simple vertices (prime). Vertex ids 0..m-1 are catalog entries,
// m..m+n-1 are the negative vertices neg(0)..neg(n-1).
class ClusterComplex {
public:
    ClusterComplex(const ExceptionalCatalog& c, bool prime);

    [[nodiscard]] bool prime() const noexcept { return prime_; }
    [[nodiscard]] std::size_t rank() const noexcept { return n_; }
    [[nodiscard]] std::size_t module_vertex_count() const noexcept { return m_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return generators_.size(); }
    [[nodiscard]] bool is_negative(std::size_t v) const noexcept { return v >= m_; }
    [[nodiscard]] std::size_t negative_vertex(std::size_t i) const { return m_ + i; }
    [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
    [[nodiscard]] std::optional<std::int64_t> cap() const noexcept { return cap_; }

    // dim E for module vertices, -e_i for neg(i).
    [[nodiscard]] const DimVector& generator(std::size_t v) const { return generators_.at(v); }
    [[nodiscard]] const std::vector<DimVector>& generators() const noexcept { return generators_; }
    [[nodiscard]] std::string vertex_label(std::size_t v) const;

    // All nonempty faces, ordered by size and then lexicographically.
    [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
    [[nodiscard]] std::vector<Face> faces_of_size(std::size_t k) const;
    // Faces contained in no larger face.
    [[nodiscard]] const std::vector<Face>& maximal_simplices() const noexcept { return maximal_; }
    [[nodiscard]] bool contains(const Face& f) const;

    // f_vector()[k] = number of faces with k+1 vertices.
    [[nodiscard]] std::vector<std::size_t> f_vector() const;
    [[nodiscard]] std::int64_t euler_characteristic() const;

    [[nodiscard]] SimplexMU as_pair(const Face& f) const;
    // PreconditionError when the pair is not a simplex.
    [[nodiscard]] Face from_pair(const SimplexMU& s) const;

    // Compatibility of two vertices: rigid modules, a module avoiding the
    // simple of a negative vertex, or two negative vertices.
    [[nodiscard]] bool compatible(std::size_t u, std::size_t v) const;

private:
    Quiver quiver_;
    bool prime_;
    std::size_t n_;
    std::size_t m_;
    std::optional<std::int64_t> cap_;
    std::vector<DimVector> generators_;
    std::vector<std::vector<bool>> compat_;
    std::vector<Face> faces_;
    std::vector<Face> maximal_;
};

ClusterComplex build_sigma(const ExceptionalCatalog& c, bool prime);

struct FaceCount {
    Face face;
    std::size_t cofaces = 0;  // maximal simplices of size n containing the face
};

struct PseudomanifoldReport {
    std::size_t ridges = 0;    // faces with n-1 vertices (the empty face when n = 1)
    std::vector<Face> interior;  // exactly two cofaces
    std::vector<Face> boundary;  // exactly one coface
    std::vector<FaceCount> violations;
    // Plain complexes only: boundary ridges are precisely the non-sincere ones.
    bool boundary_is_nonsincere = true;
    bool pure = true;  // every maximal simplex has n vertices
    [[nodiscard]] bool ok() const { return violations.empty() && boundary_is_nonsincere && pure; }
};

// Prime complexes: every ridge must lie in exactly two maximal simplices.
// Plain complexes: ridges in one maximal simplex form the boundary, which must
// consist of the non-sincere almost complete partial tilting modules.
PseudomanifoldReport pseudomanifold_report(const ClusterComplex& x);

struct Cone {
    std::vector<DimVector> generators;
    std::vector<std::vector<Rational>> forms;  // forms[i](generators[j]) = delta_ij

    [[nodiscard]] Rational evaluate(std::size_t form, const DimVector& d) const;
    [[nodiscard]] bool contains(const DimVector& d) const;           // all forms >= 0
    [[nodiscard]] bool contains_interior(const DimVector& d) const;  // all forms > 0
};

// Requires a face with n vertices; forms are the rows of the inverse of the
// generator matrix (generators as columns, in face order).
Cone cone_forms(const ClusterComplex& x, const Face& maximal);

// Indices into maximal_simplices() of every cone containing d.
std::vector<std::size_t> locate(const ClusterComplex& x, const DimVector& d);

struct FanReport {
    bool duality = true;           // forms are the dual basis of the generators
    bool adjacent_separated = true;  // across every ridge the two cones lie on opposite sides
    std::size_t box_points = 0;
    std::size_t uncovered_points = 0;  // integer points of the box in no cone
    std::size_t multiply_covered_interior = 0;  // points interior to two cones
    [[nodiscard]] bool ok() const {
        return duality && adjacent_separated && uncovered_points == 0 && multiply_covered_interior == 0;
    }
};

// Exact checks of the fan property on the integer box [-radius, radius]^n.
FanReport fan_report(const ClusterComplex& x, std::int64_t radius);

std::string to_string(const Face& f, const ClusterComplex& x);

}  // namespace tiltlab
