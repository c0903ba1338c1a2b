#pragma once

#include "tiltlab/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiltlab {

// Integer vector indexed by the vertices of a quiver, in declared vertex order.
// Houses dimension vectors, roots and denominator vectors; entries may be negative.
class DimVector {
public:
    using value_type = std::int64_t;

    DimVector() = default;
    explicit DimVector(std::size_t n) : entries_(n, 0) {}
    explicit DimVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}
    DimVector(std::initializer_list<value_type> entries) : entries_(entries) {}

    static DimVector unit(std::size_t n, std::size_t i);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    value_type& operator[](std::size_t i) { return entries_[i]; }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<value_type>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    [[nodiscard]] value_type total() const;          // sum of entries (= length for modules)
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_nonnegative() const;
    [[nodiscard]] bool is_sincere() const;           // every entry strictly positive
    [[nodiscard]] std::size_t support_size() const;  // number of nonzero entries
    [[nodiscard]] bool supported_in(const std::vector<bool>& allowed) const;

    DimVector& operator+=(const DimVector& rhs);
    DimVector& operator-=(const DimVector& rhs);
    friend DimVector operator+(DimVector lhs, const DimVector& rhs) { return lhs += rhs; }
    friend DimVector operator-(DimVector lhs, const DimVector& rhs) { return lhs -= rhs; }
    friend DimVector operator*(value_type k, DimVector v);
    DimVector operator-() const;

    auto operator<=>(const DimVector&) const = default;
    bool operator==(const DimVector&) const = default;

private:
    std::vector<value_type> entries_;
};

// Compact form "110" when all entries are single digits, otherwise "(1,-1,12)".
std::string to_string(const DimVector& d);
std::ostream& operator<<(std::ostream& os, const DimVector& d);
// Accepts "1,1,0", "(1,1,0)" and, for short non-negative vectors, "110".
DimVector parse_dim_vector(std::string_view text, std::size_t expected_size);

struct Arrow {
    std::size_t tail;
    std::size_t head;
    bool operator==(const Arrow&) const = default;
};

// Finite acyclic quiver. Vertices carry stable string ids; every vector and
// matrix in the library is indexed by the declared vertex order. Parallel
// arrows are allowed; loops and oriented cycles are rejected at construction.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
    Quiver(std::vector<std::string> vertices,
           const std::vector<std::pair<std::string, std::string>>& arrows);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    [[nodiscard]] const std::string& id(std::size_t v) const { return vertices_.at(v); }

    // Throws InputError for an unknown id.
    [[nodiscard]] std::size_t index_of(std::string_view id) const;
    [[nodiscard]] std::optional<std::size_t> find(std::string_view id) const;

    [[nodiscard]] bool is_sink(std::size_t v) const;
    [[nodiscard]] bool is_source(std::size_t v) const;
    [[nodiscard]] std::size_t arrows_between(std::size_t from, std::size_t to) const;

    // Vertex order in which every arrow points from a later to an earlier
    // vertex; ties broken by declared order. Reflecting at the vertices in this
    // order is an admissible sink sequence.
    [[nodiscard]] const std::vector<std::size_t>& sink_order() const noexcept { return sink_order_; }

    bool operator==(const Quiver& rhs) const {
        return vertices_ == rhs.vertices_ && arrows_ == rhs.arrows_;
    }

private:
    void validate();

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> sink_order_;
};

// Integer matrix E with E(i,j) = delta_ij - #(arrows i -> j), so <d,e> = d^T E e,
// and the Coxeter matrix Phi = -E^{-1} E^T acting on column vectors, which
// satisfies <x,y> = -<y, Phi x> and Phi(dim M) = dim(tau M) for non-projective
// indecomposable M.
struct EulerData {
    QMatrix euler_matrix;
    QMatrix coxeter_matrix;
};
EulerData euler_data(const Quiver& q);

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
std::int64_t tits_form(const Quiver& q, const DimVector& d);
DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& d);
DimVector coxeter_transform(const Quiver& q, const DimVector& d, int power);

// True iff the symmetrized Tits form is positive definite (each component of
// the underlying graph is of type A, D or E).
bool is_dynkin(const Quiver& q);

// All positive roots, sorted lexicographically. Throws UnsupportedError when not Dynkin.
std::vector<DimVector> positive_roots(const Quiver& q);

// Reverses every arrow incident to a sink or source i; arrow positions are kept.
Quiver reflect_quiver(const Quiver& q, std::size_t i);

// Full subquiver on the marked vertices, keeping declared order.
Quiver full_subquiver(const Quiver& q, const std::vector<bool>& keep);

}  // namespace tiltlab
