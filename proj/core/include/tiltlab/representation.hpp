#pragma once

#include "tiltlab/matrix.hpp"
#include "tiltlab/quiver.hpp"

#include <cstdint>
#include <vector>

namespace tiltlab {

// A representation of a quiver over the rationals: a vector space of
// dimension dims[v] at each vertex and a dims[head] x dims[tail] matrix per arrow.
class Representation {
public:
    Representation() = default;
    // Throws InputError on negative dims or mis-shaped matrices.
    Representation(Quiver quiver, DimVector dims, std::vector<QMatrix> maps);

    static Representation zero(const Quiver& q);
    static Representation simple(const Quiver& q, std::size_t v);
    // Path-basis projective cover P(v) and injective envelope I(v).
    static Representation projective(const Quiver& q, std::size_t v);
    static Representation injective(const Quiver& q, std::size_t v);

    [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
    [[nodiscard]] const DimVector& dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<QMatrix>& maps() const noexcept { return maps_; }
    [[nodiscard]] const QMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }
    [[nodiscard]] bool is_zero() const { return dims_.is_zero(); }
    [[nodiscard]] std::int64_t length() const { return dims_.total(); }

private:
    Quiver quiver_;
    DimVector dims_;
    std::vector<QMatrix> maps_;
};

struct HomExtResult {
    std::int64_t hom_dim = 0;
    std::int64_t ext_dim = 0;
    bool operator==(const HomExtResult&) const = default;
};

// The linear map d^V_W : (+)_x Hom(V_x, W_x) -> (+)_alpha Hom(V_{t alpha}, W_{h alpha}),
// f |-> (f_{h alpha} V(alpha) - W(alpha) f_{t alpha})_alpha. Basis: vertices (resp.
// arrows) in declared order, then row-major matrix units. Its kernel is Hom(V,W)
// and its cokernel Ext^1(V,W).
QMatrix hom_ext_map(const Representation& v, const Representation& w);

HomExtResult hom_ext(const Representation& v, const Representation& w);
bool is_brick(const Representation& v);
bool is_exceptional(const Representation& v);  // brick without self-extensions

// det d^V_W; requires <dim v, dim w> = 0 (PreconditionError otherwise). Only
// vanishing is convention-free; the sign follows the basis order above.
Rational semi_invariant(const Representation& v, const Representation& w);

enum class ReflectDirection { plus, minus };

// BGP reflection functor: plus at a sink replaces V_i by the kernel of the
// incoming sum map, minus at a source by the cokernel of the outgoing map.
// The result lives over reflect_quiver(q, i).
Representation bgp_reflect(const Representation& v, std::size_t i, ReflectDirection direction);

// power = +1 applies tau (plus reflections along the sink order), -1 applies
// tau^{-1}; other powers iterate.
Representation coxeter_functor(const Representation& v, int power);

// The indecomposable with dimension vector d for a Dynkin quiver, obtained by
// reflecting d down to a simple root along repeated sink orders and lifting
// the simple back with minus reflections.
Representation indec_for_root(const Quiver& q, const DimVector& d);

Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace tiltlab
