#include "tiltlab/representation.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <functional>

namespace tiltlab {

Representation::Representation(Quiver quiver, DimVector dims, std::vector<QMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_.vertex_count()) throw InputError("representation dims do not match the quiver");
    if (!dims_.is_nonnegative()) throw InputError("representation dims must be nonnegative");
    if (maps_.size() != quiver_.arrow_count()) throw InputError("representation needs one matrix per arrow");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Arrow& a = quiver_.arrows()[k];
        const auto rows = static_cast<std::size_t>(dims_[a.head]);
        const auto cols = static_cast<std::size_t>(dims_[a.tail]);
        if (maps_[k].rows() != rows || maps_[k].cols() != cols)
            throw InputError("matrix for arrow " + quiver_.id(a.tail) + "->" + quiver_.id(a.head) +
                             " has the wrong shape");
    }
}

namespace {

std::vector<QMatrix> zero_maps(const Quiver& q, const DimVector& d) {
    std::vector<QMatrix> maps;
    for (const auto& a : q.arrows())
        maps.emplace_back(static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail]));
    return maps;
}

}  // namespace

Representation Representation::zero(const Quiver& q) {
    DimVector d(q.vertex_count());
    return Representation(q, d, zero_maps(q, d));
}

Representation Representation::simple(const Quiver& q, std::size_t v) {
    if (v >= q.vertex_count()) throw InputError("unknown vertex index");
    const DimVector d = DimVector::unit(q.vertex_count(), v);
    return Representation(q, d, zero_maps(q, d));
}

namespace {

using Path = std::vector<std::size_t>;  // arrow indices in traversal order

struct PathSet {
    std::vector<std::vector<Path>> by_end;  // paths from the start vertex, grouped by terminal vertex
};

PathSet paths_from(const Quiver& q, std::size_t start) {
    PathSet out;
    out.by_end.resize(q.vertex_count());
    std::function<void(std::size_t, Path&)> walk = [&](std::size_t at, Path& p) {
        out.by_end[at].push_back(p);
        for (std::size_t k = 0; k < q.arrow_count(); ++k) {
            if (q.arrows()[k].tail != at) continue;
            p.push_back(k);
            walk(q.arrows()[k].head, p);
            p.pop_back();
        }
    };
    Path p;
    walk(start, p);
    return out;
}

PathSet paths_to(const Quiver& q, std::size_t target) {
    PathSet out;
    out.by_end.resize(q.vertex_count());  // grouped by starting vertex
    std::function<void(std::size_t, Path&)> walk = [&](std::size_t at, Path& p) {
        out.by_end[at].push_back(p);
        for (std::size_t k = 0; k < q.arrow_count(); ++k) {
            if (q.arrows()[k].head != at) continue;
            p.insert(p.begin(), k);
            walk(q.arrows()[k].tail, p);
            p.erase(p.begin());
        }
    };
    Path p;
    walk(target, p);
    return out;
}

std::size_t index_in(const std::vector<Path>& paths, const Path& p) {
    auto it = std::find(paths.begin(), paths.end(), p);
    if (it == paths.end()) throw_invariant("path basis lookup failed");
    return static_cast<std::size_t>(it - paths.begin());
}

}  // namespace

Representation Representation::projective(const Quiver& q, std::size_t v) {
    if (v >= q.vertex_count()) throw InputError("unknown vertex index");
    const PathSet ps = paths_from(q, v);
    DimVector dims(q.vertex_count());
    for (std::size_t x = 0; x < q.vertex_count(); ++x) dims[x] = static_cast<std::int64_t>(ps.by_end[x].size());
    std::vector<QMatrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrows()[k];
        QMatrix m(ps.by_end[a.head].size(), ps.by_end[a.tail].size());
        for (std::size_t c = 0; c < ps.by_end[a.tail].size(); ++c) {
            Path extended = ps.by_end[a.tail][c];
            extended.push_back(k);
            m(index_in(ps.by_end[a.head], extended), c) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, std::move(dims), std::move(maps));
}

Representation Representation::injective(const Quiver& q, std::size_t v) {
    if (v >= q.vertex_count()) throw InputError("unknown vertex index");
    const PathSet ps = paths_to(q, v);
    DimVector dims(q.vertex_count());
    for (std::size_t x = 0; x < q.vertex_count(); ++x) dims[x] = static_cast<std::int64_t>(ps.by_end[x].size());
    std::vector<QMatrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrows()[k];
        // Dual of precomposition with the arrow: path p from the tail maps to the
        // path p' from the head with p = arrow followed by p'.
        QMatrix m(ps.by_end[a.head].size(), ps.by_end[a.tail].size());
        for (std::size_t c = 0; c < ps.by_end[a.tail].size(); ++c) {
            const Path& p = ps.by_end[a.tail][c];
            if (p.empty() || p.front() != k) continue;
            Path rest(p.begin() + 1, p.end());
            m(index_in(ps.by_end[a.head], rest), c) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, std::move(dims), std::move(maps));
}

QMatrix hom_ext_map(const Representation& v, const Representation& w) {
    if (!(v.quiver() == w.quiver())) throw InputError("representations live over different quivers");
    const Quiver& q = v.quiver();
    const DimVector& dv = v.dims();
    const DimVector& dw = w.dims();
    const std::size_t n = q.vertex_count();

    std::vector<std::size_t> src_offset(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x) src_offset[x + 1] = src_offset[x] + static_cast<std::size_t>(dw[x] * dv[x]);
    std::vector<std::size_t> tgt_offset(q.arrow_count() + 1, 0);
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrows()[k];
        tgt_offset[k + 1] = tgt_offset[k] + static_cast<std::size_t>(dw[a.head] * dv[a.tail]);
    }

    QMatrix d(tgt_offset.back(), src_offset.back());
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrows()[k];
        const auto vt = static_cast<std::size_t>(dv[a.tail]);
        const auto vh = static_cast<std::size_t>(dv[a.head]);
        const auto wt = static_cast<std::size_t>(dw[a.tail]);
        const auto wh = static_cast<std::size_t>(dw[a.head]);
        const QMatrix& va = v.map(k);  // vh x vt
        const QMatrix& wa = w.map(k);  // wh x wt
        // Target entry (r, c) of block k has index tgt_offset[k] + r * vt + c.
        // f_h = E_{rr, s} at the head contributes E_{rr,s} * V(alpha): row rr gets row s of V(alpha).
        for (std::size_t rr = 0; rr < wh; ++rr)
            for (std::size_t s = 0; s < vh; ++s) {
                const std::size_t col = src_offset[a.head] + rr * vh + s;
                for (std::size_t c = 0; c < vt; ++c)
                    if (sgn(va(s, c)) != 0) d(tgt_offset[k] + rr * vt + c, col) += va(s, c);
            }
        // f_t = E_{s, c} at the tail contributes -W(alpha) * E_{s,c}: column c gets -column s of W(alpha).
        for (std::size_t s = 0; s < wt; ++s)
            for (std::size_t c = 0; c < vt; ++c) {
                const std::size_t col = src_offset[a.tail] + s * vt + c;
                for (std::size_t r = 0; r < wh; ++r)
                    if (sgn(wa(r, s)) != 0) d(tgt_offset[k] + r * vt + c, col) -= wa(r, s);
            }
    }
    return d;
}

HomExtResult hom_ext(const Representation& v, const Representation& w) {
    const QMatrix d = hom_ext_map(v, w);
    const auto r = static_cast<std::int64_t>(rank(d));
    return {static_cast<std::int64_t>(d.cols()) - r, static_cast<std::int64_t>(d.rows()) - r};
}

bool is_brick(const Representation& v) { return hom_ext(v, v).hom_dim == 1; }

bool is_exceptional(const Representation& v) {
    const HomExtResult r = hom_ext(v, v);
    return r.hom_dim == 1 && r.ext_dim == 0;
}

Rational semi_invariant(const Representation& v, const Representation& w) {
    if (!(v.quiver() == w.quiver())) throw InputError("representations live over different quivers");
    const std::int64_t form = euler_form(v.quiver(), v.dims(), w.dims());
    if (form != 0)
        throw PreconditionError("semi-invariant needs <dim V, dim W> = 0, got " + std::to_string(form));
    return determinant(hom_ext_map(v, w));
}

Representation bgp_reflect(const Representation& v, std::size_t i, ReflectDirection direction) {
    const Quiver& q = v.quiver();
    if (i >= q.vertex_count()) throw InputError("unknown vertex index");
    const auto& arrows = q.arrows();
    DimVector dims = v.dims();
    std::vector<QMatrix> maps = v.maps();

    if (direction == ReflectDirection::plus) {
        if (!q.is_sink(i)) throw PreconditionError("plus reflection needs a sink, '" + q.id(i) + "' is not one");
        std::vector<std::size_t> incoming;
        std::size_t total = 0;
        for (std::size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].head == i) {
                incoming.push_back(k);
                total += static_cast<std::size_t>(v.dims()[arrows[k].tail]);
            }
        const auto vi = static_cast<std::size_t>(v.dims()[i]);
        QMatrix sum_map(vi, total);
        std::size_t off = 0;
        for (auto k : incoming) {
            const QMatrix& m = v.map(k);
            for (std::size_t r = 0; r < vi; ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) sum_map(r, off + c) = m(r, c);
            off += m.cols();
        }
        const QMatrix ker = kernel_basis(sum_map);  // total x k
        dims[i] = static_cast<std::int64_t>(ker.cols());
        off = 0;
        for (auto k : incoming) {
            const auto width = static_cast<std::size_t>(v.dims()[arrows[k].tail]);
            maps[k] = ker.block(off, 0, width, ker.cols());
            off += width;
        }
    } else {
        if (!q.is_source(i)) throw PreconditionError("minus reflection needs a source, '" + q.id(i) + "' is not one");
        std::vector<std::size_t> outgoing;
        std::size_t total = 0;
        for (std::size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].tail == i) {
                outgoing.push_back(k);
                total += static_cast<std::size_t>(v.dims()[arrows[k].head]);
            }
        const auto vi = static_cast<std::size_t>(v.dims()[i]);
        QMatrix stacked(total, vi);
        std::size_t off = 0;
        for (auto k : outgoing) {
            const QMatrix& m = v.map(k);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < vi; ++c) stacked(off + r, c) = m(r, c);
            off += m.rows();
        }
        const QMatrix proj = cokernel_projection(stacked);  // c x total
        dims[i] = static_cast<std::int64_t>(proj.rows());
        off = 0;
        for (auto k : outgoing) {
            const auto height = static_cast<std::size_t>(v.dims()[arrows[k].head]);
            maps[k] = proj.block(0, off, proj.rows(), height);
            off += height;
        }
    }
    return Representation(reflect_quiver(q, i), std::move(dims), std::move(maps));
}

Representation coxeter_functor(const Representation& v, int power) {
    Representation cur = v;
    const std::vector<std::size_t> order = v.quiver().sink_order();
    for (int step = 0; step < (power > 0 ? power : -power); ++step) {
        if (power > 0) {
            for (auto i : order) cur = bgp_reflect(cur, i, ReflectDirection::plus);
        } else {
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                cur = bgp_reflect(cur, *it, ReflectDirection::minus);
        }
    }
    return cur;
}

Representation indec_for_root(const Quiver& q, const DimVector& d) {
    const std::vector<DimVector> roots = positive_roots(q);
    if (!std::binary_search(roots.begin(), roots.end(), d))
        throw PreconditionError("dimension vector " + to_string(d) + " is not a positive root");
    const std::size_t n = q.vertex_count();
    const std::vector<std::size_t> order = q.sink_order();

    Quiver cur_q = q;
    DimVector cur_d = d;
    std::vector<std::size_t> path;
    const std::size_t limit = n * (roots.size() + 2);
    for (std::size_t step = 0;; ++step) {
        if (step > limit) throw_invariant("reflection sequence did not reach a simple root");
        const std::size_t i = order[step % n];
        if (cur_d == DimVector::unit(n, i)) break;
        DimVector next = simple_reflection(cur_q, i, cur_d);
        if (!next.is_nonnegative()) throw_invariant("reflection left the positive cone");
        path.push_back(i);
        cur_q = reflect_quiver(cur_q, i);
        cur_d = std::move(next);
    }
    std::size_t base_vertex = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (cur_d[v] == 1) base_vertex = v;
    Representation rep = Representation::simple(cur_q, base_vertex);
    for (auto it = path.rbegin(); it != path.rend(); ++it) rep = bgp_reflect(rep, *it, ReflectDirection::minus);
    if (!(rep.quiver() == q) || rep.dims() != d) throw_invariant("lifted representation does not match the root");
    return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.quiver() == b.quiver())) throw InputError("direct sum of representations over different quivers");
    const Quiver& q = a.quiver();
    std::vector<QMatrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const QMatrix& ma = a.map(k);
        const QMatrix& mb = b.map(k);
        QMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
        for (std::size_t r = 0; r < mb.rows(); ++r)
            for (std::size_t c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
        maps.push_back(std::move(m));
    }
    return Representation(q, a.dims() + b.dims(), std::move(maps));
}

}  // namespace tiltlab
