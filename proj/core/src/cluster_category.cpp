#include "tiltlab/cluster_category.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tiltlab {

std::string to_string(const ClusterObject& x, const ExceptionalCatalog& c) {
    if (x.is_module()) return to_string(c.dims(x.index()));
    return "P(" + c.quiver().id(x.index()) + ")[1]";
}

std::vector<ClusterObject> all_objects(const ExceptionalCatalog& c) {
    std::vector<ClusterObject> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(ClusterObject::module(i));
    for (std::size_t v = 0; v < c.vertex_count(); ++v) out.push_back(ClusterObject::shifted_projective(v));
    return out;
}

namespace {

void check_object(const ClusterObject& x, const ExceptionalCatalog& c) {
    if (x.is_module() && x.index() >= c.size()) throw InputError("cluster object refers to a missing catalog entry");
    if (!x.is_module() && x.index() >= c.vertex_count()) throw InputError("shifted projective at an unknown vertex");
}

}  // namespace

std::int64_t ext1_c(const ClusterObject& x, const ClusterObject& y, const ExceptionalCatalog& c) {
    check_object(x, c);
    check_object(y, c);
    if (x.is_module() && y.is_module()) return c.ext(x.index(), y.index()) + c.ext(y.index(), x.index());
    if (!x.is_module() && !y.is_module()) return 0;
    // Hom_C(P(i)[1], M[1]) = Hom_A(P(i), M), of dimension (dim M)_i.
    const ClusterObject& m = x.is_module() ? x : y;
    const ClusterObject& p = x.is_module() ? y : x;
    return c.dims(m.index())[p.index()];
}

namespace {

bool pairwise_rigid(const std::vector<ClusterObject>& objs, const ExceptionalCatalog& c) {
    for (std::size_t a = 0; a < objs.size(); ++a)
        for (std::size_t b = a; b < objs.size(); ++b)
            if (ext1_c(objs[a], objs[b], c) != 0) return false;
    return true;
}

std::vector<ClusterObject> completions(const std::vector<ClusterObject>& objs, const ExceptionalCatalog& c) {
    std::vector<ClusterObject> out;
    for (const auto& z : all_objects(c)) {
        if (std::find(objs.begin(), objs.end(), z) != objs.end()) continue;
        bool ok = true;
        for (const auto& o : objs) ok = ok && ext1_c(z, o, c) == 0;
        if (ok) out.push_back(z);
    }
    return out;
}

}  // namespace

bool is_cluster_tilting(const std::vector<ClusterObject>& objects, const ExceptionalCatalog& c) {
    for (const auto& x : objects) check_object(x, c);
    std::set<ClusterObject> distinct(objects.begin(), objects.end());
    if (distinct.size() != objects.size() || objects.size() != c.vertex_count()) return false;
    if (!pairwise_rigid(objects, c)) return false;
    return completions(objects, c).empty();
}

std::pair<ClusterObject, ClusterObject> complements_c(const std::vector<ClusterObject>& almost,
                                                      const ExceptionalCatalog& c) {
    for (const auto& x : almost) check_object(x, c);
    std::set<ClusterObject> distinct(almost.begin(), almost.end());
    if (distinct.size() != almost.size() || almost.size() + 1 != c.vertex_count())
        throw PreconditionError("an almost complete cluster-tilting set has n-1 distinct objects");
    if (!pairwise_rigid(almost, c)) throw PreconditionError("objects have extensions between them");
    auto found = completions(almost, c);
    if (found.size() != 2)
        throw InvariantError("found " + std::to_string(found.size()) + " complements instead of two" +
                             (c.is_complete() ? "" : " (catalog is cap-relative)"));
    return {found[0], found[1]};
}

std::vector<std::size_t> ExchangeGraph::degrees() const {
    std::vector<std::size_t> deg(nodes.size(), 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

bool ExchangeGraph::is_regular(std::size_t degree) const {
    const auto deg = degrees();
    return std::all_of(deg.begin(), deg.end(), [degree](std::size_t d) { return d == degree; });
}

bool ExchangeGraph::is_connected() const {
    if (nodes.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (auto v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == nodes.size();
}

ExchangeGraph exchange_graph(const ClusterComplex& x) {
    ExchangeGraph g;
    const std::size_t n = x.rank();
    for (const auto& f : x.maximal_simplices())
        if (f.size() == n) g.nodes.push_back(f);
    for (std::size_t a = 0; a < g.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
            Face common;
            std::set_intersection(g.nodes[a].begin(), g.nodes[a].end(), g.nodes[b].begin(), g.nodes[b].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 == n) g.edges.emplace_back(a, b);
        }
    return g;
}

Face objects_to_face(const std::vector<ClusterObject>& objects, const ClusterComplex& x) {
    Face f;
    for (const auto& o : objects) {
        if (o.is_module()) {
            if (o.index() >= x.module_vertex_count()) throw InputError("module outside the complex");
            f.push_back(o.index());
        } else {
            if (!x.prime()) throw PreconditionError("shifted projectives only exist in the prime complex");
            f.push_back(x.negative_vertex(o.index()));
        }
    }
    std::sort(f.begin(), f.end());
    return f;
}

CtaDims cta_dims(const ExceptionalCatalog& c, const PartialTilting& t) {
    if (!is_tilting(c, t)) throw PreconditionError("cluster tilted algebra data needs a tilting module");
    CtaDims out;
    std::vector<Representation> inv_tau;
    std::vector<Representation> tau2;
    for (auto j : t.indices()) {
        inv_tau.push_back(coxeter_functor(c.entry(j).rep, -1));
        tau2.push_back(coxeter_functor(c.entry(j).rep, 2));
    }
    for (auto i : t.indices()) {
        for (auto j : t.indices()) out.end_a += c.hom(i, j);
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (!inv_tau[k].is_zero()) out.j_dim += hom_ext(c.entry(i).rep, inv_tau[k]).ext_dim;
            if (!tau2[k].is_zero()) out.hom_t_tau2t += hom_ext(c.entry(i).rep, tau2[k]).hom_dim;
        }
    }
    out.end_c = out.end_a + out.j_dim;
    return out;
}

namespace {

bool has_long_path(const Quiver& q, std::size_t from, std::size_t to) {
    // Vertices reachable from `from` by a path with at least two arrows.
    std::vector<bool> reach(q.vertex_count(), false);
    std::deque<std::size_t> queue;
    for (const auto& a : q.arrows())
        if (a.tail == from)
            for (const auto& b : q.arrows())
                if (b.tail == a.head && !reach[b.head]) {
                    reach[b.head] = true;
                    queue.push_back(b.head);
                }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& a : q.arrows())
            if (a.tail == u && !reach[a.head]) {
                reach[a.head] = true;
                queue.push_back(a.head);
            }
    }
    return reach[to];
}

}  // namespace

AlgebraPresentation make_presentation(Quiver quiver, std::vector<Relation> relations) {
    for (const auto& r : relations) {
        if (r.from >= quiver.vertex_count() || r.to >= quiver.vertex_count())
            throw InputError("relation refers to an unknown vertex");
        if (r.multiplicity < 1) throw InputError("relation multiplicity must be positive");
        if (!has_long_path(quiver, r.from, r.to))
            throw InputError("no path of length >= 2 from '" + quiver.id(r.from) + "' to '" + quiver.id(r.to) + "'");
    }
    return {std::move(quiver), std::move(relations)};
}

CtaQuiver cta_quiver(const AlgebraPresentation& p) {
    CtaQuiver out;
    out.vertices = p.quiver.vertices();
    out.arrows = p.quiver.arrows();
    for (const auto& r : p.relations)
        for (std::int64_t k = 0; k < r.multiplicity; ++k) {
            out.arrows.push_back({r.to, r.from});
            ++out.added_arrows;
        }
    std::set<std::size_t> loops;
    std::set<std::pair<std::size_t, std::size_t>> cycles;
    for (const auto& a : out.arrows) {
        if (a.tail == a.head) {
            loops.insert(a.tail);
            continue;
        }
        for (const auto& b : out.arrows)
            if (b.tail == a.head && b.head == a.tail) cycles.insert(std::minmax(a.tail, a.head));
    }
    out.loops.assign(loops.begin(), loops.end());
    out.two_cycles.assign(cycles.begin(), cycles.end());
    return out;
}

}  // namespace tiltlab
