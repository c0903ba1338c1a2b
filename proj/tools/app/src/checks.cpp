#include "tiltlab/app/checks.hpp"

#include "tiltlab/cluster_algebra.hpp"
#include "tiltlab/cluster_category.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/tilting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

namespace tiltlab::app {

namespace {

constexpr std::size_t max_reported = 5;

class Recorder {
public:
    Recorder(std::vector<CheckResult>& out, std::string module, std::string name) : r_{} {
        r_.module = std::move(module);
        r_.name = std::move(name);
        out_ = &out;
    }
    ~Recorder() { out_->push_back(std::move(r_)); }
    Recorder(const Recorder&) = delete;
    Recorder& operator=(const Recorder&) = delete;

    void expect(bool ok, const std::function<std::string()>& why) {
        ++r_.cases;
        if (ok) return;
        if (r_.failure_count++ < max_reported) r_.failures.push_back(why());
    }
    void skip() { r_.skipped = true; }

private:
    CheckResult r_;
    std::vector<CheckResult>* out_;
};

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

DimVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    DimVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = uniform(rng, lo, hi);
    return d;
}

Representation random_representation(Rng& rng, const Quiver& q, std::int64_t max_dim) {
    const DimVector d = random_vector(rng, q.vertex_count(), 0, max_dim);
    std::vector<QMatrix> maps;
    for (const auto& a : q.arrows()) {
        QMatrix m(static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail]));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(static_cast<long>(uniform(rng, -2, 2)));
        maps.push_back(std::move(m));
    }
    return Representation(q, d, std::move(maps));
}

// Number of positive roots from the Dynkin type of each connected component.
std::optional<std::size_t> expected_root_count(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a : q.arrows()) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::vector<bool> seen(n, false);
    std::size_t total = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto v : adj[comp[k]])
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        const std::size_t m = comp.size();
        std::optional<std::size_t> branch;
        for (auto v : comp)
            if (adj[v].size() >= 3) branch = v;
        if (!branch) {
            total += m * (m + 1) / 2;
            continue;
        }
        std::vector<std::size_t> arms;
        for (auto start : adj[*branch]) {
            std::size_t len = 1, prev = *branch, at = start;
            while (adj[at].size() == 2) {
                const std::size_t next = adj[at][0] == prev ? adj[at][1] : adj[at][0];
                prev = at;
                at = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) return std::nullopt;
        if (arms[0] == 1 && arms[1] == 1) {
            total += m * (m - 1);
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
            total += arms[2] == 2 ? 36 : arms[2] == 3 ? 63 : 120;
        } else {
            return std::nullopt;
        }
    }
    return total;
}

std::string str(const DimVector& d) { return to_string(d); }

void quiver_checks(const ExceptionalCatalog& c, const CheckOptions& opts, Rng& rng, std::vector<CheckResult>& out) {
    const Quiver& q = c.quiver();
    const std::size_t n = q.vertex_count();
    {
        Recorder r(out, "quiver_core", "symmetrized Euler form and Tits form");
        for (std::size_t t = 0; t < opts.random_cases; ++t) {
            const DimVector d = random_vector(rng, n, -4, 4), e = random_vector(rng, n, -4, 4);
            std::int64_t sym = 0;
            for (std::size_t i = 0; i < n; ++i) sym += 2 * d[i] * e[i];
            for (const auto& a : q.arrows()) sym -= d[a.tail] * e[a.head] + d[a.head] * e[a.tail];
            r.expect(euler_form(q, d, e) + euler_form(q, e, d) == sym && tits_form(q, d) == euler_form(q, d, d),
                     [&] { return str(d) + " " + str(e); });
        }
    }
    {
        Recorder r(out, "quiver_core", "positive root count and Tits form");
        if (!c.is_dynkin()) {
            r.skip();
        } else {
            const auto roots = positive_roots(q);
            const auto expected = expected_root_count(q);
            r.expect(expected && roots.size() == *expected, [&] { return std::to_string(roots.size()) + " roots"; });
            for (const auto& d : roots) r.expect(tits_form(q, d) == 1, [&] { return str(d); });
        }
    }
    {
        Recorder r(out, "quiver_core", "Coxeter transform inverse");
        for (std::size_t t = 0; t < 100; ++t) {
            const DimVector d = random_vector(rng, n, -5, 5);
            r.expect(coxeter_transform(q, coxeter_transform(q, d, 1), -1) == d, [&] { return str(d); });
        }
    }
    {
        Recorder r(out, "quiver_core", "simple reflections preserve the Tits form");
        std::vector<DimVector> roots;
        if (c.is_dynkin())
            roots = positive_roots(q);
        else
            for (const auto& e : c.entries()) roots.push_back(e.dims);
        for (const auto& d : roots)
            for (std::size_t i = 0; i < n; ++i)
                r.expect(tits_form(q, simple_reflection(q, i, d)) == tits_form(q, d),
                         [&] { return str(d) + " at " + q.id(i); });
    }
    {
        Recorder r(out, "quiver_core", "reflections agree on reflected quivers");
        for (std::size_t i = 0; i < n; ++i) {
            if (!q.is_sink(i) && !q.is_source(i)) continue;
            const Quiver p = reflect_quiver(q, i);
            for (std::size_t t = 0; t < 20; ++t) {
                const DimVector d = random_vector(rng, n, -3, 3);
                r.expect(simple_reflection(q, i, d) == simple_reflection(p, i, d), [&] { return str(d); });
            }
        }
    }
}

void rep_checks(const ExceptionalCatalog& c, const CheckOptions& opts, Rng& rng, std::vector<CheckResult>& out) {
    const Quiver& q = c.quiver();
    {
        Recorder r(out, "rep_lab", "Euler identity on random representations");
        for (std::size_t t = 0; t < opts.random_cases; ++t) {
            const Representation v = random_representation(rng, q, 2), w = random_representation(rng, q, 2);
            const auto he = hom_ext(v, w);
            r.expect(he.hom_dim - he.ext_dim == euler_form(q, v.dims(), w.dims()),
                     [&] { return str(v.dims()) + " " + str(w.dims()); });
        }
    }
    {
        Recorder r(out, "rep_lab", "catalog entries are exceptional");
        for (const auto& e : c.entries()) {
            const auto he = hom_ext(e.rep, e.rep);
            r.expect(he.hom_dim == 1 && he.ext_dim == 0, [&] { return str(e.dims); });
        }
        if (c.is_dynkin() && !c.cap()) {
            std::vector<DimVector> dims;
            for (const auto& e : c.entries()) dims.push_back(e.dims);
            r.expect(dims == positive_roots(q), [] { return std::string("catalog differs from the positive roots"); });
        }
    }
    std::vector<std::optional<Representation>> tau(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c.is_projective(i)) tau[i] = coxeter_functor(c.entry(i).rep, 1);
    {
        Recorder r(out, "rep_lab", "Auslander-Reiten formula");
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (!tau[m]) continue;
            for (std::size_t k = 0; k < c.size(); ++k)
                r.expect(c.ext(m, k) == hom_ext(c.entry(k).rep, *tau[m]).hom_dim,
                         [&] { return str(c.dims(m)) + " " + str(c.dims(k)); });
        }
    }
    {
        Recorder r(out, "rep_lab", "tau inverse undoes tau");
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (!tau[m]) continue;
            r.expect(tau[m]->dims() == coxeter_transform(q, c.dims(m), 1) &&
                         coxeter_functor(*tau[m], -1).dims() == c.dims(m),
                     [&] { return str(c.dims(m)); });
        }
    }
    {
        Recorder r(out, "rep_lab", "reflection functors preserve indecomposables");
        for (std::size_t i = 0; i < q.vertex_count(); ++i) {
            const bool sink = q.is_sink(i), source = q.is_source(i);
            if (!sink && !source) continue;
            const DimVector simple = DimVector::unit(q.vertex_count(), i);
            for (const auto& e : c.entries()) {
                if (e.dims == simple) continue;
                const Representation s = bgp_reflect(e.rep, i, sink ? ReflectDirection::plus : ReflectDirection::minus);
                r.expect(is_brick(s) && s.dims() == simple_reflection(q, i, e.dims),
                         [&] { return str(e.dims) + " at " + q.id(i); });
            }
        }
    }
    {
        Recorder r(out, "rep_lab", "semi-invariants detect Hom/Ext orthogonality");
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b) {
                if (euler_form(q, c.dims(a), c.dims(b)) != 0) continue;
                const bool nonzero = semi_invariant(c.entry(a).rep, c.entry(b).rep) != 0;
                r.expect(nonzero == (c.hom(a, b) == 0 && c.ext(a, b) == 0),
                         [&] { return str(c.dims(a)) + " " + str(c.dims(b)); });
            }
    }
}

void tilting_checks(const ExceptionalCatalog& c, std::vector<CheckResult>& out) {
    const std::size_t n = c.vertex_count();
    const auto rigid = enumerate_cliques(c.size(), [&](std::size_t a, std::size_t b) { return c.compatible(a, b); });
    const auto tilting = enumerate_tilting(c);
    {
        Recorder r(out, "tilting", "rigid sets have at most n summands");
        for (const auto& s : rigid) r.expect(s.size() <= n, [&] { return std::to_string(s.size()) + " summands"; });
    }
    {
        Recorder r(out, "tilting", "tilting dimension vectors are independent");
        for (const auto& t : tilting) {
            QMatrix g(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) g(i, j) = Rational(static_cast<long>(c.dims(t.indices()[j])[i]));
            r.expect(rank(g) == n, [&] { return str(t.total_dims(c)); });
        }
    }
    {
        Recorder r(out, "tilting", "complements: two exactly for sincere modules");
        Recorder r2(out, "tilting", "complements: extension in one direction only");
        if (!c.is_complete()) {
            r.skip();
            r2.skip();
        } else {
            for (const auto& s : rigid) {
                if (s.size() + 1 != n) continue;
                const auto almost = PartialTilting::make(c, s);
                const auto comp = complements(c, almost);
                const bool sincere = almost.total_dims(c).is_sincere();
                r.expect(comp.size() == (sincere ? 2u : 1u) || (n == 1 && comp.size() == 1),
                         [&] { return str(almost.total_dims(c)) + ": " + std::to_string(comp.size()); });
                if (comp.size() == 2)
                    r2.expect((c.ext(comp[0], comp[1]) == 0) != (c.ext(comp[1], comp[0]) == 0),
                              [&] { return str(c.dims(comp[0])) + " " + str(c.dims(comp[1])); });
            }
        }
    }
    {
        Recorder r(out, "tilting", "torsion pairs split for slices");
        for (const auto& t : tilting) {
            const auto rep = torsion_classify(c, t);
            const bool slice = is_slice(c, t);
            for (std::size_t i = 0; i < c.size(); ++i) {
                const auto& e = rep.entries[i];
                const bool torsion = e.ext_to == 0, free = e.hom_to == 0;
                r.expect(!(torsion && free) && (!slice || e.cls != TorsionClass::neither),
                         [&] { return str(t.total_dims(c)) + " on " + str(c.dims(i)); });
            }
        }
    }
    {
        Recorder r(out, "tilting", "Schofield sequences number support - 1");
        if (!c.is_complete()) {
            r.skip();
        } else {
            for (std::size_t e = 0; e < c.size(); ++e) {
                const auto seqs = schofield_sequences(c, e);
                r.expect(seqs.size() + 1 == c.dims(e).support_size(),
                         [&] { return str(c.dims(e)) + ": " + std::to_string(seqs.size()); });
            }
        }
    }
    {
        Recorder r(out, "tilting", "volumes sum to one");
        if (!c.is_complete()) {
            r.skip();
        } else {
            const auto v = volume_sum(c);
            r.expect(v.total == 1, [&] { return to_string(v.total); });
        }
    }
}

void complex_checks(const ExceptionalCatalog& c, const CheckOptions& opts, std::vector<CheckResult>& out) {
    const std::size_t n = c.vertex_count();
    const ClusterComplex plain(c, false), prime(c, true);
    {
        Recorder r(out, "complex", "plain complex is the module part of the prime one");
        std::set<Face> module_faces;
        for (const auto& f : prime.faces())
            if (std::all_of(f.begin(), f.end(), [&](std::size_t v) { return !prime.is_negative(v); }))
                module_faces.insert(f);
        r.expect(std::set<Face>(plain.faces().begin(), plain.faces().end()) == module_faces,
                 [] { return std::string("face sets differ"); });
    }
    {
        Recorder r(out, "complex", "plain complex is a pseudomanifold with boundary");
        Recorder r2(out, "complex", "prime complex is a sphere");
        if (!c.is_complete()) {
            r.skip();
            r2.skip();
        } else {
            const auto pr = pseudomanifold_report(plain);
            r.expect(pr.ok(), [&] { return std::to_string(pr.violations.size()) + " violations"; });
            const auto pp = pseudomanifold_report(prime);
            r2.expect(pp.ok(), [&] { return std::to_string(pp.violations.size()) + " violations"; });
            const std::int64_t chi = 1 + (n % 2 == 1 ? 1 : -1);
            r2.expect(prime.euler_characteristic() == chi,
                      [&] { return "Euler characteristic " + std::to_string(prime.euler_characteristic()); });
        }
    }
    {
        Recorder r(out, "complex", "negative vertices span a maximal simplex");
        Face neg;
        for (std::size_t i = 0; i < n; ++i) neg.push_back(prime.negative_vertex(i));
        const auto& maxi = prime.maximal_simplices();
        r.expect(std::find(maxi.begin(), maxi.end(), neg) != maxi.end(), [] { return std::string("missing"); });
    }
    {
        Recorder r(out, "complex", "cones form a fan");
        if (!c.is_complete()) {
            r.skip();
        } else {
            const auto f = fan_report(prime, opts.fan_radius);
            r.expect(f.duality, [] { return std::string("forms are not dual"); });
            r.expect(f.adjacent_separated, [] { return std::string("adjacent cones overlap"); });
            r.expect(f.uncovered_points == 0, [&] { return std::to_string(f.uncovered_points) + " points uncovered"; });
            r.expect(f.multiply_covered_interior == 0,
                     [&] { return std::to_string(f.multiply_covered_interior) + " points in two interiors"; });
        }
    }
}

void cluster_category_checks(const ExceptionalCatalog& c, std::vector<CheckResult>& out) {
    const std::size_t n = c.vertex_count();
    const auto objs = all_objects(c);
    const ClusterComplex prime(c, true);
    {
        Recorder r(out, "cluster_cat", "ext1 in the cluster category is symmetric");
        for (const auto& x : objs)
            for (const auto& y : objs)
                r.expect(ext1_c(x, y, c) == ext1_c(y, x, c), [&] { return to_string(x, c) + " " + to_string(y, c); });
    }
    {
        Recorder r(out, "cluster_cat", "ext1 vanishing reproduces the prime complex");
        for (const auto& x : objs)
            for (const auto& y : objs) {
                if (x == y) continue;
                const Face f = objects_to_face({x, y}, prime);
                r.expect((ext1_c(x, y, c) == 0) == prime.contains(f),
                         [&] { return to_string(x, c) + " " + to_string(y, c); });
            }
    }
    {
        Recorder r(out, "cluster_cat", "almost complete cluster-tilting objects have two complements");
        Recorder r2(out, "cluster_cat", "exchange graph is regular and connected");
        if (!c.is_complete()) {
            r.skip();
            r2.skip();
        } else {
            for (const auto& ridge : n >= 2 ? prime.faces_of_size(n - 1) : std::vector<Face>{Face{}}) {
                std::vector<ClusterObject> almost;
                for (auto v : ridge)
                    almost.push_back(prime.is_negative(v) ? ClusterObject::shifted_projective(v - prime.module_vertex_count())
                                                          : ClusterObject::module(v));
                bool ok = true;
                try {
                    const auto [a, b] = complements_c(almost, c);
                    auto with = [&](const ClusterObject& z) {
                        auto s = almost;
                        s.push_back(z);
                        return is_cluster_tilting(s, c);
                    };
                    ok = with(a) && with(b);
                } catch (const InvariantError&) {
                    ok = false;
                }
                r.expect(ok, [&] { return to_string(ridge, prime); });
            }
            const auto g = exchange_graph(prime);
            r2.expect(g.is_regular(n) && g.is_connected(), [] { return std::string("not regular or not connected"); });
        }
    }
    {
        Recorder r(out, "cluster_cat", "cluster tilted dimensions and slices");
        for (const auto& t : enumerate_tilting(c)) {
            const auto d = cta_dims(c, t);
            r.expect(d.end_c == d.end_a + d.j_dim && (d.j_dim == 0) == is_slice(c, t) && d.j_dim == d.hom_t_tau2t,
                     [&] { return str(t.total_dims(c)); });
        }
    }
    {
        Recorder r(out, "cluster_cat", "reverse arrows for relations");
        const Quiver& q = c.quiver();
        std::vector<Relation> all;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                try {
                    const auto p = make_presentation(q, {{u, v, 1}});
                    all.push_back({u, v, 1});
                    const auto cq = cta_quiver(p);
                    r.expect(cq.arrows.size() == q.arrow_count() + 1 && cq.loops.empty(),
                             [&] { return q.id(u) + "->" + q.id(v); });
                } catch (const InputError&) {
                }
            }
        const auto base = cta_quiver(make_presentation(q, {}));
        r.expect(base.arrows == q.arrows() && base.valid(), [] { return std::string("relation-free case changed"); });
        if (!all.empty()) {
            const auto cq = cta_quiver(make_presentation(q, all));
            r.expect(cq.added_arrows == all.size(), [] { return std::string("arrow count"); });
        }
    }
}

void cluster_algebra_checks(const ExceptionalCatalog& c, const CheckOptions& opts, Rng& rng,
                            std::vector<CheckResult>& out) {
    const Quiver& q = c.quiver();
    const std::size_t n = q.vertex_count();
    const auto names = default_variable_names(q);
    {
        Recorder laurent(out, "cluster_algebra", "Laurent phenomenon along random mutation paths");
        Recorder skew(out, "cluster_algebra", "mutation preserves skew-symmetry");
        Recorder inv(out, "cluster_algebra", "mutation is an involution");
        std::size_t involution_cases = 0;
        for (std::size_t t = 0; t < opts.random_cases; ++t) {
            Seed s = initial_seed(q);
            std::size_t last = n;
            for (std::size_t step = 0; step < opts.mutation_depth; ++step) {
                std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
                if (n > 1 && k == last) k = (k + 1) % n;
                Seed next;
                try {
                    next = mutate(s, k);
                } catch (const InvariantError&) {
                    laurent.expect(false, [&] { return "division not exact at step " + std::to_string(step); });
                    break;
                }
                LaurentPoly plus = LaurentPoly::constant(n, 1), minus = LaurentPoly::constant(n, 1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (s.exchange_matrix[i][k] > 0) plus = plus * s.cluster[i].pow(s.exchange_matrix[i][k]);
                    if (s.exchange_matrix[i][k] < 0) minus = minus * s.cluster[i].pow(-s.exchange_matrix[i][k]);
                }
                const DimVector d = denominator_vector(next.cluster[k]);
                Exponent shift(n);
                for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<std::int32_t>(std::max<std::int64_t>(d[i], 0));
                const LaurentPoly numerator = next.cluster[k] * LaurentPoly::monomial(shift);
                const bool polynomial = std::all_of(numerator.terms().begin(), numerator.terms().end(), [](const auto& term) {
                    return std::all_of(term.first.begin(), term.first.end(), [](std::int32_t e) { return e >= 0; });
                });
                laurent.expect(next.cluster[k] * s.cluster[k] == plus + minus && polynomial,
                               [&] { return to_string(next.cluster[k], names); });
                skew.expect(is_skew_symmetric(next.exchange_matrix), [&] { return "step " + std::to_string(step); });
                if (involution_cases < 100) {
                    ++involution_cases;
                    inv.expect(mutate(next, k) == s, [&] { return "mutation at " + q.id(k); });
                }
                s = std::move(next);
                last = k;
            }
        }
    }
    {
        Recorder pos(out, "cluster_algebra", "cluster variables have positive coefficients");
        Recorder corr(out, "cluster_algebra", "variables and clusters match the prime complex");
        if (!c.is_complete()) {
            pos.skip();
            corr.skip();
        } else {
            const auto e = enumerate_clusters(q, 4 * (c.size() + n) + 4);
            for (const auto& v : e.variables)
                pos.expect(std::all_of(v.terms().begin(), v.terms().end(), [](const auto& t) { return sgn(t.second) > 0; }),
                           [&] { return to_string(v, names); });
            const auto report = correspondence_check(q, c);
            corr.expect(report.ok(), [&] {
                return report.mismatches.empty() ? std::string("enumeration incomplete") : report.mismatches.front();
            });
        }
    }
}

}  // namespace

std::vector<CheckResult> run_checks(const ExceptionalCatalog& c, const CheckOptions& opts) {
    std::vector<CheckResult> out;
    Rng rng(opts.seed);
    quiver_checks(c, opts, rng, out);
    rep_checks(c, opts, rng, out);
    tilting_checks(c, out);
    complex_checks(c, opts, out);
    cluster_category_checks(c, out);
    cluster_algebra_checks(c, opts, rng, out);
    return out;
}

}  // namespace tiltlab::app
