#include "tiltlab/tilting.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <set>

namespace tiltlab {

PartialTilting PartialTilting::make(const ExceptionalCatalog& c, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw InputError("repeated summand in a partial tilting module");
    for (auto i : indices)
        if (i >= c.size()) throw InputError("catalog index " + std::to_string(i) + " out of range");
    if (indices.size() > c.vertex_count())
        throw PreconditionError("a rigid set has at most as many summands as the quiver has vertices");
    if (!is_rigid_set(c, indices)) throw PreconditionError("summands have extensions between them");
    return PartialTilting(std::move(indices));
}

bool PartialTilting::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

DimVector PartialTilting::total_dims(const ExceptionalCatalog& c) const {
    DimVector sum(c.vertex_count());
    for (auto i : indices_) sum += c.dims(i);
    return sum;
}

bool is_rigid_set(const ExceptionalCatalog& c, const std::vector<std::size_t>& indices) {
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a; b < indices.size(); ++b)
            if (!c.compatible(indices[a], indices[b])) return false;
    return true;
}

bool is_tilting(const ExceptionalCatalog& c, const PartialTilting& t) {
    return t.size() == c.vertex_count() && is_rigid_set(c, t.indices());
}

std::vector<std::vector<std::size_t>> enumerate_cliques(std::size_t count,
                                                        const std::function<bool(std::size_t, std::size_t)>& compatible,
                                                        std::optional<std::size_t> exact_size,
                                                        const std::function<bool(std::size_t)>& admissible) {
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < count; ++v)
        if (!admissible || admissible(v)) pool.push_back(v);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    // Ordered backtracking: extend only by larger, pairwise compatible
    // candidates. Emission order is lexicographic on index tuples.
    auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
        if (!exact_size || current.size() == *exact_size) out.push_back(current);
        if (exact_size && current.size() == *exact_size) return;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const std::size_t v = candidates[k];
            if (exact_size && current.size() + (candidates.size() - k) < *exact_size) return;
            std::vector<std::size_t> next;
            for (std::size_t m = k + 1; m < candidates.size(); ++m)
                if (compatible(v, candidates[m])) next.push_back(candidates[m]);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    extend(extend, pool);
    return out;
}

std::vector<PartialTilting> enumerate_tilting(const ExceptionalCatalog& c,
                                              const std::optional<std::vector<bool>>& support) {
    std::vector<bool> mask = support.value_or(std::vector<bool>(c.vertex_count(), true));
    if (mask.size() != c.vertex_count()) throw InputError("support mask size mismatch");
    const auto target = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
    auto cliques = enumerate_cliques(
        c.size(), [&](std::size_t i, std::size_t j) { return c.compatible(i, j); }, target,
        [&](std::size_t i) { return c.dims(i).supported_in(mask); });
    std::vector<PartialTilting> out;
    out.reserve(cliques.size());
    for (auto& k : cliques) out.push_back(PartialTilting::make(c, std::move(k)));
    // Catalog indices follow the dimension-vector order, so index order is dims order.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> complements(const ExceptionalCatalog& c, const PartialTilting& almost) {
    if (almost.size() + 1 != c.vertex_count())
        throw PreconditionError("an almost complete partial tilting module has n-1 summands");
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (almost.contains(x)) continue;
        bool ok = c.compatible(x, x);
        for (auto i : almost.indices()) ok = ok && c.compatible(x, i);
        if (ok) out.push_back(x);
    }
    return out;
}

ExchangeEdge exchange_direction(const ExceptionalCatalog& c, std::size_t x, std::size_t y) {
    const bool xy = c.ext(x, y) != 0;
    const bool yx = c.ext(y, x) != 0;
    if (xy == yx) throw InvariantError("complements must have Ext^1 in exactly one direction");
    return xy ? ExchangeEdge{x, y} : ExchangeEdge{y, x};
}

TorsionReport torsion_classify(const ExceptionalCatalog& c, const PartialTilting& t) {
    if (!is_tilting(c, t)) throw PreconditionError("torsion classification needs a tilting module");
    TorsionReport report;
    for (std::size_t m = 0; m < c.size(); ++m) {
        TorsionEntry e;
        for (auto i : t.indices()) {
            e.hom_to += c.hom(i, m);
            e.ext_to += c.ext(i, m);
        }
        if (e.ext_to == 0 && e.hom_to == 0) throw InvariantError("module both torsion and torsion-free");
        e.cls = e.ext_to == 0 ? TorsionClass::torsion : e.hom_to == 0 ? TorsionClass::torsion_free : TorsionClass::neither;
        report.entries.push_back(e);
    }
    return report;
}

bool is_slice(const ExceptionalCatalog& c, const PartialTilting& t) {
    for (auto i : t.indices()) {
        const Representation tau = coxeter_functor(c.entry(i).rep, 1);
        if (tau.is_zero()) continue;
        for (auto j : t.indices())
            if (hom_ext(tau, c.entry(j).rep).ext_dim != 0) return false;
    }
    return true;
}

std::vector<SchofieldSequence> schofield_sequences(const ExceptionalCatalog& c, std::size_t e) {
    if (e >= c.size()) throw InputError("catalog index " + std::to_string(e) + " out of range");
    const DimVector& target = c.dims(e);
    const std::int64_t bound = target.total();
    std::vector<SchofieldSequence> out;
    for (std::size_t e1 = 0; e1 < c.size(); ++e1)
        for (std::size_t e2 = 0; e2 < c.size(); ++e2) {
            if (e1 == e2 || e1 == e || e2 == e) continue;
            if (c.hom(e1, e2) != 0 || c.hom(e2, e1) != 0 || c.ext(e2, e1) != 0) continue;
            const std::int64_t t = c.ext(e1, e2);
            if (t <= 0) continue;
            for (std::int64_t a1 = 1; a1 * c.dims(e1).total() < bound; ++a1)
                for (std::int64_t a2 = 1; a1 * c.dims(e1).total() + a2 * c.dims(e2).total() <= bound; ++a2) {
                    if (a1 * a1 + a2 * a2 - t * a1 * a2 != 1) continue;
                    if (a1 * c.dims(e1) + a2 * c.dims(e2) == target) out.push_back({e1, e2, a1, a2, t});
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

VolumeReport volume_sum(const ExceptionalCatalog& c) {
    VolumeReport report;
    report.cap = c.cap();
    for (auto& t : enumerate_tilting(c)) {
        Rational v = 1;
        for (auto i : t.indices()) v /= Rational(static_cast<long>(c.entry(i).length));
        std::vector<DimVector> summands;
        for (auto i : t.indices()) summands.push_back(c.dims(i));
        report.total += v;
        report.terms.push_back({std::move(summands), v});
    }
    return report;
}

VolumeReport preprojective_volume(const Quiver& q, std::int64_t max_length) {
    const EulerData data = euler_data(q);
    const QMatrix phi_inv = inverse(data.coxeter_matrix);
    std::set<DimVector> found;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        DimVector cur = Representation::projective(q, v).dims();
        while (cur.is_nonnegative() && !cur.is_zero() && cur.total() <= max_length && found.insert(cur).second) {
            DimVector next(cur.size());
            for (std::size_t r = 0; r < cur.size(); ++r) {
                Rational acc = 0;
                for (std::size_t k = 0; k < cur.size(); ++k) acc += phi_inv(r, k) * Rational(static_cast<long>(cur[k]));
                next[r] = acc.get_num().get_si();
            }
            cur = std::move(next);
        }
    }
    const std::vector<DimVector> dims(found.begin(), found.end());
    auto ext = [&](std::size_t i, std::size_t j) { return std::max<std::int64_t>(0, -euler_form(q, dims[i], dims[j])); };
    auto cliques = enumerate_cliques(
        dims.size(), [&](std::size_t i, std::size_t j) { return ext(i, j) == 0 && ext(j, i) == 0; },
        q.vertex_count());
    VolumeReport report;
    report.cap = max_length;
    for (const auto& k : cliques) {
        Rational v = 1;
        std::vector<DimVector> summands;
        for (auto i : k) {
            v /= Rational(static_cast<long>(dims[i].total()));
            summands.push_back(dims[i]);
        }
        report.total += v;
        report.terms.push_back({std::move(summands), v});
    }
    return report;
}

Rational weighted_kronecker_partial(const Rational& x, const Rational& y, std::int64_t n_terms) {
    if (sgn(x) <= 0 || sgn(y) <= 0) throw PreconditionError("weights must be positive");
    Rational sum = 0;
    for (std::int64_t t = 1; t <= n_terms; ++t) {
        const Rational tt(static_cast<long>(t));
        sum += 1 / ((tt * x + (tt - 1) * y) * ((tt + 1) * x + tt * y));
    }
    return sum;
}

Rational weighted_kronecker_closed_form(const Rational& x, const Rational& y, std::int64_t n_terms) {
    if (sgn(x) <= 0 || sgn(y) <= 0) throw PreconditionError("weights must be positive");
    const Rational nn(static_cast<long>(n_terms));
    return (1 / (x + y)) * (1 / x - 1 / ((nn + 1) * x + nn * y));
}

KroneckerSeriesReport weighted_kronecker_report(const Rational& x, const Rational& y, std::int64_t n_terms) {
    KroneckerSeriesReport report;
    report.partial = weighted_kronecker_partial(x, y, n_terms);
    report.closed_form = weighted_kronecker_closed_form(x, y, n_terms);
    report.telescoped_limit = 1 / (x * (x + y));
    report.displayed_limit = 1 / (2 * x * y);
    report.limits_agree = report.telescoped_limit == report.displayed_limit;
    return report;
}

}  // namespace tiltlab
