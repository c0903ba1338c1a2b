#include "tiltlab/complex.hpp"

#include "tiltlab/errors.hpp"
#include "tiltlab/tilting.hpp"

#include <algorithm>
#include <map>

namespace tiltlab {

ClusterComplex::ClusterComplex(const ExceptionalCatalog& c, bool prime)
    : quiver_(c.quiver()), prime_(prime), n_(c.vertex_count()), m_(c.size()), cap_(c.cap()) {
    for (std::size_t i = 0; i < m_; ++i) generators_.push_back(c.dims(i));
    if (prime_)
        for (std::size_t i = 0; i < n_; ++i) generators_.push_back(-DimVector::unit(n_, i));

    const std::size_t total = generators_.size();
    compat_.assign(total, std::vector<bool>(total, false));
    for (std::size_t u = 0; u < total; ++u)
        for (std::size_t v = 0; v < total; ++v) {
            bool ok = false;
            if (u < m_ && v < m_) {
                ok = c.compatible(u, v);
            } else if (u >= m_ && v >= m_) {
                ok = true;
            } else {
                const std::size_t module = u < m_ ? u : v;
                const std::size_t simple = (u < m_ ? v : u) - m_;
                ok = c.dims(module)[simple] == 0;
            }
            compat_[u][v] = ok;
        }

    faces_ = enumerate_cliques(total, [this](std::size_t u, std::size_t v) { return compat_[u][v]; });
    faces_.erase(std::remove_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.empty(); }), faces_.end());
    std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    // Flag complex: a face is maximal iff no outside vertex is compatible with all of it.
    for (const auto& f : faces_) {
        bool extendable = false;
        for (std::size_t v = 0; v < total && !extendable; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            extendable = std::all_of(f.begin(), f.end(), [&](std::size_t u) { return compat_[u][v]; });
        }
        if (!extendable) maximal_.push_back(f);
    }
}

std::string ClusterComplex::vertex_label(std::size_t v) const {
    if (v < m_) return to_string(generators_.at(v));
    return "-" + quiver_.id(v - m_);
}

std::vector<Face> ClusterComplex::faces_of_size(std::size_t k) const {
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.size() == k) out.push_back(f);
    return out;
}

bool ClusterComplex::contains(const Face& f) const {
    if (f.empty()) return true;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f[a] >= vertex_count()) return false;
        for (std::size_t b = a + 1; b < f.size(); ++b)
            if (!compat_[f[a]][f[b]]) return false;
    }
    return true;
}

std::vector<std::size_t> ClusterComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& face : faces_) {
        if (f.size() < face.size()) f.resize(face.size(), 0);
        ++f[face.size() - 1];
    }
    return f;
}

std::int64_t ClusterComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    const auto f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
    return chi;
}

SimplexMU ClusterComplex::as_pair(const Face& f) const {
    SimplexMU s;
    s.serre_support.assign(n_, true);
    for (auto v : f) {
        if (v < m_)
            s.module_indices.push_back(v);
        else
            s.serre_support.at(v - m_) = false;
    }
    return s;
}

Face ClusterComplex::from_pair(const SimplexMU& s) const {
    if (s.serre_support.size() != n_) throw InputError("Serre support mask size mismatch");
    Face f = s.module_indices;
    std::sort(f.begin(), f.end());
    for (auto v : f) {
        if (v >= m_) throw InputError("module index out of range");
        if (!generators_[v].supported_in(s.serre_support))
            throw PreconditionError("module " + to_string(generators_[v]) + " is not in the Serre subcategory");
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (!s.serre_support[i]) {
            if (!prime_) throw PreconditionError("the plain complex only has the full Serre subcategory");
            f.push_back(m_ + i);
        }
    if (!contains(f)) throw PreconditionError("modules of the pair are not rigid");
    return f;
}

bool ClusterComplex::compatible(std::size_t u, std::size_t v) const { return compat_.at(u).at(v); }

ClusterComplex build_sigma(const ExceptionalCatalog& c, bool prime) { return ClusterComplex(c, prime); }

PseudomanifoldReport pseudomanifold_report(const ClusterComplex& x) {
    PseudomanifoldReport report;
    const std::size_t n = x.rank();
    std::vector<Face> top;
    for (const auto& f : x.maximal_simplices()) {
        if (f.size() == n)
            top.push_back(f);
        else
            report.pure = false;
    }
    std::vector<Face> ridges = n >= 2 ? x.faces_of_size(n - 1) : std::vector<Face>{Face{}};
    report.ridges = ridges.size();
    for (const auto& r : ridges) {
        std::size_t count = 0;
        for (const auto& t : top)
            if (std::includes(t.begin(), t.end(), r.begin(), r.end())) ++count;
        if (x.prime()) {
            if (count == 2)
                report.interior.push_back(r);
            else
                report.violations.push_back({r, count});
            continue;
        }
        DimVector sum(n);
        for (auto v : r) sum += x.generator(v);
        const bool sincere = sum.is_sincere();
        if (count == 2)
            report.interior.push_back(r);
        else if (count == 1)
            report.boundary.push_back(r);
        else
            report.violations.push_back({r, count});
        if ((count == 2 && !sincere) || (count == 1 && sincere)) report.boundary_is_nonsincere = false;
    }
    return report;
}

Rational Cone::evaluate(std::size_t form, const DimVector& d) const {
    const auto& phi = forms.at(form);
    if (d.size() != phi.size()) throw InputError("vector size does not match the cone");
    Rational acc = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) acc += phi[k] * Rational(static_cast<long>(d[k]));
    return acc;
}

bool Cone::contains(const DimVector& d) const {
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (sgn(evaluate(i, d)) < 0) return false;
    return true;
}

bool Cone::contains_interior(const DimVector& d) const {
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (sgn(evaluate(i, d)) <= 0) return false;
    return true;
}

Cone cone_forms(const ClusterComplex& x, const Face& maximal) {
    const std::size_t n = x.rank();
    if (maximal.size() != n) throw PreconditionError("cone forms need a simplex with n vertices");
    Cone cone;
    QMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        cone.generators.push_back(x.generator(maximal[j]));
        for (std::size_t i = 0; i < n; ++i) g(i, j) = Rational(static_cast<long>(cone.generators[j][i]));
    }
    const QMatrix inv = inverse(g);  // InvariantError if the generators are dependent
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = inv(i, k);
        cone.forms.push_back(std::move(row));
    }
    return cone;
}

std::vector<std::size_t> locate(const ClusterComplex& x, const DimVector& d) {
    if (d.size() != x.rank()) throw InputError("vector size does not match the complex");
    std::vector<std::size_t> out;
    const auto& maxi = x.maximal_simplices();
    for (std::size_t s = 0; s < maxi.size(); ++s) {
        if (maxi[s].size() != x.rank()) continue;
        if (cone_forms(x, maxi[s]).contains(d)) out.push_back(s);
    }
    return out;
}

FanReport fan_report(const ClusterComplex& x, std::int64_t radius) {
    FanReport report;
    const std::size_t n = x.rank();
    std::vector<Face> top;
    std::vector<Cone> cones;
    for (const auto& f : x.maximal_simplices())
        if (f.size() == n) {
            top.push_back(f);
            cones.push_back(cone_forms(x, f));
        }
    for (const auto& cone : cones)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (cone.evaluate(i, cone.generators[j]) != (i == j ? 1 : 0)) report.duality = false;

    for (std::size_t a = 0; a < top.size(); ++a)
        for (std::size_t b = a + 1; b < top.size(); ++b) {
            Face common;
            std::set_intersection(top[a].begin(), top[a].end(), top[b].begin(), top[b].end(), std::back_inserter(common));
            if (common.size() + 1 != n) continue;
            std::size_t pos_u = 0;
            std::size_t w = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (!std::binary_search(common.begin(), common.end(), top[a][k])) pos_u = k;
            for (auto v : top[b])
                if (!std::binary_search(common.begin(), common.end(), v)) w = v;
            if (sgn(cones[a].evaluate(pos_u, x.generator(w))) >= 0) report.adjacent_separated = false;
        }

    DimVector point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = -radius;
    while (true) {
        ++report.box_points;
        std::size_t covering = 0;
        std::size_t interior = 0;
        for (const auto& cone : cones) {
            if (cone.contains(point)) ++covering;
            if (cone.contains_interior(point)) ++interior;
        }
        if (covering == 0) ++report.uncovered_points;
        if (interior > 1) ++report.multiply_covered_interior;
        std::size_t k = 0;
        while (k < n && point[k] == radius) point[k++] = -radius;
        if (k == n) break;
        ++point[k];
    }
    return report;
}

std::string to_string(const Face& f, const ClusterComplex& x) {
    std::string out = "{";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ", ";
        out += x.vertex_label(f[k]);
    }
    return out + "}";
}

}  // namespace tiltlab
