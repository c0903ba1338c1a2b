#include "tiltlab/cluster_algebra.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tiltlab {

bool is_skew_symmetric(const ExchangeMatrix& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].size() != b.size()) return false;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[i][j] != -b[j][i]) return false;
    }
    return true;
}

Seed initial_seed(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    Seed s;
    s.exchange_matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (const auto& a : q.arrows()) {
        ++s.exchange_matrix[a.tail][a.head];
        --s.exchange_matrix[a.head][a.tail];
    }
    for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
    return s;
}

Seed mutate(const Seed& s, std::size_t k) {
    const std::size_t n = s.cluster.size();
    if (k >= n) throw InputError("mutation index out of range");
    if (s.exchange_matrix.size() != n || !is_skew_symmetric(s.exchange_matrix))
        throw InputError("exchange matrix must be skew-symmetric of size n");
    const auto& b = s.exchange_matrix;

    LaurentPoly plus = LaurentPoly::constant(n, 1);
    LaurentPoly minus = LaurentPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i][k] > 0) plus = plus * s.cluster[i].pow(b[i][k]);
        if (b[i][k] < 0) minus = minus * s.cluster[i].pow(-b[i][k]);
    }
    Seed out = s;
    out.cluster[k] = exact_divide(plus + minus, s.cluster[k]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.exchange_matrix[i][j] = -b[i][j];
            else
                out.exchange_matrix[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
        }
    return out;
}

namespace {

std::vector<LaurentPoly> cluster_key(const Seed& s) {
    auto key = s.cluster;
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

ClusterEnumeration enumerate_clusters(const Quiver& q, std::size_t cap) {
    ClusterEnumeration out;
    std::map<LaurentPoly, std::size_t> var_index;
    std::set<std::vector<LaurentPoly>> seen;

    auto record = [&](const Seed& s) {
        std::vector<std::size_t> ids;
        for (const auto& v : s.cluster) {
            auto [it, inserted] = var_index.try_emplace(v, out.variables.size());
            if (inserted) out.variables.push_back(v);
            ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        out.clusters.push_back(std::move(ids));
    };

    const Seed start = initial_seed(q);
    seen.insert(cluster_key(start));
    record(start);
    std::deque<std::pair<Seed, std::size_t>> queue{{start, 0}};
    while (!queue.empty()) {
        auto [s, depth] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < s.cluster.size(); ++k) {
            Seed t = mutate(s, k);
            auto key = cluster_key(t);
            if (seen.count(key)) continue;
            if (depth >= cap) {
                out.partial = true;
                break;
            }
            seen.insert(std::move(key));
            record(t);
            out.depth = std::max(out.depth, depth + 1);
            queue.emplace_back(std::move(t), depth + 1);
        }
    }
    return out;
}

CorrespondenceReport correspondence_check(const Quiver& q, const ExceptionalCatalog& c) {
    if (!is_dynkin(q)) throw UnsupportedError("the correspondence check needs a Dynkin quiver");
    if (!(c.quiver() == q)) throw InputError("catalog was built for a different quiver");
    CorrespondenceReport report;
    const std::size_t n = q.vertex_count();
    const auto names = default_variable_names(q);
    const ClusterComplex x(c, true);

    const auto e = enumerate_clusters(q, 4 * (c.size() + n) + 4);
    report.variables = e.variables.size();
    report.clusters = e.clusters.size();
    report.enumeration_complete = !e.partial;

    // Denominator of each variable, mapped to a vertex of the prime complex.
    std::vector<std::size_t> vertex_of(e.variables.size(), x.vertex_count());
    std::vector<DimVector> den;
    std::set<std::size_t> hit;
    bool bijection = true;
    for (std::size_t v = 0; v < e.variables.size(); ++v) {
        den.push_back(denominator_vector(e.variables[v]));
        std::optional<std::size_t> vertex;
        if (auto m = c.find(den.back())) {
            vertex = *m;
        } else {
            for (std::size_t i = 0; i < n; ++i)
                if (den.back() == -DimVector::unit(n, i)) vertex = x.negative_vertex(i);
        }
        if (!vertex) {
            bijection = false;
            report.mismatches.push_back("denominator " + to_string(den.back()) + " of " +
                                        to_string(e.variables[v], names) + " is not a vertex");
            continue;
        }
        if (!hit.insert(*vertex).second) {
            bijection = false;
            report.mismatches.push_back("two variables share denominator " + to_string(den.back()));
        }
        vertex_of[v] = *vertex;
    }
    if (hit.size() != x.vertex_count()) {
        bijection = false;
        report.mismatches.push_back("denominators miss " + std::to_string(x.vertex_count() - hit.size()) + " vertices");
    }
    report.bijection = bijection;

    std::set<Face> cluster_faces;
    for (const auto& cl : e.clusters) {
        Face f;
        for (auto v : cl) f.push_back(vertex_of[v]);
        std::sort(f.begin(), f.end());
        cluster_faces.insert(f);
    }
    std::set<Face> maximal;
    for (const auto& f : x.maximal_simplices())
        if (f.size() == n) maximal.insert(f);
    report.maximal_simplices = maximal.size();
    report.clusters_match = bijection && cluster_faces == maximal && e.clusters.size() == maximal.size();
    if (!report.clusters_match) report.mismatches.push_back("clusters and maximal simplices differ");

    // A cluster monomial lies in cluster C iff its denominator lies in the cone of C.
    bool fan_ok = report.clusters_match;
    if (fan_ok) {
        std::set<std::pair<std::size_t, std::size_t>> compatible;
        for (const auto& cl : e.clusters)
            for (auto a : cl)
                for (auto b : cl)
                    if (a <= b) compatible.insert({a, b});
        std::vector<Cone> cones;
        for (const auto& cl : e.clusters) {
            Face f;
            for (auto v : cl) f.push_back(vertex_of[v]);
            std::sort(f.begin(), f.end());
            cones.push_back(cone_forms(x, f));
        }
        for (const auto& [a, b] : compatible) {
            const LaurentPoly m = a == b ? e.variables[a] : e.variables[a] * e.variables[b];
            const DimVector d = denominator_vector(m);
            for (std::size_t k = 0; k < e.clusters.size(); ++k) {
                const auto& cl = e.clusters[k];
                const bool member = std::binary_search(cl.begin(), cl.end(), a) && std::binary_search(cl.begin(), cl.end(), b);
                ++report.monomials_checked;
                if (member != cones[k].contains(d)) {
                    fan_ok = false;
                    report.mismatches.push_back("monomial " + to_string(m, names) + " against cluster " +
                                                std::to_string(k));
                }
            }
            // The square of a single variable as well.
            if (a != b) continue;
            const DimVector d2 = denominator_vector(m * m);
            for (std::size_t k = 0; k < e.clusters.size(); ++k) {
                const auto& cl = e.clusters[k];
                const bool member = std::binary_search(cl.begin(), cl.end(), a);
                ++report.monomials_checked;
                if (member != cones[k].contains(d2)) {
                    fan_ok = false;
                    report.mismatches.push_back("monomial (" + to_string(m, names) + ")^2 against cluster " +
                                                std::to_string(k));
                }
            }
        }
    }
    report.fan_restatement = fan_ok;
    return report;
}

}  // namespace tiltlab
