#include "tiltlab/catalog.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tiltlab {

namespace {

std::vector<std::vector<std::int64_t>> square_table(std::size_t n) {
    return std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0));
}

}  // namespace

ExceptionalCatalog::ExceptionalCatalog(Quiver quiver, std::vector<CatalogEntry> entries,
                                       std::optional<std::int64_t> cap)
    : quiver_(std::move(quiver)), cap_(cap), dynkin_(tiltlab::is_dynkin(quiver_)) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.dims < b.dims; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().dims == e.dims) continue;
        if (!(e.rep.quiver() == quiver_) || e.rep.dims() != e.dims)
            throw InputError("catalog entry " + to_string(e.dims) + " does not match its representation");
        e.length = e.dims.total();
        entries_.push_back(std::move(e));
    }
    const std::size_t m = entries_.size();
    hom_ = square_table(m);
    ext_ = square_table(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const HomExtResult r = hom_ext(entries_[i].rep, entries_[j].rep);
            hom_[i][j] = r.hom_dim;
            ext_[i][j] = r.ext_dim;
        }
    for (std::size_t i = 0; i < m; ++i)
        if (hom_[i][i] != 1 || ext_[i][i] != 0)
            throw InvariantError("catalog entry " + to_string(entries_[i].dims) + " is not exceptional");
}

ExceptionalCatalog::ExceptionalCatalog(Quiver quiver, std::vector<CatalogEntry> entries,
                                       std::optional<std::int64_t> cap,
                                       std::vector<std::vector<std::int64_t>> hom_table,
                                       std::vector<std::vector<std::int64_t>> ext_table)
    : quiver_(std::move(quiver)),
      entries_(std::move(entries)),
      cap_(cap),
      dynkin_(tiltlab::is_dynkin(quiver_)),
      hom_(std::move(hom_table)),
      ext_(std::move(ext_table)) {
    const std::size_t m = entries_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!(entries_[i].rep.quiver() == quiver_) || entries_[i].rep.dims() != entries_[i].dims)
            throw InputError("catalog entry " + to_string(entries_[i].dims) + " does not match its representation");
        if (i > 0 && !(entries_[i - 1].dims < entries_[i].dims))
            throw InputError("catalog entries are not strictly sorted by dimension vector");
        entries_[i].length = entries_[i].dims.total();
    }
    auto shaped = [m](const auto& t) {
        return t.size() == m && std::all_of(t.begin(), t.end(), [m](const auto& row) { return row.size() == m; });
    };
    if (!shaped(hom_) || !shaped(ext_)) throw InputError("catalog tables do not match the entry count");
    // Spot checks: the diagonal plus one off-diagonal pair per row.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j : {i, (i + 1) % m}) {
            const HomExtResult r = hom_ext(entries_[i].rep, entries_[j].rep);
            if (r.hom_dim != hom_[i][j] || r.ext_dim != ext_[i][j])
                throw InputError("catalog table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") disagrees with a fresh computation");
        }
        if (hom_[i][i] != 1 || ext_[i][i] != 0)
            throw InputError("catalog entry " + to_string(entries_[i].dims) + " is not exceptional");
    }
}

std::optional<std::size_t> ExceptionalCatalog::find(const DimVector& d) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), d,
                               [](const CatalogEntry& e, const DimVector& v) { return e.dims < v; });
    if (it == entries_.end() || it->dims != d) return std::nullopt;
    return static_cast<std::size_t>(it - entries_.begin());
}

std::size_t ExceptionalCatalog::index_of(const DimVector& d) const {
    if (auto i = find(d)) return *i;
    throw InputError("no catalog entry with dimension vector " + to_string(d));
}

bool ExceptionalCatalog::is_projective(std::size_t i) const {
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (Representation::projective(quiver_, v).dims() == dims(i)) return true;
    return false;
}

bool ExceptionalCatalog::is_injective(std::size_t i) const {
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (Representation::injective(quiver_, v).dims() == dims(i)) return true;
    return false;
}

ExceptionalCatalog build_catalog(const Quiver& q, std::optional<std::int64_t> cap) {
    std::vector<CatalogEntry> entries;
    if (tiltlab::is_dynkin(q)) {
        for (const auto& root : positive_roots(q)) {
            if (cap && root.total() > *cap) continue;
            entries.push_back({root, indec_for_root(q, root), root.total()});
        }
        return ExceptionalCatalog(q, std::move(entries), cap);
    }
    if (!cap) throw PreconditionError("a length cap is required for a quiver that is not Dynkin");
    if (*cap < 1) throw PreconditionError("catalog cap must be positive");

    // Breadth-first search over tau^{+1} and tau^{-1}; modules above the cap are
    // traversed (up to twice the cap) but not recorded.
    const std::int64_t traverse_bound = 2 * *cap;
    std::map<DimVector, Representation> seen;
    std::deque<Representation> queue;
    auto offer = [&](Representation r) {
        if (r.is_zero() || r.length() > traverse_bound) return;
        if (seen.count(r.dims())) return;
        if (!is_exceptional(r)) return;
        seen.emplace(r.dims(), r);
        queue.push_back(std::move(r));
    };
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        offer(Representation::simple(q, v));
        offer(Representation::projective(q, v));
        offer(Representation::injective(q, v));
    }
    while (!queue.empty()) {
        Representation r = std::move(queue.front());
        queue.pop_front();
        offer(coxeter_functor(r, 1));
        offer(coxeter_functor(r, -1));
    }
    for (auto& [dims, rep] : seen)
        if (dims.total() <= *cap) entries.push_back({dims, rep, dims.total()});
    return ExceptionalCatalog(q, std::move(entries), cap);
}

Component classify_component(const Quiver& q, const DimVector& d) {
    if (!d.is_nonnegative() || d.is_zero()) throw PreconditionError("component of a non-positive vector");
    std::vector<DimVector> proj, inj;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        proj.push_back(Representation::projective(q, v).dims());
        inj.push_back(Representation::injective(q, v).dims());
    }
    const std::int64_t bound = 4 * (d.total() + static_cast<std::int64_t>(q.vertex_count()));
    const EulerData data = euler_data(q);
    const QMatrix phi_inv = inverse(data.coxeter_matrix);
    auto walk = [&](const QMatrix& step, const std::vector<DimVector>& targets) {
        DimVector cur = d;
        for (std::int64_t k = 0; k <= bound; ++k) {
            if (std::find(targets.begin(), targets.end(), cur) != targets.end()) return true;
            DimVector next(cur.size());
            for (std::size_t r = 0; r < cur.size(); ++r) {
                Rational acc = 0;
                for (std::size_t c = 0; c < cur.size(); ++c) acc += step(r, c) * Rational(static_cast<long>(cur[c]));
                next[r] = acc.get_num().get_si();
            }
            if (!next.is_nonnegative() || next.is_zero()) return false;
            cur = std::move(next);
        }
        return false;
    };
    if (walk(data.coxeter_matrix, proj)) return Component::preprojective;
    if (walk(phi_inv, inj)) return Component::preinjective;
    return Component::other;
}

}  // namespace tiltlab
