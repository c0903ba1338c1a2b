#include "tiltlab/quiver.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace tiltlab {

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    DimVector d(n);
    d[i] = 1;
    return d;
}

DimVector::value_type DimVector::total() const {
    value_type s = 0;
    for (auto v : entries_) s += v;
    return s;
}

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

bool DimVector::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v >= 0; });
}

bool DimVector::is_sincere() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v > 0; });
}

std::size_t DimVector::support_size() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](auto v) { return v != 0; }));
}

bool DimVector::supported_in(const std::vector<bool>& allowed) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0 && !allowed[i]) return false;
    return true;
}

DimVector& DimVector::operator+=(const DimVector& rhs) {
    if (rhs.size() != size()) throw InputError("dimension vector size mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

DimVector& DimVector::operator-=(const DimVector& rhs) {
    if (rhs.size() != size()) throw InputError("dimension vector size mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

DimVector operator*(DimVector::value_type k, DimVector v) {
    for (auto& x : v.entries_) x *= k;
    return v;
}

DimVector DimVector::operator-() const { return -1 * *this; }

std::string to_string(const DimVector& d) {
    const bool compact = std::all_of(d.begin(), d.end(), [](auto v) { return v >= 0 && v <= 9; });
    std::string out;
    if (compact) {
        for (auto v : d) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const DimVector& d) { return os << to_string(d); }

DimVector parse_dim_vector(std::string_view text, std::size_t expected_size) {
    std::string body(text);
    std::erase_if(body, [](char c) { return c == ' ' || c == '(' || c == ')' || c == '[' || c == ']'; });
    std::vector<DimVector::value_type> entries;
    if (body.find(',') == std::string::npos) {
        // Compact digit form, or a single integer for one-vertex quivers.
        if (body.empty()) throw InputError("empty dimension vector");
        if (expected_size == 1) {
            try {
                entries.push_back(std::stoll(body));
            } catch (const std::exception&) {
                throw InputError("malformed dimension vector '" + std::string(text) + "'");
            }
        } else {
            if (body.size() != expected_size)
                throw InputError("dimension vector '" + std::string(text) + "' has wrong length");
            for (char c : body) {
                if (c < '0' || c > '9') throw InputError("malformed dimension vector '" + std::string(text) + "'");
                entries.push_back(c - '0');
            }
        }
    } else {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw InputError("malformed dimension vector '" + std::string(text) + "'");
            }
            if (used != item.size()) throw InputError("malformed dimension vector '" + std::string(text) + "'");
            entries.push_back(v);
        }
    }
    if (entries.size() != expected_size)
        throw InputError("dimension vector '" + std::string(text) + "' has wrong length");
    return DimVector(std::move(entries));
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    validate();
}

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::string>>& arrows)
    : vertices_(std::move(vertices)) {
    for (const auto& [tail, head] : arrows) {
        auto t = std::find(vertices_.begin(), vertices_.end(), tail);
        auto h = std::find(vertices_.begin(), vertices_.end(), head);
        if (t == vertices_.end() || h == vertices_.end())
            throw InputError("arrow " + tail + "->" + head + " refers to an unknown vertex");
        arrows_.push_back({static_cast<std::size_t>(t - vertices_.begin()),
                           static_cast<std::size_t>(h - vertices_.begin())});
    }
    validate();
}

void Quiver::validate() {
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.empty()) throw InputError("empty vertex id");
        if (!seen.insert(v).second) throw InputError("duplicate vertex id '" + v + "'");
    }
    const std::size_t n = vertices_.size();
    for (const auto& a : arrows_) {
        if (a.tail >= n || a.head >= n) throw InputError("arrow endpoint out of range");
        if (a.tail == a.head) throw InputError("loop at vertex '" + vertices_[a.tail] + "'");
    }
    // Repeatedly take the first remaining vertex all of whose outgoing arrows
    // end at already-placed vertices.
    std::vector<bool> placed(n, false);
    sink_order_.clear();
    for (std::size_t step = 0; step < n; ++step) {
        bool found = false;
        for (std::size_t v = 0; v < n && !found; ++v) {
            if (placed[v]) continue;
            bool sink_now = std::none_of(arrows_.begin(), arrows_.end(),
                                         [&](const Arrow& a) { return a.tail == v && !placed[a.head]; });
            if (sink_now) {
                placed[v] = true;
                sink_order_.push_back(v);
                found = true;
            }
        }
        if (!found) throw InputError("quiver has an oriented cycle");
    }
}

std::optional<std::size_t> Quiver::find(std::string_view id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::index_of(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw InputError("unknown vertex '" + std::string(id) + "'");
}

bool Quiver::is_sink(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.tail == v; });
}

bool Quiver::is_source(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.head == v; });
}

std::size_t Quiver::arrows_between(std::size_t from, std::size_t to) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(),
                                                  [&](const Arrow& a) { return a.tail == from && a.head == to; }));
}

namespace {

void require_size(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertex_count())
        throw InputError("dimension vector of size " + std::to_string(d.size()) + " for a quiver with " +
                         std::to_string(q.vertex_count()) + " vertices");
}

DimVector apply_integer_matrix(const QMatrix& m, const DimVector& d) {
    DimVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * Rational(static_cast<long>(d[c]));
        if (acc.get_den() != 1) throw_invariant("Coxeter matrix produced a non-integer entry");
        out[r] = acc.get_num().get_si();
    }
    return out;
}

}  // namespace

EulerData euler_data(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    QMatrix e = QMatrix::identity(n);
    for (const auto& a : q.arrows()) e(a.tail, a.head) -= 1;
    QMatrix phi = -(inverse(e) * e.transpose());
    return {std::move(e), std::move(phi)};
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    require_size(q, d);
    require_size(q, e);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) sum += d[i] * e[i];
    for (const auto& a : q.arrows()) sum -= d[a.tail] * e[a.head];
    return sum;
}

std::int64_t tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& d) {
    require_size(q, d);
    if (i >= q.vertex_count()) throw InputError("unknown vertex index " + std::to_string(i));
    DimVector out = d;
    out[i] = -d[i];
    for (const auto& a : q.arrows()) {
        if (a.tail == i) out[i] += d[a.head];
        if (a.head == i) out[i] += d[a.tail];
    }
    return out;
}

DimVector coxeter_transform(const Quiver& q, const DimVector& d, int power) {
    require_size(q, d);
    if (power == 0) return d;
    const EulerData data = euler_data(q);
    const QMatrix step = power > 0 ? data.coxeter_matrix : inverse(data.coxeter_matrix);
    DimVector out = d;
    for (int k = 0; k < (power > 0 ? power : -power); ++k) out = apply_integer_matrix(step, out);
    return out;
}

bool is_dynkin(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    QMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) sym(i, i) = 2;
    for (const auto& a : q.arrows()) {
        sym(a.tail, a.head) -= 1;
        sym(a.head, a.tail) -= 1;
    }
    // Sylvester's criterion on leading principal minors.
    for (std::size_t k = 1; k <= n; ++k)
        if (sgn(determinant(sym.block(0, 0, k, k))) <= 0) return false;
    return true;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
    if (!is_dynkin(q)) throw UnsupportedError("positive root enumeration requires a Dynkin quiver");
    const std::size_t n = q.vertex_count();
    std::set<DimVector> roots;
    std::vector<DimVector> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        roots.insert(DimVector::unit(n, i));
        frontier.push_back(DimVector::unit(n, i));
    }
    // Every positive root is reached from a simple root by height-increasing reflections.
    while (!frontier.empty()) {
        DimVector d = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            DimVector r = simple_reflection(q, i, d);
            if (r.is_nonnegative() && !r.is_zero() && roots.insert(r).second) frontier.push_back(std::move(r));
        }
    }
    return {roots.begin(), roots.end()};
}

Quiver reflect_quiver(const Quiver& q, std::size_t i) {
    if (i >= q.vertex_count()) throw InputError("unknown vertex index " + std::to_string(i));
    if (!q.is_sink(i) && !q.is_source(i))
        throw PreconditionError("vertex '" + q.id(i) + "' is neither a sink nor a source");
    std::vector<Arrow> arrows = q.arrows();
    for (auto& a : arrows)
        if (a.tail == i || a.head == i) std::swap(a.tail, a.head);
    return Quiver(q.vertices(), std::move(arrows));
}

Quiver full_subquiver(const Quiver& q, const std::vector<bool>& keep) {
    if (keep.size() != q.vertex_count()) throw InputError("vertex mask size mismatch");
    std::vector<std::string> ids;
    std::vector<std::size_t> remap(q.vertex_count(), 0);
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (keep[v]) {
            remap[v] = ids.size();
            ids.push_back(q.id(v));
        }
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows())
        if (keep[a.tail] && keep[a.head]) arrows.push_back({remap[a.tail], remap[a.head]});
    return Quiver(std::move(ids), std::move(arrows));
}

}  // namespace tiltlab
