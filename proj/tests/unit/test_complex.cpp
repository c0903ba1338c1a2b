#include "support/quivers.hpp"

#include "tiltlab/catalog.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/tilting.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tiltlab;

namespace {

std::size_t vtx(const ExceptionalCatalog& c, const char* d) {
    return c.index_of(parse_dim_vector(d, c.vertex_count()));
}

// 3x3 determinant by cofactors, for the cone oracle
mpq_class det3(const std::vector<DimVector>& m) {
    auto e = [&](int r, int col) { return mpq_class(static_cast<long>(m[col][r])); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

// d lies in the cone on the columns g iff every Cramer coefficient is >= 0
bool in_cone3(const std::vector<DimVector>& g, const DimVector& d) {
    const mpq_class det = det3(g);
    for (int i = 0; i < 3; ++i) {
        auto h = g;
        h[i] = d;
        if (det3(h) / det < 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Sigma prime for A1 and A2") {
    const auto c1 = build_catalog(fixtures::a1());
    const auto x1 = build_sigma(c1, true);
    CHECK(x1.vertex_count() == 2);
    CHECK(x1.maximal_simplices() == std::vector<Face>{{0}, {1}});
    CHECK(x1.f_vector() == std::vector<std::size_t>{2});

    const auto c2 = build_catalog(fixtures::a2());
    const auto x2 = build_sigma(c2, true);
    CHECK(x2.f_vector() == std::vector<std::size_t>{5, 5});
    CHECK(x2.euler_characteristic() == 0);
    // a pentagon: every vertex has degree 2
    for (std::size_t v = 0; v < 5; ++v) {
        std::size_t deg = 0;
        for (const auto& f : x2.maximal_simplices()) deg += std::count(f.begin(), f.end(), v);
        CHECK(deg == 2);
    }
}

TEST_CASE("Sigma prime for A3 is a 2-sphere") {
    const auto c = build_catalog(fixtures::a3());
    const auto x = build_sigma(c, true);
    CHECK(x.f_vector() == std::vector<std::size_t>{9, 21, 14});
    CHECK(x.euler_characteristic() == 2);
    CHECK(x.maximal_simplices().size() == 14);
    const auto r = pseudomanifold_report(x);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    CHECK(r.ridges == 21);
    CHECK(r.interior.size() == 21);

    // negative vertices all lie in (0, {0})
    const Face all_neg{x.negative_vertex(0), x.negative_vertex(1), x.negative_vertex(2)};
    CHECK(x.contains(all_neg));
    CHECK(x.vertex_label(x.negative_vertex(0)) == "-1");
}

TEST_CASE("maximal simplex counts across supports") {
    // the maximal simplices of the extended complex are the tilting modules of
    // all Serre subcategories; D4 has cluster number 50
    for (const Quiver& q : {fixtures::a3(), fixtures::a3_source(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        const auto n = q.vertex_count();
        std::size_t total = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
            total += enumerate_tilting(c, s).size();
        }
        const auto x = build_sigma(c, true);
        CHECK(x.maximal_simplices().size() == total);
        CHECK(pseudomanifold_report(x).ok());
    }
    CHECK(build_sigma(build_catalog(fixtures::d4()), true).maximal_simplices().size() == 50);
}

TEST_CASE("plain Sigma and its boundary") {
    const auto c2 = build_catalog(fixtures::a2());
    const auto x2 = build_sigma(c2, false);
    CHECK(x2.f_vector() == std::vector<std::size_t>{3, 2});
    const auto r2 = pseudomanifold_report(x2);
    CHECK(r2.ok());
    std::set<Face> boundary(r2.boundary.begin(), r2.boundary.end());
    CHECK(boundary == std::set<Face>{{vtx(c2, "10")}, {vtx(c2, "01")}});
    CHECK(r2.interior == std::vector<Face>{{vtx(c2, "11")}});

    const auto c3 = build_catalog(fixtures::a3());
    const auto x3 = build_sigma(c3, false);
    const auto r3 = pseudomanifold_report(x3);
    CHECK(r3.ok());
    CHECK(r3.boundary_is_nonsincere);
    for (const auto& f : r3.boundary) {
        DimVector sum(3);
        for (auto v : f) sum += c3.dims(v);
        CHECK_FALSE(sum.is_sincere());
    }
    for (const auto& f : r3.interior) {
        DimVector sum(3);
        for (auto v : f) sum += c3.dims(v);
        CHECK(sum.is_sincere());
    }
    // plain Sigma is the subcomplex of faces without negative vertices
    const auto p3 = build_sigma(c3, true);
    std::size_t module_only = 0;
    for (const auto& f : p3.faces())
        if (std::none_of(f.begin(), f.end(), [&](std::size_t v) { return p3.is_negative(v); })) {
            ++module_only;
            CHECK(x3.contains(f));
        }
    CHECK(module_only == x3.faces().size());
}

TEST_CASE("pairs and faces") {
    const auto c = build_catalog(fixtures::a3());
    const auto x = build_sigma(c, true);
    for (const auto& f : x.faces()) {
        const auto s = x.as_pair(f);
        CHECK(x.from_pair(s) == f);
        for (auto m : s.module_indices) CHECK(c.dims(m).supported_in(s.serre_support));
    }
    // 100 with U missing vertex 1 is not a simplex
    CHECK_THROWS_AS((void)x.from_pair(SimplexMU{{vtx(c, "100")}, {false, true, true}}), PreconditionError);
    const Face f = x.from_pair(SimplexMU{{vtx(c, "010")}, {false, true, false}});
    CHECK(f == Face{vtx(c, "010"), x.negative_vertex(0), x.negative_vertex(2)});
    CHECK(x.compatible(vtx(c, "010"), x.negative_vertex(0)));
    CHECK_FALSE(x.compatible(vtx(c, "110"), x.negative_vertex(0)));
    CHECK(x.compatible(x.negative_vertex(0), x.negative_vertex(1)));
}

TEST_CASE("cone forms") {
    const auto c = build_catalog(fixtures::a3());
    const auto x = build_sigma(c, true);
    const Face neg{x.negative_vertex(0), x.negative_vertex(1), x.negative_vertex(2)};
    const auto k = cone_forms(x, neg);
    CHECK(k.forms == std::vector<std::vector<Rational>>{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});

    const Face proj{vtx(c, "100"), vtx(c, "110"), vtx(c, "111")};
    const auto p = cone_forms(x, proj);
    CHECK(p.forms == std::vector<std::vector<Rational>>{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
    CHECK_THROWS_AS(cone_forms(x, Face{vtx(c, "100")}), PreconditionError);

    for (const auto& m : x.maximal_simplices()) {
        const auto cone = cone_forms(x, m);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                CHECK(cone.evaluate(i, x.generator(m[j])) == (i == j ? 1 : 0));
    }

    // plain simplices: an exceptional N lies in C(T) iff it is a summand of T
    const auto plain = build_sigma(c, false);
    for (const auto& m : plain.maximal_simplices()) {
        const auto cone = cone_forms(plain, m);
        for (std::size_t e = 0; e < c.size(); ++e)
            CHECK(cone.contains(c.dims(e)) == std::binary_search(m.begin(), m.end(), e));
    }
}

TEST_CASE("locate") {
    const auto c = build_catalog(fixtures::a3());
    const auto x = build_sigma(c, true);
    const auto v111 = vtx(c, "111");
    const auto hits = locate(x, {1, 1, 1});
    std::set<std::size_t> expected;
    for (std::size_t i = 0; i < x.maximal_simplices().size(); ++i) {
        const auto& m = x.maximal_simplices()[i];
        if (std::binary_search(m.begin(), m.end(), v111)) expected.insert(i);
    }
    CHECK(std::set<std::size_t>(hits.begin(), hits.end()) == expected);
    CHECK(locate(x, {0, 0, 0}).size() == 14);
    for (auto i : locate(x, {-1, 0, 0})) {
        const auto& m = x.maximal_simplices()[i];
        CHECK(std::binary_search(m.begin(), m.end(), x.negative_vertex(0)));
    }

    // against Cramer's rule on the box
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long d = -2; d <= 2; ++d) {
                const DimVector v{a, b, d};
                std::set<std::size_t> want;
                for (std::size_t i = 0; i < x.maximal_simplices().size(); ++i) {
                    std::vector<DimVector> g;
                    for (auto u : x.maximal_simplices()[i]) g.push_back(x.generator(u));
                    if (in_cone3(g, v)) want.insert(i);
                }
                CHECK(!want.empty());
                const auto got = locate(x, v);
                CHECK(std::set<std::size_t>(got.begin(), got.end()) == want);
            }
}

TEST_CASE("fan property") {
    for (const Quiver& q : {fixtures::a2(), fixtures::a3(), fixtures::a3_source(), fixtures::d4()}) {
        const auto x = build_sigma(build_catalog(q), true);
        const auto r = fan_report(x, q.vertex_count() == 4 ? 2 : 3);
        CHECK(r.ok());
        CHECK(r.uncovered_points == 0);
        CHECK(r.multiply_covered_interior == 0);
    }
}

TEST_CASE("capped complexes record the cap") {
    const auto k = build_catalog(fixtures::kronecker(), 5);
    const auto x = build_sigma(k, true);
    CHECK(x.cap() == 5);
    // the chain (0,1)-(1,2)-(2,3) and (1,0)-(2,1)-(3,2) plus the two negatives
    CHECK(x.vertex_count() == 8);
    CHECK(pseudomanifold_report(x).violations.size() > 0);
}
