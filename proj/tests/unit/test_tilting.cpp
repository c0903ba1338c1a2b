#include "support/oracle.hpp"
#include "support/quivers.hpp"

#include "tiltlab/catalog.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/tilting.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tiltlab;

namespace {

std::size_t idx(const ExceptionalCatalog& c, const char* d) {
    return c.index_of(parse_dim_vector(d, c.vertex_count()));
}

PartialTilting pt(const ExceptionalCatalog& c, std::initializer_list<const char*> dims) {
    std::vector<std::size_t> v;
    for (const char* d : dims) v.push_back(idx(c, d));
    return PartialTilting::make(c, v);
}

std::set<DimVector> dims_of(const ExceptionalCatalog& c, const std::vector<std::size_t>& v) {
    std::set<DimVector> out;
    for (auto i : v) out.insert(c.dims(i));
    return out;
}

// Tilting modules by brute force over n-subsets, with Ext from the oracle.
std::size_t brute_force_tilting_count(const ExceptionalCatalog& c) {
    const std::size_t m = c.size(), n = c.vertex_count();
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            ok[i][j] = oracle::ext_dim(c.entry(i).rep, c.entry(j).rep) == 0;
    std::size_t count = 0;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) s.push_back(i);
        bool rigid = true;
        for (auto a : s)
            for (auto b : s) rigid = rigid && ok[a][b];
        count += rigid;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return count;
}

Rational determinant_of(const std::vector<DimVector>& cols) {
    QMatrix m(cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols.size(); ++i) m(i, j) = static_cast<long>(cols[j][i]);
    return determinant(m);
}

}  // namespace

TEST_CASE("catalogs") {
    const auto a3 = build_catalog(fixtures::a3());
    CHECK(a3.size() == 6);
    CHECK(a3.is_complete());
    std::vector<DimVector> dims;
    for (const auto& e : a3.entries()) dims.push_back(e.dims);
    CHECK(dims == std::vector<DimVector>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK(build_catalog(fixtures::a2()).size() == 3);
    CHECK(build_catalog(fixtures::d4()).size() == 12);
    CHECK_THROWS_AS(build_catalog(fixtures::kronecker()), PreconditionError);

    const auto k = build_catalog(fixtures::kronecker(), 5);
    CHECK_FALSE(k.is_complete());
    CHECK(k.cap() == 5);
    std::vector<DimVector> kd;
    for (const auto& e : k.entries()) kd.push_back(e.dims);
    CHECK(kd == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
    CHECK(classify_component(fixtures::kronecker(), {2, 3}) == Component::preprojective);
    CHECK(classify_component(fixtures::kronecker(), {3, 2}) == Component::preinjective);
    CHECK(classify_component(fixtures::kronecker(), {1, 1}) == Component::other);

    // tables against the oracle
    for (const auto* c : {&a3, &k})
        for (std::size_t i = 0; i < c->size(); ++i)
            for (std::size_t j = 0; j < c->size(); ++j) {
                CHECK(c->hom(i, j) == oracle::hom_dim(c->entry(i).rep, c->entry(j).rep));
                CHECK(c->ext(i, j) == oracle::ext_dim(c->entry(i).rep, c->entry(j).rep));
            }
    CHECK(a3.is_projective(idx(a3, "110")));
    CHECK(a3.is_injective(idx(a3, "011")));
    CHECK_FALSE(a3.is_projective(idx(a3, "010")));
    CHECK_THROWS_AS((void)a3.index_of({1, 0, 1}), InputError);
}

TEST_CASE("the square catalog holds the regular modules of length three") {
    const auto sq = build_catalog(fixtures::square(), 12);
    CHECK(sq.find({1, 1, 0, 1}).has_value());
    CHECK(sq.find({1, 0, 1, 1}).has_value());
    for (const auto& e : sq.entries()) {
        CHECK(e.length <= 12);
        CHECK(oracle::hom_dim(e.rep, e.rep) == 1);
        CHECK(oracle::ext_dim(e.rep, e.rep) == 0);
    }
}

TEST_CASE("partial tilting validation") {
    const auto a3 = build_catalog(fixtures::a3());
    CHECK_THROWS_AS(PartialTilting::make(a3, {0, 0}), InputError);
    CHECK_THROWS_AS(PartialTilting::make(a3, {99}), InputError);
    CHECK_THROWS_AS(pt(a3, {"010", "100"}), PreconditionError);  // Ext(S2, S1) != 0
    CHECK(pt(a3, {"110", "100"}).size() == 2);
    CHECK(is_rigid_set(a3, {idx(a3, "111"), idx(a3, "110"), idx(a3, "100")}));
    CHECK(is_tilting(a3, pt(a3, {"111", "110", "100"})));
    CHECK_FALSE(is_tilting(a3, pt(a3, {"111", "110"})));
}

TEST_CASE("tilting counts") {
    const auto a3 = build_catalog(fixtures::a3());
    CHECK(enumerate_tilting(a3).size() == 5);
    CHECK(brute_force_tilting_count(a3) == 5);

    const auto a2 = build_catalog(fixtures::a2());
    const auto t2 = enumerate_tilting(a2);
    REQUIRE(t2.size() == 2);
    std::set<std::set<DimVector>> got;
    for (const auto& t : t2) got.insert(dims_of(a2, t.indices()));
    CHECK(got == std::set<std::set<DimVector>>{{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}});

    for (const Quiver& q : {fixtures::a3_source(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        CHECK(enumerate_tilting(c).size() == brute_force_tilting_count(c));
    }

    // the Kronecker capped at 5: adjacent preprojective and preinjective pairs
    const auto k = build_catalog(fixtures::kronecker(), 5);
    const auto tk = enumerate_tilting(k);
    got.clear();
    for (const auto& t : tk) got.insert(dims_of(k, t.indices()));
    CHECK(got == std::set<std::set<DimVector>>{
                     {{0, 1}, {1, 2}}, {{1, 2}, {2, 3}}, {{1, 0}, {2, 1}}, {{2, 1}, {3, 2}}});

    // restricted supports
    const auto sub = enumerate_tilting(a3, std::vector<bool>{true, true, false});
    CHECK(sub.size() == 2);
    CHECK(enumerate_tilting(a3, std::vector<bool>{true, false, true}).size() == 1);
    CHECK(enumerate_tilting(a3, std::vector<bool>{false, false, false}).size() == 1);
}

TEST_CASE("tilting modules have independent dimension vectors") {
    for (const Quiver& q : {fixtures::a3(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        for (const auto& t : enumerate_tilting(c)) {
            std::vector<DimVector> cols;
            for (auto i : t.indices()) cols.push_back(c.dims(i));
            CHECK(determinant_of(cols) != 0);
        }
    }
}

TEST_CASE("rigid sets never exceed the number of vertices") {
    const auto c = build_catalog(fixtures::d4());
    const auto cliques = enumerate_cliques(c.size(), [&](std::size_t i, std::size_t j) { return c.compatible(i, j); });
    std::size_t largest = 0;
    for (const auto& k : cliques) largest = std::max(largest, k.size());
    CHECK(largest == 4);
}

TEST_CASE("clique enumeration") {
    // a 4-cycle 0-1-2-3-0
    auto adj = [](std::size_t i, std::size_t j) { return (i + 1) % 4 == j || (j + 1) % 4 == i; };
    const auto all = enumerate_cliques(4, adj);
    CHECK(all.size() == 9);  // the empty clique, 4 vertices and 4 edges
    const auto edges = enumerate_cliques(4, adj, 2);
    CHECK(edges == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    const auto even = enumerate_cliques(4, adj, std::nullopt, [](std::size_t i) { return i % 2 == 0; });
    CHECK(even == std::vector<std::vector<std::size_t>>{{}, {0}, {2}});
}

TEST_CASE("complements") {
    const auto a3 = build_catalog(fixtures::a3());
    CHECK(dims_of(a3, complements(a3, pt(a3, {"111", "110"}))) == std::set<DimVector>{{1, 0, 0}, {0, 1, 0}});
    CHECK(dims_of(a3, complements(a3, pt(a3, {"110", "100"}))) == std::set<DimVector>{{1, 1, 1}});
    const auto a2 = build_catalog(fixtures::a2());
    CHECK(dims_of(a2, complements(a2, pt(a2, {"11"}))) == std::set<DimVector>{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(complements(a3, pt(a3, {"111"})), PreconditionError);

    const auto e = exchange_direction(a3, idx(a3, "100"), idx(a3, "010"));
    CHECK(e.from == idx(a3, "010"));
    CHECK(e.to == idx(a3, "100"));

    // two complements exactly for sincere modules, and Ext goes one way only
    for (const Quiver& q : {fixtures::a2(), fixtures::a3(), fixtures::a3_source(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        const auto n = q.vertex_count();
        const auto almost = enumerate_cliques(
            c.size(), [&](std::size_t i, std::size_t j) { return c.compatible(i, j); }, n - 1);
        for (const auto& s : almost) {
            if (s.empty()) continue;
            const auto t = PartialTilting::make(c, s);
            const auto comp = complements(c, t);
            CHECK((comp.size() == 1 || comp.size() == 2));
            CHECK((comp.size() == 2) == t.total_dims(c).is_sincere());
            if (comp.size() == 2) {
                const bool xy = c.ext(comp[0], comp[1]) != 0, yx = c.ext(comp[1], comp[0]) != 0;
                CHECK(xy != yx);
            }
        }
    }
}

TEST_CASE("torsion classes") {
    const auto a2 = build_catalog(fixtures::a2());
    const auto t = pt(a2, {"11", "01"});
    const auto r = torsion_classify(a2, t);
    CHECK(r.entries[idx(a2, "10")].cls == TorsionClass::torsion_free);
    CHECK(r.entries[idx(a2, "11")].cls == TorsionClass::torsion);
    CHECK(r.entries[idx(a2, "01")].cls == TorsionClass::torsion);
    CHECK(r.entries[idx(a2, "10")].hom_to == 0);

    const auto a3 = build_catalog(fixtures::a3());
    const auto r3 = torsion_classify(a3, pt(a3, {"111", "110", "010"}));
    CHECK(r3.entries[idx(a3, "001")].cls == TorsionClass::torsion);
    CHECK(r3.entries[idx(a3, "100")].cls == TorsionClass::torsion_free);
    CHECK_THROWS_AS(torsion_classify(a3, pt(a3, {"111"})), PreconditionError);

    for (const Quiver& q : {fixtures::a3(), fixtures::a3_source(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        for (const auto& tt : enumerate_tilting(c)) {
            const auto rep = torsion_classify(c, tt);
            const bool slice = is_slice(c, tt);
            for (std::size_t i = 0; i < c.size(); ++i) {
                const auto& e = rep.entries[i];
                CHECK(e.hom_to >= 0);
                if (c.is_injective(i)) CHECK(e.cls == TorsionClass::torsion);
                if (slice) CHECK(e.cls != TorsionClass::neither);
                // classification by definition, from the oracle
                std::int64_t h = 0, x = 0;
                for (auto j : tt.indices()) {
                    h += oracle::hom_dim(c.entry(j).rep, c.entry(i).rep);
                    x += oracle::ext_dim(c.entry(j).rep, c.entry(i).rep);
                }
                CHECK(e.hom_to == h);
                CHECK(e.ext_to == x);
                const auto expected = x == 0 ? TorsionClass::torsion : h == 0 ? TorsionClass::torsion_free
                                                                            : TorsionClass::neither;
                CHECK(e.cls == expected);
            }
        }
    }
}

TEST_CASE("slices") {
    const auto a2 = build_catalog(fixtures::a2());
    CHECK(is_slice(a2, pt(a2, {"10", "11"})));
    CHECK(is_slice(a2, pt(a2, {"11", "01"})));
    const auto a3 = build_catalog(fixtures::a3());
    CHECK(is_slice(a3, pt(a3, {"100", "110", "111"})));
    for (const auto& t : enumerate_tilting(a3)) {
        bool expected = true;
        for (auto i : t.indices()) {
            const auto tau = coxeter_functor(a3.entry(i).rep, 1);
            for (auto j : t.indices()) expected = expected && oracle::ext_dim(tau, a3.entry(j).rep) == 0;
        }
        CHECK(is_slice(a3, t) == expected);
    }
    const auto sq = build_catalog(fixtures::square(), 12);
    CHECK_FALSE(is_slice(sq, PartialTilting::make(sq, {sq.index_of({1, 0, 0, 0}), sq.index_of({0, 0, 0, 1}),
                                                       sq.index_of({1, 1, 0, 1}), sq.index_of({1, 0, 1, 1})})));
}

TEST_CASE("Schofield sequences") {
    const auto a3 = build_catalog(fixtures::a3());
    const auto s111 = schofield_sequences(a3, idx(a3, "111"));
    CHECK(s111 == std::vector<SchofieldSequence>{{idx(a3, "001"), idx(a3, "110"), 1, 1, 1},
                                                 {idx(a3, "011"), idx(a3, "100"), 1, 1, 1}});
    CHECK(schofield_sequences(a3, idx(a3, "010")).empty());
    CHECK(schofield_sequences(a3, idx(a3, "110")) ==
          std::vector<SchofieldSequence>{{idx(a3, "010"), idx(a3, "100"), 1, 1, 1}});
    CHECK_THROWS_AS(schofield_sequences(a3, 17), InputError);

    for (const Quiver& q : {fixtures::a2(), fixtures::a3(), fixtures::a3_source(), fixtures::d4()}) {
        const auto c = build_catalog(q);
        for (std::size_t e = 0; e < c.size(); ++e) {
            const auto seqs = schofield_sequences(c, e);
            CHECK(seqs.size() == c.dims(e).support_size() - 1);
            for (const auto& s : seqs) {
                CHECK(s.a1 * s.a1 + s.a2 * s.a2 - s.t * s.a1 * s.a2 == 1);
                CHECK(s.a1 * c.dims(s.e1) + s.a2 * c.dims(s.e2) == c.dims(e));
                CHECK(oracle::ext_dim(c.entry(s.e1).rep, c.entry(s.e2).rep) == s.t);
                CHECK(oracle::hom_dim(c.entry(s.e1).rep, c.entry(s.e2).rep) == 0);
                CHECK(oracle::hom_dim(c.entry(s.e2).rep, c.entry(s.e1).rep) == 0);
                CHECK(oracle::ext_dim(c.entry(s.e2).rep, c.entry(s.e1).rep) == 0);
            }
        }
    }
}

TEST_CASE("volumes") {
    CHECK(volume_sum(build_catalog(fixtures::a2())).total == 1);
    const auto v3 = volume_sum(build_catalog(fixtures::a3()));
    CHECK(v3.total == 1);
    CHECK(v3.terms.size() == 5);
    std::multiset<Rational> parts;
    for (const auto& t : v3.terms) parts.insert(t.volume);
    CHECK(parts == std::multiset<Rational>{Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(1, 6),
                                           Rational(1, 3)});
    CHECK(volume_sum(build_catalog(fixtures::d4())).total == 1);
    CHECK(volume_sum(build_catalog(fixtures::a3_source())).total == 1);
    const auto capped = volume_sum(build_catalog(fixtures::kronecker(), 5));
    CHECK(capped.cap == 5);
    CHECK(capped.total == Rational(2) * (Rational(1, 3) + Rational(1, 15)));

    for (std::int64_t n = 1; n <= 6; ++n)
        CHECK(preprojective_volume(fixtures::kronecker(), 2 * n + 1).total == Rational(n, 2 * n + 1));
    CHECK(preprojective_volume(fixtures::kronecker(), 7).total == Rational(3, 7));
    // in Dynkin type everything is preprojective
    CHECK(preprojective_volume(fixtures::a3(), 3).total == 1);
}

TEST_CASE("weighted Kronecker series") {
    CHECK(weighted_kronecker_partial(1, 1, 1) == Rational(1, 3));
    CHECK(weighted_kronecker_partial(1, 2, 1) == Rational(1, 4));
    for (std::int64_t n = 1; n <= 10; ++n) {
        for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {1, 2}, {Rational(2, 3), 5}}) {
            CHECK(weighted_kronecker_partial(x, y, n) == weighted_kronecker_closed_form(x, y, n));
        }
        CHECK(weighted_kronecker_partial(1, 1, n) == Rational(n, 2 * n + 1));
    }
    const auto r = weighted_kronecker_report(1, 2, 50);
    CHECK(r.telescoped_limit == Rational(1, 3));
    CHECK(r.displayed_limit == Rational(1, 4));
    CHECK_FALSE(r.limits_agree);
    const auto same = weighted_kronecker_report(3, 3, 4);
    CHECK(same.limits_agree);
    CHECK(same.telescoped_limit == Rational(1, 18));
    CHECK(Rational(1, 3) - weighted_kronecker_partial(1, 2, 200) < Rational(1, 100));
}
