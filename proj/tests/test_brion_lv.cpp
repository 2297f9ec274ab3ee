#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "latcount/brion_lv.hpp"
#include "latcount/oracle.hpp"

using namespace latcount;

namespace {

RatVec rv(std::vector<long> xs) {
    RatVec v;
    for (long x : xs)
        v.push_back(Rat(x));
    return v;
}

std::vector<RatVec> rows(std::vector<std::vector<long>> rs) {
    std::vector<RatVec> out;
    for (auto& r : rs)
        out.push_back(rv(r));
    return out;
}

Polytope make_Q() {
    return from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}, {2, 0, -1}, {2, -1, 1}}));
}

struct TermShape {
    int sign;
    std::set<IntVec> nums;
    std::set<IntVec> dens;
};

TermShape shape(const GenFunTerm& t) {
    return TermShape{t.sign,
                     std::set<IntVec>(t.numerator_exponents.begin(), t.numerator_exponents.end()),
                     std::set<IntVec>(t.denominator_exponents.begin(), t.denominator_exponents.end())};
}

// LV terms sit exactly at the vertex; brion terms at the shifted vertex.
const GenFunTerm& term_at_vertex(const GenFun& F, const RatVec& v) {
    for (const auto& t : F.terms)
        if (t.source_cone && t.source_cone->apex == v)
            return t;
    throw std::runtime_error("no term at vertex");
}

// brion emits one term per vertex here, in vertex order
const GenFunTerm& brion_term_at_vertex(const GenFun& F, const Polytope& P, const RatVec& v) {
    REQUIRE(F.terms.size() == P.vertices.size());
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        if (P.vertices[i] == v)
            return F.terms[i];
    throw std::runtime_error("no such vertex");
}

std::map<IntVec, long long> oracle_indicator(const Polytope& P, const IntBox& box) {
    std::map<IntVec, long long> m;
    for (const auto& p : enumerate_polytope(P))
        if (box_contains(box, p))
            m[p] = 1;
    return m;
}

} // namespace

TEST_CASE("brion on the interval [1,5] gives the two classic ray terms") {
    Polytope I = from_vrep(1, {rv({1}), rv({5})});
    GenFun F = brion(I);
    REQUIRE(F.terms.size() == 2);

    TermShape lo = shape(brion_term_at_vertex(F, I, rv({1})));
    CHECK(lo.sign == 1);
    CHECK(lo.nums == std::set<IntVec>{IntVec{1}});
    CHECK(lo.dens == std::set<IntVec>{IntVec{1}});

    TermShape hi = shape(brion_term_at_vertex(F, I, rv({5})));
    CHECK(hi.sign == 1);
    CHECK(hi.nums == std::set<IntVec>{IntVec{5}});
    CHECK(hi.dens == std::set<IntVec>{IntVec{-1}});

    CHECK(specialize_count(F) == 5);
    std::map<IntVec, long long> expected;
    for (long k = 1; k <= 5; ++k)
        expected[IntVec{k}] = 1;
    CHECK(signed_points_in_box(F, IntBox{IntVec{-3}, IntVec{9}}) == expected);
}

TEST_CASE("brion on the quadrilateral gives the four classic corner terms") {
    Polytope Q = make_Q();
    GenFun F = brion(Q);
    REQUIRE(F.terms.size() == 4);
    for (const auto& t : F.terms)
        CHECK(t.sign == 1);

    // vertex cones of Q are unimodular, so the shifted numerators are the
    // classic corner monomials
    CHECK(shape(brion_term_at_vertex(F, Q, rv({0, 0}))).nums == std::set<IntVec>{IntVec{0, 0}});
    CHECK(shape(brion_term_at_vertex(F, Q, rv({0, 0}))).dens ==
          (std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}}));
    CHECK(shape(brion_term_at_vertex(F, Q, rv({0, 2}))).nums == std::set<IntVec>{IntVec{0, 2}});
    CHECK(shape(brion_term_at_vertex(F, Q, rv({0, 2}))).dens ==
          (std::set<IntVec>{IntVec{1, 0}, IntVec{0, -1}}));
    CHECK(shape(brion_term_at_vertex(F, Q, rv({4, 2}))).nums == std::set<IntVec>{IntVec{4, 2}});
    CHECK(shape(brion_term_at_vertex(F, Q, rv({4, 2}))).dens ==
          (std::set<IntVec>{IntVec{-1, 0}, IntVec{-1, -1}}));
    CHECK(shape(brion_term_at_vertex(F, Q, rv({2, 0}))).nums == std::set<IntVec>{IntVec{2, 0}});
    CHECK(shape(brion_term_at_vertex(F, Q, rv({2, 0}))).dens ==
          (std::set<IntVec>{IntVec{1, 1}, IntVec{-1, 0}}));

    CHECK(specialize_count(F) == 12);
    IntBox box{IntVec{-1, -1}, IntVec{5, 3}};
    CHECK(signed_points_in_box(F, box) == oracle_indicator(Q, box));
}

TEST_CASE("brion on the unit square") {
    Polytope S = from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}}));
    GenFun F = brion(S);
    CHECK(F.terms.size() == 4);
    for (const auto& t : F.terms) {
        CHECK(t.sign == 1);
        CHECK(t.numerator_exponents.size() == 1);
    }
    CHECK(specialize_count(F) == 4);
}

TEST_CASE("lawrence-varchenko on the quadrilateral with xi=(2,1)") {
    Polytope Q = make_Q();
    GenFun F = lawrence_varchenko(Q, Direction{IntVec{2, 1}, {}});
    REQUIRE(F.terms.size() == 4);

    TermShape t00 = shape(term_at_vertex(F, rv({0, 0})));
    CHECK(t00.sign == 1);
    CHECK(t00.nums == std::set<IntVec>{IntVec{0, 0}});
    CHECK(t00.dens == (std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}}));

    TermShape t20 = shape(term_at_vertex(F, rv({2, 0})));
    CHECK(t20.sign == -1);
    CHECK(t20.nums == std::set<IntVec>{IntVec{3, 0}});
    CHECK(t20.dens == (std::set<IntVec>{IntVec{1, 0}, IntVec{1, 1}}));

    // both edge directions at (4,2) point against xi, so both rays flip and
    // open: the term is x^6 y^3 / ((1-x)(1-xy)) with sign +
    TermShape t42 = shape(term_at_vertex(F, rv({4, 2})));
    CHECK(t42.sign == 1);
    CHECK(t42.nums == std::set<IntVec>{IntVec{6, 3}});
    CHECK(t42.dens == (std::set<IntVec>{IntVec{1, 0}, IntVec{1, 1}}));

    TermShape t02 = shape(term_at_vertex(F, rv({0, 2})));
    CHECK(t02.sign == -1);
    CHECK(t02.nums == std::set<IntVec>{IntVec{0, 3}});
    CHECK(t02.dens == (std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}}));

    CHECK(specialize_count(F) == 12);
    IntBox box{IntVec{-1, -1}, IntVec{5, 3}};
    CHECK(signed_points_in_box(F, box) == oracle_indicator(Q, box));
}

TEST_CASE("lawrence-varchenko sign rule counts open generators") {
    Polytope Q = make_Q();
    GenFun F = lawrence_varchenko(Q, Direction{IntVec{2, 1}, {}});
    for (const auto& t : F.terms) {
        int open = 0;
        for (bool f : t.source_cone->open_flags)
            open += f ? 1 : 0;
        CHECK(t.sign == ((open % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("perpendicular directions are rejected") {
    Polytope Q = make_Q();
    CHECK_THROWS_AS(lawrence_varchenko(Q, Direction{IntVec{1, 0}, {}}), DegenerateDirection);
    // per-vertex direction may fix it at the offending vertices only
    Direction mixed{IntVec{1, 0}, {}};
    for (std::size_t v = 0; v < Q.vertices.size(); ++v)
        mixed.per_vertex[static_cast<int>(v)] = IntVec{2, 1};
    CHECK(specialize_count(lawrence_varchenko(Q, mixed)) == 12);
}

TEST_CASE("lv rejects non-simple polytopes") {
    Polytope pyr = from_vrep(3, rows({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 2}}));
    CHECK_THROWS_AS(lawrence_varchenko(pyr, Direction{IntVec{1, 2, 3}, {}}), NotSimple);
}

TEST_CASE("interior directions reproduce the brion terms on the quadrilateral") {
    Polytope Q = make_Q();
    // per vertex, a direction with positive dot against every edge direction:
    // the sum of the vertex cone's inward facet normals
    Direction dir;
    for (std::size_t v = 0; v < Q.vertices.size(); ++v) {
        VertexCone K = vertex_cone(Q, static_cast<int>(v));
        IntVec xi(2, 0);
        for (const auto& n : facet_normals(make_simplicial_cone(K.apex, K.generators)))
            xi = vec_add(xi, n);
        dir.per_vertex[static_cast<int>(v)] = xi;
    }
    GenFun lv = lawrence_varchenko(Q, dir);
    GenFun br = brion(Q);
    auto key = [](const GenFun& F) {
        std::multiset<std::string> s;
        for (const auto& t : F.terms) {
            GenFun one(F.dim);
            one.terms.push_back(t);
            s.insert(render_genfun(one));
        }
        return s;
    };
    CHECK(key(lv) == key(br));
}

TEST_CASE("rotation invariance on the quadrilateral") {
    Polytope Q = make_Q();
    Direction d1{IntVec{2, 1}, {}};
    Direction d2{IntVec{1, 2}, {}};
    CHECK(lv_rotation_check(Q, d1, d2));

    Direction mixed{IntVec{2, 1}, {}};
    mixed.per_vertex[0] = IntVec{-3, -2};
    mixed.per_vertex[2] = IntVec{5, 3};
    CHECK(lv_rotation_check(Q, d1, mixed));

    // and lv agrees with brion through the same comparison
    GenFun br = brion(Q);
    GenFun lv = lawrence_varchenko(Q, d1);
    IntBox box = bounding_box(Q, 1);
    CHECK(signed_points_in_box(br, box) == signed_points_in_box(lv, box));
    CHECK(specialize_count(br) == specialize_count(lv));
}

TEST_CASE("brion on a non-simple polytope goes through triangulated vertex cones") {
    Polytope pyr = from_vrep(3, rows({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 2}}));
    GenFun F = brion(pyr);
    // four simple corners plus two cones at the triangulated apex
    CHECK(F.terms.size() == 6);
    CHECK(specialize_count(F) == Int(enumerate_polytope(pyr).size()));
    IntBox box = bounding_box(pyr, 1);
    CHECK(signed_points_in_box(F, box) == oracle_indicator(pyr, box));
}

TEST_CASE("brion handles rational vertices exactly") {
    std::vector<RatVec> pts{RatVec{Rat(1, 3), Rat(0)}, RatVec{Rat(5, 2), Rat(0)},
                            RatVec{Rat(0), Rat(7, 3)}};
    Polytope T = from_vrep(2, pts);
    Int expect = Int(enumerate_polytope(T).size());
    GenFun F = brion(T);
    CHECK(specialize_count(F) == expect);
    IntBox box = bounding_box(T, 1);
    CHECK(signed_points_in_box(F, box) == oracle_indicator(T, box));
    CHECK(specialize_count(lawrence_varchenko(T, auto_direction(T))) == expect);
}

TEST_CASE("products of rational intervals") {
    std::mt19937 rng(818283);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    int built = 0;
    while (built < 6) {
        int d = 2 + built % 2;
        std::vector<RatVec> hs;
        bool bad = false;
        for (int i = 0; i < d; ++i) {
            Rat lo(num(rng), den(rng)), hi(num(rng), den(rng));
            if (lo > hi)
                std::swap(lo, hi);
            if (lo == hi)
                bad = true;
            RatVec low(static_cast<std::size_t>(d) + 1, Rat(0));
            RatVec high(static_cast<std::size_t>(d) + 1, Rat(0));
            low[0] = -lo;
            low[static_cast<std::size_t>(i) + 1] = 1;
            high[0] = hi;
            high[static_cast<std::size_t>(i) + 1] = -1;
            hs.push_back(low);
            hs.push_back(high);
        }
        if (bad)
            continue;
        ++built;
        Polytope P = from_hrep(d, hs);
        Int expect = Int(enumerate_polytope(P).size());
        CHECK(specialize_count(brion(P)) == expect);
        CHECK(specialize_count(lawrence_varchenko(P, auto_direction(P))) == expect);
    }
}

TEST_CASE("brion agrees with the oracle on random polygons") {
    std::mt19937 rng(555123);
    std::uniform_int_distribution<long> coord(-8, 8);
    int built = 0;
    while (built < 10) {
        std::vector<RatVec> pts;
        for (int k = 0; k < 5; ++k)
            pts.push_back(rv({coord(rng), coord(rng)}));
        Polytope P;
        try {
            P = from_vrep(2, pts);
        } catch (const Error&) {
            continue;
        }
        ++built;
        Int expect = Int(enumerate_polytope(P).size());
        CHECK(specialize_count(brion(P)) == expect);
        IntBox box = bounding_box(P, 1);
        CHECK(signed_points_in_box(brion(P), box) == oracle_indicator(P, box));
    }
}
