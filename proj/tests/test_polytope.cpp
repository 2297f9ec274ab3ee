#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "latcount/oracle.hpp"
#include "latcount/polytope.hpp"

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

// quadrilateral with vertices (0,0), (2,0), (4,2), (0,2)
Polytope make_Q() {
    return from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}, {2, 0, -1}, {2, -1, 1}}));
}

std::set<IntVec> gen_set(const VertexCone& K) {
    return std::set<IntVec>(K.generators.begin(), K.generators.end());
}

} // namespace

TEST_CASE("from_hrep recovers the quadrilateral vertices") {
    Polytope Q = make_Q();
    REQUIRE(Q.vertices.size() == 4);
    std::set<RatVec> vs(Q.vertices.begin(), Q.vertices.end());
    CHECK(vs.count(rv({0, 0})) == 1);
    CHECK(vs.count(rv({2, 0})) == 1);
    CHECK(vs.count(rv({4, 2})) == 1);
    CHECK(vs.count(rv({0, 2})) == 1);
}

TEST_CASE("from_hrep unit square and error paths") {
    Polytope S = from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}}));
    CHECK(S.vertices.size() == 4);

    CHECK_THROWS_AS(from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}})), Unbounded);
    // x >= 0, x <= -1, bounded in y by 0 <= y <= 1: empty
    CHECK_THROWS_AS(from_hrep(2, rows({{0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 0, -1}})),
                    EmptyPolytope);
    // normals do not span the plane
    CHECK_THROWS_AS(from_hrep(2, rows({{0, 1, 0}, {1, -1, 0}})), DegenerateInput);
}

TEST_CASE("from_hrep flat polytope keeps consistent vertex data") {
    // segment (0,0)-(2,0) embedded in the plane
    Polytope S = from_hrep(2, rows({{0, 1, 0}, {2, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
    REQUIRE(S.vertices.size() == 2);
    for (const auto& act : S.vertex_active)
        CHECK(act.size() >= 2);
}

TEST_CASE("from_vrep recovers the quadrilateral facets") {
    Polytope Q = from_vrep(2, rows({{0, 0}, {2, 0}, {4, 2}, {0, 2}}));
    REQUIRE(Q.halfspaces.size() == 4);
    REQUIRE(Q.vertices.size() == 4);
    Polytope Qh = make_Q();
    // same feasible lattice points
    CHECK(enumerate_polytope(Q) == enumerate_polytope(Qh));
}

TEST_CASE("from_vrep 1d interval") {
    Polytope I = from_vrep(1, {rv({1}), rv({5})});
    REQUIRE(I.halfspaces.size() == 2);
    // {x >= 1} and {5 - x >= 0}
    bool low = false, high = false;
    for (const auto& h : I.halfspaces) {
        if (h.normal == IntVec{1} && h.offset == -1)
            low = true;
        if (h.normal == IntVec{-1} && h.offset == 5)
            high = true;
    }
    CHECK(low);
    CHECK(high);
}

TEST_CASE("from_vrep drops interior points") {
    std::vector<RatVec> pts = rows({{0, 0}, {1, 0}, {0, 1}});
    pts.push_back(RatVec{Rat(1, 2), Rat(1, 4)});
    Polytope T = from_vrep(2, pts);
    CHECK(T.vertices.size() == 3);
    for (const auto& v : T.vertices)
        CHECK(v != (RatVec{Rat(1, 2), Rat(1, 4)}));

    CHECK_THROWS_AS(from_vrep(2, rows({{0, 0}, {1, 1}, {2, 2}})), DegenerateInput);
}

TEST_CASE("vertex cones of the quadrilateral") {
    Polytope Q = make_Q();
    auto find_vertex = [&](std::vector<long> v) {
        RatVec w = rv(v);
        for (std::size_t i = 0; i < Q.vertices.size(); ++i)
            if (Q.vertices[i] == w)
                return static_cast<int>(i);
        FAIL("vertex not found");
        return -1;
    };

    CHECK(gen_set(vertex_cone(Q, find_vertex({0, 0}))) ==
          std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}});
    CHECK(gen_set(vertex_cone(Q, find_vertex({4, 2}))) ==
          std::set<IntVec>{IntVec{-1, 0}, IntVec{-1, -1}});
    CHECK(gen_set(vertex_cone(Q, find_vertex({2, 0}))) ==
          std::set<IntVec>{IntVec{1, 1}, IntVec{-1, 0}});
    CHECK(gen_set(vertex_cone(Q, find_vertex({0, 2}))) ==
          std::set<IntVec>{IntVec{1, 0}, IntVec{0, -1}});
}

TEST_CASE("vertex cone generators point into the polytope") {
    Polytope Q = make_Q();
    for (std::size_t v = 0; v < Q.vertices.size(); ++v) {
        VertexCone K = vertex_cone(Q, static_cast<int>(v));
        CHECK(K.generators.size() == 2);
        for (const auto& g : K.generators) {
            RatVec probe = vec_add(K.apex, vec_scale(Rat(1, 1000), to_rat(g)));
            for (const auto& h : Q.halfspaces)
                CHECK(h.offset + dot(h.normal, probe) >= 0);
        }
    }
}

TEST_CASE("dilate") {
    Polytope Q = make_Q();
    Polytope Q1 = dilate(Q, Rat(1));
    CHECK(Q1.vertices == Q.vertices);

    Polytope Q3 = dilate(Q, Rat(3));
    std::set<RatVec> vs(Q3.vertices.begin(), Q3.vertices.end());
    CHECK(vs.count(rv({12, 6})) == 1);

    Polytope I = from_vrep(1, {rv({1}), rv({5})});
    Polytope I2 = dilate(I, Rat(2));
    std::set<RatVec> iv(I2.vertices.begin(), I2.vertices.end());
    CHECK(iv.count(rv({2})) == 1);
    CHECK(iv.count(rv({10})) == 1);
}

TEST_CASE("is_simple") {
    CHECK(is_simple(make_Q()));

    Polytope cube = from_hrep(3, rows({{0, 1, 0, 0},
                                       {0, 0, 1, 0},
                                       {0, 0, 0, 1},
                                       {1, -1, 0, 0},
                                       {1, 0, -1, 0},
                                       {1, 0, 0, -1}}));
    CHECK(is_simple(cube));

    // square pyramid: the apex meets four edges
    Polytope pyr = from_vrep(3, rows({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 2}}));
    CHECK_FALSE(is_simple(pyr));
    for (std::size_t v = 0; v < pyr.vertices.size(); ++v) {
        VertexCone K = vertex_cone(pyr, static_cast<int>(v));
        if (pyr.vertices[v] == rv({1, 1, 2}))
            CHECK(K.generators.size() == 4);
        else
            CHECK(K.generators.size() == 3);
    }
}

TEST_CASE("vertex_active lists every tight constraint, not just a defining subset") {
    // unit square plus a redundant halfspace x + y >= 0 tight at the origin
    Polytope S = from_hrep(2, rows({{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
    bool saw_origin = false;
    for (std::size_t v = 0; v < S.vertices.size(); ++v) {
        if (S.vertices[v] != rv({0, 0}))
            continue;
        saw_origin = true;
        CHECK(S.vertex_active[v].size() == 3);
        VertexCone K = vertex_cone(S, static_cast<int>(v));
        CHECK(gen_set(K) == (std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}}));
    }
    CHECK(saw_origin);
}

TEST_CASE("rational coordinates survive both conversions") {
    std::vector<RatVec> pts{RatVec{Rat(1, 3), Rat(0)}, RatVec{Rat(5, 2), Rat(0)},
                            RatVec{Rat(0), Rat(7, 3)}};
    Polytope T = from_vrep(2, pts);
    REQUIRE(T.vertices.size() == 3);
    Polytope back = from_hrep(2, [&] {
        std::vector<RatVec> hs;
        for (const auto& h : T.halfspaces) {
            RatVec row{h.offset};
            for (const auto& a : h.normal)
                row.push_back(Rat(a));
            hs.push_back(std::move(row));
        }
        return hs;
    }());
    CHECK(enumerate_polytope(back) == enumerate_polytope(T));
}

TEST_CASE("hrep/vrep round trip preserves lattice points") {
    std::vector<Polytope> corpus;
    corpus.push_back(make_Q());
    corpus.push_back(from_vrep(2, rows({{-3, 1}, {2, -1}, {4, 4}, {-1, 3}})));
    corpus.push_back(from_vrep(3, rows({{0, 0, 0}, {3, 0, 0}, {0, 4, 0}, {1, 1, 3}})));
    for (const auto& P : corpus) {
        Polytope back = from_vrep(P.dim, P.vertices);
        CHECK(enumerate_polytope(back) == enumerate_polytope(P));
    }
}
