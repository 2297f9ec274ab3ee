#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "latcount/genfun.hpp"
#include "latcount/oracle.hpp"

using namespace latcount;

namespace {

RatVec rv(std::vector<long> xs) {
    RatVec v;
    for (long x : xs)
        v.push_back(Rat(x));
    return v;
}

std::vector<IntVec> ivs(std::vector<std::vector<long>> gs) {
    std::vector<IntVec> out;
    for (auto& g : gs)
        out.emplace_back(g.begin(), g.end());
    return out;
}

SimplicialCone cone_at(std::vector<long> apex, std::vector<std::vector<long>> gens,
                       std::vector<bool> open = {}) {
    return make_simplicial_cone(rv(std::move(apex)), ivs(std::move(gens)), std::move(open));
}

// the two rays of the interval [1,5]: x/(1-x) and x^5/(1-x^{-1})
GenFun interval_sum() {
    GenFun F(1);
    F.terms.push_back(cone_term(cone_at({1}, {{1}})));
    F.terms.push_back(cone_term(cone_at({5}, {{-1}})));
    return F;
}

} // namespace

TEST_CASE("cone_term on pinned cones") {
    GenFunTerm quad = cone_term(cone_at({0, 0}, {{1, 0}, {0, 1}}));
    CHECK(quad.sign == 1);
    CHECK(quad.numerator_exponents == ivs({{0, 0}}));
    CHECK(std::set<IntVec>(quad.denominator_exponents.begin(), quad.denominator_exponents.end()) ==
          std::set<IntVec>{IntVec{1, 0}, IntVec{0, 1}});

    // vertex (0,2) of the quadrilateral: y^2 / ((1-x)(1-y^{-1}))
    GenFunTerm top = cone_term(cone_at({0, 2}, {{1, 0}, {0, -1}}));
    CHECK(top.numerator_exponents == ivs({{0, 2}}));
    CHECK(std::set<IntVec>(top.denominator_exponents.begin(), top.denominator_exponents.end()) ==
          std::set<IntVec>{IntVec{1, 0}, IntVec{0, -1}});
}

TEST_CASE("cone_term of the shifted 3d subcones") {
    RatVec s{Rat(1, 8), Rat(0), Rat(-1, 3)};
    SimplicialCone K1 = make_simplicial_cone(s, ivs({{1, 0, 1}, {0, 1, 1}, {0, -1, 1}}));
    SimplicialCone K2 = make_simplicial_cone(s, ivs({{0, 1, 1}, {0, -1, 1}, {-1, 0, 1}}));

    GenFunTerm t1 = cone_term(K1);
    GenFunTerm t2 = cone_term(K2);
    CHECK(t1.numerator_exponents.size() == 2);
    CHECK(t2.numerator_exponents.size() == 2);
    // cross-checked against the brute-force scan of the shifted cones
    CHECK(t1.numerator_exponents == ivs({{1, 0, 1}, {1, 0, 2}}));
    CHECK(t2.numerator_exponents == ivs({{0, 0, 0}, {0, 0, 1}}));

    IntBox box{IntVec{-3, -3, -3}, IntVec{3, 3, 3}};
    for (const auto* K : {&K1, &K2}) {
        auto pts = enumerate_halfopen_cone_in_box(*K, box);
        const auto& nums =
            (K == &K1) ? t1.numerator_exponents : t2.numerator_exponents;
        for (const auto& p : nums)
            CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
    }
}

TEST_CASE("add concatenates terms and checks dimensions") {
    GenFun F = interval_sum();
    GenFun empty(1);
    CHECK(add(F, empty).terms.size() == 2);
    GenFun wrong(2);
    CHECK_THROWS_AS(add(F, wrong), DimensionMismatch);
}

TEST_CASE("specialization collapses the interval rays to five points") {
    GenFun F = interval_sum();
    CHECK(specialize_count(F) == 5);
    SpecializeResult r = specialize_report(F);
    for (const auto& c : r.negative_orders)
        CHECK(c == 0);
}

TEST_CASE("a lone cone term is not a polynomial") {
    GenFun F(2);
    F.terms.push_back(cone_term(cone_at({0, 0}, {{1, 0}, {0, 1}})));
    CHECK_THROWS_AS(specialize_count(F), NotPolynomial);
}

TEST_CASE("specialization is direction invariant and linear") {
    GenFun F = interval_sum();
    for (long m : {2, 3, 5, 7})
        CHECK(specialize_count_with_direction(F, IntVec{m}) == 5);

    GenFun G(1);
    G.terms.push_back(cone_term(cone_at({7}, {{1}})));
    G.terms.push_back(cone_term(cone_at({9}, {{-1}})));
    CHECK(specialize_count(G) == 3);
    CHECK(specialize_count(add(F, G)) == 8);
}

TEST_CASE("signed points in a box for the interval rays") {
    GenFun F = interval_sum();
    auto pts = signed_points_in_box(F, IntBox{IntVec{-3}, IntVec{9}});
    std::map<IntVec, long long> expected;
    for (long k = 1; k <= 5; ++k)
        expected[IntVec{k}] = 1;
    CHECK(pts == expected);
}

TEST_CASE("signed points of a single closed quadrant term") {
    GenFun F(2);
    F.terms.push_back(cone_term(cone_at({0, 0}, {{1, 0}, {0, 1}})));
    auto pts = signed_points_in_box(F, IntBox{IntVec{0, 0}, IntVec{2, 2}});
    CHECK(pts.size() == 9);
    for (const auto& [p, m] : pts)
        CHECK(m == 1);
}

TEST_CASE("signed points require source cones") {
    GenFun F(1);
    GenFunTerm t;
    t.sign = 1;
    t.numerator_exponents = ivs({{0}});
    t.denominator_exponents = ivs({{1}});
    F.terms.push_back(t);
    CHECK_THROWS_AS(signed_points_in_box(F, IntBox{IntVec{0}, IntVec{3}}), MissingSourceCone);
}

TEST_CASE("genfun text rendering") {
    GenFun F(2);
    F.terms.push_back(cone_term(cone_at({0, 0}, {{0, 1}, {1, 0}})));
    GenFunTerm t = cone_term(cone_at({0, 2}, {{1, 0}, {0, -1}}));
    t.sign = -1;
    F.terms.push_back(t);
    CHECK(render_genfun(F) == "+; (0,0); (0,1) (1,0)\n-; (0,2); (1,0) (0,-1)\n");
}
