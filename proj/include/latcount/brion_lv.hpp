#pragma once

/**
 * Assembly of the two vertex-cone expansions of a polytope:
 *
 *  - brion: one (shifted) closed simplicial term per triangulated vertex
 *    cone, all with sign +1.  The shared irrational shift per vertex makes the
 *    subcone lattice points disjoint, so the terms add up to the polytope's
 *    generating function with no inclusion-exclusion.
 *
 *  - lawrence_varchenko: per vertex of a simple polytope, the forward
 *    half-open cone for a generic direction, with sign (-1)^{number of edge
 *    directions pointing against the direction}.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcount/errors.hpp"
#include "latcount/genfun.hpp"
#include "latcount/oracle.hpp"
#include "latcount/polytope.hpp"

namespace latcount {

struct Direction {
    IntVec xi;                       // global direction; may be empty if per_vertex covers all
    std::map<int, IntVec> per_vertex; // vertex index -> direction (generalized form)
};

namespace detail {

inline const IntVec& effective_xi(const Direction& dir, int vertex) {
    auto it = dir.per_vertex.find(vertex);
    if (it != dir.per_vertex.end())
        return it->second;
    if (dir.xi.empty())
        throw DegenerateDirection("no direction given for vertex " + std::to_string(vertex));
    return dir.xi;
}

} // namespace detail

inline GenFun brion(const Polytope& P) {
    GenFun F(P.dim);
    for (std::size_t v = 0; v < P.vertices.size(); ++v) {
        VertexCone K = vertex_cone(P, static_cast<int>(v));
        std::vector<SimplicialCone> tris;
        if (K.generators.size() == static_cast<std::size_t>(P.dim))
            tris.push_back(make_simplicial_cone(K.apex, K.generators));
        else
            tris = triangulate(K);
        RatVec s = irrational_shift(tris);
        for (const auto& T : tris)
            F.terms.push_back(cone_term(translated(T, s)));
    }
    return F;
}

inline GenFun lawrence_varchenko(const Polytope& P, const Direction& dir) {
    if (!is_simple(P))
        throw NotSimple("lawrence_varchenko: polytope is not simple");
    GenFun F(P.dim);
    for (std::size_t v = 0; v < P.vertices.size(); ++v) {
        VertexCone K = vertex_cone(P, static_cast<int>(v));
        const IntVec& xi = detail::effective_xi(dir, static_cast<int>(v));
        if (xi.size() != static_cast<std::size_t>(P.dim))
            throw DegenerateDirection("direction has wrong dimension");
        std::vector<IntVec> gens;
        std::vector<bool> open;
        int negatives = 0;
        for (const auto& w : K.generators) {
            Int side = dot(xi, w);
            if (side == 0)
                throw DegenerateDirection("direction is perpendicular to edge direction " +
                                          format_vec(w) + " at vertex " + std::to_string(v));
            if (side > 0) {
                gens.push_back(w);
                open.push_back(false);
            } else {
                gens.push_back(vec_neg(w)); // R_{<0} w recorded as the open ray along -w
                open.push_back(true);
                ++negatives;
            }
        }
        GenFunTerm t = cone_term(make_simplicial_cone(K.apex, std::move(gens), std::move(open)));
        t.sign = (negatives % 2 == 0) ? 1 : -1;
        F.terms.push_back(std::move(t));
    }
    return F;
}

/// Deterministic direction valid for every edge of every vertex of P.
inline Direction auto_direction(const Polytope& P) {
    std::vector<IntVec> edges;
    for (std::size_t v = 0; v < P.vertices.size(); ++v)
        for (const auto& w : vertex_cone(P, static_cast<int>(v)).generators)
            edges.push_back(w);
    return Direction{pick_direction(edges, P.dim), {}};
}

/**
 * True iff rotating the direction leaves the signed expansion unchanged: the
 * two sums must produce the same signed indicator on a validation box around
 * the polytope and the same specialized count.
 */
inline bool lv_rotation_check(const Polytope& P, const Direction& dir1, const Direction& dir2) {
    GenFun F1 = lawrence_varchenko(P, dir1);
    GenFun F2 = lawrence_varchenko(P, dir2);
    IntBox box = bounding_box(P, 1);
    if (signed_points_in_box(F1, box) != signed_points_in_box(F2, box))
        return false;
    return specialize_count(F1) == specialize_count(F2);
}

} // namespace latcount
