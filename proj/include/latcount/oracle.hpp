#pragma once

// Brute-force ground truth: every other module is tested against these scans.

#include <algorithm>
#include <vector>

#include "latcount/box.hpp"
#include "latcount/cone.hpp"
#include "latcount/matrix.hpp"
#include "latcount/polytope.hpp"

namespace latcount {

/// Integer bounding box of the vertex hull, padded on both sides.
inline IntBox bounding_box(const Polytope& P, const Int& pad = 1) {
    std::size_t d = static_cast<std::size_t>(P.dim);
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rat mn = P.vertices.front()[i], mx = mn;
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = floor_rat(mn) - pad;
        hi[i] = ceil_rat(mx) + pad;
    }
    return IntBox{std::move(lo), std::move(hi)};
}

/// All lattice points of the polytope, in lexicographic order.
inline std::vector<IntVec> enumerate_polytope(const Polytope& P) {
    IntBox box = bounding_box(P, 0);
    std::vector<IntVec> out;
    for_each_point(box, [&](const IntVec& p) {
        RatVec x = to_rat(p);
        for (const auto& h : P.halfspaces)
            if (h.offset + dot(h.normal, x) < 0)
                return;
        out.push_back(p);
    });
    return out;
}

/// Exact membership test for a (possibly half-open) simplicial cone.
inline bool in_cone(const SimplicialCone& K, const RatMatrix& gen_inverse, const IntVec& p) {
    RatVec lambda = mat_vec(gen_inverse, vec_sub(to_rat(p), K.apex));
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0)
            return false;
        if (K.open_flags[i] && lambda[i] == 0)
            return false;
    }
    return true;
}

inline bool in_cone(const SimplicialCone& K, const IntVec& p) {
    return in_cone(K, inverse(generator_matrix(K)), p);
}

/// Lattice points of the cone inside the box, in lexicographic order.
inline std::vector<IntVec> enumerate_halfopen_cone_in_box(const SimplicialCone& K, const IntBox& box) {
    RatMatrix inv = inverse(generator_matrix(K));
    std::vector<IntVec> out;
    for_each_point(box, [&](const IntVec& p) {
        if (in_cone(K, inv, p))
            out.push_back(p);
    });
    return out;
}

} // namespace latcount
