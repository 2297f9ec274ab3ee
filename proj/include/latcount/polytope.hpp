#pragma once

/**
 * Polytope data model with synchronized H- and V-representations.
 *
 * Conversions use brute force over constraint/point subsets, which is exact
 * and entirely adequate at desk scale (d <= ~4, a few dozen facets); nothing
 * here aims at large instances.
 */

#include <algorithm>
#include <set>
#include <vector>

#include "latcount/cone.hpp"
#include "latcount/errors.hpp"
#include "latcount/matrix.hpp"
#include "latcount/rational.hpp"

namespace latcount {

/// Closed halfspace  offset + normal.x >= 0  with primitive integer normal.
struct HalfSpace {
    Rat offset;
    IntVec normal;
};

struct Polytope {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;
    std::vector<RatVec> vertices;
    std::vector<std::vector<int>> vertex_active; // all tight halfspace indices per vertex
};

namespace detail {

inline HalfSpace normalize_halfspace(const RatVec& row) {
    // row = (c, a_1, ..., a_d)
    std::size_t d = row.size() - 1;
    RatVec a(row.begin() + 1, row.end());
    bool zero = true;
    for (const auto& x : a)
        if (x != 0)
            zero = false;
    if (zero)
        throw DegenerateInput("halfspace has zero normal");
    Int m = 1;
    for (const auto& q : a)
        m = lcm_int(m, rat_den(q));
    IntVec n(d);
    for (std::size_t i = 0; i < d; ++i)
        n[i] = rat_num(a[i]) * (m / rat_den(a[i]));
    Int g = vec_gcd(n);
    for (auto& x : n)
        x /= g;
    Rat c = row[0] * Rat(m, g);
    return HalfSpace{std::move(c), std::move(n)};
}

inline bool satisfies(const HalfSpace& h, const RatVec& x) {
    return h.offset + dot(h.normal, x) >= 0;
}

inline bool tight(const HalfSpace& h, const RatVec& x) {
    return h.offset + dot(h.normal, x) == 0;
}

inline void fill_vertex_active(Polytope& P) {
    P.vertex_active.clear();
    for (const auto& v : P.vertices) {
        std::vector<int> act;
        for (std::size_t h = 0; h < P.halfspaces.size(); ++h) {
            if (!satisfies(P.halfspaces[h], v))
                throw InternalError("polytope vertex violates a halfspace");
            if (tight(P.halfspaces[h], v))
                act.push_back(static_cast<int>(h));
        }
        P.vertex_active.push_back(std::move(act));
    }
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn fn) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + 1 <= n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
        if (k == 0)
            return;
    }
}

} // namespace detail

/**
 * Build a polytope from halfspace rows (c, a_1, ..., a_d).  Vertices come from
 * all d-subsets of tight constraints, filtered by feasibility; boundedness is
 * verified by showing the recession cone has no ray.
 */
inline Polytope from_hrep(int dim, const std::vector<RatVec>& rows) {
    if (dim < 1)
        throw DegenerateInput("from_hrep: dimension must be at least 1");
    std::size_t d = static_cast<std::size_t>(dim);
    Polytope P;
    P.dim = dim;
    for (const auto& row : rows) {
        if (row.size() != d + 1)
            throw DegenerateInput("from_hrep: row must have d+1 entries");
        HalfSpace h = detail::normalize_halfspace(row);
        bool dup = false;
        for (const auto& e : P.halfspaces)
            if (e.normal == h.normal && e.offset == h.offset)
                dup = true;
        if (!dup)
            P.halfspaces.push_back(std::move(h));
    }
    std::size_t m = P.halfspaces.size();

    {
        std::vector<RatVec> nrows;
        for (const auto& h : P.halfspaces)
            nrows.push_back(to_rat(h.normal));
        if (nrows.empty() || rank(RatMatrix::from_rows(nrows)) < d)
            throw DegenerateInput("from_hrep: halfspace normals do not span");
    }

    // recession cone {y : a.y >= 0 for all rows} is pointed here (normals span),
    // so unboundedness shows up as an extreme ray on d-1 tight normals
    detail::for_each_subset(m, d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> sub;
        for (auto i : idx)
            sub.push_back(to_rat(P.halfspaces[i].normal));
        RatMatrix M = RatMatrix::from_rows(sub.empty() ? std::vector<RatVec>{RatVec(d, Rat(0))} : sub);
        if (rank(M) != d - 1)
            return;
        RatVec ray = kernel_vector(M);
        for (int s = 0; s < 2; ++s) {
            bool feasible = true;
            for (const auto& h : P.halfspaces)
                if (dot(to_rat(h.normal), ray) < 0) {
                    feasible = false;
                    break;
                }
            if (feasible)
                throw Unbounded("from_hrep: polyhedron has an unbounded direction");
            for (auto& x : ray)
                x = -x;
        }
    });

    std::set<RatVec> seen;
    detail::for_each_subset(m, d, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> sub;
        RatVec rhs;
        for (auto i : idx) {
            sub.push_back(to_rat(P.halfspaces[i].normal));
            rhs.push_back(-P.halfspaces[i].offset);
        }
        RatMatrix M = RatMatrix::from_rows(sub);
        if (rank(M) != d)
            return;
        RatVec x = solve(M, rhs);
        for (const auto& h : P.halfspaces)
            if (!detail::satisfies(h, x))
                return;
        if (seen.insert(x).second)
            P.vertices.push_back(std::move(x));
    });
    if (P.vertices.empty())
        throw EmptyPolytope("from_hrep: no feasible vertex");
    std::sort(P.vertices.begin(), P.vertices.end());
    detail::fill_vertex_active(P);
    return P;
}

/**
 * Build a polytope from points: facets are found by brute force over
 * d-subsets spanning a hyperplane with all points on one side, then points
 * that are not vertices of the hull are dropped (input order is kept).
 */
inline Polytope from_vrep(int dim, const std::vector<RatVec>& input_points) {
    if (dim < 1)
        throw DegenerateInput("from_vrep: dimension must be at least 1");
    std::size_t d = static_cast<std::size_t>(dim);
    std::vector<RatVec> pts;
    for (const auto& p : input_points) {
        if (p.size() != d)
            throw DegenerateInput("from_vrep: point has wrong dimension");
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(p);
    }
    {
        std::vector<RatVec> diffs;
        for (std::size_t i = 1; i < pts.size(); ++i)
            diffs.push_back(vec_sub(pts[i], pts[0]));
        if (diffs.empty() || rank(RatMatrix::from_rows(diffs)) < d)
            throw DegenerateInput("from_vrep: affine hull is lower-dimensional");
    }

    Polytope P;
    P.dim = dim;

    if (d == 1) {
        Rat lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        P.halfspaces.push_back(HalfSpace{-lo, IntVec{1}});
        P.halfspaces.push_back(HalfSpace{hi, IntVec{-1}});
        for (const auto& p : pts)
            if (p[0] == lo || p[0] == hi)
                P.vertices.push_back(p);
        detail::fill_vertex_active(P);
        return P;
    }

    detail::for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> diffs;
        for (std::size_t j = 1; j < d; ++j)
            diffs.push_back(vec_sub(pts[idx[j]], pts[idx[0]]));
        if (rank(RatMatrix::from_rows(diffs)) != d - 1)
            return;
        IntVec n = primitive_direction(kernel_vector(RatMatrix::from_rows(diffs)));
        Rat level = dot(n, pts[idx[0]]);
        bool above = false, below = false;
        for (const auto& p : pts) {
            Rat v = dot(n, p);
            if (v > level)
                above = true;
            else if (v < level)
                below = true;
        }
        if (above && below)
            return;
        if (below)
            n = vec_neg(std::move(n)); // orient inward so every point satisfies n.x >= n.p0
        HalfSpace h{-dot(n, pts[idx[0]]), std::move(n)};
        for (const auto& e : P.halfspaces)
            if (e.normal == h.normal && e.offset == h.offset)
                return;
        P.halfspaces.push_back(std::move(h));
    });

    // a point is a hull vertex iff its tight facet normals span R^d
    for (const auto& p : pts) {
        std::vector<RatVec> tight_normals;
        for (const auto& h : P.halfspaces) {
            if (!detail::satisfies(h, p))
                throw InternalError("from_vrep: point outside computed hull");
            if (detail::tight(h, p))
                tight_normals.push_back(to_rat(h.normal));
        }
        if (!tight_normals.empty() && rank(RatMatrix::from_rows(tight_normals)) == d)
            P.vertices.push_back(p);
    }
    if (P.vertices.size() < d + 1)
        throw DegenerateInput("from_vrep: too few hull vertices");
    detail::fill_vertex_active(P);
    return P;
}

/**
 * Tangent cone generators at a vertex: extreme rays of the cone cut out by the
 * tight halfspaces, found on (d-1)-subsets of tight normals.
 */
inline VertexCone vertex_cone(const Polytope& P, int vertex_index) {
    if (vertex_index < 0 || static_cast<std::size_t>(vertex_index) >= P.vertices.size())
        throw DegenerateInput("vertex_cone: bad vertex index");
    std::size_t d = static_cast<std::size_t>(P.dim);
    const auto& act = P.vertex_active[static_cast<std::size_t>(vertex_index)];
    std::vector<IntVec> tight;
    for (int h : act)
        tight.push_back(P.halfspaces[static_cast<std::size_t>(h)].normal);

    std::set<IntVec> gens;
    detail::for_each_subset(tight.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        RatVec ray;
        if (d == 1) {
            ray = RatVec{Rat(1)};
        } else {
            std::vector<RatVec> sub;
            for (auto i : idx)
                sub.push_back(to_rat(tight[i]));
            if (rank(RatMatrix::from_rows(sub)) != d - 1)
                return;
            ray = kernel_vector(RatMatrix::from_rows(sub));
        }
        for (int s = 0; s < 2; ++s) {
            bool ok = true;
            for (const auto& n : tight)
                if (dot(to_rat(n), ray) < 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                gens.insert(primitive_direction(ray));
                break;
            }
            for (auto& x : ray)
                x = -x;
        }
    });

    VertexCone K;
    K.apex = P.vertices[static_cast<std::size_t>(vertex_index)];
    K.generators.assign(gens.begin(), gens.end());
    return K;
}

/// Scale by a positive rational: vertices and offsets scale, normals do not.
inline Polytope dilate(const Polytope& P, const Rat& t) {
    if (t <= 0)
        throw DegenerateInput("dilate: factor must be positive");
    Polytope Q = P;
    for (auto& h : Q.halfspaces)
        h.offset *= t;
    for (auto& v : Q.vertices)
        v = vec_scale(t, v);
    return Q;
}

/// True iff every vertex meets exactly d edges.
inline bool is_simple(const Polytope& P) {
    for (std::size_t v = 0; v < P.vertices.size(); ++v)
        if (vertex_cone(P, static_cast<int>(v)).generators.size() != static_cast<std::size_t>(P.dim))
            return false;
    return true;
}

} // namespace latcount
