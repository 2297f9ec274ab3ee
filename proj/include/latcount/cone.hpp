#pragma once

/**
 * Simplicial cone machinery: fundamental parallelepiped enumeration, dual
 * cones, triangulation of general pointed cones, and the irrational-shift
 * search that makes decompositions disjoint on the lattice.
 *
 * Conventions used throughout:
 *   - a cone is { apex + sum lambda_i g_i } with lambda_i >= 0 for closed
 *     generators and lambda_i > 0 for open ones;
 *   - G denotes the d x d matrix whose COLUMNS are the generators, so the
 *     generator coordinates of a point x are lambda = G^{-1} (x - apex);
 *   - row i of G^{-1}, made primitive, is the inward normal of the facet
 *     spanned by the generators other than g_i.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "latcount/errors.hpp"
#include "latcount/matrix.hpp"
#include "latcount/rational.hpp"

namespace latcount {

struct SimplicialCone {
    RatVec apex;
    std::vector<IntVec> generators; // d linearly independent primitive vectors
    std::vector<bool> open_flags;   // per generator; true = strict direction

    std::size_t dim() const { return apex.size(); }
};

/// Cone at a polytope vertex spanned by its edge directions; not necessarily simplicial.
struct VertexCone {
    RatVec apex;
    std::vector<IntVec> generators;

    std::size_t dim() const { return apex.size(); }
};

inline SimplicialCone make_simplicial_cone(RatVec apex, std::vector<IntVec> generators,
                                           std::vector<bool> open_flags = {}) {
    std::size_t d = apex.size();
    if (generators.size() != d)
        throw DegenerateInput("simplicial cone needs exactly d generators");
    for (auto& g : generators) {
        if (g.size() != d)
            throw DimensionMismatch("generator dimension mismatch");
        g = primitive(std::move(g));
    }
    if (open_flags.empty())
        open_flags.assign(d, false);
    if (open_flags.size() != d)
        throw DimensionMismatch("open_flags size mismatch");
    SimplicialCone K{std::move(apex), std::move(generators), std::move(open_flags)};
    if (det(columns_matrix(K.generators)) == 0)
        throw DegenerateInput("simplicial cone generators are linearly dependent");
    return K;
}

inline RatMatrix generator_matrix(const SimplicialCone& K) { return columns_matrix(K.generators); }

/// Index of the cone: |det| of its generator matrix; 1 means unimodular.
inline Int cone_index(const SimplicialCone& K) {
    Rat d = det(generator_matrix(K));
    if (!is_integer(d))
        throw InternalError("cone_index: non-integer determinant");
    return abs_int(rat_num(d));
}

inline SimplicialCone translated(SimplicialCone K, const RatVec& shift) {
    K.apex = vec_add(K.apex, shift);
    return K;
}

/// Inward facet normals; entry i is orthogonal to every generator except g_i.
inline std::vector<IntVec> facet_normals(const SimplicialCone& K) {
    RatMatrix inv = inverse(generator_matrix(K));
    std::vector<IntVec> normals;
    normals.reserve(K.dim());
    for (std::size_t i = 0; i < K.dim(); ++i)
        normals.push_back(primitive_direction(inv.row(i)));
    return normals;
}

/**
 * Polar cone {x : <x,y> <= 0 for all y in K} of a full-dimensional closed
 * simplicial cone with apex at the origin.  Generators are the primitivized
 * negated rows of G^{-1}; applying the operation twice returns the original
 * generator set.
 */
inline SimplicialCone dual_cone(const SimplicialCone& K) {
    for (const auto& c : K.apex)
        if (c != 0)
            throw DegenerateInput("dual_cone: apex must be the origin");
    RatMatrix inv = inverse(generator_matrix(K)); // throws SingularMatrix
    std::vector<IntVec> gens;
    gens.reserve(K.dim());
    for (std::size_t i = 0; i < K.dim(); ++i) {
        RatVec r = inv.row(i);
        for (auto& x : r)
            x = -x;
        gens.push_back(primitive_direction(r));
    }
    return make_simplicial_cone(K.apex, std::move(gens));
}

/**
 * Lattice points of the half-open fundamental parallelepiped
 * { apex + sum lambda_i g_i } with lambda_i in [0,1) (closed) or (0,1] (open).
 *
 * Enumeration goes through the Smith normal form of G: the cosets of
 * Z^d / G Z^d are enumerated exactly, and each representative is translated
 * into the parallelepiped by integer multiples of the generators.  The cost is
 * proportional to the index, not to the volume of a bounding box.
 */
inline std::vector<IntVec> parallelepiped_points(const SimplicialCone& K) {
    std::size_t d = K.dim();
    IntMat G(d, IntVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            G[i][j] = K.generators[j][i];

    SmithNormalForm s = snf(G);
    RatMatrix Uinv = inverse(to_rat_matrix(s.U));
    RatMatrix Ginv = inverse(to_rat_matrix(G));

    Int index = 1;
    for (std::size_t i = 0; i < d; ++i)
        index *= s.D[i][i];

    std::vector<IntVec> points;
    points.reserve(static_cast<std::size_t>(index));

    IntVec rep(d, 0);
    while (true) {
        // rho = U^{-1} rep is one representative of each coset
        RatVec rho_r = mat_vec(Uinv, to_rat(rep));
        IntVec rho(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!is_integer(rho_r[i]))
                throw InternalError("parallelepiped_points: non-integer coset representative");
            rho[i] = rat_num(rho_r[i]);
        }
        RatVec lam0 = mat_vec(Ginv, vec_sub(to_rat(rho), K.apex));
        IntVec mu(d);
        for (std::size_t i = 0; i < d; ++i)
            mu[i] = K.open_flags[i] ? 1 - ceil_rat(lam0[i]) : -floor_rat(lam0[i]);
        IntVec p = rho;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                p[i] += G[i][j] * mu[j];
        points.push_back(std::move(p));

        std::size_t i = d;
        bool done = true;
        while (i-- > 0) {
            if (rep[i] + 1 < s.D[i][i]) {
                ++rep[i];
                for (std::size_t j = i + 1; j < d; ++j)
                    rep[j] = 0;
                done = false;
                break;
            }
        }
        if (done)
            break;
    }

    if (Int(points.size()) != index)
        throw InternalError("parallelepiped_points: count does not match index");
    std::sort(points.begin(), points.end());
    return points;
}

namespace detail {

/// Throws NotPointed when some nontrivial nonnegative combination of the rays vanishes.
inline void check_pointed(const std::vector<IntVec>& rays, std::size_t d) {
    std::size_t m = rays.size();
    std::size_t kmax = std::min(m, d + 1);
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == 0) {
            RatMatrix M(d, idx.size());
            for (std::size_t j = 0; j < idx.size(); ++j)
                for (std::size_t i = 0; i < d; ++i)
                    M.at(i, j) = Rat(rays[idx[j]][i]);
            if (rank(M) != idx.size() - 1)
                return; // kernel not one-dimensional; smaller circuits cover it
            RatVec k1 = kernel_vector(M);
            bool nonneg = true, nonpos = true;
            for (const auto& c : k1) {
                if (c < 0)
                    nonneg = false;
                if (c > 0)
                    nonpos = false;
            }
            if (nonneg || nonpos)
                throw NotPointed("generators do not span a pointed cone");
            return;
        }
        for (std::size_t i = start; i + k <= m; ++i) {
            idx.push_back(i);
            rec(i + 1, k - 1);
            idx.pop_back();
        }
    };
    for (std::size_t k = 2; k <= kmax; ++k)
        rec(0, k);
}

/// Primitive normal of the hyperplane spanned by the given rays (rank must be d-1).
inline IntVec span_normal(const std::vector<IntVec>& rays) {
    std::vector<RatVec> rows;
    rows.reserve(rays.size());
    for (const auto& r : rays)
        rows.push_back(to_rat(r));
    return primitive_direction(kernel_vector(RatMatrix::from_rows(std::move(rows))));
}

} // namespace detail

/**
 * Triangulation of a pointed full-dimensional cone into simplicial cones that
 * use only the cone's own rays and have pairwise disjoint interiors.
 *
 * Placing construction: the rays are sorted lexicographically and inserted one
 * by one, coning each new ray over the simplicial boundary facets it sees.
 */
inline std::vector<SimplicialCone> triangulate(const VertexCone& K) {
    std::size_t d = K.dim();
    std::vector<IntVec> rays;
    for (const auto& g : K.generators)
        rays.push_back(primitive(g));
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    if (rays.size() < d)
        throw DegenerateInput("triangulate: cone is not full-dimensional");
    detail::check_pointed(rays, d);

    auto cone_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> gens;
        for (auto i : idx)
            gens.push_back(rays[i]);
        return make_simplicial_cone(K.apex, std::move(gens));
    };

    if (rays.size() == d)
        return {cone_of([&] {
            std::vector<std::size_t> all(d);
            for (std::size_t i = 0; i < d; ++i)
                all[i] = i;
            return all;
        }())};

    // greedy initial simplex: first d rays that are linearly independent
    std::vector<std::size_t> simplex;
    std::vector<RatVec> picked;
    std::vector<bool> used(rays.size(), false);
    for (std::size_t i = 0; i < rays.size() && simplex.size() < d; ++i) {
        picked.push_back(to_rat(rays[i]));
        if (rank(RatMatrix::from_rows(picked)) == picked.size()) {
            simplex.push_back(i);
            used[i] = true;
        } else {
            picked.pop_back();
        }
    }
    if (simplex.size() < d)
        throw DegenerateInput("triangulate: cone is not full-dimensional");

    struct Facet {
        std::vector<std::size_t> idx; // sorted ray indices, size d-1
        IntVec normal;                // inward for the owning cone
    };

    auto facet_of = [&](std::vector<std::size_t> idx, std::size_t off_ray) {
        std::vector<IntVec> fr;
        for (auto i : idx)
            fr.push_back(rays[i]);
        IntVec n = detail::span_normal(fr);
        Int side = dot(n, rays[off_ray]);
        if (side == 0)
            throw InternalError("triangulate: degenerate facet orientation");
        if (side < 0)
            n = vec_neg(std::move(n));
        return Facet{std::move(idx), std::move(n)};
    };

    std::vector<std::vector<std::size_t>> cones{simplex};
    std::vector<Facet> boundary;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::size_t> f;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i)
                f.push_back(simplex[j]);
        boundary.push_back(facet_of(std::move(f), simplex[i]));
    }

    for (std::size_t gi = 0; gi < rays.size(); ++gi) {
        if (used[gi])
            continue;
        const IntVec& g = rays[gi];
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < boundary.size(); ++f)
            if (dot(boundary[f].normal, g) < 0)
                visible.push_back(f);
        if (visible.empty())
            continue; // ray already inside the current cone

        // walls of the new cones: (facet minus one ray) plus g; a wall shared
        // by two visible facets becomes interior, a wall seen once is boundary
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> walls;
        for (auto f : visible) {
            std::vector<std::size_t> nc = boundary[f].idx;
            nc.push_back(gi);
            std::sort(nc.begin(), nc.end());
            cones.push_back(std::move(nc));
            for (std::size_t drop = 0; drop < boundary[f].idx.size(); ++drop) {
                std::vector<std::size_t> w;
                for (std::size_t j = 0; j < boundary[f].idx.size(); ++j)
                    if (j != drop)
                        w.push_back(boundary[f].idx[j]);
                w.push_back(gi);
                std::sort(w.begin(), w.end());
                auto it = walls.find(w);
                if (it == walls.end())
                    walls.emplace(std::move(w), std::make_pair(1, boundary[f].idx[drop]));
                else
                    it->second.first += 1;
            }
        }
        std::vector<Facet> next;
        for (std::size_t f = 0; f < boundary.size(); ++f)
            if (std::find(visible.begin(), visible.end(), f) == visible.end())
                next.push_back(std::move(boundary[f]));
        for (auto& [w, info] : walls)
            if (info.first == 1)
                next.push_back(facet_of(w, info.second));
        boundary = std::move(next);
    }

    std::vector<SimplicialCone> result;
    result.reserve(cones.size());
    for (const auto& idx : cones)
        result.push_back(cone_of(idx));
    return result;
}

/**
 * Exact validity test for a decomposition shift s at apex v:
 *  (i)  no hyperplane { n.x = n.(v+s) }, n in avoid_normals, contains a
 *       lattice point (n primitive integer, so this means the offset is
 *       non-integral);
 *  (ii) for every inward facet normal m in preserve_normals,
 *       ceil(m.(v+s)) = ceil(m.v), so the shifted cone keeps exactly the
 *       lattice points of the original.
 */
inline bool validate_shift(const RatVec& apex, const RatVec& s,
                           const std::vector<IntVec>& avoid_normals,
                           const std::vector<IntVec>& preserve_normals) {
    RatVec a = vec_add(apex, s);
    for (const auto& n : avoid_normals)
        if (is_integer(dot(n, a)))
            return false;
    for (const auto& m : preserve_normals)
        if (ceil_rat(dot(m, a)) != ceil_rat(dot(m, apex)))
            return false;
    return true;
}

namespace detail {

/**
 * Deterministic shift search: s = -y / 2^j where y = sum tau^i g_i is an
 * interior direction chosen so no avoided normal is orthogonal to it, and j
 * grows until the validator accepts.  Terminates: every condition excludes
 * finitely many j once y is fixed.
 */
inline RatVec find_shift(const RatVec& apex, const std::vector<IntVec>& avoid_normals,
                         const std::vector<IntVec>& preserve_normals,
                         const std::vector<IntVec>& interior_gens) {
    std::size_t d = apex.size();
    if (avoid_normals.empty() && validate_shift(apex, RatVec(d, Rat(0)), avoid_normals, preserve_normals))
        return RatVec(d, Rat(0));

    IntVec y;
    for (Int tau = 1; tau < 100000; ++tau) {
        IntVec cand(d, 0);
        Int w = 1;
        for (const auto& g : interior_gens) {
            for (std::size_t i = 0; i < d; ++i)
                cand[i] += w * g[i];
            w *= tau;
        }
        bool ok = true;
        for (const auto& n : avoid_normals)
            if (dot(n, cand) == 0) {
                ok = false;
                break;
            }
        for (const auto& m : preserve_normals)
            if (dot(m, cand) <= 0) {
                ok = false;
                break;
            }
        if (ok) {
            y = std::move(cand);
            break;
        }
    }
    if (y.empty())
        throw InternalError("find_shift: no interior direction found");

    Int denom = 2;
    for (int j = 0; j < 512; ++j, denom *= 2) {
        RatVec s(d);
        for (std::size_t i = 0; i < d; ++i)
            s[i] = Rat(-y[i], denom);
        if (validate_shift(apex, s, avoid_normals, preserve_normals))
            return s;
    }
    throw InternalError("find_shift: search did not terminate");
}

inline void insert_normal(std::set<IntVec>& out, IntVec n) {
    // orientation-insensitive use sites canonicalize to first nonzero > 0
    for (const auto& x : n) {
        if (x > 0)
            break;
        if (x < 0) {
            n = vec_neg(std::move(n));
            break;
        }
    }
    out.insert(std::move(n));
}

} // namespace detail

/**
 * Facet normals of the union cone of a simplicial decomposition sharing one
 * apex: a subcone facet normal supports the union iff all generators of all
 * subcones lie on its nonnegative side.
 */
inline std::vector<IntVec> union_facet_normals(const std::vector<SimplicialCone>& cones) {
    std::vector<IntVec> result;
    std::set<IntVec> seen;
    for (const auto& K : cones)
        for (auto& n : facet_normals(K)) {
            bool supports = true;
            for (const auto& C : cones) {
                for (const auto& g : C.generators)
                    if (dot(n, g) < 0) {
                        supports = false;
                        break;
                    }
                if (!supports)
                    break;
            }
            if (supports && seen.insert(n).second)
                result.push_back(n);
        }
    return result;
}

/**
 * A rational shift s for a simplicial decomposition of a vertex cone, such
 * that no facet of any shifted subcone contains a lattice point while the
 * union keeps exactly its original lattice points.  The returned shift always
 * passes validate_shift; any externally supplied shift can be checked with
 * shift_is_valid.
 */
inline RatVec irrational_shift(const std::vector<SimplicialCone>& cones) {
    if (cones.empty())
        throw DegenerateInput("irrational_shift: no cones");
    const RatVec& apex = cones.front().apex;
    for (const auto& K : cones)
        if (K.apex != apex)
            throw DegenerateInput("irrational_shift: cones do not share an apex");

    std::set<IntVec> avoid_set;
    for (const auto& K : cones)
        for (auto& n : facet_normals(K))
            detail::insert_normal(avoid_set, std::move(n));
    std::vector<IntVec> avoid(avoid_set.begin(), avoid_set.end());
    std::vector<IntVec> preserve = union_facet_normals(cones);
    return detail::find_shift(apex, avoid, preserve, cones.front().generators);
}

/// Check an externally chosen shift against the same conditions irrational_shift enforces.
inline bool shift_is_valid(const std::vector<SimplicialCone>& cones, const RatVec& s) {
    if (cones.empty())
        throw DegenerateInput("shift_is_valid: no cones");
    const RatVec& apex = cones.front().apex;
    std::set<IntVec> avoid_set;
    for (const auto& K : cones)
        for (auto& n : facet_normals(K))
            detail::insert_normal(avoid_set, std::move(n));
    std::vector<IntVec> avoid(avoid_set.begin(), avoid_set.end());
    return validate_shift(apex, s, avoid, union_facet_normals(cones));
}

} // namespace latcount
