#pragma once

/**
 * Top-level counting and Ehrhart data.  Counts go through the vertex-cone
 * expansions and exact specialization; the quasipolynomial is interpolated per
 * residue class modulo the lcm of the vertex denominators (an upper bound on
 * the true period) and re-verified at two extra dilates.
 */

#include <optional>
#include <vector>

#include "latcount/barvinok.hpp"
#include "latcount/brion_lv.hpp"
#include "latcount/errors.hpp"
#include "latcount/genfun.hpp"
#include "latcount/polytope.hpp"

namespace latcount {

enum class CountMethod { brion, lv, barvinok_brion };

/// Brion assembly with every shifted simplicial term replaced by its
/// unimodular decomposition.
inline GenFun brion_barvinok(const Polytope& P) {
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
            F = add(std::move(F), cone_genfun_barvinok(translated(T, s)));
    }
    return F;
}

inline Int count(const Polytope& P, CountMethod method,
                 const std::optional<Direction>& dir = std::nullopt) {
    switch (method) {
    case CountMethod::brion:
        return specialize_count(brion(P));
    case CountMethod::lv:
        return specialize_count(lawrence_varchenko(P, dir ? *dir : auto_direction(P)));
    case CountMethod::barvinok_brion:
        return specialize_count(brion_barvinok(P));
    }
    throw InternalError("count: unknown method");
}

inline std::vector<Int> ehrhart_values(const Polytope& P, int tmax,
                                       CountMethod method = CountMethod::brion) {
    if (tmax < 1)
        throw DegenerateInput("ehrhart_values: need tmax >= 1");
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(tmax));
    for (int t = 1; t <= tmax; ++t)
        values.push_back(count(dilate(P, Rat(t)), method));
    return values;
}

/// L(t) = components[t mod period](t); component polynomials have degree <= dim.
struct QuasiPolynomial {
    long period = 1;
    std::vector<RatVec> components; // coefficient c_k of t^k, ascending
};

inline Rat evaluate_poly(const RatVec& coeffs, const Rat& t) {
    Rat v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        v = v * t + coeffs[k];
    return v;
}

inline Int evaluate(const QuasiPolynomial& qp, const Int& t) {
    long r = static_cast<long>(t % qp.period);
    if (r < 0)
        r += qp.period;
    Rat v = evaluate_poly(qp.components[static_cast<std::size_t>(r)], Rat(t));
    if (!is_integer(v))
        throw InternalError("quasipolynomial evaluates to a non-integer");
    return rat_num(v);
}

namespace detail {

/// Exact polynomial interpolation through (t_i, y_i), degree <= points-1.
inline RatVec interpolate_poly(const std::vector<Rat>& ts, const std::vector<Rat>& ys) {
    std::size_t n = ts.size();
    RatMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat p = 1;
        for (std::size_t j = 0; j < n; ++j) {
            M.at(i, j) = p;
            p *= ts[i];
        }
    }
    return solve(M, ys);
}

} // namespace detail

/**
 * Ehrhart quasipolynomial of a bounded rational polytope.  The period is the
 * lcm of all vertex coordinate denominators; each residue class is
 * interpolated through dim+1 dilates and verified at the next two.
 */
inline QuasiPolynomial ehrhart_quasipolynomial(const Polytope& P,
                                               CountMethod method = CountMethod::brion) {
    std::size_t d = static_cast<std::size_t>(P.dim);
    Int q = 1;
    for (const auto& v : P.vertices)
        for (const auto& c : v)
            q = lcm_int(q, rat_den(c));
    long period = static_cast<long>(q);

    QuasiPolynomial qp;
    qp.period = period;
    qp.components.resize(static_cast<std::size_t>(period));
    for (long r = 0; r < period; ++r) {
        std::vector<Rat> ts, ys;
        long t0 = (r == 0) ? period : r;
        for (std::size_t k = 0; k <= d; ++k) {
            long t = t0 + static_cast<long>(k) * period;
            ts.push_back(Rat(t));
            ys.push_back(Rat(count(dilate(P, Rat(t)), method)));
        }
        RatVec coeffs = detail::interpolate_poly(ts, ys);
        // verification points beyond the interpolation window
        for (std::size_t k = d + 1; k <= d + 2; ++k) {
            long t = t0 + static_cast<long>(k) * period;
            Int expected = count(dilate(P, Rat(t)), method);
            if (evaluate_poly(coeffs, Rat(t)) != Rat(expected))
                throw InternalError("ehrhart_quasipolynomial: verification dilate mismatch");
        }
        qp.components[static_cast<std::size_t>(r)] = std::move(coeffs);
    }
    return qp;
}

} // namespace latcount
