#pragma once

/**
 * Signed decomposition of a simplicial cone into unimodular cones.
 *
 * Recursion step: for a cone with generator matrix G of index n > 1, find a
 * nonzero integer vector z = G a with |a_i| <= n^{-1/d} (it exists by
 * Minkowski's theorem applied to the lattice G^{-1} Z^d; LLL supplies the
 * candidate and an exhaustive search over small coefficient boxes is the
 * correctness backstop).  With z oriented so that some a_i > 0,
 *
 *     [cone(g_1..g_d)]  =  sum over a_i != 0 of  sign(a_i) [cone(.., z@i, ..)]
 *
 * holds away from the hyperplanes spanned by d-1 of the vectors involved, and
 * the replaced cone's index |a_i| n < n, so the recursion reaches index 1.
 *
 * To turn "away from finitely many hyperplanes" into an exact statement about
 * lattice points, the whole recursion is run on the tail cone first, every
 * hyperplane spanned by d-1 of any node's vectors is collected, and one
 * rational shift of the apex is chosen so that none of those hyperplanes
 * contains a lattice point while the input cone keeps exactly its lattice
 * points.  The resulting signed leaves then reproduce the input cone's
 * lattice points pointwise, which is what certificate_check verifies.
 */

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "latcount/box.hpp"
#include "latcount/cone.hpp"
#include "latcount/errors.hpp"
#include "latcount/genfun.hpp"
#include "latcount/matrix.hpp"

namespace latcount {

struct SignedCone {
    int sign = 1;
    SimplicialCone cone;
};

struct DecompNode {
    Int index;
    int depth = 0;
    int parent = -1; // -1 for the root
};

struct DecompositionCert {
    SimplicialCone input;
    std::vector<SignedCone> leaves;
    int max_depth = 0;
    std::vector<DecompNode> nodes; // per-node index trace, parents point into this vector
    RatVec shift;                  // leaves live at input.apex + shift
};

namespace detail {

/// Nonzero z = G a with all |a_i| <= index^{-1/d}; returns (z, a) with some a_i > 0.
inline std::pair<IntVec, RatVec> short_vector(const std::vector<IntVec>& gens, const Int& index) {
    std::size_t d = gens.size();
    RatMatrix G = columns_matrix(gens);
    RatMatrix Ginv = inverse(G);

    // lattice of coefficient vectors a = G^{-1} z, z integer: basis = columns of G^{-1}
    std::vector<RatVec> basis_rows;
    for (std::size_t j = 0; j < d; ++j)
        basis_rows.push_back(Ginv.column(j));
    RatMatrix reduced = lll_reduce(RatMatrix::from_rows(basis_rows));

    auto within_bound = [&](const RatVec& a) {
        bool nonzero = false;
        for (const auto& x : a) {
            if (x != 0)
                nonzero = true;
            Rat ax = x < 0 ? -x : x;
            Rat p = 1;
            for (std::size_t k = 0; k < d; ++k)
                p *= ax;
            if (p * Rat(index) > 1)
                return false;
        }
        return nonzero;
    };

    RatVec alpha;
    for (std::size_t i = 0; i < d; ++i)
        if (within_bound(reduced.row(i)) &&
            (alpha.empty() || dot(reduced.row(i), reduced.row(i)) < dot(alpha, alpha)))
            alpha = reduced.row(i);

    if (alpha.empty()) {
        // exhaustive search over integer combinations of the reduced basis
        for (long cmax = 1; cmax <= 64 && alpha.empty(); ++cmax) {
            std::vector<long> c(d, -cmax);
            while (true) {
                RatVec a(d, Rat(0));
                for (std::size_t i = 0; i < d; ++i)
                    if (c[i] != 0)
                        for (std::size_t j = 0; j < d; ++j)
                            a[j] += Rat(c[i]) * reduced.at(i, j);
                if (within_bound(a)) {
                    alpha = a;
                    break;
                }
                std::size_t i = d;
                bool done = true;
                while (i-- > 0) {
                    if (c[i] < cmax) {
                        ++c[i];
                        for (std::size_t j = i + 1; j < d; ++j)
                            c[j] = -cmax;
                        done = false;
                        break;
                    }
                }
                if (done)
                    break;
            }
        }
        if (alpha.empty())
            throw InternalError("short_vector: no vector within the Minkowski bound");
    }

    RatVec zr = mat_vec(G, alpha);
    IntVec z(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!is_integer(zr[i]))
            throw InternalError("short_vector: non-integer lattice vector");
        z[i] = rat_num(zr[i]);
    }
    z = primitive(std::move(z)); // shrinking z only shrinks the coefficients
    alpha = mat_vec(Ginv, to_rat(z));

    bool has_positive = false;
    for (const auto& x : alpha)
        if (x > 0)
            has_positive = true;
    if (!has_positive) {
        z = vec_neg(std::move(z));
        for (auto& x : alpha)
            x = -x;
    }
    return {std::move(z), std::move(alpha)};
}

inline Int gens_index(const std::vector<IntVec>& gens) {
    Rat d = det(columns_matrix(gens));
    if (!is_integer(d))
        throw InternalError("gens_index: non-integer determinant");
    return abs_int(rat_num(d));
}

} // namespace detail

inline DecompositionCert unimodular_decompose(const SimplicialCone& K) {
    std::size_t d = K.dim();
    for (bool f : K.open_flags)
        if (f)
            throw DegenerateInput("unimodular_decompose: input cone must be closed");
    Int root_index = cone_index(K);
    if (root_index == 0)
        throw SingularMatrix("unimodular_decompose: generators are linearly dependent");

    DecompositionCert cert;
    cert.input = K;

    struct Work {
        std::vector<IntVec> gens;
        int sign;
        int node;
    };
    std::deque<Work> queue;
    cert.nodes.push_back(DecompNode{root_index, 0, -1});
    queue.push_back(Work{K.generators, 1, 0});

    std::set<IntVec> walls;
    std::vector<std::pair<std::vector<IntVec>, int>> leaves_raw;

    while (!queue.empty()) {
        Work w = std::move(queue.front());
        queue.pop_front();
        Int index = cert.nodes[static_cast<std::size_t>(w.node)].index;
        int depth = cert.nodes[static_cast<std::size_t>(w.node)].depth;
        cert.max_depth = std::max(cert.max_depth, depth);

        if (index == 1) {
            leaves_raw.emplace_back(std::move(w.gens), w.sign);
            continue;
        }

        auto [z, alpha] = detail::short_vector(w.gens, index);

        // every hyperplane spanned by d-1 of the d+1 vectors in play
        std::vector<IntVec> vecs = w.gens;
        vecs.push_back(z);
        if (d >= 1) {
            std::vector<std::size_t> idx;
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
                if (k == 0) {
                    std::vector<RatVec> rows;
                    for (auto i : idx)
                        rows.push_back(to_rat(vecs[i]));
                    RatMatrix M = rows.empty()
                                      ? RatMatrix::from_rows({RatVec(d, Rat(0))})
                                      : RatMatrix::from_rows(rows);
                    if (rank(M) == d - 1)
                        detail::insert_normal(walls, primitive_direction(kernel_vector(M)));
                    return;
                }
                for (std::size_t i = start; i + k <= vecs.size(); ++i) {
                    idx.push_back(i);
                    rec(i + 1, k - 1);
                    idx.pop_back();
                }
            };
            rec(0, d - 1);
        }

        for (std::size_t i = 0; i < d; ++i) {
            if (alpha[i] == 0)
                continue;
            std::vector<IntVec> child = w.gens;
            child[i] = z;
            Int child_index = detail::gens_index(child);
            if (child_index >= index)
                throw InternalError("unimodular_decompose: index did not decrease");
            int child_sign = (alpha[i] > 0) ? w.sign : -w.sign;
            cert.nodes.push_back(DecompNode{child_index, depth + 1, w.node});
            queue.push_back(Work{std::move(child), child_sign, static_cast<int>(cert.nodes.size()) - 1});
        }
    }

    if (walls.empty()) {
        cert.shift = RatVec(d, Rat(0));
    } else {
        std::vector<IntVec> avoid(walls.begin(), walls.end());
        cert.shift = detail::find_shift(K.apex, avoid, facet_normals(K), K.generators);
    }

    RatVec apex = vec_add(K.apex, cert.shift);
    for (auto& [gens, sign] : leaves_raw)
        cert.leaves.push_back(SignedCone{sign, make_simplicial_cone(apex, std::move(gens))});
    return cert;
}

/// sigma of a closed simplicial cone through its unimodular decomposition:
/// one numerator exponent per leaf, found by exact ceiling in generator coordinates.
inline GenFun cone_genfun_barvinok(const SimplicialCone& K) {
    DecompositionCert cert = unimodular_decompose(K);
    GenFun F(static_cast<int>(K.dim()));
    for (const auto& leaf : cert.leaves) {
        RatMatrix G = generator_matrix(leaf.cone);
        RatVec c = mat_vec(inverse(G), leaf.cone.apex);
        RatVec m(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            m[i] = Rat(ceil_rat(c[i]));
        RatVec pr = mat_vec(G, m);
        IntVec p(pr.size());
        for (std::size_t i = 0; i < pr.size(); ++i) {
            if (!is_integer(pr[i]))
                throw InternalError("cone_genfun_barvinok: corner point not integral");
            p[i] = rat_num(pr[i]);
        }
        GenFunTerm t;
        t.sign = leaf.sign;
        t.numerator_exponents = {std::move(p)};
        t.denominator_exponents = leaf.cone.generators;
        t.source_cone = leaf.cone;
        F.terms.push_back(std::move(t));
    }
    return F;
}

namespace detail {

/// Per-cone data for the column sweep: constraints r.x >= beta (strict if open).
struct SweepCone {
    std::vector<RatVec> rows;
    RatVec beta;
    std::vector<bool> strict;
    int weight;
};

inline SweepCone sweep_cone(const SimplicialCone& K, int weight) {
    RatMatrix inv = inverse(generator_matrix(K));
    SweepCone s;
    s.weight = weight;
    for (std::size_t i = 0; i < K.dim(); ++i) {
        s.rows.push_back(inv.row(i));
        s.beta.push_back(dot(inv.row(i), K.apex));
        s.strict.push_back(K.open_flags[i]);
    }
    return s;
}

} // namespace detail

/**
 * Pointwise contract of a decomposition on a box of lattice points:
 * sum of sign * indicator(leaf) equals indicator(input) at every point.
 * The check sweeps axis-aligned columns, intersecting each cone with the
 * column exactly, so large boxes cost columns, not points.
 */
inline bool certificate_check(const DecompositionCert& cert, const IntBox& box) {
    std::size_t d = cert.input.dim();
    if (box.dim() != d)
        throw DimensionMismatch("certificate_check: box dimension mismatch");

    std::vector<detail::SweepCone> cones;
    cones.push_back(detail::sweep_cone(cert.input, -1));
    for (const auto& leaf : cert.leaves)
        cones.push_back(detail::sweep_cone(leaf.cone, leaf.sign));

    bool ok = true;
    IntBox columns{IntVec(box.lower.begin(), box.lower.end() - 1),
                   IntVec(box.upper.begin(), box.upper.end() - 1)};
    auto check_column = [&](const IntVec& prefix) {
        if (!ok)
            return;
        std::map<Int, long long> events;
        for (const auto& c : cones) {
            // rational bounds for the last coordinate within this column
            bool feasible = true, has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
            Rat lo, hi;
            for (std::size_t i = 0; i < c.rows.size() && feasible; ++i) {
                Rat rest = 0;
                for (std::size_t j = 0; j + 1 < d; ++j)
                    rest += c.rows[i][j] * Rat(prefix[j]);
                const Rat& cd = c.rows[i][d - 1];
                Rat rhs = c.beta[i] - rest;
                if (cd == 0) {
                    if (0 < rhs || (c.strict[i] && 0 == rhs))
                        feasible = false;
                } else if (cd > 0) {
                    Rat b = rhs / cd;
                    if (!has_lo || b > lo || (b == lo && c.strict[i])) {
                        lo_strict = (!has_lo || b > lo) ? c.strict[i] : (lo_strict || c.strict[i]);
                        lo = b;
                        has_lo = true;
                    }
                } else {
                    Rat b = rhs / cd;
                    if (!has_hi || b < hi || (b == hi && c.strict[i])) {
                        hi_strict = (!has_hi || b < hi) ? c.strict[i] : (hi_strict || c.strict[i]);
                        hi = b;
                        has_hi = true;
                    }
                }
            }
            if (!feasible)
                continue;
            Int L = box.lower[d - 1], U = box.upper[d - 1];
            if (has_lo) {
                Int lz = lo_strict ? floor_rat(lo) + 1 : ceil_rat(lo);
                if (lz > L)
                    L = lz;
            }
            if (has_hi) {
                Int uz = hi_strict ? ceil_rat(hi) - 1 : floor_rat(hi);
                if (uz < U)
                    U = uz;
            }
            if (L > U)
                continue;
            events[L] += c.weight;
            events[U + 1] -= c.weight;
        }
        // prefix sums of the event map are the signed column indicator of
        // (leaves minus input); it must vanish on every interval
        long long running = 0;
        for (const auto& [at, delta] : events) {
            (void)at;
            running += delta;
            if (running != 0) {
                ok = false;
                return;
            }
        }
    };

    if (d == 1) {
        check_column(IntVec{});
    } else {
        for_each_point(columns, check_column);
    }
    return ok;
}

} // namespace latcount
