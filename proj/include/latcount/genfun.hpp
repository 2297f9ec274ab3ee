#pragma once

/**
 * Signed sums of rational-function terms  x^a / prod_i (1 - x^{b_i}).
 *
 * There is deliberately no symbolic normalization here.  Identities are
 * checked semantically, two ways:
 *
 *  - specialize along a generic integer direction lambda: substituting
 *    x = e^{lambda t} turns each term into a Laurent series in t whose
 *    constant coefficient carries the lattice-point count, while the negative
 *    orders must cancel across the sum when the input encodes a polytope;
 *
 *  - expand all terms as series in a common region chosen by lambda (factors
 *    with lambda.b < 0 are rewritten via 1/(1-x^b) = -x^{-b}/(1-x^{-b})) and
 *    collect the signed multiset of exponents inside a box.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcount/box.hpp"
#include "latcount/cone.hpp"
#include "latcount/errors.hpp"
#include "latcount/rational.hpp"

namespace latcount {

struct GenFunTerm {
    int sign = 1; // +1 or -1
    std::vector<IntVec> numerator_exponents;
    std::vector<IntVec> denominator_exponents; // factors 1 - x^b, b nonzero
    std::optional<SimplicialCone> source_cone;
};

struct GenFun {
    int dim = 0;
    std::vector<GenFunTerm> terms;

    explicit GenFun(int d = 0) : dim(d) {}
};

/// sigma of a simplicial (possibly half-open) cone: parallelepiped numerator
/// over one factor 1 - x^g per generator.
inline GenFunTerm cone_term(const SimplicialCone& K) {
    GenFunTerm t;
    t.sign = 1;
    t.numerator_exponents = parallelepiped_points(K);
    t.denominator_exponents = K.generators;
    t.source_cone = K;
    return t;
}

inline GenFun add(GenFun F, const GenFun& G) {
    if (F.dim != G.dim)
        throw DimensionMismatch("add: generating functions of different dimension");
    F.terms.insert(F.terms.end(), G.terms.begin(), G.terms.end());
    return F;
}

namespace detail {

inline Int next_prime(Int p) {
    auto is_prime = [](const Int& n) {
        if (n < 2)
            return false;
        for (Int f = 2; f * f <= n; ++f)
            if (n % f == 0)
                return false;
        return true;
    };
    do {
        ++p;
    } while (!is_prime(p));
    return p;
}

/// Truncated product of two power series (coefficients 0..order).
inline std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                   std::size_t order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

/// Coefficients of h(z) = z / (1 - e^z) up to the given order (h(0) = -1).
inline std::vector<Rat> corner_series(std::size_t order) {
    // g(z) = (1 - e^z)/z has g_k = -1/(k+1)! ; h = 1/g by series inversion
    std::vector<Rat> g(order + 1);
    Rat fact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        fact *= Int(k + 1);
        g[k] = Rat(-1) / fact;
    }
    std::vector<Rat> h(order + 1, Rat(0));
    h[0] = Rat(1) / g[0];
    for (std::size_t k = 1; k <= order; ++k) {
        Rat s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += g[j] * h[k - j];
        h[k] = -s / g[0];
    }
    return h;
}

} // namespace detail

/**
 * Deterministic generic direction: lambda = (1, M, M^2, ...) for the first
 * prime M that avoids all denominator exponents.  Such lambda exists because
 * each nonzero b excludes at most dim-1 values of M.
 */
inline IntVec pick_direction(const std::vector<IntVec>& denominators, int dim) {
    Int M = 1;
    for (int attempt = 0; attempt < 1 << 20; ++attempt) {
        M = detail::next_prime(M);
        IntVec lambda(dim);
        Int w = 1;
        for (int i = 0; i < dim; ++i) {
            lambda[i] = w;
            w *= M;
        }
        bool ok = true;
        for (const auto& b : denominators)
            if (dot(lambda, b) == 0) {
                ok = false;
                break;
            }
        if (ok)
            return lambda;
    }
    throw NoValidDirection("pick_direction: no generic moment vector found");
}

inline IntVec pick_direction(const GenFun& F) {
    std::vector<IntVec> dens;
    for (const auto& t : F.terms)
        for (const auto& b : t.denominator_exponents)
            dens.push_back(b);
    return pick_direction(dens, F.dim);
}

struct SpecializeResult {
    Int count;                     // constant Laurent coefficient
    std::vector<Rat> negative_orders; // entry k-1 is the coefficient of t^{-k}
};

/**
 * Evaluate the sum at x = e^{lambda t} as a Laurent series in t and report the
 * t^0 coefficient together with the coefficients of t^{-1} .. t^{-dim}.
 */
inline SpecializeResult specialize_with_direction(const GenFun& F, const IntVec& lambda) {
    int d = F.dim;
    std::map<int, Rat> totals; // power of t -> coefficient
    for (const auto& term : F.terms) {
        std::size_t nden = term.denominator_exponents.size();
        std::vector<Int> c(nden);
        for (std::size_t i = 0; i < nden; ++i) {
            c[i] = dot(lambda, term.denominator_exponents[i]);
            if (c[i] == 0)
                throw InternalError("specialize: direction hits a denominator");
        }
        std::size_t order = nden;
        // numerator: sum over exponents a of e^{(lambda.a) t}
        std::vector<Rat> P(order + 1, Rat(0));
        for (const auto& a : term.numerator_exponents) {
            Rat u = Rat(dot(lambda, a));
            Rat pow = 1, fact = 1;
            for (std::size_t k = 0; k <= order; ++k) {
                if (k) {
                    pow *= u;
                    fact *= Int(k);
                }
                P[k] += pow / fact;
            }
        }
        // each factor 1/(1-e^{c t}) = h(c t) / (c t)
        std::vector<Rat> h = detail::corner_series(order);
        Rat scale = term.sign;
        for (std::size_t i = 0; i < nden; ++i) {
            std::vector<Rat> hi(order + 1);
            Rat cp = 1;
            for (std::size_t k = 0; k <= order; ++k) {
                hi[k] = h[k] * cp;
                cp *= Rat(c[i]);
            }
            P = detail::series_mul(P, hi, order);
            scale /= Rat(c[i]);
        }
        for (std::size_t k = 0; k <= order; ++k) {
            int power = static_cast<int>(k) - static_cast<int>(nden);
            if (power > 0)
                break;
            Rat v = P[k] * scale;
            if (v != 0)
                totals[power] += v;
        }
    }

    SpecializeResult r;
    r.negative_orders.assign(d, Rat(0));
    Rat count = 0;
    for (const auto& [power, coeff] : totals) {
        if (power == 0) {
            count = coeff;
        } else if (power < 0 && -power <= d) {
            r.negative_orders[static_cast<std::size_t>(-power) - 1] = coeff;
        } else if (coeff != 0) {
            throw NotPolynomial("specialize: Laurent order below -dim does not cancel");
        }
    }
    if (!is_integer(count))
        throw NotPolynomial("specialize: constant coefficient is not an integer");
    r.count = rat_num(count);
    return r;
}

inline SpecializeResult specialize_report(const GenFun& F) {
    return specialize_with_direction(F, pick_direction(F));
}

/**
 * Lattice-point count of the polytope identity encoded by F.  Throws
 * NotPolynomial when the negative Laurent orders fail to cancel, which is the
 * operational form of "the evaluation kills non-pointed cones": a sum that is
 * not a Laurent polynomial does not encode a bounded point set.
 */
inline Int specialize_count_with_direction(const GenFun& F, const IntVec& lambda) {
    SpecializeResult r = specialize_with_direction(F, lambda);
    for (const auto& v : r.negative_orders)
        if (v != 0)
            throw NotPolynomial("specialize: negative Laurent orders do not cancel");
    return r.count;
}

inline Int specialize_count(const GenFun& F) {
    return specialize_count_with_direction(F, pick_direction(F));
}

/**
 * Signed multiset of exponents, restricted to a box, of the common-region
 * series expansion of F.  Every factor is first made forward with respect to a
 * generic lambda (flipping 1/(1-x^b) to -x^{-b}/(1-x^{-b}) where lambda.b < 0),
 * then each term is walked from its numerator exponents along its forward
 * generators, pruned by the box.
 */
inline std::map<IntVec, long long> signed_points_in_box(const GenFun& F, const IntBox& box) {
    for (const auto& t : F.terms)
        if (!t.source_cone)
            throw MissingSourceCone("signed_points_in_box: term without source cone");
    if (static_cast<std::size_t>(F.dim) != box.dim())
        throw DimensionMismatch("signed_points_in_box: box dimension mismatch");

    IntVec lambda = pick_direction(F);
    Int lambda_max = 0;
    for (std::size_t i = 0; i < box.dim(); ++i)
        lambda_max += std::max(lambda[i] * box.lower[i], lambda[i] * box.upper[i]);

    std::map<IntVec, long long> acc;
    for (const auto& term : F.terms) {
        int sign = term.sign;
        std::vector<IntVec> gens = term.denominator_exponents;
        IntVec shift(F.dim, 0);
        for (auto& b : gens) {
            if (dot(lambda, b) < 0) {
                shift = vec_sub(shift, b); // numerator gains x^{-b}
                b = vec_neg(std::move(b));
                sign = -sign;
            }
        }
        std::vector<Int> step(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            step[i] = dot(lambda, gens[i]); // > 0 after flipping

        for (const auto& a : term.numerator_exponents) {
            IntVec base = vec_add(a, shift);
            Int base_val = dot(lambda, base);
            std::function<void(std::size_t, IntVec, Int)> walk = [&](std::size_t i, IntVec p, Int val) {
                if (val > lambda_max)
                    return;
                if (i == gens.size()) {
                    if (box_contains(box, p))
                        acc[p] += sign;
                    return;
                }
                while (val <= lambda_max) {
                    walk(i + 1, p, val);
                    p = vec_add(p, gens[i]);
                    val += step[i];
                }
            };
            walk(0, base, base_val);
        }
    }

    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

/// One line per term: "sign; numerator exponents; denominator exponents".
inline std::string render_genfun(const GenFun& F) {
    std::string out;
    for (const auto& t : F.terms) {
        out += (t.sign >= 0) ? '+' : '-';
        out += ";";
        for (const auto& a : t.numerator_exponents) {
            out += ' ';
            out += format_vec(a);
        }
        out += ";";
        for (const auto& b : t.denominator_exponents) {
            out += ' ';
            out += format_vec(b);
        }
        out += '\n';
    }
    return out;
}

} // namespace latcount
