#pragma once

/**
 * Exact arbitrary-precision scalars and vectors.
 *
 * All arithmetic in this library is exact: Int is an arbitrary-precision
 * integer, Rat a canonical rational (positive denominator, reduced to lowest
 * terms).  No floating point appears anywhere in the engine.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "latcount/errors.hpp"

namespace latcount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quo = n / d; // truncates toward zero
    if (n < 0 && quo * d != n)
        --quo;
    return quo;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

/// Nearest integer, ties toward +infinity.
inline Int round_half_up(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v)
        g = gcd_int(g, x);
    return g; // >= 0
}

/// Divide an integer vector by the gcd of its entries (sign preserved).
inline IntVec primitive(IntVec v) {
    Int g = vec_gcd(v);
    if (g == 0)
        throw InternalError("primitive: zero vector");
    if (g != 1)
        for (auto& x : v)
            x /= g;
    return v;
}

/// Scale a nonzero rational vector to the primitive integer vector on the same ray.
inline IntVec primitive_direction(const RatVec& v) {
    Int m = 1;
    for (const auto& q : v)
        m = lcm_int(m, rat_den(q));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = rat_num(v[i]) * (m / rat_den(v[i]));
    return primitive(std::move(w));
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = Rat(v[i]);
    return r;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_neg(IntVec v) {
    for (auto& x : v)
        x = -x;
    return v;
}

inline RatVec vec_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

inline std::string format_rat(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1)
        os << '/' << rat_den(q);
    return os.str();
}

inline std::string format_int(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

/// "(a,b,c)" rendering used by the generating-function text format.
inline std::string format_vec(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += format_int(v[i]);
    }
    s += ')';
    return s;
}

inline Int parse_int(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.front() == '+')
        t.erase(t.begin());
    if (t.empty() || t.find_first_not_of("-0123456789") != std::string::npos)
        throw ParseError("bad integer '" + tok + "'");
    if (t == "-" || (t.size() > 1 && t.find('-', 1) != std::string::npos))
        throw ParseError("bad integer '" + tok + "'");
    return Int(t);
}

/// Parse "p" or "p/q" with q > 0.
inline Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(tok));
    Int p = parse_int(tok.substr(0, slash));
    Int q = parse_int(tok.substr(slash + 1));
    if (q <= 0)
        throw ParseError("bad rational '" + tok + "': denominator must be positive");
    return Rat(p, q);
}

} // namespace latcount
