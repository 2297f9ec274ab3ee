#pragma once

/**
 * Command-line front end (count / genfun / decompose / ehrhart).
 *
 * Exit codes: 0 ok, 2 parse error, 3 violated precondition (unbounded or
 * empty input, non-simple polytope for lv, degenerate direction), 4 internal
 * invariant failure.
 */

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "latcount/barvinok.hpp"
#include "latcount/brion_lv.hpp"
#include "latcount/ehrhart.hpp"
#include "latcount/errors.hpp"
#include "latcount/genfun.hpp"
#include "latcount/io.hpp"

namespace latcount {

namespace detail {

inline IntVec parse_csv_ints(const std::string& s) {
    IntVec v;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty())
                throw ParseError("bad integer list '" + s + "'");
            v.push_back(parse_int(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return v;
}

inline CountMethod parse_method(const std::string& m) {
    if (m == "brion")
        return CountMethod::brion;
    if (m == "lv")
        return CountMethod::lv;
    if (m == "barvinok")
        return CountMethod::barvinok_brion;
    throw ParseError("unknown method '" + m + "' (expected brion, lv or barvinok)");
}

inline GenFun build_genfun(const Polytope& P, CountMethod method, const std::optional<Direction>& dir) {
    switch (method) {
    case CountMethod::brion:
        return brion(P);
    case CountMethod::lv:
        return lawrence_varchenko(P, dir ? *dir : auto_direction(P));
    case CountMethod::barvinok_brion:
        return brion_barvinok(P);
    }
    throw InternalError("unknown method");
}

inline std::string format_term(const Rat& coeff, std::size_t power) {
    std::string c = format_rat(coeff);
    bool frac = !is_integer(coeff);
    std::string body;
    if (power == 0)
        return c;
    if (coeff == 1)
        body = "";
    else if (coeff == -1)
        body = "-";
    else
        body = frac ? "(" + c + ")" : c;
    body += "t";
    if (power > 1)
        body += "^" + std::to_string(power);
    return body;
}

inline std::string format_poly(const RatVec& coeffs) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rat& c = coeffs[k];
        if (c == 0)
            continue;
        if (out.empty()) {
            out += format_term(c, k);
        } else if (c > 0) {
            out += "+" + format_term(c, k);
        } else {
            out += "-" + format_term(-c, k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice-point counting for rational polytopes and cones"};
    app.require_subcommand(1);

    std::string file, method = "brion", xi_str, box_str;
    int tmax = 0;
    long seed = 0; // reserved; all algorithms are deterministic

    auto* c_count = app.add_subcommand("count", "count lattice points of a polytope");
    c_count->add_option("file", file)->required();
    c_count->add_option("--method", method, "brion, lv or barvinok");
    c_count->add_option("--xi", xi_str, "direction for lv, comma-separated integers");
    c_count->add_option("--seed", seed);

    auto* c_genfun = app.add_subcommand("genfun", "print the vertex-cone generating function");
    c_genfun->add_option("file", file)->required();
    c_genfun->add_option("--method", method, "brion, lv or barvinok");
    c_genfun->add_option("--xi", xi_str, "direction for lv, comma-separated integers");
    c_genfun->add_option("--seed", seed);

    auto* c_dec = app.add_subcommand("decompose", "unimodular signed decomposition of a cone");
    c_dec->add_option("file", file)->required();
    c_dec->add_option("--box", box_str, "check box, comma-separated lo1,hi1,lo2,hi2,...");
    c_dec->add_option("--seed", seed);

    auto* c_ehr = app.add_subcommand("ehrhart", "dilate counts and quasipolynomial");
    c_ehr->add_option("file", file)->required();
    c_ehr->add_option("--tmax", tmax, "largest dilate (at least d+2)")->required();
    c_ehr->add_option("--seed", seed);

    try {
        std::vector<const char*> argv;
        argv.push_back("latcount");
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_count || *c_genfun) {
            Polytope P = read_polytope(file);
            CountMethod m = detail::parse_method(method);
            std::optional<Direction> dir;
            if (!xi_str.empty())
                dir = Direction{detail::parse_csv_ints(xi_str), {}};
            if (m == CountMethod::lv && !dir)
                throw DegenerateDirection("method lv requires --xi");
            GenFun F = detail::build_genfun(P, m, dir);
            if (*c_count) {
                out << specialize_count(F) << "\n";
                out << "method: " << method << "\n";
            } else {
                out << render_genfun(F);
            }
        } else if (*c_dec) {
            SimplicialCone K = read_cone(file);
            DecompositionCert cert = unimodular_decompose(K);
            IntBox box;
            if (!box_str.empty()) {
                IntVec b = detail::parse_csv_ints(box_str);
                if (b.size() != 2 * K.dim())
                    throw ParseError("--box needs 2*d integers");
                IntVec lo(K.dim()), hi(K.dim());
                for (std::size_t i = 0; i < K.dim(); ++i) {
                    lo[i] = b[2 * i];
                    hi[i] = b[2 * i + 1];
                }
                box = make_box(std::move(lo), std::move(hi));
            } else {
                Int radius = 10;
                for (const auto& g : K.generators)
                    for (const auto& x : g)
                        radius = std::max(radius, 10 * abs_int(x));
                box = IntBox{IntVec(K.dim(), -radius), IntVec(K.dim(), radius)};
            }
            out << "leaves " << cert.leaves.size() << "\n";
            out << "depth " << cert.max_depth << "\n";
            out << "shift";
            for (const auto& s : cert.shift)
                out << " " << format_rat(s);
            out << "\n";
            for (const auto& leaf : cert.leaves) {
                out << (leaf.sign > 0 ? '+' : '-');
                for (const auto& g : leaf.cone.generators)
                    out << " " << format_vec(g);
                out << "\n";
            }
            out << "certificate " << (certificate_check(cert, box) ? "PASS" : "FAIL") << "\n";
        } else if (*c_ehr) {
            Polytope P = read_polytope(file);
            if (tmax < P.dim + 2)
                throw DegenerateInput("--tmax must be at least d+2");
            std::vector<Int> values = ehrhart_values(P, tmax);
            for (std::size_t i = 0; i < values.size(); ++i)
                out << (i ? " " : "") << values[i];
            out << "\n";
            QuasiPolynomial qp = ehrhart_quasipolynomial(P);
            out << "period " << qp.period;
            for (long r = 0; r < qp.period; ++r)
                out << "; r=" << r << ": "
                    << detail::format_poly(qp.components[static_cast<std::size_t>(r)]);
            out << "\n";
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotSimple& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateDirection& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Unbounded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const EmptyPolytope& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateInput& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotPointed& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace latcount
