#pragma once

/**
 * Plain-text input formats, whitespace separated with '#' comments:
 *
 *   .hrep   dimension d, then rows "c a1 .. ad" meaning c + a.x >= 0
 *   .vrep   dimension d, then one vertex per row, d rationals
 *   .cone   dimension d, apex row (d rationals), then d integer generator rows
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "latcount/cone.hpp"
#include "latcount/errors.hpp"
#include "latcount/polytope.hpp"
#include "latcount/rational.hpp"

namespace latcount {

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (!toks.empty())
            lines.push_back(std::move(toks));
    }
    return lines;
}

inline int parse_dimension(const std::vector<std::vector<std::string>>& lines) {
    if (lines.empty())
        throw ParseError("empty input");
    if (lines.front().size() != 1)
        throw ParseError("first row must be the dimension");
    Int d = parse_int(lines.front().front());
    if (d < 1 || d > 16)
        throw ParseError("dimension out of range");
    return static_cast<int>(d);
}

inline RatVec parse_row(const std::vector<std::string>& toks, std::size_t expected,
                        std::size_t row_number) {
    if (toks.size() != expected)
        throw ParseError("row " + std::to_string(row_number) + ": expected " +
                         std::to_string(expected) + " entries, got " + std::to_string(toks.size()));
    RatVec row;
    row.reserve(expected);
    for (const auto& t : toks) {
        try {
            row.push_back(parse_rat(t));
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(row_number) + ": " + e.what());
        }
    }
    return row;
}

} // namespace detail

inline Polytope parse_hrep(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    int d = detail::parse_dimension(lines);
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
        rows.push_back(detail::parse_row(lines[i], static_cast<std::size_t>(d) + 1, i));
    if (rows.empty())
        throw ParseError("no halfspace rows");
    return from_hrep(d, rows);
}

inline Polytope parse_vrep(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    int d = detail::parse_dimension(lines);
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
        rows.push_back(detail::parse_row(lines[i], static_cast<std::size_t>(d), i));
    if (rows.empty())
        throw ParseError("no vertex rows");
    return from_vrep(d, rows);
}

inline SimplicialCone parse_cone(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    int d = detail::parse_dimension(lines);
    std::size_t dd = static_cast<std::size_t>(d);
    if (lines.size() != dd + 2)
        throw ParseError("cone file needs an apex row and exactly d generator rows");
    RatVec apex = detail::parse_row(lines[1], dd, 1);
    std::vector<IntVec> gens;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        RatVec row = detail::parse_row(lines[i], dd, i);
        IntVec g(dd);
        for (std::size_t j = 0; j < dd; ++j) {
            if (!is_integer(row[j]))
                throw ParseError("row " + std::to_string(i) + ": generators must be integer");
            g[j] = rat_num(row[j]);
        }
        gens.push_back(std::move(g));
    }
    try {
        return make_simplicial_cone(std::move(apex), std::move(gens));
    } catch (const Error& e) {
        throw DegenerateInput(std::string("cone file: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Dispatch on the .hrep / .vrep extension.
inline Polytope read_polytope(const std::string& path) {
    auto ends_with = [&](const std::string& suf) {
        return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with(".hrep"))
        return parse_hrep(read_file(path));
    if (ends_with(".vrep"))
        return parse_vrep(read_file(path));
    throw ParseError("'" + path + "': expected a .hrep or .vrep file");
}

inline SimplicialCone read_cone(const std::string& path) {
    if (path.size() < 5 || path.compare(path.size() - 5, 5, ".cone") != 0)
        throw ParseError("'" + path + "': expected a .cone file");
    return parse_cone(read_file(path));
}

} // namespace latcount
