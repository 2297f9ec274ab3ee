#pragma once

#include <functional>

#include "latcount/errors.hpp"
#include "latcount/rational.hpp"

namespace latcount {

/// Axis-aligned integer box, both bounds inclusive.
struct IntBox {
    IntVec lower;
    IntVec upper;

    std::size_t dim() const { return lower.size(); }
};

inline IntBox make_box(IntVec lower, IntVec upper) {
    if (lower.size() != upper.size())
        throw DimensionMismatch("make_box: bound size mismatch");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i])
            throw DegenerateInput("make_box: lower bound exceeds upper bound");
    return IntBox{std::move(lower), std::move(upper)};
}

inline bool box_contains(const IntBox& box, const IntVec& p) {
    for (std::size_t i = 0; i < box.dim(); ++i)
        if (p[i] < box.lower[i] || p[i] > box.upper[i])
            return false;
    return true;
}

/// Visit every lattice point of the box in lexicographic order.
inline void for_each_point(const IntBox& box, const std::function<void(const IntVec&)>& fn) {
    std::size_t d = box.dim();
    if (d == 0) {
        fn(IntVec{});
        return;
    }
    IntVec p = box.lower;
    while (true) {
        fn(p);
        std::size_t i = d;
        while (i-- > 0) {
            if (p[i] < box.upper[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < d; ++j)
                    p[j] = box.lower[j];
                break;
            }
            if (i == 0)
                return;
        }
    }
}

} // namespace latcount
