#pragma once

#include <gkz/gkz.hpp>

#include <initializer_list>

namespace gkz::testing {

inline RatVector rats(std::initializer_list<const char *> xs) {
    RatVector out;
    for (const char *x : xs)
        out.push_back(parse_rational(x));
    return out;
}

inline PointConfig points(std::size_t dim, std::vector<IntVector> columns) {
    return PointConfig{dim, std::move(columns)};
}

/// (1,0), (1,2), (1,1): relation (1,1,-2).
inline LatticeConfig polynomial_config() {
    return build_config(points(2, {{1, 0}, {1, 2}, {1, 1}}));
}

/// (1,0), (0,1), (1,1): relation (1,1,-1).
inline LatticeConfig log_config() {
    return build_config(points(2, {{1, 0}, {0, 1}, {1, 1}}));
}

inline LatticeConfig gauss_config() { return build_config(gauss_points()); }

/// (1,0), (0,1), (-1,-1): origin interior, relation (1,1,1).
inline LatticeConfig interior_config() {
    return build_config(points(2, {{1, 0}, {0, 1}, {-1, -1}}));
}

/// The pFq configuration in Z^d: a1 = (1,..,1,-1,..,-1) with d+1-k ones,
/// then the unit vectors in reverse order.
inline LatticeConfig pfq_config(std::size_t d, std::size_t k) {
    std::vector<IntVector> columns;
    IntVector a1(d);
    for (std::size_t i = 0; i < d; ++i)
        a1[i] = i < d + 1 - k ? 1 : -1;
    columns.push_back(a1);
    for (std::size_t i = d; i-- > 0;) {
        IntVector e(d, 0);
        e[i] = 1;
        columns.push_back(e);
    }
    return build_config(points(d, std::move(columns)));
}

inline IntVector zeros(std::size_t n) { return IntVector(n, 0); }

inline IndexSet index_set(std::initializer_list<std::size_t> one_based) {
    IndexSet out;
    for (auto i : one_based)
        out.insert(i - 1);
    return out;
}

} // namespace gkz::testing
