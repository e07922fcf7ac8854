#pragma once

#include <cstddef>
#include <stdexcept>

namespace coiso {

/// Coordinate split of R^n along the linear subspace C = { x : x'' = 0 }.
///
/// Coordinates 1..n-nu are tangential (block E1), coordinates n-nu+1..n are
/// transverse (block E2). The degenerate splits nu = 0 (C = R^n) and nu = n
/// (C a point) are both valid.
struct CoisoContext {
    std::size_t n = 2;  ///< total dimension
    std::size_t nu = 1; ///< codimension of C

    CoisoContext() = default;
    CoisoContext(std::size_t n_, std::size_t nu_) : n(n_), nu(nu_) {
        if (n == 0) throw std::invalid_argument("CoisoContext: n must be >= 1");
        if (nu > n) throw std::invalid_argument("CoisoContext: nu must satisfy 0 <= nu <= n");
    }

    /// 1-based coordinate index lies in the transverse block E2.
    bool is_transverse(std::size_t coord) const { return coord > n - nu; }
    bool is_tangential(std::size_t coord) const { return !is_transverse(coord); }

    bool operator==(const CoisoContext& o) const { return n == o.n && nu == o.nu; }
    bool operator!=(const CoisoContext& o) const { return !(*this == o); }
};

} // namespace coiso
