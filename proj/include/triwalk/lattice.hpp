#pragma once

#include <cstdint>
#include <functional>

namespace triwalk {

/// Vertex of the triangular lattice in the e1,e2 integer coordinates.
/// The third coordinate x3 = x2 - x1 is derived, never stored.
struct LatticePoint {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    std::int64_t x3() const { return x2 - x1; }

    LatticePoint operator+(LatticePoint o) const { return {x1 + o.x1, x2 + o.x2}; }
    LatticePoint operator-(LatticePoint o) const { return {x1 - o.x1, x2 - o.x2}; }
    LatticePoint operator-() const { return {-x1, -x2}; }
    bool operator==(const LatticePoint&) const = default;
};

}  // namespace triwalk
