#pragma once

#include "foel/diagram.hpp"

namespace foel {

/// k noncrossing caps on L linearly ordered points with L-2k through strands;
/// through points never sit under a cap. Uniquely determined by the sorted
/// tuple of right legs. Positions are 0-based internally; the SYT bijection
/// speaks 1-based like the tableaux.
struct CapDiagram {
    int L = 0;
    std::vector<std::pair<int, int>> arcs;  // (left, right), sorted by right leg
    std::vector<int> through;               // ascending

    int k() const { return static_cast<int>(arcs.size()); }
    std::vector<int> right_legs() const;    // 0-based ascending

    /// The Hom(L-2k, L) morphism inserting a delta per cap.
    PlanarDiagram to_planar() const;

    bool operator==(const CapDiagram& o) const { return L == o.L && arcs == o.arcs; }
    bool operator<(const CapDiagram& o) const;
    std::string str() const;
};

/// Reconstructs the unique cap diagram with the given 0-based right legs, or
/// returns false if the set is not admissible.
bool cap_from_right_legs(int L, const std::vector<int>& right_legs, CapDiagram* out);

/// All of C(L,k) in lexicographic order of right-leg tuples.
/// |C(L,k)| = binom(L,k) - binom(L,k-1).
std::vector<CapDiagram> enumerate_caps(int L, int k);

/// Standard Young tableau of shape (L-k, k): row 0 = non-right-leg positions,
/// row 1 = right legs, both 1-based ascending. Bijective.
std::vector<std::vector<int>> cap_to_syt(const CapDiagram& c);
CapDiagram syt_to_cap(int L, const std::vector<std::vector<int>>& rows);

}  // namespace foel
