#pragma once

#include "foel/diagram.hpp"
#include "foel/sparse.hpp"

namespace foel {

// Concrete matrices on V(1)^{(x)N} (the fundamental tensor space) and on site
// spaces V(n_1)(x)...(x)V(n_L). Tensor basis states are arrow strings indexed
// lexicographically with the leftmost factor most significant and the up arrow
// (weight +1) first, so the all-up state has index 0. V(n) uses the weight
// basis v^n, v^{n-2}, ..., v^{-n} in that order.
//
// Conventions (fixed project-wide):
//   eps(up(x)down) = -q, eps(down(x)up) = 1
//   delta(1)       = up(x)down - q^{-1} down(x)up
//   coproduct      E -> E(x)K + 1(x)E,  F -> F(x)1 + K^{-1}(x)F,  K -> K(x)K
//   T_n(v^s)       = q^{||s||_-} v^{|s|}
//   T_n*(v^m)      = [n over (n-m)/2]^{-1} sum_s q^{-||s||_+} v^s

inline long tensor_dim(int N) { return 1L << N; }

/// Arrow at factor i (0-based, from the left): +1 for up, -1 for down.
inline int arrow_at(long state, int N, int i) {
    return ((state >> (N - 1 - i)) & 1) ? -1 : +1;
}
inline long flip_arrow(long state, int N, int i) { return state ^ (1L << (N - 1 - i)); }

enum class Generator { Delta, Epsilon, U, E, F, K, Kinv };

/// Matrix of the named intertwiner or quantum-group generator on V(1)^{(x)N}.
/// pos is the 1-based strand position for Delta/Epsilon/U (Delta inserts at
/// (pos, pos+1) mapping N-2 -> N strands; Epsilon contracts N -> N-2).
RatMatrix fundamental_action(Generator which, int N, const Rational& q0, int pos = 1);

/// T_n : V(1)^{(x)n} -> V(n) and T_n* : V(n) -> V(1)^{(x)n}.
RatMatrix symmetrizer_project(int n, const Rational& q0);
RatMatrix symmetrizer_inject(int n, const Rational& q0);

/// Functor to matrices: represent(compose(f,g)) = represent(g) * represent(f).
RatMatrix represent(const PlanarDiagram& d, const Rational& q0);
RatMatrix represent(const DiagramCombination& f, const Rational& q0);
RatMatrix represent(const IntDiagramSum& f, const Rational& q0);

/// Single-site generator matrices on V(n) and their coproduct extension over
/// (x)_i V(n_i) (weights n_i).
RatMatrix site_generator(Generator which, int n, const Rational& q0);
RatMatrix chain_generator(Generator which, const std::vector<int>& weights, const Rational& q0);

/// diag(e_m) making T_n* the adjoint of T_n: e_m = q^{-ab}/[n over b],
/// a = (n+m)/2 up arrows, b = (n-m)/2 down arrows. Product version for chains.
RatMatrix site_metric(int n, const Rational& q0);
RatMatrix chain_metric(const std::vector<int>& weights, const Rational& q0);

long chain_dim(const std::vector<int>& weights);

}  // namespace foel
