#pragma once

#include <optional>

#include "foel/cap_diagram.hpp"
#include "foel/sparse.hpp"
#include "foel/tensor_rep.hpp"

namespace foel {

/// One dual canonical basis vector of V(n_1)(x)...(x)V(n_L): the image of a
/// through-arrow pattern (all downs left of all ups) under a cap diagram on
/// the N = sum n_i fundamental strands, projected by (x)_i p_{n_i}.
/// Coordinates are dense over the 2^N tensor basis, exact at the chosen q0.
struct DualCanonicalVector {
    std::vector<int> site_weights;
    CapDiagram cap;        // on N strands
    int downs = 0;         // leading through arrows flipped down
    std::vector<Rational> coords;

    int strand_count() const;
    int weight() const { return strand_count() - 2 * (cap.k() + downs); }
    std::string label() const;
};

/// Raw (unprojected) cap image of the pattern, as dense tensor coordinates.
std::vector<Rational> cap_image(const CapDiagram& cap, int downs, const Rational& q0);

/// Applies (x)_i p_{n_i} in place (p_n realized as T_n* T_n).
void project_sites(std::vector<Rational>& coords, const std::vector<int>& weights,
                   const Rational& q0);

/// Dual canonical basis of the weight-(N-2k) highest-weight space: k caps,
/// all through arrows up, zero images dropped, ordered by right-leg tuple.
std::vector<DualCanonicalVector> dcb_basis(const std::vector<int>& weights, int k,
                                           const Rational& q0);

/// Dual canonical basis of the full weight-(N-2k_total) space: arcs + downs =
/// k_total, ordered by (arc count, right-leg tuple).
std::vector<DualCanonicalVector> dcb_weight_basis(const std::vector<int>& weights,
                                                  int k_total, const Rational& q0);

/// Exact expansion of vectors in a DCB list (pseudoinverse, precomputed once).
/// expand() throws InvariantViolation if the vector is not exactly in the span.
class DcbExpander {
public:
    explicit DcbExpander(const std::vector<DualCanonicalVector>& basis);
    std::vector<Rational> expand(const std::vector<Rational>& v) const;
    int dim() const { return dim_; }

private:
    int dim_ = 0;
    long full_dim_ = 0;
    std::vector<long> support_;                  // tensor states carrying the basis
    std::vector<std::vector<Rational>> pinv_;    // dim x |support|
    std::vector<std::vector<Rational>> basis_rows_;  // |support| x dim, for residual check
};

/// Matrix of E, F or K on the DCB. E maps the k_total space to k_total-1,
/// F to k_total+1, K is diagonal; columns index the source basis.
RatMatrix dcb_generator_matrix(Generator which, const std::vector<int>& weights,
                               int k_total, const Rational& q0);

/// Oracle action of F on one DCB vector: F applied in tensor coordinates and
/// re-expanded exactly in the target dual canonical basis. Returns (index,
/// coefficient) pairs into `target`.
std::vector<std::pair<int, Rational>> lowering_on_dcb(
    const DualCanonicalVector& v, const std::vector<DualCanonicalVector>& target,
    const DcbExpander& target_expander, const Rational& q0);

/// The graphical lowering rule: flip the i-th up through-arrow from the right,
/// contract with the nearest up arrow to its left when present, weight [i].
/// Terms whose new arc closes inside one site's projector are dropped.
struct LoweringRuleTerm {
    CapDiagram cap;
    int downs;
    LaurentPoly coeff;   // [i]
};
std::vector<LoweringRuleTerm> lowering_rule(const DualCanonicalVector& v);

}  // namespace foel
