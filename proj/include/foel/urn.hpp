#pragma once

#include <string>
#include <vector>

#include "foel/sparse.hpp"

namespace foel {

/// Exchange-size distribution for one bond of the urn chain.
struct MixingLaw {
    enum class Type { HypergeometricMixture, Explicit };
    Type type = Type::Explicit;
    /// HypergeometricMixture: convex weights over rho_0..rho_n.
    /// Explicit: the probabilities of exchanging 0..n balls directly.
    std::vector<Rational> values;
};

/// L urns of n two-colored balls with Poisson bond rates and per-bond mixing
/// laws. The Markov state is the red-ball count per urn.
struct UrnModel {
    int L = 0;
    int n = 0;
    std::vector<Rational> rates;       // one per bond
    std::vector<MixingLaw> mixing;     // one per bond

    void validate() const;
    /// Effective exchange-size distribution of bond b (mixtures expanded).
    std::vector<Rational> bond_distribution(int b) const;

    std::string to_json() const;
    static UrnModel from_json(const std::string& text);
    static UrnModel from_file(const std::string& path);
};

/// rho_k({j}) = C(k,j) C(n,k-j) / C(n+k,k), the mixing law that ties the urn
/// chain to the cascade interactions. Sums to 1 by Vandermonde.
std::vector<Rational> hypergeometric_rho(int n, int k);

/// All configurations (k_1..k_L) with sum = red_total, 0 <= k_x <= n,
/// lexicographic.
std::vector<std::vector<int>> urn_configurations(int L, int n, int red_total);

/// Markov generator on the red_total sector: off-diagonal rates from uniform
/// N-ball swaps, rows summing to zero. Reversible w.r.t. the product-binomial
/// measure prod_x C(n, k_x).
RatMatrix build_urn_generator(const UrnModel& model, int red_total);

/// Spectral gap per sector k = 1..nL-1: the second-smallest eigenvalue of
/// -generator, from the measure-symmetrized dense matrix.
std::vector<std::pair<int, double>> sector_gaps(const UrnModel& model);

}  // namespace foel
