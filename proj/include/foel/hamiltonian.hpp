#pragma once

#include <optional>
#include <string>

#include "foel/dcb.hpp"
#include "foel/laurent.hpp"
#include "foel/sparse.hpp"

namespace foel {

/// Chain description: site weights n_i = 2s_i, per-bond couplings J_k^{(i)}
/// for k = 0..min(n_i, n_{i+1}), and a positive rational q.
struct ChainSpec {
    std::vector<int> weights;
    std::vector<std::vector<Rational>> couplings;
    Rational q0 = Rational(1);

    int length() const { return static_cast<int>(weights.size()); }
    int total_weight() const;
    /// True when every J_k with k >= 1 is <= 0 (the hypothesis of the main theorem).
    bool foel_cone() const;
    /// True when every bond has some k >= 1 with J_k != 0.
    bool nondegenerate() const;
    void validate() const;

    std::string to_json() const;
    static ChainSpec from_json(const std::string& text);
    static ChainSpec from_file(const std::string& path);
};

/// K_{m,n}(k) = (U_{m,n}^{m+k,n-k})* U_{m,n}^{m+k,n-k} on V(m)(x)V(n),
/// dimension (m+1)(n+1); -m <= k <= n. Positive semidefinite w.r.t. the
/// diagonal q-inner product (exactly PSD-checkable via psd_gram_check).
RatMatrix cascade_operator(int m, int n, int k, const Rational& q0);

/// The l-arc Temperley-Lieb basis element of End(V(m)(x)V(n)), 0 <= l <= min(m,n).
RatMatrix tl_basis_element(int m, int n, int l, const Rational& q0);

/// Coefficients of K_{m,n}(k) over the TL basis: (l, [m over l][k over l]/[m+k over l]).
std::vector<std::pair<int, LaurentFraction>> cascade_to_tl_coeffs(int m, int n, int k);

/// Q_{jkl} matrix element of the cascade expansion (zero outside the
/// admissible index region). Convention n_i >= n_{i+1}; arguments are swapped
/// internally otherwise.
LaurentFraction q_matrix_element(int n_i, int n_ip1, int j, int k, int l);

/// Exact positive-semidefiniteness witness: verifies M * K = G^T G where M is
/// the q-metric, which proves K has real nonnegative spectrum.
bool psd_gram_check(int m, int n, int k, const Rational& q0);

/// Full Hamiltonian on the site tensor space (x)_i V(n_i).
/// Throws ResourceError when sum n_i exceeds `cap`.
RatMatrix build_hamiltonian_full(const ChainSpec& spec, int cap = 14);

/// Hamiltonian restricted to the weight-(N-2k) highest-weight sector,
/// expressed in the dual canonical basis.
struct SectorMatrix {
    int k = 0;
    int weight = 0;
    RatMatrix H;
    std::vector<DualCanonicalVector> basis;
};
SectorMatrix build_hamiltonian_sector(const ChainSpec& spec, int k, int cap = 14);

/// Applies the site Hamiltonian lifted to V(1)^{(x)N} to tensor coordinates.
class LiftedChain {
public:
    LiftedChain(const ChainSpec& spec, int cap = 14);
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    long dim() const { return tensor_dim_; }

private:
    std::vector<int> weights_;
    long tensor_dim_;
    RatMatrix down_;   // (x)_i T_{n_i}
    RatMatrix up_;     // (x)_i T_{n_i}*
    RatMatrix h_site_;
};

/// Strong connectivity of the off-diagonal support digraph of a square matrix.
bool strongly_connected_support(const RatMatrix& h);

/// Structural certificate for one highest-weight sector.
struct StructuralReport {
    bool offdiag_nonpositive = true;
    std::optional<std::pair<int, int>> positive_offdiag;  // first offender
    bool irreducible = false;
    bool arc_nondecreasing = true;
    std::optional<std::pair<std::string, std::string>> arc_drop;  // offender labels
};
StructuralReport structural_checks(const SectorMatrix& sector, const ChainSpec& spec);

}  // namespace foel
