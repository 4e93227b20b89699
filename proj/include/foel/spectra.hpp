#pragma once

#include <map>

#include "foel/hamiltonian.hpp"

namespace foel {

/// Dominant eigenpair of a nonnegative irreducible matrix by power iteration
/// from the uniform positive start vector. Convergence: successive Rayleigh
/// quotients differ by at most tol. Throws DomainError on a negative entry,
/// ConvergenceError past max_iter, InvariantViolation if the limit vector is
/// not strictly positive.
struct PerronResult {
    double rho = 0;
    std::vector<double> vec;   // entries > 0, summing to 1
    long iterations = 0;
    double residual = 0;       // max-norm of M v - rho v
};
PerronResult perron_extremal(const RealMatrix& m, double tol = 1e-12,
                             long max_iter = 1000000);

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// ascending. Small sizes only; used as the independent spectral oracle and
/// by the urn module.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a,
                                       double tol = 1e-13);

/// Ground energy per total-spin sector.
struct SectorEnergy {
    int k = 0;              // arcs removed from the top sector
    int sector_weight = 0;  // N - 2k
    double total_spin = 0;  // sector_weight / 2
    double e0 = 0;
    int dim = 0;
    long iterations = 0;
    double residual = 0;
    std::vector<double> perron_vector;
};

/// E_0 per nonempty highest-weight sector, via Perron iteration on t - H in
/// the dual canonical basis (t = max diagonal + 1). Falls back to the dense
/// symmetric solver when t - H has negative entries or is reducible (possible
/// only outside the cone).
std::vector<SectorEnergy> sector_energies(const ChainSpec& spec, double tol = 1e-12);

struct FoelVerdict {
    std::vector<SectorEnergy> sectors;  // ascending k (descending spin)
    bool foel_holds = false;
    /// Set when the spec lies in the cone with nondegenerate bonds yet FOEL
    /// failed: the main theorem guarantees this cannot happen, so it means a bug.
    bool theorem_violation = false;
};
FoelVerdict foel_verify(const ChainSpec& spec, double tol = 1e-9);

/// Closed-form cascade spectrum: lambda_j for deviate j = 0..min(n1,n2)
/// (total spin (n1+n2-2j)/2); zero when min(n1,n2) - j < k after the
/// n1 >= n2 normalization. Exact rationals at q0.
std::vector<Rational> cascade_spectrum_formula(int n1, int n2, int k, const Rational& q0);

/// Unnormalized spin matrices and projector algebra for a pair of sites at
/// q = 1, everything exact rational. Arguments are doubled spins n = 2s.
class TwoSiteToolkit {
public:
    TwoSiteToolkit(int n1, int n2);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    /// Admissible total spins j, ascending (|s1-s2| .. s1+s2), as rationals.
    const std::vector<Rational>& spins() const { return spins_; }
    /// E_{s1,s2}(j) = ((s1+s2)(s1+s2+1) - j(j+1))/2.
    Rational energy(const Rational& j) const;
    /// Heisenberg coupling S.S as an exact matrix on V(n1)(x)V(n2).
    const RatMatrix& heisenberg() const { return ss_; }
    /// Projector onto total spin j.
    RatMatrix projector(const Rational& j) const;
    /// Indicator X_j = sum_{j' >= j} P^{(j')}.
    RatMatrix indicator(const Rational& j) const;
    /// Coefficients (constant first) of P^{(j)} as a polynomial in S.S.
    std::vector<Rational> projector_poly(const Rational& j) const;
    /// Monotone step polynomial Q_j: Q_j(E(j')) = 1 for j' <= j, else 0.
    /// Coefficients in z, constant first.
    std::vector<Rational> monotone_poly(const Rational& j) const;
    /// Evaluates a polynomial (constant first) on a square matrix.
    static RatMatrix eval_poly(const std::vector<Rational>& coeffs, const RatMatrix& m);

private:
    int n1_, n2_;
    std::vector<Rational> spins_;
    RatMatrix ss_;
};

}  // namespace foel
