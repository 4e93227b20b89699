#pragma once

#include <string>
#include <vector>

#include "foel/rational.hpp"

namespace foel {

/// Exact Laurent polynomial in q with rational coefficients.
///
/// Storage is a dense coefficient window [min_exponent, min_exponent + size):
/// coeff(min_exponent + i) = coeffs[i]. The canonical zero is the empty
/// window; every operation trims zero fringes so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);           // NOLINT: implicit by design
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly monomial(const Rational& c, long exponent);
    static LaurentPoly q(long exponent = 1) { return monomial(Rational(1), exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    long min_exponent() const;    // throws DomainError on zero
    long max_exponent() const;
    Rational coeff(long exponent) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;   // arbitrary total order (for maps)

    /// Exact quotient; throws NotDivisible when the remainder is nonzero.
    LaurentPoly exact_div(const LaurentPoly& divisor) const;
    static bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quot);

    /// q -> q^{-1}.
    LaurentPoly bar() const;
    bool palindromic() const { return *this == bar(); }

    Rational specialize(const Rational& q0) const;  // q0 > 0, exact
    double specialize_double(double q0) const;

    std::string str() const;  // for diagnostics and test failure messages

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rational> coeffs_;
};

enum class LaurentOp { Add, Mul, ExactDiv };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);

/// [n] = q^{-n+1} + q^{-n+3} + ... + q^{n-1}; [0] = 0.
LaurentPoly q_integer(long n);

/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly q_factorial(long n);

/// Balanced Gaussian binomial [n over k] = [n]!/([k]![n-k]!); zero outside 0<=k<=n.
/// Computed by exact division, so a division failure is a loud arithmetic bug.
LaurentPoly q_binomial(long n, long k);

/// Quotient of Laurent polynomials in canonical form: gcd removed, denominator
/// with unit leading coefficient and zero minimal exponent. Equality is
/// structural after reduction.
class LaurentFraction {
public:
    LaurentFraction() : num_(), den_(1) {}
    LaurentFraction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
    LaurentFraction(const Rational& c) : num_(c), den_(1) {}     // NOLINT
    LaurentFraction(long c) : num_(c), den_(1) {}                // NOLINT
    LaurentFraction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    LaurentFraction operator-() const;
    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const;
    LaurentFraction operator*(const LaurentFraction& o) const;
    LaurentFraction operator/(const LaurentFraction& o) const;
    LaurentFraction& operator+=(const LaurentFraction& o) { return *this = *this + o; }
    LaurentFraction& operator*=(const LaurentFraction& o) { return *this = *this * o; }
    bool operator==(const LaurentFraction& o) const;
    bool operator!=(const LaurentFraction& o) const { return !(*this == o); }

    Rational specialize(const Rational& q0) const;
    std::string str() const;

private:
    void reduce();

    LaurentPoly num_, den_;
};

/// gcd over Q[q, q^{-1}] (monic, zero min exponent); gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace foel
