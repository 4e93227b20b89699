#include "foel/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace foel {

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) {
        min_exp_ = 0;
        coeffs_.push_back(constant);
    }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.min_exp_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

void LaurentPoly::normalize() {
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<Rational> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_ = std::move(trimmed);
        min_exp_ += static_cast<long>(lo);
    }
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1;
}

long LaurentPoly::min_exponent() const {
    if (is_zero()) throw DomainError("min_exponent of zero polynomial");
    return min_exp_;
}

long LaurentPoly::max_exponent() const {
    if (is_zero()) throw DomainError("max_exponent of zero polynomial");
    return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(long exponent) const {
    if (is_zero()) return Rational(0);
    long i = exponent - min_exp_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(min_exp_, o.min_exp_);
    long hi = std::max(max_exponent(), o.max_exponent());
    LaurentPoly out;
    out.min_exp_ = lo;
    out.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[static_cast<size_t>(min_exp_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        out.coeffs_[static_cast<size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly out;
    out.min_exp_ = min_exp_ + o.min_exp_;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    out.normalize();
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    if (min_exp_ != o.min_exp_) return min_exp_ < o.min_exp_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool LaurentPoly::try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quot) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quot) *quot = LaurentPoly();
        return true;
    }
    // Divide the shifted ordinary polynomials; Laurent shift is restored at the end.
    long shift = a.min_exp_ - b.min_exp_;
    std::vector<Rational> rem = a.coeffs_;
    const std::vector<Rational>& d = b.coeffs_;
    if (rem.size() < d.size()) return false;
    std::vector<Rational> q(rem.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(d.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lead;
        long off = i - (static_cast<long>(d.size()) - 1);
        q[off] = f;
        for (size_t j = 0; j < d.size(); ++j) rem[off + j] -= f * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quot) {
        LaurentPoly out;
        out.min_exp_ = shift;
        out.coeffs_ = std::move(q);
        out.normalize();
        *quot = out;
    }
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    LaurentPoly q;
    if (divisor.is_zero()) throw NotDivisible("division by zero polynomial");
    if (!try_exact_div(*this, divisor, &q))
        throw NotDivisible("nonzero remainder: (" + str() + ") / (" + divisor.str() + ")");
    return q;
}

LaurentPoly LaurentPoly::bar() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly out;
    out.min_exp_ = -max_exponent();
    out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return out;
}

Rational LaurentPoly::specialize(const Rational& q0) const {
    if (q0 <= 0) throw DomainError("specialize needs q0 > 0");
    Rational acc(0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            acc += coeffs_[i] * pow_rational(q0, min_exp_ + static_cast<long>(i));
    return acc;
}

double LaurentPoly::specialize_double(double q0) const {
    if (!(q0 > 0)) throw DomainError("specialize needs q0 > 0");
    double acc = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        acc += coeffs_[i].get_d() * std::pow(q0, static_cast<double>(min_exp_ + static_cast<long>(i)));
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        long e = min_exp_ + static_cast<long>(i);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
    switch (op) {
        case LaurentOp::Add: return a + b;
        case LaurentOp::Mul: return a * b;
        case LaurentOp::ExactDiv: return a.exact_div(b);
    }
    throw DomainError("unknown LaurentOp");
}

LaurentPoly q_integer(long n) {
    if (n < 0) throw DomainError("q_integer needs n >= 0");
    LaurentPoly p;
    for (long j = 0; j < n; ++j) p += LaurentPoly::q(-n + 1 + 2 * j);
    return p;
}

LaurentPoly q_factorial(long n) {
    if (n < 0) throw DomainError("q_factorial needs n >= 0");
    LaurentPoly p(1);
    for (long j = 2; j <= n; ++j) p *= q_integer(j);
    return p;
}

LaurentPoly q_binomial(long n, long k) {
    if (k < 0 || k > n) return LaurentPoly();
    try {
        return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k));
    } catch (const NotDivisible&) {
        throw InvariantViolation("q_binomial exact division failed");
    }
}

// ---- fractions ----

namespace {

// Euclidean gcd over Q[q] on the shifted (ordinary-polynomial) representatives.
LaurentPoly poly_mod(const LaurentPoly& a, const LaurentPoly& b) {
    // remainder of a by b as ordinary polynomials in q (both with min exponent 0)
    std::vector<Rational> rem = a.coefficients();
    const std::vector<Rational>& d = b.coefficients();
    const Rational& lead = d.back();
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(d.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lead;
        long off = i - (static_cast<long>(d.size()) - 1);
        for (size_t j = 0; j < d.size(); ++j) rem[off + j] -= f * d[j];
    }
    LaurentPoly out;
    for (size_t i = 0; i < rem.size(); ++i)
        out += LaurentPoly::monomial(rem[i], static_cast<long>(i));
    return out;
}

LaurentPoly drop_shift(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p * LaurentPoly::q(-p.min_exponent());
}

LaurentPoly make_monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p * LaurentPoly(Rational(1) / p.coeff(p.max_exponent()));
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = drop_shift(a);
    LaurentPoly y = drop_shift(b);
    while (!y.is_zero()) {
        if (x.coefficients().size() < y.coefficients().size()) {
            std::swap(x, y);
            continue;
        }
        LaurentPoly r = poly_mod(x, y);
        x = y;
        y = drop_shift(r);
    }
    return make_monic(x);
}

LaurentFraction::LaurentFraction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("fraction with zero denominator");
    reduce();
}

void LaurentFraction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    // canonical denominator: zero min exponent, leading coefficient 1
    long s = den_.min_exponent();
    if (s != 0) {
        den_ = den_ * LaurentPoly::q(-s);
        num_ = num_ * LaurentPoly::q(-s);
    }
    Rational lead = den_.coeff(den_.max_exponent());
    if (lead != 1) {
        LaurentPoly inv(Rational(1) / lead);
        den_ = den_ * inv;
        num_ = num_ * inv;
    }
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const {
    return *this + (-o);
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.num_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
    if (o.is_zero()) throw DomainError("division by zero fraction");
    return LaurentFraction(num_ * o.den_, den_ * o.num_);
}

bool LaurentFraction::operator==(const LaurentFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational LaurentFraction::specialize(const Rational& q0) const {
    Rational d = den_.specialize(q0);
    if (d == 0) throw DomainError("fraction denominator vanishes at q0");
    return num_.specialize(q0) / d;
}

std::string LaurentFraction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace foel
