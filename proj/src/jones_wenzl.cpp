#include "foel/jones_wenzl.hpp"

#include <mutex>
#include <vector>

namespace foel {

namespace {

IntDiagramSum compute_jw_scaled(int n, const std::vector<IntDiagramSum>& lower) {
    if (n == 1) return IntDiagramSum::identity(1);
    const IntDiagramSum& prev = lower[n - 1];
    IntDiagramSum a = tensor(prev, IntDiagramSum::identity(1));
    IntDiagramSum u(PlanarDiagram::u_gen(n, n - 1));
    IntDiagramSum mid = compose(compose(a, u), a);

    const LaurentPoly qn = q_integer(n);
    const LaurentPoly qn1 = q_integer(n - 1);
    const LaurentPoly fact_n1 = q_factorial(n - 1);

    IntDiagramSum out = a * qn;
    for (const auto& [d, c] : mid.terms())
        out.add(d, (c * qn1).exact_div(fact_n1));
    return out;
}

}  // namespace

const IntDiagramSum& jw_scaled(int n) {
    if (n < 1) throw DomainError("jones_wenzl needs n >= 1");
    static std::mutex mu;
    static std::vector<IntDiagramSum> cache;  // cache[n] = [n]! p_n
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(IntDiagramSum(0, 0));  // unused slot 0
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(compute_jw_scaled(static_cast<int>(cache.size()), cache));
    return cache[n];
}

DiagramCombination jones_wenzl(int n) {
    const IntDiagramSum& scaled = jw_scaled(n);
    const LaurentPoly fact = q_factorial(n);
    DiagramCombination out(n, n);
    for (const auto& [d, c] : scaled.terms()) out.add(d, LaurentFraction(c, fact));
    if (out.coeff(PlanarDiagram::identity(n)) != LaurentFraction(1))
        throw InvariantViolation("jones_wenzl identity coefficient is not 1");
    return out;
}

std::map<PlanarDiagram, LaurentPoly> jw_positive_expansion(int n) {
    const IntDiagramSum& scaled = jw_scaled(n);
    const long top = static_cast<long>(n) * (n - 1) / 2;
    std::map<PlanarDiagram, LaurentPoly> out;
    for (const auto& [d, c] : scaled.terms()) {
        if (c.max_exponent() > top)
            throw InvariantViolation("P(d) exceeds the q^{n(n-1)/2} bound for " + d.str());
        for (const Rational& coeff : c.coefficients()) {
            if (coeff < 0 || coeff.get_den() != 1)
                throw InvariantViolation("P(d) has a non-natural coefficient for " + d.str());
        }
        out.emplace(d, c);
    }
    return out;
}

std::vector<std::pair<long, LaurentFraction>> jwfk_coefficients(long m, long n) {
    if (m < 0 || n < 0) throw DomainError("jwfk needs m, n >= 0");
    std::vector<std::pair<long, LaurentFraction>> out;
    for (long k = 0; k <= std::min(m, n); ++k)
        out.push_back({k, LaurentFraction(q_binomial(m, k) * q_binomial(n, k),
                                          q_binomial(m + n, k))});
    return out;
}

LaurentFraction triangle_reduce(long j, long k, long l) {
    if (j < 0 || k < 0 || l < 0) throw DomainError("triangle_reduce needs j,k,l >= 0");
    return LaurentFraction(q_factorial(j + k) * q_factorial(k + l),
                           q_factorial(k) * q_factorial(j + k + l));
}

PlanarDiagram padded_nested_cap(int left, int k, int right) {
    int a = left + 2 * k + right, b = left + right;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < left; ++i) pairs.push_back({i, a + i});
    for (int i = 0; i < k; ++i) pairs.push_back({left + i, left + 2 * k - 1 - i});
    for (int i = 0; i < right; ++i) pairs.push_back({left + 2 * k + i, a + left + i});
    return PlanarDiagram(a, b, pairs);
}

PlanarDiagram padded_nested_cup(int left, int k, int right) {
    int a = left + right, b = left + 2 * k + right;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < left; ++i) pairs.push_back({i, a + i});
    for (int i = 0; i < k; ++i) pairs.push_back({a + left + i, a + left + 2 * k - 1 - i});
    for (int i = 0; i < right; ++i) pairs.push_back({left + i, a + left + 2 * k + i});
    return PlanarDiagram(a, b, pairs);
}

IntDiagramSum wenzl_form_direct(int n) {
    if (n < 1) throw DomainError("wenzl form needs n >= 1");
    if (n == 1) return IntDiagramSum::identity(1);
    IntDiagramSum a = tensor(jw_scaled(n - 1), IntDiagramSum::identity(1));
    IntDiagramSum mid = compose(compose(a, IntDiagramSum(PlanarDiagram::u_gen(n, n - 1))), a);
    IntDiagramSum out = a * q_integer(n);
    for (const auto& [d, c] : mid.terms())
        out.add(d, (c * q_integer(n - 1)).exact_div(q_factorial(n - 1)));
    return out;
}

IntDiagramSum wenzl_form_split(int n) {
    if (n < 1) throw DomainError("wenzl form needs n >= 1");
    if (n == 1) return IntDiagramSum::identity(1);
    IntDiagramSum a = tensor(jw_scaled(n - 1), IntDiagramSum::identity(1));
    IntDiagramSum down = compose(a, IntDiagramSum(padded_nested_cap(n - 2, 1, 0)));
    IntDiagramSum up = compose(IntDiagramSum(padded_nested_cup(n - 2, 1, 0)), a);
    IntDiagramSum mid = compose(down, up);
    IntDiagramSum out = a * q_integer(n);
    for (const auto& [d, c] : mid.terms())
        out.add(d, (c * q_integer(n - 1)).exact_div(q_factorial(n - 1)));
    return out;
}

IntDiagramSum single_clasp_lhs(int n) {
    if (n < 1) throw DomainError("single clasp needs n >= 1");
    IntDiagramSum pn1 = tensor(jw_scaled(n), IntDiagramSum::identity(1));
    return compose(pn1, IntDiagramSum(padded_nested_cap(n - 1, 1, 0)));
}

IntDiagramSum single_clasp_rhs(int n) {
    if (n < 1) throw DomainError("single clasp needs n >= 1");
    const IntDiagramSum prev = n == 1 ? IntDiagramSum(PlanarDiagram(0, 0, {}))
                                      : jw_scaled(n - 1);
    IntDiagramSum out(n + 1, n - 1);
    for (int k = 1; k <= n; ++k) {
        IntDiagramSum caps(padded_nested_cap(k - 1, 1, n - k));
        IntDiagramSum term = compose(caps, prev);
        const LaurentPoly qk = q_integer(k);
        for (const auto& [d, c] : term.terms()) out.add(d, c * qk);
    }
    return out;
}

}  // namespace foel
