#include "foel/tensor_rep.hpp"

#include <bit>

namespace foel {

namespace {

Rational q_int_at(long n, const Rational& q0) {
    Rational acc(0);
    for (long j = 0; j < n; ++j) acc += pow_rational(q0, -n + 1 + 2 * j);
    return acc;
}

Rational q_binom_at(long n, long k, const Rational& q0) {
    if (k < 0 || k > n) return Rational(0);
    Rational acc(1);
    for (long j = 1; j <= k; ++j)
        acc *= q_int_at(n - j + 1, q0) / q_int_at(j, q0);
    return acc;
}

int weight_of(long state, int N) {
    return N - 2 * std::popcount(static_cast<unsigned long>(state));
}

// ||s||_- counts (down, up) inversions left to right; ||s||_+ counts (up, down).
long norm_minus(long state, int N) {
    long count = 0, ups_seen = 0;
    for (int i = N - 1; i >= 0; --i) {   // scan right to left counting ups to the right
        if (arrow_at(state, N, i) == +1) ++ups_seen;
        else count += ups_seen;
    }
    return count;
}

long norm_plus(long state, int N) {
    long count = 0, downs_seen = 0;
    for (int i = N - 1; i >= 0; --i) {
        if (arrow_at(state, N, i) == -1) ++downs_seen;
        else count += downs_seen;
    }
    return count;
}

}  // namespace

long chain_dim(const std::vector<int>& weights) {
    long d = 1;
    for (int n : weights) d *= (n + 1);
    return d;
}

RatMatrix fundamental_action(Generator which, int N, const Rational& q0, int pos) {
    if (q0 <= 0) throw DomainError("q0 must be positive");
    const long dim = tensor_dim(N);
    switch (which) {
        case Generator::Delta: {
            if (N < 2 || pos < 1 || pos > N - 1) throw DomainError("delta position out of range");
            RatMatrix out(dim, dim / 4);
            const Rational mqinv = -Rational(1) / q0;
            for (long s = 0; s < dim / 4; ++s) {
                // splice two arrows in at 0-based positions pos-1, pos
                long high = s >> (N - 1 - pos);          // arrows left of the insertion
                long low = s & ((1L << (N - 1 - pos)) - 1);
                long base = (high << (N + 1 - pos)) | low;
                long updown = base | (1L << (N - 1 - pos));
                long downup = base | (1L << (N - pos));
                out.add(updown, s, Rational(1));
                out.add(downup, s, mqinv);
            }
            return out;
        }
        case Generator::Epsilon: {
            if (N < 2 || pos < 1 || pos > N - 1) throw DomainError("epsilon position out of range");
            RatMatrix out(dim / 4, dim);
            for (long s = 0; s < dim; ++s) {
                int a1 = arrow_at(s, N, pos - 1), a2 = arrow_at(s, N, pos);
                if (a1 == a2) continue;
                long high = s >> (N + 1 - pos);
                long low = s & ((1L << (N - 1 - pos)) - 1);
                long target = (high << (N - 1 - pos)) | low;
                out.add(target, s, a1 == +1 ? -q0 : Rational(1));
            }
            return out;
        }
        case Generator::U: {
            if (pos < 1 || pos > N - 1) throw DomainError("U position out of range");
            return fundamental_action(Generator::Delta, N, q0, pos) *
                   fundamental_action(Generator::Epsilon, N, q0, pos);
        }
        case Generator::E: {
            RatMatrix out(dim, dim);
            for (long s = 0; s < dim; ++s) {
                for (int i = 0; i < N; ++i) {
                    if (arrow_at(s, N, i) != -1) continue;
                    Rational coeff(1);   // K weights on the factors to the right
                    for (int j = i + 1; j < N; ++j)
                        coeff *= pow_rational(q0, arrow_at(s, N, j));
                    out.add(flip_arrow(s, N, i), s, coeff);
                }
            }
            return out;
        }
        case Generator::F: {
            RatMatrix out(dim, dim);
            for (long s = 0; s < dim; ++s) {
                for (int i = 0; i < N; ++i) {
                    if (arrow_at(s, N, i) != +1) continue;
                    Rational coeff(1);   // K^{-1} weights on the factors to the left
                    for (int j = 0; j < i; ++j)
                        coeff *= pow_rational(q0, -arrow_at(s, N, j));
                    out.add(flip_arrow(s, N, i), s, coeff);
                }
            }
            return out;
        }
        case Generator::K: {
            RatMatrix out(dim, dim);
            for (long s = 0; s < dim; ++s) out.set(s, s, pow_rational(q0, weight_of(s, N)));
            return out;
        }
        case Generator::Kinv: {
            RatMatrix out(dim, dim);
            for (long s = 0; s < dim; ++s) out.set(s, s, pow_rational(q0, -weight_of(s, N)));
            return out;
        }
    }
    throw DomainError("unknown generator");
}

RatMatrix symmetrizer_project(int n, const Rational& q0) {
    if (n < 1) throw DomainError("symmetrizer needs n >= 1");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    const long dim = tensor_dim(n);
    RatMatrix out(n + 1, dim);
    for (long s = 0; s < dim; ++s) {
        int idx = std::popcount(static_cast<unsigned long>(s));  // number of downs
        out.add(idx, s, pow_rational(q0, norm_minus(s, n)));
    }
    return out;
}

RatMatrix symmetrizer_inject(int n, const Rational& q0) {
    if (n < 1) throw DomainError("symmetrizer needs n >= 1");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    const long dim = tensor_dim(n);
    RatMatrix out(dim, n + 1);
    std::vector<Rational> norm(n + 1);
    for (int b = 0; b <= n; ++b) norm[b] = Rational(1) / q_binom_at(n, b, q0);
    for (long s = 0; s < dim; ++s) {
        int idx = std::popcount(static_cast<unsigned long>(s));
        out.add(s, idx, norm[idx] * pow_rational(q0, -norm_plus(s, n)));
    }
    return out;
}

RatMatrix represent(const PlanarDiagram& d, const Rational& q0) {
    if (q0 <= 0) throw DomainError("q0 must be positive");
    const int a = d.bottom_count(), b = d.top_count();
    const auto bpairs = d.bottom_pairs();
    const auto tpairs = d.top_pairs();
    const auto through = d.through_pairs();
    RatMatrix out(tensor_dim(b), tensor_dim(a));
    const long ncup = static_cast<long>(tpairs.size());
    for (long s = 0; s < tensor_dim(a); ++s) {
        Rational factor(1);
        bool dead = false;
        for (auto [i, j] : bpairs) {
            int ai = arrow_at(s, a, i), aj = arrow_at(s, a, j);
            if (ai == aj) {
                dead = true;
                break;
            }
            if (ai == +1) factor *= -q0;   // eps(up, down) = -q
        }
        if (dead) continue;
        long base = 0;
        for (auto [i, j] : through)
            if (arrow_at(s, a, i) == -1) base |= 1L << (b - 1 - j);
        for (long mask = 0; mask < (1L << ncup); ++mask) {
            Rational coeff = factor;
            long t = base;
            for (long c = 0; c < ncup; ++c) {
                auto [i, j] = tpairs[c];
                if ((mask >> c) & 1) {
                    t |= 1L << (b - 1 - i);   // (down, up) term of delta
                    coeff *= -Rational(1) / q0;
                } else {
                    t |= 1L << (b - 1 - j);   // (up, down) term
                }
            }
            out.add(t, s, coeff);
        }
    }
    return out;
}

RatMatrix represent(const DiagramCombination& f, const Rational& q0) {
    RatMatrix out(tensor_dim(f.cod()), tensor_dim(f.dom()));
    for (const auto& [d, c] : f.terms()) {
        Rational scalar = c.specialize(q0);
        if (scalar == 0) continue;
        out = out + represent(d, q0) * scalar;
    }
    return out;
}

RatMatrix represent(const IntDiagramSum& f, const Rational& q0) {
    RatMatrix out(tensor_dim(f.cod()), tensor_dim(f.dom()));
    for (const auto& [d, c] : f.terms()) {
        Rational scalar = c.specialize(q0);
        if (scalar == 0) continue;
        out = out + represent(d, q0) * scalar;
    }
    return out;
}

RatMatrix site_generator(Generator which, int n, const Rational& q0) {
    if (n < 0) throw DomainError("site weight must be nonnegative");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    RatMatrix out(n + 1, n + 1);
    switch (which) {
        case Generator::E:
            for (int i = 1; i <= n; ++i) out.set(i - 1, i, q_int_at(i, q0));
            return out;
        case Generator::F:
            for (int i = 0; i < n; ++i) out.set(i + 1, i, q_int_at(n - i, q0));
            return out;
        case Generator::K:
            for (int i = 0; i <= n; ++i) out.set(i, i, pow_rational(q0, n - 2 * i));
            return out;
        case Generator::Kinv:
            for (int i = 0; i <= n; ++i) out.set(i, i, pow_rational(q0, 2 * i - n));
            return out;
        default:
            throw DomainError("site_generator supports E, F, K, Kinv");
    }
}

RatMatrix chain_generator(Generator which, const std::vector<int>& weights, const Rational& q0) {
    if (weights.empty()) throw DomainError("empty chain");
    if (which == Generator::K || which == Generator::Kinv) {
        RatMatrix out = site_generator(which, weights[0], q0);
        for (size_t i = 1; i < weights.size(); ++i)
            out = out.kron(site_generator(which, weights[i], q0));
        return out;
    }
    if (which != Generator::E && which != Generator::F)
        throw DomainError("chain_generator supports E, F, K, Kinv");
    const long dim = chain_dim(weights);
    RatMatrix out(dim, dim);
    for (size_t j = 0; j < weights.size(); ++j) {
        RatMatrix term(1, 1);
        term.set(0, 0, Rational(1));
        for (size_t i = 0; i < weights.size(); ++i) {
            RatMatrix factor;
            if (i == j) {
                factor = site_generator(which, weights[i], q0);
            } else if (which == Generator::E && i > j) {
                factor = site_generator(Generator::K, weights[i], q0);
            } else if (which == Generator::F && i < j) {
                factor = site_generator(Generator::Kinv, weights[i], q0);
            } else {
                factor = RatMatrix::identity(weights[i] + 1);
            }
            term = term.kron(factor);
        }
        out = out + term;
    }
    return out;
}

RatMatrix site_metric(int n, const Rational& q0) {
    RatMatrix out(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        long a = n - i, b = i;
        out.set(i, i, pow_rational(q0, -a * b) / q_binom_at(n, b, q0));
    }
    return out;
}

RatMatrix chain_metric(const std::vector<int>& weights, const Rational& q0) {
    if (weights.empty()) throw DomainError("empty chain");
    RatMatrix out = site_metric(weights[0], q0);
    for (size_t i = 1; i < weights.size(); ++i)
        out = out.kron(site_metric(weights[i], q0));
    return out;
}

}  // namespace foel
