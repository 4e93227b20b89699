#include "foel/dcb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace foel {

int DualCanonicalVector::strand_count() const {
    return std::accumulate(site_weights.begin(), site_weights.end(), 0);
}

std::string DualCanonicalVector::label() const {
    std::ostringstream os;
    os << cap.str() << " downs=" << downs;
    return os.str();
}

std::vector<Rational> cap_image(const CapDiagram& cap, int downs, const Rational& q0) {
    const int N = cap.L;
    const int t = static_cast<int>(cap.through.size());
    if (downs < 0 || downs > t) throw DomainError("bad down-arrow count");
    std::vector<Rational> v(tensor_dim(N), Rational(0));
    long base = 0;
    for (int i = 0; i < downs; ++i) base |= 1L << (N - 1 - cap.through[i]);
    const int k = cap.k();
    const Rational mqinv = -Rational(1) / q0;
    for (long mask = 0; mask < (1L << k); ++mask) {
        long s = base;
        Rational coeff(1);
        for (int c = 0; c < k; ++c) {
            auto [l, r] = cap.arcs[c];
            if ((mask >> c) & 1) {
                s |= 1L << (N - 1 - l);   // (down, up) term of delta
                coeff *= mqinv;
            } else {
                s |= 1L << (N - 1 - r);   // (up, down) term
            }
        }
        v[s] += coeff;
    }
    return v;
}

void project_sites(std::vector<Rational>& coords, const std::vector<int>& weights,
                   const Rational& q0) {
    const int N = std::accumulate(weights.begin(), weights.end(), 0);
    if (static_cast<long>(coords.size()) != tensor_dim(N))
        throw ShapeError("coordinate size does not match total strand count");
    int offset = 0;
    for (int n : weights) {
        if (n >= 2) {
            RatMatrix p = symmetrizer_inject(n, q0) * symmetrizer_project(n, q0);
            // contract the block of n strands starting at `offset`
            const long right = 1L << (N - offset - n);
            const long mid = 1L << n;
            const long left = 1L << offset;
            std::vector<Rational> slice(mid);
            for (long a = 0; a < left; ++a) {
                for (long b = 0; b < right; ++b) {
                    const long stride = right;
                    const long base = a * (mid * right) + b;
                    for (long m = 0; m < mid; ++m) slice[m] = coords[base + m * stride];
                    for (long m = 0; m < mid; ++m) {
                        Rational acc(0);
                        for (const auto& [c, val] : p.row(static_cast<int>(m)))
                            acc += val * slice[c];
                        coords[base + m * stride] = acc;
                    }
                }
            }
        }
        offset += n;
    }
}

namespace {

std::vector<DualCanonicalVector> build_vectors(const std::vector<int>& weights, int arcs,
                                               int downs, const Rational& q0) {
    const int N = std::accumulate(weights.begin(), weights.end(), 0);
    std::vector<DualCanonicalVector> out;
    for (const CapDiagram& cap : enumerate_caps(N, arcs)) {
        if (downs > static_cast<int>(cap.through.size())) continue;
        DualCanonicalVector v;
        v.site_weights = weights;
        v.cap = cap;
        v.downs = downs;
        v.coords = cap_image(cap, downs, q0);
        project_sites(v.coords, weights, q0);
        bool zero = std::all_of(v.coords.begin(), v.coords.end(),
                                [](const Rational& c) { return c == 0; });
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<DualCanonicalVector> dcb_basis(const std::vector<int>& weights, int k,
                                           const Rational& q0) {
    const int N = std::accumulate(weights.begin(), weights.end(), 0);
    if (k < 0 || 2 * k > N) throw DomainError("dcb_basis needs 0 <= 2k <= sum(weights)");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    return build_vectors(weights, k, 0, q0);
}

std::vector<DualCanonicalVector> dcb_weight_basis(const std::vector<int>& weights,
                                                  int k_total, const Rational& q0) {
    const int N = std::accumulate(weights.begin(), weights.end(), 0);
    if (k_total < 0 || k_total > N) throw DomainError("bad weight-space index");
    std::vector<DualCanonicalVector> out;
    for (int arcs = 0; arcs <= std::min(k_total, N / 2); ++arcs) {
        auto part = build_vectors(weights, arcs, k_total - arcs, q0);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

DcbExpander::DcbExpander(const std::vector<DualCanonicalVector>& basis) {
    dim_ = static_cast<int>(basis.size());
    if (dim_ == 0) return;
    full_dim_ = static_cast<long>(basis[0].coords.size());
    std::vector<bool> used(full_dim_, false);
    for (const auto& v : basis)
        for (long s = 0; s < full_dim_; ++s)
            if (v.coords[s] != 0) used[s] = true;
    for (long s = 0; s < full_dim_; ++s)
        if (used[s]) support_.push_back(s);
    const int m = static_cast<int>(support_.size());
    basis_rows_.assign(m, std::vector<Rational>(dim_, Rational(0)));
    for (int j = 0; j < dim_; ++j)
        for (int r = 0; r < m; ++r) basis_rows_[r][j] = basis[j].coords[support_[r]];

    // gram = S^T S, then pinv = gram^{-1} S^T by Gauss-Jordan
    std::vector<std::vector<Rational>> gram(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < dim_; ++i) {
            if (basis_rows_[r][i] == 0) continue;
            for (int j = i; j < dim_; ++j) gram[i][j] += basis_rows_[r][i] * basis_rows_[r][j];
        }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j) gram[i][j] = gram[j][i];

    std::vector<std::vector<Rational>> inv(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (int i = 0; i < dim_; ++i) inv[i][i] = 1;
    for (int col = 0; col < dim_; ++col) {
        int pivot = -1;
        for (int r = col; r < dim_; ++r)
            if (gram[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InvariantViolation("dual canonical vectors are linearly dependent");
        std::swap(gram[pivot], gram[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = gram[col][col];
        for (int c = 0; c < dim_; ++c) {
            gram[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == col || gram[r][col] == 0) continue;
            Rational f = gram[r][col];
            for (int c = 0; c < dim_; ++c) {
                gram[r][c] -= f * gram[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    pinv_.assign(dim_, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < dim_; ++i)
        for (int r = 0; r < m; ++r) {
            Rational acc(0);
            for (int j = 0; j < dim_; ++j) {
                if (basis_rows_[r][j] == 0) continue;
                acc += inv[i][j] * basis_rows_[r][j];
            }
            pinv_[i][r] = acc;
        }
}

std::vector<Rational> DcbExpander::expand(const std::vector<Rational>& v) const {
    if (dim_ == 0) {
        for (const auto& c : v)
            if (c != 0) throw InvariantViolation("nonzero vector in an empty basis");
        return {};
    }
    if (static_cast<long>(v.size()) != full_dim_) throw ShapeError("expand: wrong vector size");
    const int m = static_cast<int>(support_.size());
    std::vector<Rational> rhs(m);
    for (int r = 0; r < m; ++r) rhs[r] = v[support_[r]];
    std::vector<Rational> x(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
        Rational acc(0);
        for (int r = 0; r < m; ++r)
            if (rhs[r] != 0) acc += pinv_[i][r] * rhs[r];
        x[i] = acc;
    }
    // exact residual check, both on and off the support
    std::vector<Rational> recon(m, Rational(0));
    for (int r = 0; r < m; ++r) {
        Rational acc(0);
        for (int i = 0; i < dim_; ++i)
            if (x[i] != 0) acc += basis_rows_[r][i] * x[i];
        if (acc != rhs[r]) throw InvariantViolation("vector not in the span of the basis");
    }
    size_t si = 0;
    for (long s = 0; s < full_dim_; ++s) {
        if (si < support_.size() && support_[si] == s) {
            ++si;
            continue;
        }
        if (v[s] != 0) throw InvariantViolation("vector not supported on the basis span");
    }
    return x;
}

RatMatrix dcb_generator_matrix(Generator which, const std::vector<int>& weights,
                               int k_total, const Rational& q0) {
    const int N = std::accumulate(weights.begin(), weights.end(), 0);
    auto src = dcb_weight_basis(weights, k_total, q0);
    if (which == Generator::K || which == Generator::Kinv) {
        RatMatrix out(static_cast<int>(src.size()), static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            long e = which == Generator::K ? src[j].weight() : -src[j].weight();
            out.set(static_cast<int>(j), static_cast<int>(j), pow_rational(q0, e));
        }
        return out;
    }
    if (which != Generator::E && which != Generator::F)
        throw DomainError("dcb_generator_matrix supports E, F, K, Kinv");
    const int k_dst = which == Generator::E ? k_total - 1 : k_total + 1;
    std::vector<DualCanonicalVector> dst;
    if (k_dst >= 0 && k_dst <= N) dst = dcb_weight_basis(weights, k_dst, q0);
    RatMatrix gen = fundamental_action(which, N, q0);
    DcbExpander expander(dst);
    RatMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        std::vector<Rational> img = gen.apply(src[j].coords);
        std::vector<Rational> x = expander.expand(img);
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out.set(static_cast<int>(i), static_cast<int>(j), x[i]);
    }
    for (size_t j = 0; j < src.size(); ++j) out.col_labels.push_back(src[j].label());
    for (size_t i = 0; i < dst.size(); ++i) out.row_labels.push_back(dst[i].label());
    return out;
}

std::vector<std::pair<int, Rational>> lowering_on_dcb(
    const DualCanonicalVector& v, const std::vector<DualCanonicalVector>& target,
    const DcbExpander& target_expander, const Rational& q0) {
    const int N = v.strand_count();
    if (target_expander.dim() != static_cast<int>(target.size()))
        throw ShapeError("expander does not match the target basis");
    RatMatrix f = fundamental_action(Generator::F, N, q0);
    std::vector<Rational> img = f.apply(v.coords);
    std::vector<Rational> x = target_expander.expand(img);
    std::vector<std::pair<int, Rational>> out;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out.push_back({static_cast<int>(i), x[i]});
    return out;
}

std::vector<LoweringRuleTerm> lowering_rule(const DualCanonicalVector& v) {
    std::vector<LoweringRuleTerm> out;
    const auto& through = v.cap.through;
    const int t = static_cast<int>(through.size());
    const int ups = t - v.downs;
    // site block of each strand, for the dropped within-projector arcs
    std::vector<int> site(v.strand_count());
    {
        int pos = 0, s = 0;
        for (int n : v.site_weights) {
            for (int i = 0; i < n; ++i) site[pos++] = s;
            ++s;
        }
    }
    for (int i = 1; i <= ups; ++i) {             // i-th up arrow from the right
        int idx = t - i;                          // index into `through`
        if (idx > v.downs) {
            // nearest up arrow to the left: contract into a new arc
            int left = through[idx - 1], right = through[idx];
            if (site[left] == site[right]) continue;  // dies under the projector
            CapDiagram cap = v.cap;
            cap.arcs.push_back({left, right});
            std::sort(cap.arcs.begin(), cap.arcs.end(),
                      [](const auto& a, const auto& b) { return a.second < b.second; });
            cap.through.erase(
                std::remove_if(cap.through.begin(), cap.through.end(),
                               [&](int p) { return p == left || p == right; }),
                cap.through.end());
            out.push_back({std::move(cap), v.downs, q_integer(i)});
        } else {
            // leftmost up arrow: it simply flips
            out.push_back({v.cap, v.downs + 1, q_integer(i)});
        }
    }
    return out;
}

}  // namespace foel
