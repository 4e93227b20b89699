#include "foel/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "foel/parallel.hpp"

namespace foel {

PerronResult perron_extremal(const RealMatrix& m, double tol, long max_iter) {
    if (m.rows() != m.cols()) throw ShapeError("perron needs a square matrix");
    const int n = m.rows();
    if (n == 0) throw DomainError("perron on an empty matrix");
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : m.row(r))
            if (v < 0) throw DomainError("perron needs a nonnegative matrix");

    std::vector<double> v(n, 1.0 / n);
    double rayleigh_prev = 0;
    PerronResult out;
    for (long it = 1; it <= max_iter; ++it) {
        std::vector<double> w(n, 0.0);
        for (int r = 0; r < n; ++r)
            for (const auto& [c, val] : m.row(r)) w[r] += val * v[c];
        double num = 0, den = 0, sum = 0;
        for (int i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
            sum += w[i];
        }
        double rayleigh = num / den;
        if (sum <= 0) throw InvariantViolation("power iterate collapsed to zero");
        for (int i = 0; i < n; ++i) {
            if (w[i] < 0) throw InvariantViolation("power iterate left the positive cone");
            v[i] = w[i] / sum;
        }
        if (it > 1 && std::abs(rayleigh - rayleigh_prev) <= tol) {
            out.rho = rayleigh;
            out.iterations = it;
            double residual = 0;
            std::vector<double> mv(n, 0.0);
            for (int r = 0; r < n; ++r)
                for (const auto& [c, val] : m.row(r)) mv[r] += val * v[c];
            for (int i = 0; i < n; ++i)
                residual = std::max(residual, std::abs(mv[i] - rayleigh * v[i]));
            out.residual = residual;
            out.vec = v;
            for (double x : v)
                if (!(x > 0))
                    throw InvariantViolation("Perron vector has a nonpositive entry");
            return out;
        }
        rayleigh_prev = rayleigh;
    }
    throw ConvergenceError("power iteration did not converge");
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a, double tol) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw ShapeError("jacobi needs a square matrix");
    if (n == 0) return {};
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * a[i][j] * a[i][j];
        if (std::sqrt(off) <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// Dense symmetric eigensolve of the sector matrix through the q-metric
// similarity; used only when the Perron route does not apply.
double sector_min_eigenvalue_dense(const SectorMatrix& sector, const ChainSpec& spec) {
    const int dim = sector.H.rows();
    // Gram matrix of the DCB and the restriction of the (symmetric) lifted H:
    // solve the generalized problem via congruent reduction B = L^{-1} A L^{-T}
    // with G = L L^T (float Cholesky).
    std::vector<std::vector<double>> g(dim, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> a(dim, std::vector<double>(dim, 0.0));
    LiftedChain lift(spec);
    std::vector<std::vector<double>> coords(dim), himg(dim);
    for (int j = 0; j < dim; ++j) {
        coords[j].reserve(sector.basis[j].coords.size());
        for (const auto& c : sector.basis[j].coords) coords[j].push_back(c.get_d());
        std::vector<Rational> img = lift.apply(sector.basis[j].coords);
        himg[j].reserve(img.size());
        for (const auto& c : img) himg[j].push_back(c.get_d());
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double gij = 0, aij = 0;
            for (size_t s = 0; s < coords[i].size(); ++s) {
                gij += coords[i][s] * coords[j][s];
                aij += coords[i][s] * himg[j][s];
            }
            g[i][j] = gij;
            a[i][j] = aij;
        }
    // Cholesky of G
    std::vector<std::vector<double>> l(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = g[i][j];
            for (int k = 0; k < j; ++k) sum -= l[i][k] * l[j][k];
            if (i == j) {
                if (sum <= 0) throw InvariantViolation("sector Gram matrix not positive");
                l[i][i] = std::sqrt(sum);
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    // B = L^{-1} A L^{-T}
    auto forward = [&](std::vector<double> col) {
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < i; ++k) col[i] -= l[i][k] * col[k];
            col[i] /= l[i][i];
        }
        return col;
    };
    std::vector<std::vector<double>> b(dim, std::vector<double>(dim, 0.0));
    for (int j = 0; j < dim; ++j) {
        std::vector<double> col(dim);
        for (int i = 0; i < dim; ++i) col[i] = a[i][j];
        col = forward(col);
        for (int i = 0; i < dim; ++i) b[i][j] = col[i];
    }
    for (int i = 0; i < dim; ++i) {
        std::vector<double> row(dim);
        for (int j = 0; j < dim; ++j) row[j] = b[i][j];
        row = forward(row);
        for (int j = 0; j < dim; ++j) b[i][j] = row[j];
    }
    return jacobi_eigenvalues(std::move(b)).front();
}

}  // namespace

std::vector<SectorEnergy> sector_energies(const ChainSpec& spec, double tol) {
    spec.validate();
    const int total = spec.total_weight();
    const int sectors = total / 2 + 1;
    std::vector<std::optional<SectorEnergy>> slots(sectors);
    parallel_for(sectors, [&](int k) {
        SectorMatrix sector = build_hamiltonian_sector(spec, k);
        const int dim = sector.H.rows();
        if (dim == 0) return;
        SectorEnergy e;
        e.k = k;
        e.sector_weight = sector.weight;
        e.total_spin = sector.weight / 2.0;
        e.dim = dim;
        if (dim == 1) {
            e.e0 = sector.H.at(0, 0).get_d();
            e.perron_vector = {1.0};
        } else {
            Rational t(0);
            for (int i = 0; i < dim; ++i) t = std::max(t, sector.H.at(i, i));
            t += 1;
            RatMatrix shifted(dim, dim);
            bool nonneg = true;
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    Rational v = (r == c ? t : Rational(0)) - sector.H.at(r, c);
                    if (v != 0) shifted.set(r, c, v);
                    if (v < 0) nonneg = false;
                }
            }
            if (nonneg && strongly_connected_support(shifted)) {
                PerronResult p = perron_extremal(to_real(shifted), tol);
                e.e0 = t.get_d() - p.rho;
                e.iterations = p.iterations;
                e.residual = p.residual;
                e.perron_vector = p.vec;
            } else {
                e.e0 = sector_min_eigenvalue_dense(sector, spec);
            }
        }
        slots[k] = std::move(e);
    });
    std::vector<SectorEnergy> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

FoelVerdict foel_verify(const ChainSpec& spec, double tol) {
    FoelVerdict verdict;
    verdict.sectors = sector_energies(spec);
    verdict.foel_holds = true;
    for (size_t i = 1; i < verdict.sectors.size(); ++i) {
        // ascending k = descending spin: E0 must not decrease with k
        if (verdict.sectors[i].e0 < verdict.sectors[i - 1].e0 - tol) {
            verdict.foel_holds = false;
            break;
        }
    }
    if (!verdict.foel_holds && spec.foel_cone() && spec.nondegenerate())
        verdict.theorem_violation = true;
    return verdict;
}

std::vector<Rational> cascade_spectrum_formula(int n1, int n2, int k, const Rational& q0) {
    if (n1 < n2) std::swap(n1, n2);
    if (k < 0 || k > n2) throw DomainError("cascade index out of range");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    std::vector<Rational> out;
    for (int j = 0; j <= n2; ++j) {
        if (n2 - j < k) {
            out.push_back(Rational(0));
            continue;
        }
        LaurentPoly num = q_factorial(n1 + k - j) * q_factorial(n1) * q_factorial(n2 - j) *
                          q_factorial(n2 - k);
        LaurentPoly den = q_factorial(n1 - j) * q_factorial(n1 + k) *
                          q_factorial(n2 - j - k) * q_factorial(n2);
        out.push_back(num.specialize(q0) / den.specialize(q0));
    }
    return out;
}

TwoSiteToolkit::TwoSiteToolkit(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1) throw DomainError("two_site_toolkit needs positive weights");
    const Rational one(1);
    for (int twice_j = std::abs(n1 - n2); twice_j <= n1 + n2; twice_j += 2)
        spins_.push_back(rat(twice_j, 2));

    const std::vector<int> w{n1, n2};
    RatMatrix e = chain_generator(Generator::E, w, one);
    RatMatrix f = chain_generator(Generator::F, w, one);
    // Sz from the weight; Casimir = Sz^2 + (EF + FE)/2 in the q = 1 basis
    const long dim = chain_dim(w);
    RatMatrix sz(static_cast<int>(dim), static_cast<int>(dim));
    for (int i1 = 0; i1 <= n1; ++i1)
        for (int i2 = 0; i2 <= n2; ++i2) {
            int idx = i1 * (n2 + 1) + i2;
            sz.set(idx, idx, rat((n1 - 2 * i1) + (n2 - 2 * i2), 2));
        }
    RatMatrix casimir = sz * sz + (e * f + f * e) * rat(1, 2);
    Rational c1 = rat(n1, 2) * (rat(n1, 2) + 1);
    Rational c2 = rat(n2, 2) * (rat(n2, 2) + 1);
    RatMatrix shift(static_cast<int>(dim), static_cast<int>(dim));
    for (int i = 0; i < dim; ++i) shift.set(i, i, c1 + c2);
    ss_ = (casimir - shift) * rat(1, 2);
}

Rational TwoSiteToolkit::energy(const Rational& j) const {
    Rational s = rat(n1_, 2) + rat(n2_, 2);
    return (s * (s + 1) - j * (j + 1)) / 2;
}

namespace {

// Lagrange interpolation through (x_i, y_i): coefficients constant-first.
std::vector<Rational> lagrange(const std::vector<Rational>& xs,
                               const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    std::vector<Rational> out(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (ys[i] == 0) continue;
        std::vector<Rational> term{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // term *= (z - xs[j])
            std::vector<Rational> next(term.size() + 1, Rational(0));
            for (size_t d = 0; d < term.size(); ++d) {
                next[d] += term[d] * (-xs[j]);
                next[d + 1] += term[d];
            }
            term = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (size_t d = 0; d < term.size(); ++d) out[d] += ys[i] * term[d] / denom;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

RatMatrix TwoSiteToolkit::eval_poly(const std::vector<Rational>& coeffs, const RatMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    RatMatrix power = RatMatrix::identity(m.rows());
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] != 0) out = out + power * coeffs[d];
        if (d + 1 < coeffs.size()) power = power * m;
    }
    return out;
}

RatMatrix TwoSiteToolkit::projector(const Rational& j) const {
    return eval_poly(projector_poly(j), ss_);
}

RatMatrix TwoSiteToolkit::indicator(const Rational& j) const {
    RatMatrix out(ss_.rows(), ss_.cols());
    for (const Rational& jp : spins_)
        if (jp >= j) out = out + projector(jp);
    return out;
}

std::vector<Rational> TwoSiteToolkit::projector_poly(const Rational& j) const {
    Rational c1 = rat(n1_, 2) * (rat(n1_, 2) + 1);
    Rational c2 = rat(n2_, 2) * (rat(n2_, 2) + 1);
    std::vector<Rational> xs, ys;
    for (const Rational& jp : spins_) {
        xs.push_back((jp * (jp + 1) - c1 - c2) / 2);   // S.S eigenvalue on spin jp
        ys.push_back(jp == j ? Rational(1) : Rational(0));
    }
    return lagrange(xs, ys);
}

std::vector<Rational> TwoSiteToolkit::monotone_poly(const Rational& j) const {
    std::vector<Rational> xs, ys;
    for (const Rational& jp : spins_) {
        xs.push_back(energy(jp));
        ys.push_back(jp <= j ? Rational(1) : Rational(0));
    }
    return lagrange(xs, ys);
}

}  // namespace foel
