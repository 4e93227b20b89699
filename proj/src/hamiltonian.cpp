#include "foel/hamiltonian.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "foel/jones_wenzl.hpp"

namespace foel {

using nlohmann::json;

int ChainSpec::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0);
}

bool ChainSpec::foel_cone() const {
    for (const auto& bond : couplings)
        for (size_t k = 1; k < bond.size(); ++k)
            if (bond[k] > 0) return false;
    return true;
}

bool ChainSpec::nondegenerate() const {
    for (const auto& bond : couplings) {
        bool some = false;
        for (size_t k = 1; k < bond.size(); ++k)
            if (bond[k] != 0) some = true;
        if (!some) return false;
    }
    return true;
}

void ChainSpec::validate() const {
    if (weights.empty()) throw DomainError("chain needs at least one site");
    for (int n : weights)
        if (n < 1) throw DomainError("site weights must be positive integers");
    if (couplings.size() + 1 != weights.size())
        throw DomainError("need exactly one coupling list per bond");
    for (size_t i = 0; i < couplings.size(); ++i) {
        size_t kmax = static_cast<size_t>(std::min(weights[i], weights[i + 1]));
        if (couplings[i].size() > kmax + 1)
            throw DomainError("coupling index exceeds min(n_i, n_{i+1}) at bond " +
                              std::to_string(i + 1));
    }
    if (q0 <= 0) throw DomainError("q must be positive");
}

std::string ChainSpec::to_json() const {
    json j;
    j["weights"] = weights;
    json rows = json::array();
    for (const auto& bond : couplings) {
        json row = json::array();
        for (const auto& c : bond) row.push_back(to_string(c));
        rows.push_back(row);
    }
    j["couplings"] = rows;
    j["q"] = to_string(q0);
    return j.dump(2);
}

ChainSpec ChainSpec::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad chain JSON: ") + e.what());
    }
    ChainSpec spec;
    try {
        spec.weights = j.at("weights").get<std::vector<int>>();
        for (const auto& row : j.at("couplings")) {
            std::vector<Rational> bond;
            for (const auto& c : row) {
                if (c.is_number_integer()) bond.push_back(Rational(c.get<long>()));
                else bond.push_back(parse_rational(c.get<std::string>()));
            }
            spec.couplings.push_back(std::move(bond));
        }
        if (j.contains("q")) {
            const auto& q = j.at("q");
            if (q.is_number_integer()) spec.q0 = Rational(q.get<long>());
            else spec.q0 = parse_rational(q.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad chain JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

ChainSpec ChainSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

namespace {

RatMatrix project_or_unit(int n, const Rational& q0) {
    if (n == 0) {
        RatMatrix one(1, 1);
        one.set(0, 0, Rational(1));
        return one;
    }
    return symmetrizer_project(n, q0);
}

RatMatrix inject_or_unit(int n, const Rational& q0) {
    if (n == 0) {
        RatMatrix one(1, 1);
        one.set(0, 0, Rational(1));
        return one;
    }
    return symmetrizer_inject(n, q0);
}

}  // namespace

RatMatrix cascade_operator(int m, int n, int k, const Rational& q0) {
    if (m < 0 || n < 0) throw DomainError("cascade needs m, n >= 0");
    if (k < -m || k > n) throw DomainError("cascade transfer index out of range");
    if (q0 <= 0) throw DomainError("q0 must be positive");
    RatMatrix down = project_or_unit(m + k, q0).kron(project_or_unit(n - k, q0));
    RatMatrix up = inject_or_unit(m, q0).kron(inject_or_unit(n, q0));
    RatMatrix u = down * up;                                         // site -> shifted site
    RatMatrix down2 = project_or_unit(m, q0).kron(project_or_unit(n, q0));
    RatMatrix up2 = inject_or_unit(m + k, q0).kron(inject_or_unit(n - k, q0));
    return (down2 * up2) * u;
}

RatMatrix tl_basis_element(int m, int n, int l, const Rational& q0) {
    if (l < 0 || l > std::min(m, n)) throw DomainError("TL basis index out of range");
    RatMatrix cap = represent(padded_nested_cap(m - l, l, n - l), q0);
    RatMatrix cup = represent(padded_nested_cup(m - l, l, n - l), q0);
    RatMatrix down = project_or_unit(m, q0).kron(project_or_unit(n, q0));
    RatMatrix up = inject_or_unit(m, q0).kron(inject_or_unit(n, q0));
    return down * (cup * (cap * up));
}

std::vector<std::pair<int, LaurentFraction>> cascade_to_tl_coeffs(int m, int n, int k) {
    if (k < 0 || k > std::min(m, n)) throw DomainError("cascade index out of range");
    std::vector<std::pair<int, LaurentFraction>> out;
    for (int l = 0; l <= k; ++l)
        out.push_back({l, LaurentFraction(q_binomial(m, l) * q_binomial(k, l),
                                          q_binomial(m + k, l))});
    return out;
}

LaurentFraction q_matrix_element(int n_i, int n_ip1, int j, int k, int l) {
    if (n_i < n_ip1) std::swap(n_i, n_ip1);  // wlog of the formula
    if (j < 0 || k < 0 || l < 0) throw DomainError("negative index");
    if (!(k >= l && n_ip1 - j >= k && n_i - j >= l)) return LaurentFraction(0);
    LaurentPoly num = q_factorial(n_i) * q_factorial(k) * q_factorial(n_ip1 - j) *
                      q_factorial(n_ip1 - k) * q_factorial(n_i + k - j - l);
    LaurentPoly den = q_factorial(n_ip1) * q_factorial(l) * q_factorial(n_i + k) *
                      q_factorial(k - l) * q_factorial(n_ip1 - j - k) *
                      q_factorial(n_i - j - l);
    return LaurentFraction(num, den);
}

bool psd_gram_check(int m, int n, int k, const Rational& q0) {
    // M K = (p B^T M)^T (p B^T M) with B = T_m (x) T_n and p the middle projectors.
    RatMatrix K = cascade_operator(m, n, k, q0);
    RatMatrix M = site_metric(m, q0).kron(site_metric(n, q0));
    RatMatrix B = project_or_unit(m, q0).kron(project_or_unit(n, q0));
    RatMatrix pmid = (inject_or_unit(m + k, q0) * project_or_unit(m + k, q0))
                         .kron(inject_or_unit(n - k, q0) * project_or_unit(n - k, q0));
    RatMatrix G = pmid * (B.transpose() * M);
    return M * K == G.transpose() * G;
}

RatMatrix build_hamiltonian_full(const ChainSpec& spec, int cap) {
    spec.validate();
    if (spec.total_weight() > cap)
        throw ResourceError("total weight exceeds the tensor-space cap");
    const long dim = chain_dim(spec.weights);
    RatMatrix h(dim, dim);
    long left_dim = 1;
    for (size_t i = 0; i + 1 < spec.weights.size(); ++i) {
        const int m = spec.weights[i], n = spec.weights[i + 1];
        long right_dim = 1;
        for (size_t j = i + 2; j < spec.weights.size(); ++j) right_dim *= spec.weights[j] + 1;
        RatMatrix local((m + 1) * (n + 1), (m + 1) * (n + 1));
        bool any = false;
        for (size_t k = 0; k < spec.couplings[i].size(); ++k) {
            if (spec.couplings[i][k] == 0) continue;
            local = local + cascade_operator(m, n, static_cast<int>(k), spec.q0) *
                                spec.couplings[i][k];
            any = true;
        }
        if (any) {
            RatMatrix embedded = RatMatrix::identity(static_cast<int>(left_dim))
                                     .kron(local)
                                     .kron(RatMatrix::identity(static_cast<int>(right_dim)));
            h = h + embedded;
        }
        left_dim *= spec.weights[i] + 1;
    }
    return h;
}

LiftedChain::LiftedChain(const ChainSpec& spec, int cap) : weights_(spec.weights) {
    spec.validate();
    if (spec.total_weight() > cap)
        throw ResourceError("total weight exceeds the tensor-space cap");
    tensor_dim_ = foel::tensor_dim(spec.total_weight());
    down_ = project_or_unit(weights_[0], spec.q0);
    up_ = inject_or_unit(weights_[0], spec.q0);
    for (size_t i = 1; i < weights_.size(); ++i) {
        down_ = down_.kron(project_or_unit(weights_[i], spec.q0));
        up_ = up_.kron(inject_or_unit(weights_[i], spec.q0));
    }
    h_site_ = build_hamiltonian_full(spec, cap);
}

std::vector<Rational> LiftedChain::apply(const std::vector<Rational>& v) const {
    return up_.apply(h_site_.apply(down_.apply(v)));
}

SectorMatrix build_hamiltonian_sector(const ChainSpec& spec, int k, int cap) {
    spec.validate();
    if (k < 0 || 2 * k > spec.total_weight()) throw DomainError("invalid sector index");
    SectorMatrix out;
    out.k = k;
    out.weight = spec.total_weight() - 2 * k;
    out.basis = dcb_basis(spec.weights, k, spec.q0);
    const int dim = static_cast<int>(out.basis.size());
    out.H = RatMatrix(dim, dim);
    if (dim == 0) return out;
    LiftedChain lift(spec, cap);
    DcbExpander expander(out.basis);
    for (int j = 0; j < dim; ++j) {
        std::vector<Rational> img = lift.apply(out.basis[j].coords);
        std::vector<Rational> x = expander.expand(img);
        for (int i = 0; i < dim; ++i)
            if (x[i] != 0) out.H.set(i, j, x[i]);
    }
    for (const auto& v : out.basis) {
        out.H.row_labels.push_back(v.label());
        out.H.col_labels.push_back(v.label());
    }
    return out;
}

bool strongly_connected_support(const RatMatrix& h) {
    const int n = h.rows();
    if (n == 0) return false;
    if (n == 1) return true;
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : h.row(r)) {
            if (r == c) continue;
            fwd[c].push_back(r);  // edge c -> r: applying H to e_c reaches e_r
            bwd[r].push_back(c);
        }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    };
    return reach_all(fwd) && reach_all(bwd);
}

StructuralReport structural_checks(const SectorMatrix& sector, const ChainSpec& spec) {
    StructuralReport report;
    const int dim = sector.H.rows();
    for (int r = 0; r < dim && report.offdiag_nonpositive; ++r)
        for (const auto& [c, v] : sector.H.row(r)) {
            if (r != c && v > 0) {
                report.offdiag_nonpositive = false;
                report.positive_offdiag = {r, c};
                break;
            }
        }
    report.irreducible = strongly_connected_support(sector.H);

    // arc count can only grow under H: check on the full weight space
    auto basis = dcb_weight_basis(spec.weights, sector.k, spec.q0);
    if (!basis.empty()) {
        DcbExpander expander(basis);
        LiftedChain lift(spec);
        for (const auto& v : basis) {
            std::vector<Rational> x = expander.expand(lift.apply(v.coords));
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i] != 0 && basis[i].cap.k() < v.cap.k()) {
                    report.arc_nondecreasing = false;
                    report.arc_drop = {v.label(), basis[i].label()};
                    break;
                }
            }
            if (!report.arc_nondecreasing) break;
        }
    }
    return report;
}

}  // namespace foel
