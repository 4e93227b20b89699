#include "foel/urn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "foel/spectra.hpp"

namespace foel {

using nlohmann::json;

namespace {

Rational binom(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out;
    mpz_bin_uiui(mpq_numref(out.get_mpq_t()), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

}  // namespace

void UrnModel::validate() const {
    if (L < 1 || n < 1) throw DomainError("urn model needs L >= 1 and n >= 1");
    if (static_cast<int>(rates.size()) != L - 1 ||
        static_cast<int>(mixing.size()) != L - 1)
        throw DomainError("need one rate and one mixing law per bond");
    for (const Rational& r : rates)
        if (r < 0) throw DomainError("rates must be nonnegative");
    for (const MixingLaw& m : mixing) {
        if (static_cast<int>(m.values.size()) != n + 1)
            throw DomainError("mixing law needs n+1 entries");
        Rational total(0);
        for (const Rational& v : m.values) {
            if (v < 0) throw DomainError("mixing entries must be nonnegative");
            total += v;
        }
        if (total != 1) throw DomainError("mixing law must sum to 1");
    }
}

std::vector<Rational> UrnModel::bond_distribution(int b) const {
    const MixingLaw& m = mixing.at(b);
    if (m.type == MixingLaw::Type::Explicit) return m.values;
    std::vector<Rational> rho(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        if (m.values[k] == 0) continue;
        std::vector<Rational> rk = hypergeometric_rho(n, k);
        for (int j = 0; j <= n; ++j) rho[j] += m.values[k] * rk[j];
    }
    return rho;
}

std::string UrnModel::to_json() const {
    json j;
    j["L"] = L;
    j["n"] = n;
    json r = json::array();
    for (const auto& x : rates) r.push_back(to_string(x));
    j["rates"] = r;
    json mix = json::array();
    for (const auto& m : mixing) {
        json entry;
        entry["type"] = m.type == MixingLaw::Type::HypergeometricMixture
                            ? "hypergeometric_mixture"
                            : "explicit";
        json vals = json::array();
        for (const auto& v : m.values) vals.push_back(to_string(v));
        entry[m.type == MixingLaw::Type::HypergeometricMixture ? "weights" : "probs"] = vals;
        mix.push_back(entry);
    }
    j["mixing"] = mix;
    return j.dump(2);
}

UrnModel UrnModel::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad urn JSON: ") + e.what());
    }
    UrnModel model;
    try {
        model.L = j.at("L").get<int>();
        model.n = j.at("n").get<int>();
        for (const auto& r : j.at("rates")) {
            if (r.is_number_integer()) model.rates.push_back(Rational(r.get<long>()));
            else model.rates.push_back(parse_rational(r.get<std::string>()));
        }
        for (const auto& m : j.at("mixing")) {
            MixingLaw law;
            std::string type = m.at("type").get<std::string>();
            const char* key = nullptr;
            if (type == "hypergeometric_mixture") {
                law.type = MixingLaw::Type::HypergeometricMixture;
                key = "weights";
            } else if (type == "explicit") {
                law.type = MixingLaw::Type::Explicit;
                key = "probs";
            } else {
                throw DomainError("unknown mixing type: " + type);
            }
            for (const auto& v : m.at(key)) {
                if (v.is_number_integer()) law.values.push_back(Rational(v.get<long>()));
                else law.values.push_back(parse_rational(v.get<std::string>()));
            }
            model.mixing.push_back(std::move(law));
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad urn JSON: ") + e.what());
    }
    model.validate();
    return model;
}

UrnModel UrnModel::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::vector<Rational> hypergeometric_rho(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("hypergeometric_rho needs 0 <= k <= n");
    std::vector<Rational> rho(n + 1, Rational(0));
    Rational denom = binom(n + k, k);
    for (int j = 0; j <= k; ++j) rho[j] = binom(k, j) * binom(n, k - j) / denom;
    return rho;
}

std::vector<std::vector<int>> urn_configurations(int L, int n, int red_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(L, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == L) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (int k = 0; k <= std::min(n, remaining); ++k) {
            current[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, red_total);
    return out;
}

RatMatrix build_urn_generator(const UrnModel& model, int red_total) {
    model.validate();
    if (red_total < 0 || red_total > model.n * model.L)
        throw DomainError("red ball count out of range");
    const auto configs = urn_configurations(model.L, model.n, red_total);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < configs.size(); ++i) index[configs[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(configs.size());
    const int n = model.n;
    RatMatrix gen(dim, dim);
    for (int b = 0; b + 1 < model.L; ++b) {
        if (model.rates[b] == 0) continue;
        const std::vector<Rational> rho = model.bond_distribution(b);
        for (int ci = 0; ci < dim; ++ci) {
            const int a = configs[ci][b];       // reds in urn b
            const int c = configs[ci][b + 1];   // reds in urn b+1
            for (int N = 1; N <= n; ++N) {
                if (rho[N] == 0) continue;
                // draw i reds of N from urn b, j reds of N from urn b+1, swap
                for (int i = std::max(0, N - (n - a)); i <= std::min(a, N); ++i) {
                    Rational pi = binom(a, i) * binom(n - a, N - i) / binom(n, N);
                    for (int jj = std::max(0, N - (n - c)); jj <= std::min(c, N); ++jj) {
                        if (i == jj) continue;  // no state change
                        Rational pj = binom(c, jj) * binom(n - c, N - jj) / binom(n, N);
                        std::vector<int> target = configs[ci];
                        target[b] = a - i + jj;
                        target[b + 1] = c - jj + i;
                        int ti = index.at(target);
                        Rational rate = model.rates[b] * rho[N] * pi * pj;
                        gen.add(ti, ci, rate);
                        gen.add(ci, ci, -rate);
                    }
                }
            }
        }
    }
    return gen;
}

std::vector<std::pair<int, double>> sector_gaps(const UrnModel& model) {
    model.validate();
    std::vector<std::pair<int, double>> out;
    for (int k = 1; k <= model.n * model.L - 1; ++k) {
        RatMatrix gen = build_urn_generator(model, k);
        const auto configs = urn_configurations(model.L, model.n, k);
        const int dim = gen.rows();
        // symmetrize with the product-binomial stationary measure
        std::vector<double> sqrt_pi(dim);
        for (int i = 0; i < dim; ++i) {
            Rational pi(1);
            for (int x = 0; x < model.L; ++x) pi *= binom(model.n, configs[i][x]);
            sqrt_pi[i] = std::sqrt(pi.get_d());
        }
        std::vector<std::vector<double>> sym(dim, std::vector<double>(dim, 0.0));
        for (int r = 0; r < dim; ++r)
            for (const auto& [c, v] : gen.row(r))
                sym[r][c] = -v.get_d() * sqrt_pi[r] / sqrt_pi[c];
        std::vector<double> eig = jacobi_eigenvalues(std::move(sym));
        double gamma = dim >= 2 ? eig[1] : 0.0;
        out.push_back({k, gamma});
    }
    return out;
}

}  // namespace foel
