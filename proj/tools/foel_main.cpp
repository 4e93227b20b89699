// Command-line front end: exact identity suites, FOEL verdicts, sector-matrix
// export, and urn-model gap scans. Exit codes: 0 = property holds, 1 =
// property fails, 2 = usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "foel/jones_wenzl.hpp"
#include "foel/parallel.hpp"
#include "foel/spectra.hpp"
#include "foel/urn.hpp"

using namespace foel;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The exact diagram-level identity suite up to size max_n. `inject_fault`
// corrupts one Jones-Wenzl coefficient on purpose so failure reporting can be
// exercised end to end.
std::vector<IdentityResult> run_identities(int max_n, unsigned seed, bool inject_fault) {
    std::vector<IdentityResult> results;
    auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    };

    for (int n = 1; n <= max_n; ++n) {
        const IntDiagramSum& pn = jw_scaled(n);
        IntDiagramSum scaled = pn;
        if (inject_fault && n == std::max(2, max_n / 2)) {
            IntDiagramSum broken(n, n);
            for (const auto& [d, c] : pn.terms()) broken.add(d, c);
            broken.add(PlanarDiagram::identity(n), LaurentPoly::q(7));
            scaled = broken;
        }
        // p_n^2 = p_n  <=>  P_n P_n = [n]! P_n
        record("idempotency n=" + std::to_string(n),
               compose(scaled, scaled) == scaled * q_factorial(n));
        // U_i p_n = p_n U_i = 0
        bool annihilated = true;
        for (int i = 1; i < n && annihilated; ++i) {
            IntDiagramSum u(PlanarDiagram::u_gen(n, i));
            annihilated = compose(scaled, u).is_zero() && compose(u, scaled).is_zero();
        }
        if (n >= 2) record("annihilation n=" + std::to_string(n), annihilated);
        // absorption: (p_m (x) 1) p_n = p_n
        bool absorbed = true;
        for (int m = 1; m < n && absorbed; ++m) {
            IntDiagramSum pm1 = tensor(jw_scaled(m), IntDiagramSum::identity(n - m));
            absorbed = compose(pm1, scaled) == scaled * q_factorial(m);
        }
        if (n >= 2) record("absorption n=" + std::to_string(n), absorbed);
        // both Wenzl forms
        if (n >= 2)
            record("wenzl n=" + std::to_string(n),
                   wenzl_form_direct(n) == scaled && wenzl_form_split(n) == scaled);
        // positive expansion membership
        bool positive = true;
        std::string detail;
        try {
            auto expansion = jw_positive_expansion(n);
            if (inject_fault && n == std::max(2, max_n / 2)) {
                // the fault lives in `scaled`, re-check it by hand
                for (const auto& [d, c] : scaled.terms()) {
                    if (c.max_exponent() > n * (n - 1) / 2) {
                        positive = false;
                        detail = "coefficient exceeds the q-degree bound";
                    }
                }
            }
        } catch (const InvariantViolation& e) {
            positive = false;
            detail = e.what();
        }
        record("positive-expansion n=" + std::to_string(n), positive, detail);
        // single clasp
        if (n >= 1)
            record("single-clasp n=" + std::to_string(n),
                   single_clasp_lhs(n) == single_clasp_rhs(n));
    }

    // JWFK as tensor matrices at q = 1/2 for m + n <= max_n
    const Rational q0 = rat(1, 2);
    for (int m = 0; m <= max_n; ++m) {
        for (int n = 0; m + n <= max_n; ++n) {
            if (m + n < 2 || m > n) continue;
            int N = m + n;
            RatMatrix lhs = symmetrizer_inject(N, q0) * symmetrizer_project(N, q0);
            RatMatrix rhs(lhs.rows(), lhs.cols());
            RatMatrix pm = m == 0 ? RatMatrix::identity(1)
                                  : symmetrizer_inject(m, q0) * symmetrizer_project(m, q0);
            RatMatrix pn = symmetrizer_inject(n, q0) * symmetrizer_project(n, q0);
            RatMatrix outer = pm.kron(pn);
            for (const auto& [k, c] : jwfk_coefficients(m, n)) {
                int ki = static_cast<int>(k);
                RatMatrix w = represent(padded_nested_cup(m - ki, ki, n - ki), q0) *
                              represent(padded_nested_cap(m - ki, ki, n - ki), q0);
                rhs = rhs + outer * w * outer * c.specialize(q0);
            }
            record("jwfk m=" + std::to_string(m) + " n=" + std::to_string(n), lhs == rhs);
        }
    }

    // functoriality spot checks on seeded random composable pairs
    std::mt19937 rng(seed);
    for (int size = 2; size <= std::min(max_n, 4); ++size) {
        auto basis = enumerate_tl_basis(size, size);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        bool functorial = true;
        for (int trial = 0; trial < 5 && functorial; ++trial) {
            DiagramCombination f(basis[pick(rng)]);
            DiagramCombination g(basis[pick(rng)]);
            functorial = represent(compose(f, g), q0) ==
                         represent(g, q0) * represent(f, q0);
        }
        record("functoriality size=" + std::to_string(size), functorial);
    }
    return results;
}

int cmd_identities(int max_n, unsigned seed, bool inject_fault, const std::string& out_path) {
    if (max_n < 0 || max_n > 8) {
        std::cerr << "identities: --max-n must lie in 0..8\n";
        return kExitError;
    }
    std::vector<IdentityResult> results;
    if (max_n > 0) results = run_identities(max_n, seed, inject_fault);
    json report = json::array();
    int failures = 0;
    for (const auto& r : results) {
        json entry;
        entry["identity"] = r.name;
        entry["pass"] = r.pass;
        if (!r.detail.empty()) entry["detail"] = r.detail;
        report.push_back(entry);
        if (!r.pass) {
            ++failures;
            std::cout << "FAIL " << r.name << "\n";
        }
    }
    json top;
    top["max_n"] = max_n;
    top["checks"] = report;
    top["failures"] = failures;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitError;
        }
        out << top.dump(2) << "\n";
    } else {
        std::cout << top.dump(2) << "\n";
    }
    return failures == 0 ? kExitHolds : kExitFails;
}

int cmd_foel(const std::string& spec_path, const std::string& q_override, double tol,
             const std::string& out_path) {
    ChainSpec spec = ChainSpec::from_file(spec_path);
    if (!q_override.empty()) {
        spec.q0 = parse_rational(q_override);
        spec.validate();
    }
    FoelVerdict verdict = foel_verify(spec, tol);
    std::ostringstream csv;
    csv << "spin,E0,sector_dim,iterations,residual\n";
    for (const auto& s : verdict.sectors) {
        csv << s.total_spin << "," << std::setprecision(15) << s.e0 << "," << s.dim << ","
            << s.iterations << "," << s.residual << "\n";
    }
    csv << "# foel_holds," << (verdict.foel_holds ? "true" : "false") << "\n";
    if (verdict.theorem_violation)
        csv << "# theorem_violation,true\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitError;
        }
        out << csv.str();
    }
    std::cout << csv.str();
    return verdict.foel_holds ? kExitHolds : kExitFails;
}

int cmd_export(const std::string& spec_path, int sector_k, const std::string& out_path,
               const std::string& format, const std::string& q_override) {
    ChainSpec spec = ChainSpec::from_file(spec_path);
    if (!q_override.empty()) {
        spec.q0 = parse_rational(q_override);
        spec.validate();
    }
    if (sector_k < 0 || 2 * sector_k > spec.total_weight()) {
        std::cerr << "sector " << sector_k << " does not exist\n";
        return kExitError;
    }
    SectorMatrix sector = build_hamiltonian_sector(spec, sector_k);
    if (sector.basis.empty()) {
        std::cerr << "sector " << sector_k << " is empty\n";
        return kExitError;
    }
    std::ostringstream body;
    if (format == "triplet") {
        body << "%%matrix coordinate real symmetric-general\n";
        body << sector.H.rows() << " " << sector.H.cols() << " " << sector.H.nnz() << "\n";
        for (int r = 0; r < sector.H.rows(); ++r)
            for (const auto& [c, v] : sector.H.row(r))
                body << (r + 1) << " " << (c + 1) << " " << std::setprecision(17)
                     << v.get_d() << "\n";
    } else if (format == "json") {
        json j;
        j["rows"] = sector.H.rows();
        j["cols"] = sector.H.cols();
        j["k"] = sector_k;
        j["weight"] = sector.weight;
        json entries = json::array();
        for (int r = 0; r < sector.H.rows(); ++r)
            for (const auto& [c, v] : sector.H.row(r))
                entries.push_back({r + 1, c + 1, to_string(v)});
        j["entries"] = entries;
        json labels = json::array();
        for (const auto& v : sector.basis) labels.push_back(v.label());
        j["basis"] = labels;
        body << j.dump(2) << "\n";
    } else {
        std::cerr << "unknown format '" << format << "' (use triplet or json)\n";
        return kExitError;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitError;
        }
        out << body.str();
    }
    return kExitHolds;
}

int cmd_urn(const std::string& model_path, double tol, const std::string& out_path) {
    UrnModel model = UrnModel::from_file(model_path);
    auto gaps = sector_gaps(model);
    std::ostringstream csv;
    csv << "k,gamma\n";
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, g] : gaps) {
        csv << k << "," << std::setprecision(15) << g << "\n";
        if (first) {
            lo = hi = g;
            first = false;
        } else {
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
    }
    double spread = gaps.empty() ? 0.0 : hi - lo;
    csv << "# spread," << std::setprecision(15) << spread << "\n";
    bool all_mixture = true;
    for (const auto& m : model.mixing)
        if (m.type != MixingLaw::Type::HypergeometricMixture) all_mixture = false;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitError;
        }
        out << csv.str();
    }
    std::cout << csv.str();
    if (all_mixture && spread > tol) return kExitFails;
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"U_q(sl2) spin-chain toolkit: exact Temperley-Lieb identities, "
                 "cascade Hamiltonians, FOEL verification, urn-model gaps"};
    app.require_subcommand(1);

    int max_n = 4;
    unsigned seed = 0;
    bool inject_fault = false;
    std::string out_path, spec_path, q_override, format = "triplet", model_path;
    double tol = 1e-9;
    int sector_k = 0;

    CLI::App* identities = app.add_subcommand("identities", "run the exact identity suite");
    identities->add_option("--max-n", max_n, "largest strand count (0..8)");
    identities->add_option("--seed", seed, "seed for randomized spot checks")->required();
    identities->add_flag("--inject-fault", inject_fault,
                         "corrupt one projector to exercise failure reporting");
    identities->add_option("--out", out_path, "write the JSON report here");

    CLI::App* foel = app.add_subcommand("foel", "verify FOEL for a chain spec");
    foel->add_option("spec", spec_path, "ChainSpec JSON file")->required();
    foel->add_option("--q", q_override, "override q (rational, e.g. 1/2)");
    foel->add_option("--tol", tol, "ordering slack");
    foel->add_option("--out", out_path, "also write the CSV here");

    CLI::App* exp = app.add_subcommand("export", "export one sector matrix");
    exp->add_option("spec", spec_path, "ChainSpec JSON file")->required();
    exp->add_option("--sector", sector_k, "number of arcs k")->required();
    exp->add_option("--format", format, "triplet or json");
    exp->add_option("--out", out_path, "output path (default stdout)");
    exp->add_option("--q", q_override, "override q (rational)");

    CLI::App* urn = app.add_subcommand("urn", "per-sector spectral gaps of an urn model");
    urn->add_option("model", model_path, "UrnModel JSON file")->required();
    urn->add_option("--tol", tol, "gap-spread tolerance for mixture models");
    urn->add_option("--out", out_path, "also write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitHolds : kExitError;
    }

    try {
        if (identities->parsed())
            return cmd_identities(max_n, seed, inject_fault, out_path);
        if (foel->parsed()) return cmd_foel(spec_path, q_override, tol, out_path);
        if (exp->parsed())
            return cmd_export(spec_path, sector_k, out_path, format, q_override);
        if (urn->parsed()) return cmd_urn(model_path, tol, out_path);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
