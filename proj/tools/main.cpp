// coventa: covariance-based entanglement measure toolkit.
//
// Subcommands: measure, isotropic-scan, audit, estimate, random-scan.
// Exit codes: 0 success, 2 input error, 3 internal assertion.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coventa/estimator.hpp"
#include "coventa/io.hpp"
#include "coventa/measures.hpp"
#include "coventa/mub.hpp"
#include "coventa/random.hpp"

namespace {

using namespace coventa;

double report_tolerance() {
    if (const char* env = std::getenv("COVENTA_TOL")) {
        try {
            const double value = std::stod(env);
            if (value > 0.0) return value;
        } catch (const std::exception&) {
            // fall through to the default below
        }
        std::cerr << "warning: ignoring invalid COVENTA_TOL value \"" << env << "\"\n";
    }
    return tol::audit;
}

GeneratorSet make_set(const std::string& kind, int dim) {
    if (kind == "mub") return mub_generator_set(dim);
    return gell_mann_set(dim);
}

// Writes CSV to `out` when set, otherwise to stdout.
class CsvSink {
  public:
    explicit CsvSink(const std::optional<std::string>& path) {
        if (path) {
            file_.open(*path, std::ios::binary);
            if (!file_) throw Error("cannot write file: " + *path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

  private:
    std::ofstream file_;
};

struct MeasureRow {
    std::string route;
    double g;
    std::optional<double> c_i_squared;
    std::optional<double> c_3;
};

int cmd_measure(const std::string& input, const std::string& set_kind,
                const std::optional<std::string>& out) {
    const LoadedState state = load_state(input);
    const bool pure = std::holds_alternative<PureState>(state);
    const DensityMatrix rho = pure ? density_from_pure(std::get<PureState>(state))
                                   : std::get<DensityMatrix>(state);

    const GeneratorSet set_a = make_set(set_kind, rho.dim_a());
    const GeneratorSet set_b = make_set(set_kind, rho.dim_b());

    std::vector<MeasureRow> rows;
    const MeasureResult cov = g_covariance(rho, set_a, set_b);
    rows.push_back({to_string(cov.route) + " (" + cov.context + ")", cov.g, {}, {}});
    const MeasureResult hs = g_hilbert_schmidt(rho);
    rows.push_back({to_string(hs.route), hs.g, {}, {}});

    std::optional<double> ci2, c3;
    if (pure) {
        const PureState& psi = std::get<PureState>(state);
        const SchmidtSpectrum spectrum = schmidt_decompose(psi);
        ci2 = i_concurrence_squared(psi);
        c3 = three_concurrence(spectrum);
        rows.push_back({to_string(Route::PureSchmidt), g_pure_schmidt(spectrum).g, ci2, c3});
        rows.push_back({to_string(Route::FromInvariants), g_from_invariants(*ci2, *c3).g, ci2, c3});
    }
    const Verdict verdict = separability_verdict(hs.g);

    std::cout << "input: " << input << "\n"
              << "dims: " << rho.dim_a() << "x" << rho.dim_b() << "\n"
              << "kind: " << (pure ? "pure" : "density") << "\n";
    for (const auto& row : rows)
        std::cout << "G[" << row.route << "] = " << format_significant(row.g) << "\n";
    if (pure) {
        std::cout << "C_I^2 = " << format_significant(*ci2) << "\n"
                  << "C_3 = " << format_significant(*c3) << "\n";
    }
    std::cout << "verdict: " << to_string(verdict) << "\n";

    if (out) {
        CsvSink sink(out);
        sink.stream() << "state_id,route,g,c_i_squared,c_3,verdict\n";
        for (const auto& row : rows) {
            sink.stream() << input << "," << row.route << "," << format_significant(row.g) << ","
                          << (row.c_i_squared ? format_significant(*row.c_i_squared) : "nan")
                          << "," << (row.c_3 ? format_significant(*row.c_3) : "nan") << ","
                          << to_string(verdict) << "\n";
        }
    }
    return 0;
}

int cmd_isotropic_scan(double alpha_min, double alpha_max, double step,
                       const std::optional<std::string>& out) {
    if (step <= 0.0) throw Error("isotropic-scan: step must be positive");
    if (alpha_min > alpha_max) throw Error("isotropic-scan: alpha-min above alpha-max");

    CsvSink sink(out);
    sink.stream() << "alpha,g,verdict\n";
    int rows = 0;
    for (int k = 0;; ++k) {
        const double alpha = alpha_min + k * step;
        if (alpha > alpha_max + 1e-12) break;
        const double g = g_hilbert_schmidt(isotropic_state(alpha)).g;
        sink.stream() << format_significant(alpha) << "," << format_significant(g) << ","
                      << to_string(separability_verdict(g)) << "\n";
        ++rows;
    }
    if (sink.to_file()) std::cout << "wrote " << rows << " rows\n";
    return 0;
}

int cmd_audit(int dim, bool force_mub) {
    const double tolerance = report_tolerance();
    bool all_pass = true;

    const GeneratorSet gm = gell_mann_set(dim);
    const GeneratorSetReport gm_report = validate_generator_set(gm);
    const bool gm_pass = gm_report.passes(tolerance);
    all_pass &= gm_pass;
    std::cout << "gell-mann generator set, N=" << dim
              << ": worst |Tr g| = " << format_significant(gm_report.max_trace_deviation)
              << ", worst |Tr(g g') - delta| = "
              << format_significant(gm_report.max_orthonormality_deviation) << " -> "
              << (gm_pass ? "pass" : "FAIL") << "\n";

    const bool audit_mub = force_mub || is_prime(dim);
    if (audit_mub) {
        // NotPrime from build_mub propagates as an input error when the MUB
        // audit was requested for a composite dimension.
        const MubFamily family = build_mub(dim);
        const UnbiasednessReport mub_report = certify_unbiasedness(family);
        const bool mub_pass = mub_report.passes(tolerance);
        all_pass &= mub_pass;
        std::cout << "mub family, N=" << dim << ": max | |overlap|^2 - 1/N | = "
                  << format_significant(mub_report.max_overlap_deviation)
                  << ", max Gram deviation = "
                  << format_significant(mub_report.max_gram_deviation) << " -> "
                  << (mub_pass ? "pass" : "FAIL") << "\n";

        const GeneratorSet mub_set = mub_generator_set(family);
        const GeneratorSetReport set_report = validate_generator_set(mub_set);
        const bool set_pass = set_report.passes(tolerance);
        all_pass &= set_pass;
        std::cout << "mub generator set, N=" << dim
                  << ": worst |Tr g| = " << format_significant(set_report.max_trace_deviation)
                  << ", worst |Tr(g g') - delta| = "
                  << format_significant(set_report.max_orthonormality_deviation) << " -> "
                  << (set_pass ? "pass" : "FAIL") << "\n";
    }

    std::cout << (all_pass ? "audit: pass" : "audit: FAIL") << " (tolerance "
              << format_significant(tolerance) << ")\n";
    return all_pass ? 0 : 2;
}

int cmd_estimate(const std::string& input, const std::string& set_kind, std::int64_t shots,
                 std::int64_t total_shots, int trials, std::uint64_t seed, bool pooled,
                 const std::optional<std::string>& out) {
    const LoadedState state = load_state(input);
    const DensityMatrix rho = std::holds_alternative<PureState>(state)
                                  ? density_from_pure(std::get<PureState>(state))
                                  : std::get<DensityMatrix>(state);

    const GeneratorSet set_a = make_set(set_kind, rho.dim_a());
    const GeneratorSet set_b = make_set(set_kind, rho.dim_b());

    EstimateOptions options;
    options.shots_per_setting = shots;
    options.total_shots = total_shots;
    options.trials = trials;
    options.seed = seed;
    options.pool_marginals = pooled;
    const EstimationReport report = estimate_g(rho, set_a, set_b, options);

    CsvSink sink(out);
    sink.stream() << "trial,shots_per_setting,settings_count,estimate\n";
    const std::string shots_str = std::to_string(report.shots_per_setting);
    const std::string settings_str = std::to_string(report.settings_count);
    for (std::size_t t = 0; t < report.g_estimates.size(); ++t)
        sink.stream() << t << "," << shots_str << "," << settings_str << ","
                      << format_significant(report.g_estimates[t]) << "\n";
    sink.stream() << "mean," << shots_str << "," << settings_str << ","
                  << format_significant(report.mean_bias + report.g_true) << "\n"
                  << "g_true," << shots_str << "," << settings_str << ","
                  << format_significant(report.g_true) << "\n"
                  << "mean_bias," << shots_str << "," << settings_str << ","
                  << format_significant(report.mean_bias) << "\n"
                  << "std_error," << shots_str << "," << settings_str << ","
                  << format_significant(report.std_error) << "\n";
    if (sink.to_file())
        std::cout << "estimated G = " << format_significant(report.mean_bias + report.g_true)
                  << " (true " << format_significant(report.g_true) << ", "
                  << report.settings_count << " settings)\n";
    return 0;
}

int cmd_random_scan(const std::vector<int>& dims, long count, const std::string& kind,
                    std::uint64_t seed, const std::optional<std::string>& out) {
    if (dims.size() != 2) throw Error("random-scan: --dims expects two values A,B");
    if (count < 1 || count > 1000000)
        throw Error("random-scan: count must be between 1 and 10^6");

    const int dim_a = dims[0];
    const int dim_b = dims[1];
    Rng master(seed);

    CsvSink sink(out);
    sink.stream() << "index,g,c_i_squared,c_3,verdict\n";

    double max_residual = 0.0;
    double max_g = 0.0;
    for (long i = 0; i < count; ++i) {
        const std::uint64_t sample_seed = master.derive_seed();
        double g, ci2;
        std::string c3_text = "nan";
        if (kind == "pure") {
            const PureState psi = random_pure_state(dim_a, dim_b, sample_seed);
            g = g_hilbert_schmidt(psi).g;
            ci2 = i_concurrence_squared(psi);
            const double c3 = three_concurrence(schmidt_decompose(psi));
            c3_text = format_significant(c3);
            max_residual = std::max(max_residual, std::abs(g - g_from_invariants(ci2, c3).g));
        } else {
            const int terms = static_cast<int>(i % 8) + 1;
            const DensityMatrix rho = random_separable_mixed(dim_a, dim_b, terms, sample_seed);
            g = g_hilbert_schmidt(rho).g;
            ci2 = i_concurrence_squared(rho).value;
        }
        max_g = std::max(max_g, g);
        sink.stream() << i << "," << format_significant(g) << "," << format_significant(ci2)
                      << "," << c3_text << "," << to_string(separability_verdict(g)) << "\n";
    }

    std::ostream& info = sink.to_file() ? std::cout : std::cerr;
    info << "max_g = " << format_significant(max_g) << "\n";
    if (kind == "pure") {
        info << "max_invariant_residual = " << format_significant(max_residual) << "\n";
        if (max_residual >= 1e-9)
            throw std::logic_error("invariant identity residual exceeded 1e-9 on pure samples");
    } else if (max_g > kSeparabilityThreshold + 1e-9) {
        throw std::logic_error("separable sample exceeded the 1/4 bound");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covariance-based bipartite entanglement measure toolkit"};
    app.require_subcommand(1);

    // measure
    auto* measure = app.add_subcommand("measure", "compute G and invariants for a state file");
    std::string measure_input, measure_set = "gellmann";
    std::optional<std::string> measure_out;
    measure->add_option("--input", measure_input, "state JSON file")->required();
    measure->add_option("--set", measure_set, "generator set kind")
        ->check(CLI::IsMember({"gellmann", "mub"}));
    measure->add_option("--out", measure_out, "CSV output path");

    // isotropic-scan
    auto* scan = app.add_subcommand("isotropic-scan", "scan the two-qutrit isotropic family");
    double alpha_min = 0.0, alpha_max = 1.0, alpha_step = 0.05;
    std::optional<std::string> scan_out;
    scan->add_option("--alpha-min", alpha_min, "scan start (>= -1/8)");
    scan->add_option("--alpha-max", alpha_max, "scan end (<= 1)");
    scan->add_option("--step", alpha_step, "scan step");
    scan->add_option("--out", scan_out, "CSV output path");

    // audit
    auto* audit = app.add_subcommand("audit", "certify generator sets and MUBs");
    int audit_dim = 3;
    bool audit_mub = false;
    audit->add_option("--dims", audit_dim, "local dimension to audit")->required();
    audit->add_flag("--mub", audit_mub, "force the MUB audit (error for composite dims)");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "finite-shot estimation experiment");
    std::string est_input, est_set = "mub";
    std::int64_t est_shots = 1000, est_total = 0;
    int est_trials = 1;
    std::uint64_t est_seed = 0;
    bool est_pooled = false;
    std::optional<std::string> est_out;
    estimate->add_option("--input", est_input, "state JSON file")->required();
    estimate->add_option("--set", est_set, "generator set kind")
        ->check(CLI::IsMember({"gellmann", "mub"}));
    estimate->add_option("--shots", est_shots, "shots per setting");
    estimate->add_option("--total-shots", est_total,
                         "fixed total budget, divided evenly across settings");
    estimate->add_option("--trials", est_trials, "independent repetitions");
    estimate->add_option("--seed", est_seed, "random seed")->required();
    estimate->add_flag("--pooled", est_pooled, "pool marginal estimates across settings");
    estimate->add_option("--out", est_out, "CSV output path");

    // random-scan
    auto* random_scan = app.add_subcommand("random-scan", "sample random states and tabulate G");
    std::vector<int> rs_dims;
    long rs_count = 100;
    std::string rs_kind = "pure";
    std::uint64_t rs_seed = 0;
    std::optional<std::string> rs_out;
    random_scan->add_option("--dims", rs_dims, "local dimensions A,B")
        ->required()
        ->delimiter(',')
        ->expected(2);
    random_scan->add_option("--count", rs_count, "number of samples (<= 10^6)");
    random_scan->add_option("--kind", rs_kind, "state ensemble")
        ->check(CLI::IsMember({"pure", "separable"}));
    random_scan->add_option("--seed", rs_seed, "random seed")->required();
    random_scan->add_option("--out", rs_out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (measure->parsed()) return cmd_measure(measure_input, measure_set, measure_out);
        if (scan->parsed()) return cmd_isotropic_scan(alpha_min, alpha_max, alpha_step, scan_out);
        if (audit->parsed()) return cmd_audit(audit_dim, audit_mub);
        if (estimate->parsed())
            return cmd_estimate(est_input, est_set, est_shots, est_total, est_trials, est_seed,
                                est_pooled, est_out);
        if (random_scan->parsed())
            return cmd_random_scan(rs_dims, rs_count, rs_kind, rs_seed, rs_out);
    } catch (const coventa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
