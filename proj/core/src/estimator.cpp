#include "coventa/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coventa/random.hpp"

namespace coventa {

namespace {

constexpr double kDiagonalityTolerance = 1e-10;

void require_partition(const GeneratorSet& set, const char* side) {
    std::vector<int> seen(set.ops.size(), 0);
    for (const auto& group : set.groups)
        for (int idx : group.indices) {
            if (idx < 0 || idx >= static_cast<int>(set.ops.size()) || seen[idx]++) {
                std::ostringstream msg;
                msg << "plan_settings: side " << side << " grouping is not a partition at index "
                    << idx;
                throw UngroupableSet(msg.str());
            }
        }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k]) {
            std::ostringstream msg;
            msg << "plan_settings: side " << side << " generator " << k << " fits no group";
            throw UngroupableSet(msg.str());
        }
}

double off_diagonal_residue(const Matrix& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

void require_diagonal_in_group_basis(const GeneratorSet& set, const char* side) {
    for (const auto& group : set.groups) {
        const double basis_dev = unitarity_deviation(group.basis);
        if (basis_dev > kDiagonalityTolerance) {
            std::ostringstream msg;
            msg << "plan_settings: side " << side << " group basis is not orthonormal, deviation "
                << basis_dev;
            throw UngroupableSet(msg.str());
        }
        for (int idx : group.indices) {
            const Matrix rotated = group.basis.adjoint() * set.ops[idx] * group.basis;
            const double residue = off_diagonal_residue(rotated);
            if (residue > kDiagonalityTolerance) {
                std::ostringstream msg;
                msg << "plan_settings: side " << side << " generator " << idx
                    << " has off-diagonal residue " << residue << " in its group basis";
                throw UngroupableSet(msg.str());
            }
        }
    }
}

// Real eigenvalues of a generator along its group basis diagonal.
RealVector diagonal_values(const Matrix& basis, const Matrix& op) {
    const Matrix rotated = basis.adjoint() * op * basis;
    return rotated.diagonal().real();
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const MeasurementSetting& setting) {
    const Matrix joint_basis = kron(setting.basis_a, setting.basis_b);
    const Matrix rotated = joint_basis.adjoint() * rho.matrix() * joint_basis;
    std::vector<double> probabilities(rho.dim());
    double total = 0.0;
    for (int i = 0; i < rho.dim(); ++i) {
        probabilities[i] = std::max(rotated(i, i).real(), 0.0);
        total += probabilities[i];
    }
    for (double& p : probabilities) p /= total;
    return probabilities;
}

std::vector<std::int64_t> multinomial(const std::vector<double>& probabilities,
                                      std::int64_t shots, Rng& rng) {
    std::vector<double> cdf(probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        running += probabilities[i];
        cdf[i] = running;
    }
    cdf.back() = 1.0;
    std::vector<std::int64_t> counts(probabilities.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++counts[std::min<std::size_t>(it - cdf.begin(), counts.size() - 1)];
    }
    return counts;
}

}  // namespace

std::vector<MeasurementSetting> plan_settings(const GeneratorSet& set_a,
                                              const GeneratorSet& set_b) {
    require_partition(set_a, "A");
    require_partition(set_b, "B");
    require_diagonal_in_group_basis(set_a, "A");
    require_diagonal_in_group_basis(set_b, "B");

    std::vector<MeasurementSetting> settings;
    settings.reserve(set_a.groups.size() * set_b.groups.size());
    for (std::size_t ga = 0; ga < set_a.groups.size(); ++ga)
        for (std::size_t gb = 0; gb < set_b.groups.size(); ++gb) {
            MeasurementSetting setting;
            setting.basis_a = set_a.groups[ga].basis;
            setting.basis_b = set_b.groups[gb].basis;
            setting.group_a = static_cast<int>(ga);
            setting.group_b = static_cast<int>(gb);
            for (int k : set_a.groups[ga].indices)
                for (int l : set_b.groups[gb].indices) setting.covered_pairs.emplace_back(k, l);
            settings.push_back(std::move(setting));
        }
    return settings;
}

std::vector<std::int64_t> simulate_counts(const DensityMatrix& rho,
                                          const MeasurementSetting& setting, std::int64_t shots,
                                          std::uint64_t seed) {
    if (shots < 1) throw Error("simulate_counts: shots must be >= 1");
    Rng rng(seed);
    return multinomial(outcome_probabilities(rho, setting), shots, rng);
}

EstimationReport estimate_g(const DensityMatrix& rho, const GeneratorSet& set_a,
                            const GeneratorSet& set_b, const EstimateOptions& options) {
    if (options.trials < 1) throw Error("estimate_g: trials must be >= 1");
    const auto settings = plan_settings(set_a, set_b);

    std::int64_t shots = options.shots_per_setting;
    if (options.total_shots > 0) shots = options.total_shots / static_cast<std::int64_t>(settings.size());
    if (shots < 1) throw Error("estimate_g: shot budget leaves no shots per setting");

    const int na = rho.dim_a();
    const int nb = rho.dim_b();

    // Per-setting outcome distributions and per-group eigenvalue tables.
    std::vector<std::vector<double>> probabilities;
    probabilities.reserve(settings.size());
    for (const auto& setting : settings) probabilities.push_back(outcome_probabilities(rho, setting));

    std::vector<std::vector<RealVector>> eigen_a(set_a.groups.size());
    for (std::size_t g = 0; g < set_a.groups.size(); ++g)
        for (int idx : set_a.groups[g].indices)
            eigen_a[g].push_back(diagonal_values(set_a.groups[g].basis, set_a.ops[idx]));
    std::vector<std::vector<RealVector>> eigen_b(set_b.groups.size());
    for (std::size_t g = 0; g < set_b.groups.size(); ++g)
        for (int idx : set_b.groups[g].indices)
            eigen_b[g].push_back(diagonal_values(set_b.groups[g].basis, set_b.ops[idx]));

    EstimationReport report;
    report.g_true = g_hilbert_schmidt(rho).g;
    report.shots_per_setting = shots;
    report.settings_count = static_cast<int>(settings.size());
    report.g_estimates.reserve(options.trials);

    Rng master(options.seed);
    for (int trial = 0; trial < options.trials; ++trial) {
        Rng rng(master.derive_seed());

        std::vector<RealMatrix> frequencies;
        frequencies.reserve(settings.size());
        for (std::size_t s = 0; s < settings.size(); ++s) {
            const auto counts = multinomial(probabilities[s], shots, rng);
            RealMatrix f(na, nb);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j)
                    f(i, j) = static_cast<double>(counts[i * nb + j]) / shots;
            frequencies.push_back(std::move(f));
        }

        // Optional pooling: marginal frequencies accumulated over every
        // setting that shares the local group (all of which use one basis).
        std::vector<RealVector> pooled_a(set_a.groups.size(), RealVector::Zero(na));
        std::vector<RealVector> pooled_b(set_b.groups.size(), RealVector::Zero(nb));
        if (options.pool_marginals) {
            std::vector<int> hits_a(set_a.groups.size(), 0), hits_b(set_b.groups.size(), 0);
            for (std::size_t s = 0; s < settings.size(); ++s) {
                pooled_a[settings[s].group_a] += frequencies[s].rowwise().sum();
                ++hits_a[settings[s].group_a];
                pooled_b[settings[s].group_b] += frequencies[s].colwise().sum().transpose();
                ++hits_b[settings[s].group_b];
            }
            for (std::size_t g = 0; g < pooled_a.size(); ++g) pooled_a[g] /= hits_a[g];
            for (std::size_t g = 0; g < pooled_b.size(); ++g) pooled_b[g] /= hits_b[g];
        }

        double estimate = 0.0;
        for (std::size_t s = 0; s < settings.size(); ++s) {
            const auto& setting = settings[s];
            const RealMatrix& f = frequencies[s];
            const RealVector f_a = f.rowwise().sum();
            const RealVector f_b = f.colwise().sum().transpose();
            const auto& group_a = set_a.groups[setting.group_a];
            const auto& group_b = set_b.groups[setting.group_b];
            for (std::size_t ia = 0; ia < group_a.indices.size(); ++ia) {
                const RealVector& da = eigen_a[setting.group_a][ia];
                const double mean_a = options.pool_marginals
                                          ? pooled_a[setting.group_a].dot(da)
                                          : f_a.dot(da);
                for (std::size_t ib = 0; ib < group_b.indices.size(); ++ib) {
                    const RealVector& db = eigen_b[setting.group_b][ib];
                    const double mean_b = options.pool_marginals
                                              ? pooled_b[setting.group_b].dot(db)
                                              : f_b.dot(db);
                    const double joint = da.dot(f * db);
                    const double cov = joint - mean_a * mean_b;
                    estimate += cov * cov;
                }
            }
        }
        report.g_estimates.push_back(estimate);
    }

    double sum = 0.0;
    for (double e : report.g_estimates) sum += e;
    const double mean = sum / report.g_estimates.size();
    report.mean_bias = mean - report.g_true;
    double variance = 0.0;
    for (double e : report.g_estimates) variance += (e - mean) * (e - mean);
    report.std_error = report.g_estimates.size() > 1
                           ? std::sqrt(variance / (report.g_estimates.size() - 1))
                           : 0.0;
    return report;
}

}  // namespace coventa
