#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coventa/generators.hpp"
#include "coventa/measures.hpp"
#include "coventa/state.hpp"

namespace coventa {

/// A joint local measurement: one commuting generator group per side,
/// measured in the common eigenbasis pair. covered_pairs lists the generator
/// index pairs whose covariance this setting determines.
struct MeasurementSetting {
    Matrix basis_a;
    Matrix basis_b;
    std::vector<std::pair<int, int>> covered_pairs;
    int group_a = 0;
    int group_b = 0;
};

/// One setting per pair of local groups; the covered pairs partition the
/// full (N_A^2 - 1)(N_B^2 - 1) grid. Diagonality of every generator in its
/// setting basis is verified at 1e-10.
std::vector<MeasurementSetting> plan_settings(const GeneratorSet& set_a,
                                              const GeneratorSet& set_b);

/// Multinomial sample of the joint outcomes (i, j), flattened as
/// i * dim_b + j. Counts sum to shots; deterministic per seed.
std::vector<std::int64_t> simulate_counts(const DensityMatrix& rho,
                                          const MeasurementSetting& setting, std::int64_t shots,
                                          std::uint64_t seed);

struct EstimateOptions {
    std::int64_t shots_per_setting = 1000;
    /// When positive, a fixed total budget divided evenly across settings
    /// (rounded down) instead of shots_per_setting.
    std::int64_t total_shots = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    /// Pool marginal estimates across all settings sharing a local group
    /// instead of re-estimating them inside each joint setting.
    bool pool_marginals = false;
};

struct EstimationReport {
    double g_true = 0.0;
    std::vector<double> g_estimates;
    std::int64_t shots_per_setting = 0;
    int settings_count = 0;
    double mean_bias = 0.0;
    double std_error = 0.0;
};

/// Plug-in estimate of G from empirical frequencies: per setting, the joint
/// and marginal generator expectations are read off the counts through the
/// generators' eigenvalues in the setting basis, assembled into covariances
/// and summed. Small-sample bias is reported, not corrected.
EstimationReport estimate_g(const DensityMatrix& rho, const GeneratorSet& set_a,
                            const GeneratorSet& set_b, const EstimateOptions& options);

}  // namespace coventa
