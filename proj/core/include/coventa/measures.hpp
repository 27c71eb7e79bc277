#pragma once

#include <string>
#include <utility>

#include "coventa/generators.hpp"
#include "coventa/state.hpp"

namespace coventa {

enum class Route { CovarianceSum, HilbertSchmidt, PureSchmidt, FromInvariants };

std::string to_string(Route route);

struct MeasureResult {
    double g = 0.0;
    Route route = Route::HilbertSchmidt;
    int dim_a = 0;
    int dim_b = 0;
    std::string context;
};

/// Covariance <opA (x) opB> - <opA (x) 1><1 (x) opB> of local Hermitian
/// observables.
double covariance(const DensityMatrix& rho, const Matrix& op_a, const Matrix& op_b);

/// G as the double sum of squared generator covariances. The two sets must
/// satisfy the orthonormal traceless relations; any such sets give the same
/// value.
MeasureResult g_covariance(const DensityMatrix& rho, const GeneratorSet& set_a,
                           const GeneratorSet& set_b);

/// G as the squared Hilbert-Schmidt distance Tr{(rho - rho_A (x) rho_B)^2}.
MeasureResult g_hilbert_schmidt(const DensityMatrix& rho);
MeasureResult g_hilbert_schmidt(const PureState& psi);

/// G of a pure state from its Schmidt probabilities:
/// sum a^4 + 2 sum_{i<j} a_i^2 a_j^2 - 2 sum a^3 + sum a^2 + 2 sum_{i<j} a_i a_j.
MeasureResult g_pure_schmidt(const SchmidtSpectrum& spectrum);

/// 1 - Tr{(rho_A)^2}. For pure states this is the squared I-concurrence;
/// for mixed input the same formula is evaluated and flagged, since it is
/// not the convex-roof quantity there.
double i_concurrence_squared(const PureState& psi);

struct IConcurrenceResult {
    double value = 0.0;
    bool pure_state_semantics = false;
};

IConcurrenceResult i_concurrence_squared(const DensityMatrix& rho);

/// sum_{i<j<k} a_i a_j a_k over Schmidt probabilities.
double three_concurrence(const SchmidtSpectrum& spectrum);

/// G = C_I^4 + C_I^2 - 6 C_3, taking C_I^2 and C_3.
MeasureResult g_from_invariants(double c_i_squared, double c_3);

enum class Verdict { Entangled, Inconclusive };

std::string to_string(Verdict verdict);

inline constexpr double kSeparabilityThreshold = 0.25;

/// G > 1/4 certifies nonseparability; the bound is attained by a separable
/// state, so the comparison is strict with a 1e-12 guard and anything at or
/// below the threshold stays Inconclusive.
Verdict separability_verdict(double g);

/// Two-qutrit isotropic family
/// rho = (1 - alpha)/9 identity + alpha/3 sum_{mn} |mm><nn|, -1/8 <= alpha <= 1.
DensityMatrix isotropic_state(double alpha);

/// Closed form G = 8 alpha^2 / 9 for the isotropic family.
double isotropic_g(double alpha);

/// Classically correlated mixture sum_j p_j |jj><jj| on dim_a x dim_b.
struct CorrelatedMixture {
    CorrelatedMixture(RealVector probabilities, int dim_a = 0, int dim_b = 0);

    RealVector probabilities;
    int dim_a = 0;
    int dim_b = 0;
};

DensityMatrix correlated_state(const CorrelatedMixture& mix);
double correlated_mixture_g(const CorrelatedMixture& mix);

/// Maximizes G over the weight simplex of correlated mixtures at N x N:
/// exhaustive grid at resolution 1/200 for N <= 4 plus multi-start projected
/// gradient ascent. The maximum is 1/4 at two equal weights.
std::pair<CorrelatedMixture, double> maximize_correlated_g(int dim);

}  // namespace coventa
