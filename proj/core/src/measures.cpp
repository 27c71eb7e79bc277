#include "coventa/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "coventa/random.hpp"

namespace coventa {

namespace {

void require_simplex(const RealVector& p, const char* where) {
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) < -1e-12) {
            std::ostringstream msg;
            msg << where << ": weight " << p(i) << " at index " << i << " is negative";
            throw SimplexViolation(msg.str());
        }
    const double sum = p.sum();
    if (std::abs(sum - 1.0) > tol::trace) {
        std::ostringstream msg;
        msg << where << ": weights sum to " << sum << ", deviation " << std::abs(sum - 1.0)
            << " above tolerance " << tol::trace;
        throw SimplexViolation(msg.str());
    }
}

void require_hermitian_local(const Matrix& op, int dim, const char* side) {
    if (op.rows() != dim || op.cols() != dim) {
        std::ostringstream msg;
        msg << "covariance: side " << side << " observable is " << op.rows() << "x" << op.cols()
            << " but the local dimension is " << dim;
        throw DimensionMismatch(msg.str());
    }
    const double dev = hermiticity_deviation(op);
    if (dev > tol::hermiticity) {
        std::ostringstream msg;
        msg << "covariance: side " << side << " observable is not Hermitian, deviation " << dev;
        throw NotHermitian(msg.str());
    }
}

}  // namespace

std::string to_string(Route route) {
    switch (route) {
        case Route::CovarianceSum: return "covariance-sum";
        case Route::HilbertSchmidt: return "hilbert-schmidt";
        case Route::PureSchmidt: return "pure-schmidt";
        case Route::FromInvariants: return "from-invariants";
    }
    return "unknown";
}

std::string to_string(Verdict verdict) {
    return verdict == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

double covariance(const DensityMatrix& rho, const Matrix& op_a, const Matrix& op_b) {
    require_hermitian_local(op_a, rho.dim_a(), "A");
    require_hermitian_local(op_b, rho.dim_b(), "B");
    const Matrix contracted = contract_side_b(rho.matrix(), rho.dim_a(), rho.dim_b(), op_b);
    const double joint = (op_a * contracted).trace().real();
    const double marginal_a = (partial_trace(rho, Side::A) * op_a).trace().real();
    const double marginal_b = (partial_trace(rho, Side::B) * op_b).trace().real();
    return joint - marginal_a * marginal_b;
}

MeasureResult g_covariance(const DensityMatrix& rho, const GeneratorSet& set_a,
                           const GeneratorSet& set_b) {
    if (set_a.dim != rho.dim_a() || set_b.dim != rho.dim_b())
        throw DimensionMismatch("g_covariance: generator set dimensions do not match the state");

    const int ka = set_a.dim * set_a.dim - 1;
    const int kb = set_b.dim * set_b.dim - 1;
    const Matrix rho_a = partial_trace(rho, Side::A);
    const Matrix rho_b = partial_trace(rho, Side::B);

    RealVector marginal_a(ka), marginal_b(kb);
    for (int k = 0; k < ka; ++k) marginal_a(k) = (rho_a * set_a.ops[k]).trace().real();
    for (int l = 0; l < kb; ++l) marginal_b(l) = (rho_b * set_b.ops[l]).trace().real();

    double g = 0.0;
    for (int l = 0; l < kb; ++l) {
        const Matrix contracted =
            contract_side_b(rho.matrix(), rho.dim_a(), rho.dim_b(), set_b.ops[l]);
        for (int k = 0; k < ka; ++k) {
            const double joint = (set_a.ops[k] * contracted).trace().real();
            const double cov = joint - marginal_a(k) * marginal_b(l);
            g += cov * cov;
        }
    }

    MeasureResult result;
    result.g = g;
    result.route = Route::CovarianceSum;
    result.dim_a = rho.dim_a();
    result.dim_b = rho.dim_b();
    result.context = (set_a.provenance == GeneratorProvenance::GellMann ? "gellmann" : "mub") +
                     std::string(" x ") +
                     (set_b.provenance == GeneratorProvenance::GellMann ? "gellmann" : "mub");
    return result;
}

MeasureResult g_hilbert_schmidt(const DensityMatrix& rho) {
    const Matrix rho_a = partial_trace(rho, Side::A);
    const Matrix rho_b = partial_trace(rho, Side::B);
    const Matrix difference = rho.matrix() - kron(rho_a, rho_b);
    // Tr(M^2) = ||M||_F^2 for Hermitian M.
    MeasureResult result;
    result.g = difference.squaredNorm();
    result.route = Route::HilbertSchmidt;
    result.dim_a = rho.dim_a();
    result.dim_b = rho.dim_b();
    return result;
}

MeasureResult g_hilbert_schmidt(const PureState& psi) {
    return g_hilbert_schmidt(density_from_pure(psi));
}

MeasureResult g_pure_schmidt(const SchmidtSpectrum& spectrum) {
    require_simplex(spectrum.probabilities, "g_pure_schmidt");
    const RealVector& a = spectrum.probabilities;
    const Eigen::Index n = a.size();

    double quartic = 0.0, cubic = 0.0, quadratic = 0.0;
    double pair_squares = 0.0, pair_products = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        quartic += a(i) * a(i) * a(i) * a(i);
        cubic += a(i) * a(i) * a(i);
        quadratic += a(i) * a(i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            pair_squares += a(i) * a(i) * a(j) * a(j);
            pair_products += a(i) * a(j);
        }
    }

    MeasureResult result;
    result.g = quartic + 2.0 * pair_squares - 2.0 * cubic + quadratic + 2.0 * pair_products;
    result.route = Route::PureSchmidt;
    return result;
}

double i_concurrence_squared(const PureState& psi) {
    const Matrix rho_a = partial_trace(density_from_pure(psi), Side::A);
    return 1.0 - (rho_a * rho_a).trace().real();
}

IConcurrenceResult i_concurrence_squared(const DensityMatrix& rho) {
    IConcurrenceResult result;
    const Matrix rho_a = partial_trace(rho, Side::A);
    result.value = 1.0 - (rho_a * rho_a).trace().real();
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    result.pure_state_semantics = purity > 1.0 - 1e-8;
    return result;
}

double three_concurrence(const SchmidtSpectrum& spectrum) {
    require_simplex(spectrum.probabilities, "three_concurrence");
    const RealVector& a = spectrum.probabilities;
    const Eigen::Index n = a.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            for (Eigen::Index k = j + 1; k < n; ++k) sum += a(i) * a(j) * a(k);
    return sum;
}

MeasureResult g_from_invariants(double c_i_squared, double c_3) {
    MeasureResult result;
    result.g = c_i_squared * c_i_squared + c_i_squared - 6.0 * c_3;
    result.route = Route::FromInvariants;
    return result;
}

Verdict separability_verdict(double g) {
    return g > kSeparabilityThreshold + tol::criterion_guard ? Verdict::Entangled
                                                             : Verdict::Inconclusive;
}

DensityMatrix isotropic_state(double alpha) {
    if (alpha < -0.125 || alpha > 1.0) {
        std::ostringstream msg;
        msg << "isotropic_state: alpha = " << alpha << " outside [-1/8, 1]";
        throw AlphaOutOfRange(msg.str());
    }
    Vector phi = Vector::Zero(9);
    for (int m = 0; m < 3; ++m) phi(m * 3 + m) = 1.0 / std::sqrt(3.0);
    Matrix rho = (1.0 - alpha) / 9.0 * Matrix::Identity(9, 9) + alpha * (phi * phi.adjoint());
    return DensityMatrix(3, 3, rho);
}

double isotropic_g(double alpha) {
    if (alpha < -0.125 || alpha > 1.0) {
        std::ostringstream msg;
        msg << "isotropic_g: alpha = " << alpha << " outside [-1/8, 1]";
        throw AlphaOutOfRange(msg.str());
    }
    return 8.0 * alpha * alpha / 9.0;
}

CorrelatedMixture::CorrelatedMixture(RealVector probabilities_, int dim_a_, int dim_b_)
    : probabilities(std::move(probabilities_)), dim_a(dim_a_), dim_b(dim_b_) {
    const int terms = static_cast<int>(probabilities.size());
    if (dim_a == 0) dim_a = std::max(terms, kMinLocalDim);
    if (dim_b == 0) dim_b = dim_a;
    require_simplex(probabilities, "CorrelatedMixture");
    if (terms > std::min(dim_a, dim_b)) {
        std::ostringstream msg;
        msg << "CorrelatedMixture: " << terms << " weights do not fit local dimensions " << dim_a
            << "x" << dim_b;
        throw DimensionMismatch(msg.str());
    }
}

DensityMatrix correlated_state(const CorrelatedMixture& mix) {
    const int d = mix.dim_a * mix.dim_b;
    Matrix rho = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < mix.probabilities.size(); ++j) {
        const Eigen::Index idx = j * mix.dim_b + j;
        rho(idx, idx) = std::max(mix.probabilities(j), 0.0);
    }
    rho /= rho.trace().real();
    return DensityMatrix(mix.dim_a, mix.dim_b, rho);
}

double correlated_mixture_g(const CorrelatedMixture& mix) {
    return g_hilbert_schmidt(correlated_state(mix)).g;
}

namespace {

// For the diagonal mixture the Hilbert-Schmidt form collapses to the power
// sums S_k = sum_j p_j^k:  G(p) = S2 - 2 S3 + S2^2.
double correlated_g_power_sums(const RealVector& p) {
    double s2 = 0.0, s3 = 0.0;
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        s2 += p(j) * p(j);
        s3 += p(j) * p(j) * p(j);
    }
    return s2 - 2.0 * s3 + s2 * s2;
}

RealVector project_to_simplex(RealVector v) {
    std::vector<double> sorted(v.data(), v.data() + v.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumulative = 0.0;
    double tau = 0.0;
    for (int j = 0; j < static_cast<int>(sorted.size()); ++j) {
        cumulative += sorted[j];
        const double candidate = (cumulative - 1.0) / (j + 1);
        if (sorted[j] - candidate > 0.0) tau = candidate;
    }
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = std::max(v(j) - tau, 0.0);
    return v;
}

// Projected gradient ascent with backtracking, starting from `p`.
double ascend(RealVector& p) {
    double value = correlated_g_power_sums(p);
    for (int iter = 0; iter < 4000; ++iter) {
        double s2 = 0.0;
        for (Eigen::Index j = 0; j < p.size(); ++j) s2 += p(j) * p(j);
        RealVector gradient(p.size());
        for (Eigen::Index j = 0; j < p.size(); ++j)
            gradient(j) = 2.0 * p(j) - 6.0 * p(j) * p(j) + 4.0 * s2 * p(j);

        double step = 0.5;
        bool improved = false;
        while (step > 1e-14) {
            RealVector candidate = project_to_simplex(p + step * gradient);
            const double candidate_value = correlated_g_power_sums(candidate);
            if (candidate_value > value + 1e-16) {
                p = std::move(candidate);
                value = candidate_value;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return value;
}

void for_each_composition(int total, int parts, std::vector<int>& current,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        current.push_back(head);
        for_each_composition(total - head, parts - 1, current, visit);
        current.pop_back();
    }
}

}  // namespace

std::pair<CorrelatedMixture, double> maximize_correlated_g(int dim) {
    if (dim < 2 || dim > 8)
        throw DimensionOutOfRange("maximize_correlated_g: dimension " + std::to_string(dim) +
                                  " outside [2, 8]");

    RealVector best_point = RealVector::Zero(dim);
    double best_value = -1.0;

    // Exhaustive simplex grid at resolution 1/200, certifiable at small N.
    if (dim <= 4) {
        constexpr int kResolution = 200;
        std::vector<int> current;
        RealVector p(dim);
        for_each_composition(kResolution, dim, current, [&](const std::vector<int>& ticks) {
            for (int j = 0; j < dim; ++j) p(j) = static_cast<double>(ticks[j]) / kResolution;
            const double value = correlated_g_power_sums(p);
            if (value > best_value) {
                best_value = value;
                best_point = p;
            }
        });
    }

    // Multi-start ascent; confirms no better interior point and scales to N = 8.
    Rng rng(0xc0f7a5edull);
    std::vector<RealVector> starts;
    starts.push_back(RealVector::Constant(dim, 1.0 / dim));
    {
        RealVector two = RealVector::Zero(dim);
        two(0) = two(1) = 0.5;
        starts.push_back(two);
    }
    if (best_value > 0.0) starts.push_back(best_point);
    for (int s = 0; s < 24; ++s) {
        RealVector p(dim);
        for (int j = 0; j < dim; ++j) p(j) = -std::log(1.0 - rng.uniform());
        p /= p.sum();
        starts.push_back(p);
    }
    for (RealVector start : starts) {
        const double value = ascend(start);
        if (value > best_value) {
            best_value = value;
            best_point = start;
        }
    }

    return {CorrelatedMixture(best_point, dim, dim), best_value};
}

}  // namespace coventa
