#include "coventa/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <string>

namespace coventa {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

namespace {

Vector gaussian_vector(int dim, Rng& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
    return v;
}

Vector haar_state_vector(int dim, Rng& rng) {
    Vector v = gaussian_vector(dim, rng);
    v.normalize();
    return v;
}

}  // namespace

Matrix haar_unitary(int dim, Rng& rng) {
    Matrix gaussian(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gaussian(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Matrix> qr(gaussian);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the R-diagonal phases makes the distribution Haar.
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

PureState random_pure_state(int dim_a, int dim_b, std::uint64_t seed) {
    Rng rng(seed);
    return PureState::unchecked(dim_a, dim_b, haar_state_vector(dim_a * dim_b, rng));
}

DensityMatrix random_separable_mixed(int dim_a, int dim_b, int terms, std::uint64_t seed) {
    if (terms < 1)
        throw Error("random_separable_mixed: terms must be >= 1, got " + std::to_string(terms));
    Rng rng(seed);

    // Flat Dirichlet weights from normalized exponentials.
    RealVector weights(terms);
    for (int t = 0; t < terms; ++t) weights(t) = -std::log(1.0 - rng.uniform());
    weights /= weights.sum();

    const int d = dim_a * dim_b;
    Matrix rho = Matrix::Zero(d, d);
    for (int t = 0; t < terms; ++t) {
        const Vector psi_a = haar_state_vector(dim_a, rng);
        const Vector psi_b = haar_state_vector(dim_b, rng);
        const Vector product = kron(psi_a, psi_b);
        rho += weights(t) * (product * product.adjoint());
    }
    return DensityMatrix(dim_a, dim_b, rho);
}

std::pair<Matrix, Matrix> random_local_unitary(int dim_a, int dim_b, std::uint64_t seed) {
    Rng rng(seed);
    Matrix u_a = haar_unitary(dim_a, rng);
    Matrix u_b = haar_unitary(dim_b, rng);
    return {std::move(u_a), std::move(u_b)};
}

DensityMatrix random_mixed_state(int dim_a, int dim_b, int rank, std::uint64_t seed) {
    if (rank < 1)
        throw Error("random_mixed_state: rank must be >= 1, got " + std::to_string(rank));
    Rng rng(seed);
    const int d = dim_a * dim_b;
    Matrix w(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) w(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Matrix rho = w * w.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(dim_a, dim_b, rho);
}

}  // namespace coventa
