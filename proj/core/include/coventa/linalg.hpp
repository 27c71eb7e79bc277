#pragma once

#include <Eigen/Dense>
#include <complex>

namespace coventa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Dimension guard for the whole library: states and operator sets are
/// desk-scale, local dimensions outside [2, 16] are rejected.
inline constexpr int kMinLocalDim = 2;
inline constexpr int kMaxLocalDim = 16;

namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double eigenvalue_floor = -1e-9;
inline constexpr double normalization = 1e-10;
inline constexpr double generator = 1e-10;
inline constexpr double audit = 1e-9;
inline constexpr double criterion_guard = 1e-12;
}  // namespace tol

/// Kronecker product a (x) b, row-index convention (i_a * rows_b + i_b).
Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product of column vectors.
Vector kron(const Vector& a, const Vector& b);

/// Largest |m - m^dagger| entry; zero for exactly Hermitian input.
double hermiticity_deviation(const Matrix& m);

/// Largest |u^dagger u - 1| entry.
double unitarity_deviation(const Matrix& u);

/// Frobenius norm squared, Tr(m^dagger m).
double frobenius_squared(const Matrix& m);

bool is_prime(int n);

}  // namespace coventa
