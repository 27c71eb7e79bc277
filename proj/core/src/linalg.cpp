#include "coventa/linalg.hpp"

namespace coventa {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

double hermiticity_deviation(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const Matrix& u) {
    Matrix g = u.adjoint() * u;
    g -= Matrix::Identity(u.cols(), u.cols());
    return g.cwiseAbs().maxCoeff();
}

double frobenius_squared(const Matrix& m) {
    return m.squaredNorm();
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace coventa
