#include "coventa/state.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace coventa {

namespace {

void require_local_dims(int dim_a, int dim_b) {
    if (dim_a < kMinLocalDim || dim_a > kMaxLocalDim || dim_b < kMinLocalDim ||
        dim_b > kMaxLocalDim) {
        std::ostringstream msg;
        msg << "local dimensions " << dim_a << "x" << dim_b << " outside [2, 16]";
        throw DimensionOutOfRange(msg.str());
    }
}

std::string format_entry(Eigen::Index i, Eigen::Index j) {
    std::ostringstream msg;
    msg << "(" << i << ", " << j << ")";
    return msg.str();
}

}  // namespace

DensityMatrix::DensityMatrix(int dim_a, int dim_b, Matrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
    require_local_dims(dim_a_, dim_b_);
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a_) * dim_b_;
    if (matrix_.rows() != d || matrix_.cols() != d) {
        std::ostringstream msg;
        msg << "density matrix must be " << d << "x" << d << " for dims " << dim_a_ << "x"
            << dim_b_ << ", got " << matrix_.rows() << "x" << matrix_.cols();
        throw DimensionMismatch(msg.str());
    }
    if (!matrix_.allFinite()) throw Error("density matrix contains non-finite entries");

    // Hermiticity, with the worst offender named.
    double worst = 0.0;
    Eigen::Index wi = 0, wj = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const double dev = std::abs(matrix_(i, j) - std::conj(matrix_(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    validation_.hermiticity_deviation = worst;
    if (worst > tol::hermiticity) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian: |rho - rho^dagger| = " << worst << " at "
            << format_entry(wi, wj) << ", tolerance " << tol::hermiticity;
        throw NotHermitian(msg.str());
    }

    validation_.trace_deviation = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (validation_.trace_deviation > tol::trace) {
        std::ostringstream msg;
        msg << "density matrix trace " << matrix_.trace().real() << " deviates from 1 by "
            << validation_.trace_deviation << ", tolerance " << tol::trace;
        throw TraceNotOne(msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver((matrix_ + matrix_.adjoint()) / 2.0);
    validation_.min_eigenvalue = solver.eigenvalues().minCoeff();
    if (validation_.min_eigenvalue < tol::eigenvalue_floor) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite: smallest eigenvalue "
            << validation_.min_eigenvalue << " below floor " << tol::eigenvalue_floor;
        throw NotPositive(msg.str());
    }
}

DensityMatrix::DensityMatrix(UncheckedTag, int dim_a, int dim_b, Matrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::unchecked(int dim_a, int dim_b, Matrix matrix) {
    return DensityMatrix(UncheckedTag{}, dim_a, dim_b, std::move(matrix));
}

DensityMatrix make_density(int dim_a, int dim_b, const Matrix& entries) {
    return DensityMatrix(dim_a, dim_b, entries);
}

PureState::PureState(int dim_a, int dim_b, Vector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
    require_local_dims(dim_a_, dim_b_);
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a_) * dim_b_;
    if (amplitudes_.size() != d) {
        std::ostringstream msg;
        msg << "pure state must have " << d << " amplitudes for dims " << dim_a_ << "x" << dim_b_
            << ", got " << amplitudes_.size();
        throw DimensionMismatch(msg.str());
    }
    if (!amplitudes_.allFinite()) throw Error("pure state contains non-finite amplitudes");
    const double norm_dev = std::abs(amplitudes_.norm() - 1.0);
    if (norm_dev > tol::normalization) {
        std::ostringstream msg;
        msg << "pure state norm deviates from 1 by " << norm_dev << ", tolerance "
            << tol::normalization;
        throw NormalizationError(msg.str());
    }
}

PureState::PureState(UncheckedTag, int dim_a, int dim_b, Vector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {}

PureState PureState::unchecked(int dim_a, int dim_b, Vector amplitudes) {
    return PureState(UncheckedTag{}, dim_a, dim_b, std::move(amplitudes));
}

DensityMatrix density_from_pure(const PureState& psi) {
    return DensityMatrix::unchecked(psi.dim_a(), psi.dim_b(),
                                    psi.amplitudes() * psi.amplitudes().adjoint());
}

Matrix contract_side_b(const Matrix& rho, int dim_a, int dim_b, const Matrix& op_b) {
    Matrix out(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a)
        for (int c = 0; c < dim_a; ++c)
            out(a, c) = (rho.block(a * dim_b, c * dim_b, dim_b, dim_b) * op_b).trace();
    return out;
}

Matrix partial_trace(const DensityMatrix& rho, Side keep) {
    const int na = rho.dim_a();
    const int nb = rho.dim_b();
    if (keep == Side::A)
        return contract_side_b(rho.matrix(), na, nb, Matrix::Identity(nb, nb));
    Matrix out = Matrix::Zero(nb, nb);
    for (int a = 0; a < na; ++a) out += rho.matrix().block(a * nb, a * nb, nb, nb);
    return out;
}

double expectation(const DensityMatrix& rho, const Matrix& op) {
    if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
        std::ostringstream msg;
        msg << "observable is " << op.rows() << "x" << op.cols() << " but the state lives on "
            << rho.dim() << " dimensions";
        throw DimensionMismatch(msg.str());
    }
    const double herm_dev = hermiticity_deviation(op);
    if (herm_dev > tol::hermiticity) {
        std::ostringstream msg;
        msg << "observable is not Hermitian: deviation " << herm_dev << ", tolerance "
            << tol::hermiticity;
        throw NotHermitian(msg.str());
    }
    const Complex value = (rho.matrix() * op).trace();
    if (std::abs(value.imag()) > tol::hermiticity) {
        std::ostringstream msg;
        msg << "expectation has imaginary residue " << value.imag() << " above "
            << tol::hermiticity;
        throw Error(msg.str());
    }
    return value.real();
}

SchmidtSpectrum schmidt_decompose(const PureState& psi) {
    const double norm_dev = std::abs(psi.amplitudes().norm() - 1.0);
    if (norm_dev > 1e-8) {
        std::ostringstream msg;
        msg << "schmidt_decompose: state norm deviates from 1 by " << norm_dev
            << ", tolerance 1e-8";
        throw NormalizationError(msg.str());
    }
    const int na = psi.dim_a();
    const int nb = psi.dim_b();
    // A-major amplitudes reshape to the na x nb coefficient matrix row-wise.
    Matrix coeff(na, nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) coeff(i, j) = psi.amplitudes()(i * nb + j);

    Eigen::JacobiSVD<Matrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtSpectrum spectrum;
    spectrum.probabilities = RealVector::Zero(na);
    const int r = static_cast<int>(svd.singularValues().size());
    for (int i = 0; i < std::min(r, na); ++i)
        spectrum.probabilities(i) = svd.singularValues()(i) * svd.singularValues()(i);
    spectrum.basis_a = svd.matrixU();
    spectrum.basis_b = svd.matrixV();
    return spectrum;
}

BlochExpansion bloch_expand(const DensityMatrix& rho, const GeneratorSet& set_a,
                            const GeneratorSet& set_b) {
    const int na = rho.dim_a();
    const int nb = rho.dim_b();
    if (set_a.dim != na || set_b.dim != nb)
        throw DimensionMismatch("bloch_expand: generator set dimensions do not match the state");

    const Matrix rho_a = partial_trace(rho, Side::A);
    const Matrix rho_b = partial_trace(rho, Side::B);

    BlochExpansion bloch;
    bloch.a = RealVector::Zero(na * na);
    bloch.b = RealVector::Zero(nb * nb);
    bloch.l = RealMatrix::Zero(na * na, nb * nb);

    bloch.a(0) = 1.0 / na;
    bloch.b(0) = 1.0 / nb;
    for (int k = 1; k < na * na; ++k) bloch.a(k) = (rho_a * set_a.ops[k - 1]).trace().real();
    for (int l = 1; l < nb * nb; ++l) bloch.b(l) = (rho_b * set_b.ops[l - 1]).trace().real();

    // l_{kl} = Tr(rho g_k (x) g_l) / (c_k c_l), with c_0 = N for the identity
    // component and c = 1 for the orthonormal generators.
    for (int l = 0; l < nb * nb; ++l) {
        const Matrix& op_b = (l == 0) ? Matrix::Identity(nb, nb) : set_b.ops[l - 1];
        const Matrix contracted = contract_side_b(rho.matrix(), na, nb, op_b);
        const double scale_b = (l == 0) ? 1.0 / nb : 1.0;
        bloch.l(0, l) = contracted.trace().real() * scale_b / na;
        for (int k = 1; k < na * na; ++k)
            bloch.l(k, l) = (set_a.ops[k - 1] * contracted).trace().real() * scale_b;
    }
    return bloch;
}

Matrix bloch_reconstruct(const BlochExpansion& bloch, const GeneratorSet& set_a,
                         const GeneratorSet& set_b) {
    const int na = set_a.dim;
    const int nb = set_b.dim;
    Matrix out = Matrix::Zero(na * nb, na * nb);
    for (int k = 0; k < na * na; ++k) {
        const Matrix& op_a = (k == 0) ? Matrix::Identity(na, na) : set_a.ops[k - 1];
        for (int l = 0; l < nb * nb; ++l) {
            const Matrix& op_b = (l == 0) ? Matrix::Identity(nb, nb) : set_b.ops[l - 1];
            out += bloch.l(k, l) * kron(op_a, op_b);
        }
    }
    return out;
}

}  // namespace coventa
