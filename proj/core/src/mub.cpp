#include "coventa/mub.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

namespace coventa {

namespace {

constexpr double kSnapTolerance = 1e-6;

void require_prime_dim(int dim) {
    if (dim < 2 || dim > 13)
        throw NotPrime("MUB construction: dimension " + std::to_string(dim) +
                       " outside the supported prime range [2, 13]");
    if (!is_prime(dim))
        throw NotPrime("MUB construction: dimension " + std::to_string(dim) +
                       " is not prime; bases for composite dimensions are not available");
}

// Eigendecompose a labeling operator whose spectrum is the N distinct
// N-th roots of unity. Returns the basis with column j holding the
// eigenvector of eigenvalue w^j, phases fixed.
Matrix eigenbasis_by_root_label(const Matrix& op, int dim) {
    Eigen::ComplexEigenSolver<Matrix> solver(op);
    if (solver.info() != Eigen::Success)
        throw Error("MUB construction: eigendecomposition failed");

    Matrix basis(dim, dim);
    std::vector<bool> taken(dim, false);
    for (int c = 0; c < dim; ++c) {
        const Complex mu = solver.eigenvalues()(c);
        int best = -1;
        double best_dist = kSnapTolerance;
        for (int j = 0; j < dim; ++j) {
            const double angle = 2.0 * std::numbers::pi * j / dim;
            const double dist = std::abs(mu - std::polar(1.0, angle));
            if (dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best < 0)
            throw Error("MUB construction: eigenvalue does not snap to a root of unity within 1e-6");
        if (taken[best])
            throw Error("MUB construction: duplicate root-of-unity label " + std::to_string(best));
        taken[best] = true;

        Vector v = solver.eigenvectors().col(c);
        v.normalize();
        // Global phase: first component of magnitude > 1e-8 made real positive.
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > 1e-8) {
                v *= std::conj(v(i)) / std::abs(v(i));
                break;
            }
        }
        basis.col(best) = v;
    }
    return basis;
}

}  // namespace

WeylPair weyl_pair(int dim) {
    require_prime_dim(dim);
    WeylPair pair;
    pair.dim = dim;
    pair.shift = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) pair.shift((j + 1) % dim, j) = 1.0;
    pair.clock = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j)
        pair.clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / dim);
    return pair;
}

MubFamily build_mub(int dim) {
    require_prime_dim(dim);
    const WeylPair weyl = weyl_pair(dim);

    MubFamily family;
    family.dim = dim;
    family.bases.reserve(dim + 1);
    family.labeling_ops.reserve(dim + 1);

    Matrix clock_power = Matrix::Identity(dim, dim);
    for (int k = 0; k < dim; ++k) {
        Matrix op = weyl.shift * clock_power;
        // For N = 2, (AD)^2 = -1 puts the spectrum on {i, -i}; the factor i
        // rotates it back onto the square roots of unity so the w^j labeling
        // stays uniform. The eigenbasis itself is unchanged.
        if (dim == 2 && k == 1) op *= Complex(0.0, 1.0);
        family.labeling_ops.push_back(op);
        family.bases.push_back(eigenbasis_by_root_label(op, dim));
        clock_power *= weyl.clock;
    }
    // Basis k = N: eigenbasis of D, the computational basis.
    family.labeling_ops.push_back(weyl.clock);
    family.bases.push_back(eigenbasis_by_root_label(weyl.clock, dim));
    return family;
}

UnbiasednessReport certify_unbiasedness(const MubFamily& family) {
    const int n = family.dim;
    const double target = 1.0 / n;
    UnbiasednessReport report;
    for (std::size_t k = 0; k < family.bases.size(); ++k) {
        Matrix gram = family.bases[k].adjoint() * family.bases[k];
        gram -= Matrix::Identity(n, n);
        report.max_gram_deviation = std::max(report.max_gram_deviation, gram.cwiseAbs().maxCoeff());
        for (std::size_t l = k + 1; l < family.bases.size(); ++l) {
            const Matrix overlaps = family.bases[k].adjoint() * family.bases[l];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double dev = std::abs(std::norm(overlaps(i, j)) - target);
                    report.max_overlap_deviation = std::max(report.max_overlap_deviation, dev);
                }
        }
    }
    return report;
}

std::vector<std::vector<Matrix>> mub_projectors(const MubFamily& family) {
    std::vector<std::vector<Matrix>> table(family.bases.size());
    for (std::size_t k = 0; k < family.bases.size(); ++k) {
        table[k].reserve(family.dim);
        for (int j = 0; j < family.dim; ++j) {
            const Vector v = family.bases[k].col(j);
            table[k].push_back(v * v.adjoint());
        }
    }
    return table;
}

}  // namespace coventa
