#include "coventa/generators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace coventa {

namespace {

constexpr double kCommutatorTolerance = 1e-10;
constexpr double kDiagonalityTolerance = 1e-10;

double max_off_diagonal(const Matrix& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

// Orthonormal basis diagonalizing a commuting Hermitian family: decompose a
// random real combination and verify every member comes out diagonal. A
// degenerate combination can merge joint eigenspaces, in which case the
// verification fails and a fresh combination is drawn. Groups that are
// already diagonal keep the computational basis.
Matrix common_eigenbasis(const std::vector<Matrix>& ops, const std::vector<int>& indices) {
    const Eigen::Index n = ops[indices.front()].rows();
    bool already_diagonal = true;
    for (int idx : indices)
        if (max_off_diagonal(ops[idx]) > kDiagonalityTolerance) {
            already_diagonal = false;
            break;
        }
    if (already_diagonal) return Matrix::Identity(n, n);

    std::mt19937_64 coeff_source(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(0.25, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Matrix combo = Matrix::Zero(n, n);
        for (int idx : indices) combo += unit(coeff_source) * ops[idx];
        Eigen::SelfAdjointEigenSolver<Matrix> solver(combo);
        const Matrix& basis = solver.eigenvectors();
        bool all_diagonal = true;
        for (int idx : indices) {
            const Matrix rotated = basis.adjoint() * ops[idx] * basis;
            if (max_off_diagonal(rotated) > kDiagonalityTolerance) {
                all_diagonal = false;
                break;
            }
        }
        if (all_diagonal) return basis;
    }
    throw UngroupableSet("generator grouping: no common eigenbasis found after 16 attempts");
}

// Greedy partition into commuting blocks, in construction order. The seed
// block (the diagonal family) is pinned so it cannot be split by earlier
// generators that happen to commute with part of it.
std::vector<GeneratorGroup> group_by_commutation(const std::vector<Matrix>& ops,
                                                 const std::vector<int>& seed_block) {
    std::vector<std::vector<int>> blocks;
    if (!seed_block.empty()) blocks.push_back(seed_block);
    std::vector<bool> seeded(ops.size(), false);
    for (int idx : seed_block) seeded[idx] = true;
    for (int k = 0; k < static_cast<int>(ops.size()); ++k) {
        if (seeded[k]) continue;
        bool placed = false;
        for (auto& block : blocks) {
            bool commutes_with_all = true;
            for (int member : block) {
                const Matrix commutator = ops[k] * ops[member] - ops[member] * ops[k];
                if (commutator.norm() > kCommutatorTolerance) {
                    commutes_with_all = false;
                    break;
                }
            }
            if (commutes_with_all) {
                block.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({k});
    }
    std::vector<GeneratorGroup> groups;
    groups.reserve(blocks.size());
    for (auto& block : blocks)
        groups.push_back({block, common_eigenbasis(ops, block)});
    return groups;
}

}  // namespace

GeneratorSet gell_mann_set(int dim) {
    if (dim < kMinLocalDim || dim > kMaxLocalDim)
        throw DimensionOutOfRange("gell_mann_set: dimension " + std::to_string(dim) +
                                  " outside [2, 16]");
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    GeneratorSet set;
    set.dim = dim;
    set.provenance = GeneratorProvenance::GellMann;
    set.ops.reserve(dim * dim - 1);

    // Symmetric family: (|j><k| + |k><j|) / sqrt(2).
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            Matrix m = Matrix::Zero(dim, dim);
            m(j, k) = inv_sqrt2;
            m(k, j) = inv_sqrt2;
            set.ops.push_back(m);
        }
    // Antisymmetric family: -i(|j><k| - |k><j|) / sqrt(2).
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            Matrix m = Matrix::Zero(dim, dim);
            m(j, k) = Complex(0.0, -inv_sqrt2);
            m(k, j) = Complex(0.0, inv_sqrt2);
            set.ops.push_back(m);
        }
    // Diagonal family: diag(1, ..., 1, -l, 0, ...) / sqrt(l(l+1)).
    for (int l = 1; l < dim; ++l) {
        Matrix m = Matrix::Zero(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) m(j, j) = scale;
        m(l, l) = -scale * l;
        set.ops.push_back(m);
    }

    // All diagonal generators (the last dim - 1) form one pinned group.
    std::vector<int> diagonal_block;
    for (int idx = dim * (dim - 1); idx < dim * dim - 1; ++idx) diagonal_block.push_back(idx);
    set.groups = group_by_commutation(set.ops, diagonal_block);
    return set;
}

GeneratorSet mub_generator_set(const MubFamily& family) {
    const int n = family.dim;
    if (static_cast<int>(family.bases.size()) != n + 1)
        throw MissingMubFamily("mub_generator_set: family for dimension " + std::to_string(n) +
                               " must hold " + std::to_string(n + 1) + " bases, got " +
                               std::to_string(family.bases.size()));
    for (const Matrix& basis : family.bases)
        if (basis.rows() != n || basis.cols() != n)
            throw MissingMubFamily("mub_generator_set: basis shape does not match dimension " +
                                   std::to_string(n));

    const auto projectors = mub_projectors(family);

    GeneratorSet set;
    set.dim = n;
    set.provenance = GeneratorProvenance::MubBased;
    set.ops.reserve(n * n - 1);
    set.groups.reserve(n + 1);

    for (int k = 0; k <= n; ++k) {
        GeneratorGroup group;
        group.basis = family.bases[k];
        if (n == 2) {
            set.ops.push_back((projectors[k][0] - projectors[k][1]) / std::numbers::sqrt2);
            group.indices.push_back(static_cast<int>(set.ops.size()) - 1);
        } else {
            const double scale = std::sqrt(2.0 / n);
            for (int l = 1; l <= (n - 1) / 2; ++l) {
                Matrix cos_op = Matrix::Zero(n, n);
                Matrix sin_op = Matrix::Zero(n, n);
                for (int j = 0; j < n; ++j) {
                    const double angle = 2.0 * std::numbers::pi * l * j / n;
                    cos_op += scale * std::cos(angle) * projectors[k][j];
                    sin_op += scale * std::sin(angle) * projectors[k][j];
                }
                set.ops.push_back(cos_op);
                group.indices.push_back(static_cast<int>(set.ops.size()) - 1);
                set.ops.push_back(sin_op);
                group.indices.push_back(static_cast<int>(set.ops.size()) - 1);
            }
        }
        set.groups.push_back(std::move(group));
    }
    return set;
}

GeneratorSet mub_generator_set(int dim) {
    return mub_generator_set(build_mub(dim));
}

GeneratorSetReport validate_generator_set(const GeneratorSet& set) {
    GeneratorSetReport report;
    const std::size_t count = set.ops.size();
    for (std::size_t k = 0; k < count; ++k) {
        report.max_trace_deviation =
            std::max(report.max_trace_deviation, std::abs(set.ops[k].trace()));
        for (std::size_t l = k; l < count; ++l) {
            const Complex overlap = (set.ops[k] * set.ops[l]).trace();
            const double expected = (k == l) ? 1.0 : 0.0;
            report.max_orthonormality_deviation =
                std::max(report.max_orthonormality_deviation, std::abs(overlap - expected));
        }
    }
    return report;
}

}  // namespace coventa
