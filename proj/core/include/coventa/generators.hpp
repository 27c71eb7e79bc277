#pragma once

#include <vector>

#include "coventa/errors.hpp"
#include "coventa/linalg.hpp"
#include "coventa/mub.hpp"

namespace coventa {

enum class GeneratorProvenance { GellMann, MubBased };

/// A maximal commuting block of a generator set. All members are diagonal
/// in the columns of `basis`; the blocks partition the generator indices.
struct GeneratorGroup {
    std::vector<int> indices;
    Matrix basis;
};

/// Orthonormal traceless Hermitian basis of su(N): N^2 - 1 operators with
/// Tr(g_k) = 0 and Tr(g_k g_l) = delta_{kl}.
struct GeneratorSet {
    int dim = 0;
    std::vector<Matrix> ops;
    GeneratorProvenance provenance = GeneratorProvenance::GellMann;
    std::vector<GeneratorGroup> groups;
};

/// Generalized Gell-Mann basis (symmetric, antisymmetric, diagonal families)
/// scaled by 1/sqrt(2) so that Tr(g_k g_l) = delta_{kl}. Groups are found by
/// greedy commutation partitioning; all diagonal generators share one group.
GeneratorSet gell_mann_set(int dim);

/// Generator set built from MUB eigenprojectors. For odd prime N = 2n + 1
/// the operators in basis k are
///   L_{l,k}      = sqrt(2/N) sum_j cos(2 pi l j / N) P_{j,k},  l = 1..n,
///   Ltilde_{l,k} = sqrt(2/N) sum_j sin(2 pi l j / N) P_{j,k},
/// interleaved per l, giving (N+1)(N-1) operators grouped by basis. For
/// N = 2 the set is the scaled Pauli triple (P_{0,k} - P_{1,k})/sqrt(2).
GeneratorSet mub_generator_set(const MubFamily& family);
GeneratorSet mub_generator_set(int dim);

struct GeneratorSetReport {
    double max_trace_deviation = 0.0;
    double max_orthonormality_deviation = 0.0;
    bool passes(double tolerance) const {
        return max_trace_deviation < tolerance && max_orthonormality_deviation < tolerance;
    }
};

/// Worst-case deviations from Tr(g_k) = 0 and Tr(g_k g_l) = delta_{kl}.
GeneratorSetReport validate_generator_set(const GeneratorSet& set);

}  // namespace coventa
