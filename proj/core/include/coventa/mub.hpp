#pragma once

#include <vector>

#include "coventa/errors.hpp"
#include "coventa/linalg.hpp"

namespace coventa {

/// Shift/clock pair on C^N: A is the cyclic permutation A|j> = |j+1 mod N>,
/// D = diag(1, w, ..., w^{N-1}) with w = exp(2 pi i / N).
struct WeylPair {
    int dim = 0;
    Matrix shift;  // A
    Matrix clock;  // D
};

WeylPair weyl_pair(int dim);

/// N+1 mutually unbiased orthonormal bases of C^N, N prime.
///
/// Basis k = 0..N-1 is the eigenbasis of O_k (O_k = A D^k for odd N;
/// for N = 2, O_1 = i A D so that the spectrum lands on the square roots
/// of unity). Basis k = N is the eigenbasis of D, i.e. the computational
/// basis. Column j of bases[k] is the eigenvector of labeling_ops[k] with
/// eigenvalue w^j; global phases are fixed by making the first component
/// of magnitude above 1e-8 real positive.
struct MubFamily {
    int dim = 0;
    std::vector<Matrix> bases;         // N+1 unitaries, columns are basis vectors
    std::vector<Matrix> labeling_ops;  // O_0 .. O_{N-1}, D
};

MubFamily build_mub(int dim);

struct UnbiasednessReport {
    double max_overlap_deviation = 0.0;  // worst | |<phi|chi>|^2 - 1/N | across bases
    double max_gram_deviation = 0.0;     // worst within-basis |Gram - I| entry
    bool passes(double tolerance) const {
        return max_overlap_deviation < tolerance && max_gram_deviation < tolerance;
    }
};

UnbiasednessReport certify_unbiasedness(const MubFamily& family);

/// Rank-1 eigenprojectors; projectors(family)[k][j] = |phi_{j,k}><phi_{j,k}|.
std::vector<std::vector<Matrix>> mub_projectors(const MubFamily& family);

}  // namespace coventa
