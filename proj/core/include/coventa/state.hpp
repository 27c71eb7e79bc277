#pragma once

#include <optional>

#include "coventa/errors.hpp"
#include "coventa/generators.hpp"
#include "coventa/linalg.hpp"

namespace coventa {

enum class Side { A, B };

struct ValidationReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
};

/// Bipartite density operator with declared local dimensions. The composite
/// index convention is A-major: i = i_a * dim_b + i_b. Construction validates
/// hermiticity (1e-10), unit trace (1e-10) and positivity (eigenvalues above
/// -1e-9), in that order.
class DensityMatrix {
  public:
    DensityMatrix(int dim_a, int dim_b, Matrix matrix);

    /// Skips validation; for operators that are valid by construction.
    static DensityMatrix unchecked(int dim_a, int dim_b, Matrix matrix);

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    const Matrix& matrix() const { return matrix_; }
    const ValidationReport& validation() const { return validation_; }

  private:
    struct UncheckedTag {};
    DensityMatrix(UncheckedTag, int dim_a, int dim_b, Matrix matrix);

    int dim_a_;
    int dim_b_;
    Matrix matrix_;
    ValidationReport validation_;
};

DensityMatrix make_density(int dim_a, int dim_b, const Matrix& entries);

/// Normalized bipartite state vector, same A-major index convention.
class PureState {
  public:
    PureState(int dim_a, int dim_b, Vector amplitudes);
    static PureState unchecked(int dim_a, int dim_b, Vector amplitudes);

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    const Vector& amplitudes() const { return amplitudes_; }

  private:
    struct UncheckedTag {};
    PureState(UncheckedTag, int dim_a, int dim_b, Vector amplitudes);

    int dim_a_;
    int dim_b_;
    Vector amplitudes_;
};

DensityMatrix density_from_pure(const PureState& psi);

/// Schmidt probabilities in descending order, padded with zeros to length
/// dim_a; local_bases hold the corresponding Schmidt vectors as columns.
struct SchmidtSpectrum {
    RealVector probabilities;
    std::optional<Matrix> basis_a;
    std::optional<Matrix> basis_b;
};

/// Reduced density matrix of the kept side.
Matrix partial_trace(const DensityMatrix& rho, Side keep);

/// Tr(rho op) for a Hermitian op on the composite space; the imaginary
/// residue is checked against 1e-10 and discarded.
double expectation(const DensityMatrix& rho, const Matrix& op);

SchmidtSpectrum schmidt_decompose(const PureState& psi);

/// Coefficients of rho over { identity, generator set } on each side:
/// rho = sum_{kl} l[k][l] g_k (x) g_l with g_0 = identity, so a[0] = 1/N_A,
/// b[0] = 1/N_B and l[0][0] = 1/(N_A N_B).
struct BlochExpansion {
    RealVector a;
    RealVector b;
    RealMatrix l;
};

BlochExpansion bloch_expand(const DensityMatrix& rho, const GeneratorSet& set_a,
                            const GeneratorSet& set_b);
Matrix bloch_reconstruct(const BlochExpansion& bloch, const GeneratorSet& set_a,
                         const GeneratorSet& set_b);

/// Contraction of the B side against op_b: returns the dim_a x dim_a matrix
/// Y with Y(a, c) = Tr(block(a, c) op_b), so Tr(rho (op_a (x) op_b)) equals
/// Tr(op_a Y). With op_b = identity this is the partial trace over B.
Matrix contract_side_b(const Matrix& rho, int dim_a, int dim_b, const Matrix& op_b);

}  // namespace coventa
