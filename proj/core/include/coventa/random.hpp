#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "coventa/state.hpp"

namespace coventa {

/// Deterministic random source. Uniform and Gaussian draws are derived from
/// raw mt19937_64 output so streams are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal via Box-Muller.
    double gaussian();
    /// Fresh seed for a derived, independent stream.
    std::uint64_t derive_seed() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed pure state: complex standard normal vector, normalized.
PureState random_pure_state(int dim_a, int dim_b, std::uint64_t seed);

/// Convex combination of `terms` random product pure states with flat
/// Dirichlet weights; separable by construction.
DensityMatrix random_separable_mixed(int dim_a, int dim_b, int terms, std::uint64_t seed);

/// Haar-random local unitaries (QR of a complex Gaussian matrix with the
/// phases of the R diagonal absorbed).
std::pair<Matrix, Matrix> random_local_unitary(int dim_a, int dim_b, std::uint64_t seed);

/// Generic mixed state from the Hilbert-Schmidt-style ensemble:
/// rho = W W^dagger / Tr(W W^dagger) with W complex Gaussian of the given rank.
DensityMatrix random_mixed_state(int dim_a, int dim_b, int rank, std::uint64_t seed);

/// Haar-random unitary on C^dim drawing from an existing stream.
Matrix haar_unitary(int dim, Rng& rng);

}  // namespace coventa
