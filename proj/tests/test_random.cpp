#include <doctest.h>

#include "coventa/measures.hpp"
#include "coventa/random.hpp"
#include "test_helpers.hpp"

using namespace coventa;

TEST_CASE("random pure states are normalized and seed-deterministic") {
    const PureState a = random_pure_state(3, 4, 123);
    CHECK(std::abs(a.amplitudes().norm() - 1.0) < 1e-12);
    const PureState b = random_pure_state(3, 4, 123);
    CHECK((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    const PureState c = random_pure_state(3, 4, 124);
    CHECK((a.amplitudes() - c.amplitudes()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("mean reduced purity of Haar samples matches the analytic value") {
    // E[Tr rho_A^2] = (N_A + N_B) / (N_A N_B + 1) = 0.8 for two qubits.
    double sum = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const PureState psi = random_pure_state(2, 2, 5000 + i);
        const Matrix rho_a = partial_trace(density_from_pure(psi), Side::A);
        sum += (rho_a * rho_a).trace().real();
    }
    CHECK(sum / samples == doctest::Approx(0.8).epsilon(0.0125));
}

TEST_CASE("single-term separable samples are product states with G = 0") {
    const DensityMatrix rho = random_separable_mixed(3, 3, 1, 77);
    CHECK(g_hilbert_schmidt(rho).g < 1e-12);
}

TEST_CASE("separable samples are valid states below the criterion bound") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int terms = static_cast<int>(seed % 8) + 1;
        const DensityMatrix rho = random_separable_mixed(3, 3, terms, 9000 + seed);
        CHECK(rho.validation().min_eigenvalue > -1e-9);
        CHECK(g_hilbert_schmidt(rho).g <= 0.25 + 1e-9);
    }
}

TEST_CASE("random_separable_mixed rejects a non-positive term count") {
    CHECK_THROWS_AS(random_separable_mixed(2, 2, 0, 1), Error);
}

TEST_CASE("random local unitaries are unitary and reproducible") {
    const auto [u_a, u_b] = random_local_unitary(3, 5, 31);
    CHECK(unitarity_deviation(u_a) < 1e-10);
    CHECK(unitarity_deviation(u_b) < 1e-10);
    const auto [v_a, v_b] = random_local_unitary(3, 5, 31);
    CHECK((u_a - v_a).cwiseAbs().maxCoeff() == 0.0);
    CHECK((u_b - v_b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("G of the Bell state is untouched by random local unitaries") {
    const DensityMatrix bell = density_from_pure(testing::bell_state());
    const double reference = g_hilbert_schmidt(bell).g;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto [u_a, u_b] = random_local_unitary(2, 2, 400 + seed);
        const Matrix u = kron(u_a, u_b);
        const DensityMatrix rotated = make_density(2, 2, u * bell.matrix() * u.adjoint());
        CHECK(std::abs(g_hilbert_schmidt(rotated).g - reference) < 1e-9);
    }
}

TEST_CASE("random mixed states are valid and mixed for rank above one") {
    const DensityMatrix rho = random_mixed_state(3, 4, 12, 55);
    CHECK(rho.validation().min_eigenvalue > -1e-12);
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    CHECK(purity < 0.99);
    CHECK_THROWS_AS(random_mixed_state(2, 2, 0, 1), Error);
}
