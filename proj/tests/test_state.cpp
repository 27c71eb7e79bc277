#include <doctest.h>

#include <cmath>

#include "coventa/generators.hpp"
#include "coventa/random.hpp"
#include "coventa/state.hpp"
#include "test_helpers.hpp"

using namespace coventa;
using namespace coventa::testing;

TEST_CASE("make_density accepts the maximally mixed state") {
    const DensityMatrix rho = make_density(2, 2, Matrix::Identity(4, 4) / 4.0);
    CHECK(rho.dim() == 4);
    CHECK(rho.validation().hermiticity_deviation == 0.0);
    CHECK(rho.validation().trace_deviation < 1e-15);
}

TEST_CASE("make_density accepts the Bell projector as a rank-1 state") {
    const DensityMatrix rho = density_from_pure(bell_state());
    const DensityMatrix validated = make_density(2, 2, rho.matrix());
    // Rank 1: purity is exactly one.
    const double purity = (validated.matrix() * validated.matrix()).trace().real();
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("make_density rejects a scaled trace") {
    const Matrix bell = density_from_pure(bell_state()).matrix() * 1.01;
    CHECK_THROWS_AS(make_density(2, 2, bell), TraceNotOne);
    CHECK_THROWS_WITH_AS(make_density(2, 2, bell), doctest::Contains("1e-10"), TraceNotOne);
}

TEST_CASE("make_density rejects non-Hermitian input naming the offender") {
    Matrix m = Matrix::Identity(4, 4) / 4.0;
    m(0, 1) = Complex(0.0, 0.1);
    CHECK_THROWS_WITH_AS(make_density(2, 2, m), doctest::Contains("(0, 1)"), NotHermitian);
}

TEST_CASE("make_density rejects indefinite matrices") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    CHECK_THROWS_AS(make_density(2, 2, m), NotPositive);
}

TEST_CASE("make_density rejects out-of-range dimensions and shapes") {
    CHECK_THROWS_AS(make_density(1, 2, Matrix::Identity(2, 2) / 2.0), DimensionOutOfRange);
    CHECK_THROWS_AS(make_density(17, 2, Matrix::Identity(34, 34) / 34.0), DimensionOutOfRange);
    CHECK_THROWS_AS(make_density(2, 2, Matrix::Identity(3, 3) / 3.0), DimensionMismatch);
}

TEST_CASE("partial trace of the Bell state is maximally mixed on both sides") {
    const DensityMatrix rho = density_from_pure(bell_state());
    const Matrix half = Matrix::Identity(2, 2) / 2.0;
    CHECK((partial_trace(rho, Side::A) - half).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((partial_trace(rho, Side::B) - half).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace of a product state returns the factors exactly") {
    Matrix rho_a(2, 2);
    rho_a << 0.7, Complex(0.1, 0.05), Complex(0.1, -0.05), 0.3;
    Matrix rho_b(3, 3);
    rho_b << 0.5, 0.0, Complex(0.0, 0.1), 0.0, 0.3, 0.0, Complex(0.0, -0.1), 0.0, 0.2;
    const DensityMatrix rho = make_density(2, 3, kron(rho_a, rho_b));
    CHECK((partial_trace(rho, Side::A) - rho_a).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((partial_trace(rho, Side::B) - rho_b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace of the two-term correlated mixture embeds in dim_b") {
    // rho = (|00><00| + |11><11|)/2 on 2x3; contracting the A index by hand
    // leaves (|0><0| + |1><1|)/2 inside the 3-dimensional B space.
    Matrix m = Matrix::Zero(6, 6);
    m(0, 0) = 0.5;  // |00> at index 0*3+0
    m(4, 4) = 0.5;  // |11> at index 1*3+1
    const DensityMatrix rho = make_density(2, 3, m);
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.5;
    CHECK((partial_trace(rho, Side::B) - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("schmidt_decompose on product and Bell states") {
    Vector product = Vector::Zero(4);
    product(0) = 1.0;
    const SchmidtSpectrum s1 = schmidt_decompose(PureState(2, 2, product));
    CHECK(s1.probabilities(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s1.probabilities(1) == doctest::Approx(0.0).epsilon(1e-12));

    const SchmidtSpectrum s2 = schmidt_decompose(bell_state());
    CHECK(s2.probabilities(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s2.probabilities(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt_decompose reads off amplitudes already in Schmidt form") {
    const SchmidtSpectrum s = schmidt_decompose(two_term_state(0.8));
    CHECK(s.probabilities(0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(s.probabilities(1) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(s.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt_decompose rejects unnormalized vectors") {
    Vector v = Vector::Zero(4);
    v(0) = 1.1;
    CHECK_THROWS_AS(PureState(2, 2, v), NormalizationError);
    CHECK_THROWS_AS(schmidt_decompose(PureState::unchecked(2, 2, v)), NormalizationError);
}

TEST_CASE("schmidt probabilities are invariant under local unitaries") {
    const int combos[][2] = {{2, 2}, {3, 2}, {2, 4}, {3, 3}};
    for (const auto& dims : combos) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const PureState psi = random_pure_state(dims[0], dims[1], 100 + seed);
            const auto [u_a, u_b] = random_local_unitary(dims[0], dims[1], 200 + seed);
            const Vector rotated = kron(u_a, u_b) * psi.amplitudes();
            const SchmidtSpectrum before = schmidt_decompose(psi);
            const SchmidtSpectrum after =
                schmidt_decompose(PureState::unchecked(dims[0], dims[1], rotated));
            CHECK((before.probabilities - after.probabilities).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("expectation values of scaled Pauli observables") {
    const Matrix sx = pauli_x() / std::sqrt(2.0);
    const Matrix sz = pauli_z() / std::sqrt(2.0);
    const DensityMatrix mixed = make_density(2, 2, Matrix::Identity(4, 4) / 4.0);
    CHECK(expectation(mixed, kron(sz, Matrix::Identity(2, 2))) ==
          doctest::Approx(0.0).epsilon(1e-12));

    Vector zero_zero = Vector::Zero(4);
    zero_zero(0) = 1.0;
    const DensityMatrix ket00 = density_from_pure(PureState(2, 2, zero_zero));
    CHECK(expectation(ket00, kron(sz, sz)) == doctest::Approx(0.5).epsilon(1e-12));

    const DensityMatrix bell = density_from_pure(bell_state());
    CHECK(expectation(bell, kron(sx, sx)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("expectation rejects bad observables") {
    const DensityMatrix mixed = make_density(2, 2, Matrix::Identity(4, 4) / 4.0);
    Matrix skew = Matrix::Zero(4, 4);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(expectation(mixed, skew), NotHermitian);
    CHECK_THROWS_AS(expectation(mixed, Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("bloch expansion round-trips the state") {
    const GeneratorSet set2 = gell_mann_set(2);
    const GeneratorSet set3 = gell_mann_set(3);
    const DensityMatrix rho = random_mixed_state(2, 3, 6, 42);
    const BlochExpansion bloch = bloch_expand(rho, set2, set3);
    CHECK(bloch.a(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bloch.b(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(bloch.l(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    const Matrix rebuilt = bloch_reconstruct(bloch, set2, set3);
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("bloch expansion round-trips with MUB generator sets") {
    const GeneratorSet set3 = mub_generator_set(3);
    const DensityMatrix rho = random_mixed_state(3, 3, 9, 7);
    const BlochExpansion bloch = bloch_expand(rho, set3, set3);
    const Matrix rebuilt = bloch_reconstruct(bloch, set3, set3);
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("partial-trace coefficient identity a_k = N_B l_k0, b_l = N_A l_0l") {
    const int combos[][2] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 5}, {5, 4}, {5, 5}};
    int states = 0;
    for (const auto& dims : combos) {
        const GeneratorSet set_a = gell_mann_set(dims[0]);
        const GeneratorSet set_b = gell_mann_set(dims[1]);
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const DensityMatrix rho =
                random_mixed_state(dims[0], dims[1], dims[0] * dims[1], 1000 + seed);
            const BlochExpansion bloch = bloch_expand(rho, set_a, set_b);
            for (int k = 0; k < dims[0] * dims[0]; ++k)
                CHECK(std::abs(bloch.a(k) - dims[1] * bloch.l(k, 0)) < 1e-10);
            for (int l = 0; l < dims[1] * dims[1]; ++l)
                CHECK(std::abs(bloch.b(l) - dims[0] * bloch.l(0, l)) < 1e-10);
            ++states;
        }
    }
    CHECK(states >= 100);
}
