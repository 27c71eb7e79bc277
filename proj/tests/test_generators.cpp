#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "coventa/generators.hpp"
#include "coventa/measures.hpp"
#include "coventa/random.hpp"
#include "test_helpers.hpp"

using namespace coventa;
using namespace coventa::testing;

namespace {

RealVector sorted_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    RealVector values = solver.eigenvalues();
    std::sort(values.data(), values.data() + values.size());
    return values;
}

}  // namespace

TEST_CASE("gell_mann_set(2) is the scaled Pauli triple") {
    const GeneratorSet set = gell_mann_set(2);
    REQUIRE(set.ops.size() == 3);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK((set.ops[0] - s * pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((set.ops[1] - s * pauli_y()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((set.ops[2] - s * pauli_z()).cwiseAbs().maxCoeff() < 1e-15);
    // Orthonormality by direct trace computation.
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
            const Complex t = (set.ops[k] * set.ops[l]).trace();
            CHECK(std::abs(t - (k == l ? 1.0 : 0.0)) < 1e-14);
        }
}

TEST_CASE("gell_mann_set(3) is orthonormal with seven eigenbasis groups") {
    const GeneratorSet set = gell_mann_set(3);
    REQUIRE(set.ops.size() == 8);
    const GeneratorSetReport report = validate_generator_set(set);
    CHECK(report.max_trace_deviation < 1e-12);
    CHECK(report.max_orthonormality_deviation < 1e-12);

    CHECK(set.groups.size() == 7);
    // The two diagonal generators (last in construction order) share a group.
    bool diagonal_pair_found = false;
    for (const auto& group : set.groups)
        if (group.indices == std::vector<int>{6, 7}) diagonal_pair_found = true;
    CHECK(diagonal_pair_found);
}

TEST_CASE("gell_mann grouping agrees with brute-force commutation") {
    const GeneratorSet set = gell_mann_set(3);
    // Every pair inside a group commutes; the group basis diagonalizes all
    // members.
    for (const auto& group : set.groups) {
        for (std::size_t i = 0; i < group.indices.size(); ++i)
            for (std::size_t j = i + 1; j < group.indices.size(); ++j) {
                const Matrix& a = set.ops[group.indices[i]];
                const Matrix& b = set.ops[group.indices[j]];
                CHECK((a * b - b * a).norm() < 1e-12);
            }
        for (int idx : group.indices) {
            const Matrix rotated = group.basis.adjoint() * set.ops[idx] * group.basis;
            double off = 0.0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (r != c) off = std::max(off, std::abs(rotated(r, c)));
            CHECK(off < 1e-10);
        }
    }
}

TEST_CASE("gell_mann_set rejects out-of-range dimensions") {
    CHECK_THROWS_AS(gell_mann_set(1), DimensionOutOfRange);
    CHECK_THROWS_AS(gell_mann_set(17), DimensionOutOfRange);
}

TEST_CASE("validate_generator_set passes shipped sets and fails unscaled Paulis") {
    CHECK(validate_generator_set(gell_mann_set(4)).passes(1e-9));
    CHECK(validate_generator_set(mub_generator_set(7)).passes(1e-9));

    GeneratorSet raw;
    raw.dim = 2;
    raw.ops = {pauli_x(), pauli_y(), pauli_z()};
    const GeneratorSetReport report = validate_generator_set(raw);
    // Tr(sigma sigma) = 2 delta, so the worst deviation is |2 - 1| = 1.
    CHECK(report.max_orthonormality_deviation == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.max_trace_deviation < 1e-12);
    CHECK(!report.passes(1e-9));
}

TEST_CASE("mub_generator_set(3) satisfies the generator relations") {
    const GeneratorSet set = mub_generator_set(3);
    REQUIRE(set.ops.size() == 8);
    const GeneratorSetReport report = validate_generator_set(set);
    CHECK(report.max_trace_deviation < 1e-10);
    CHECK(report.max_orthonormality_deviation < 1e-10);
}

TEST_CASE("mub_generator_set(3) has the projector-combination eigenvalue profiles") {
    const GeneratorSet set = mub_generator_set(3);
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    RealVector cos_profile(3), sin_profile(3);
    cos_profile << -inv_sqrt6, -inv_sqrt6, 2.0 * inv_sqrt6;
    sin_profile << -inv_sqrt2, 0.0, inv_sqrt2;
    for (const auto& group : set.groups) {
        REQUIRE(group.indices.size() == 2);
        CHECK((sorted_eigenvalues(set.ops[group.indices[0]]) - cos_profile).cwiseAbs().maxCoeff() <
              1e-10);
        CHECK((sorted_eigenvalues(set.ops[group.indices[1]]) - sin_profile).cwiseAbs().maxCoeff() <
              1e-10);
    }
}

TEST_CASE("mub_generator_set(5) has 24 operators in 6 groups of 4") {
    const GeneratorSet set = mub_generator_set(5);
    CHECK(set.ops.size() == 24);
    REQUIRE(set.groups.size() == 6);
    for (const auto& group : set.groups) CHECK(group.indices.size() == 4);
}

TEST_CASE("mub_generator_set(2) is the scaled Pauli set grouped one per basis") {
    const GeneratorSet set = mub_generator_set(2);
    REQUIRE(set.ops.size() == 3);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK((set.ops[0] - s * pauli_x()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((set.ops[1] - s * pauli_y()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((set.ops[2] - s * pauli_z()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(set.groups.size() == 3);
}

TEST_CASE("operators within a MUB group commute") {
    const GeneratorSet set = mub_generator_set(7);
    for (const auto& group : set.groups)
        for (std::size_t i = 0; i < group.indices.size(); ++i)
            for (std::size_t j = i + 1; j < group.indices.size(); ++j) {
                const Matrix& a = set.ops[group.indices[i]];
                const Matrix& b = set.ops[group.indices[j]];
                // Frobenius norm bounds the operator norm.
                CHECK((a * b - b * a).norm() < 1e-10);
            }
}

TEST_CASE("G is generator-set independent given the orthonormal relations") {
    const GeneratorSet gm = gell_mann_set(3);
    const GeneratorSet mub = mub_generator_set(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_mixed_state(3, 3, 9, 3000 + seed);
        const double via_gm = g_covariance(rho, gm, gm).g;
        const double via_mub = g_covariance(rho, mub, mub).g;
        CHECK(std::abs(via_gm - via_mub) < 1e-9);
    }
}

TEST_CASE("mub_generator_set rejects composite dims and malformed families") {
    CHECK_THROWS_AS(mub_generator_set(6), NotPrime);
    MubFamily family = build_mub(3);
    family.bases.pop_back();
    CHECK_THROWS_AS(mub_generator_set(family), MissingMubFamily);
}
