#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mbqc/density.hpp"
#include "mbqc/state.hpp"
#include "test_support.hpp"

using namespace mbqc;
using test::basis_state;
using test::random_state;

TEST_CASE("plus state amplitudes") {
    const StateVector one = new_plus_state(1);
    CHECK(one.amplitude(0).real() == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(one.amplitude(1).real() == doctest::Approx(0.7071067811865476).epsilon(1e-15));

    const StateVector two = new_plus_state(2);
    for (Eigen::Index i = 0; i < 4; ++i) {
        CHECK(two.amplitude(i) == Complex(0.5, 0.0));
    }
    CHECK(two.squared_norm() == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(new_plus_state(25), CapacityError);
    CHECK_THROWS_AS(new_plus_state(0), CapacityError);
}

TEST_CASE("hadamard takes |0> to |+>") {
    const StateVector out = apply_single_qubit_gate(StateVector(1), 0, hadamard_gate());
    CHECK(fidelity_pure(out, new_plus_state(1)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("identity gate leaves amplitudes untouched") {
    std::mt19937_64 rng(11);
    const StateVector psi = random_state(3, rng);
    const StateVector out = apply_single_qubit_gate(psi, 1, identity_gate());
    CHECK((out.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rz composes with its inverse") {
    std::mt19937_64 rng(12);
    const StateVector psi = random_state(4, rng);
    StateVector out = apply_single_qubit_gate(psi, 2, rz_gate(0.7));
    out = apply_single_qubit_gate(out, 2, rz_gate(-0.7));
    CHECK(fidelity_pure(out, psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gate validation") {
    Eigen::Matrix2cd bad;
    bad << 1, 0, 0, 2;
    CHECK_THROWS_AS(apply_single_qubit_gate(StateVector(1), 0, bad), ValidationError);
    CHECK_THROWS_AS(apply_single_qubit_gate(StateVector(2), 2, hadamard_gate()), IndexError);
}

TEST_CASE("cz negates |11> and is an involution") {
    const StateVector out = apply_cz(basis_state(2, 3), 0, 1);
    CHECK(out.amplitude(3) == Complex(-1.0, 0.0));

    std::mt19937_64 rng(13);
    const StateVector psi = random_state(3, rng);
    const StateVector twice = apply_cz(apply_cz(psi, 0, 2), 0, 2);
    CHECK((twice.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(apply_cz(StateVector(2), 1, 1), IndexError);
}

TEST_CASE("two-qubit cluster has maximally mixed marginals") {
    const StateVector cluster = apply_cz(new_plus_state(2), 0, 1);
    for (int q : {0, 1}) {
        const DensityMatrix marginal = partial_trace(cluster, {q});
        CHECK(trace_distance(marginal, DensityMatrix::maximally_mixed(1)) < 1e-12);
    }
}

TEST_CASE("xy measurement of an eigenstate is deterministic") {
    const auto branches = measure_xy_branches(new_plus_state(1), 0, 0.0);
    CHECK(branches[0].outcome == 0);
    CHECK(branches[0].probability == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(branches[0].possible);
    CHECK_FALSE(branches[1].possible);
    CHECK_FALSE(branches[1].state.has_value());
}

TEST_CASE("xy measurement of a pole state is unbiased at every angle") {
    for (double phi : {0.0, 0.3, -1.2, 2.9}) {
        const auto branches = measure_xy_branches(StateVector(1), 0, phi);
        CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("first qubit of CZ(psi ⊗ +) is unbiased in every xy basis") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 8; ++trial) {
        const StateVector psi = random_state(1, rng);
        Eigen::VectorXcd joint(4);
        // qubit 0 carries psi, qubit 1 the |+>.
        joint(0) = psi.amplitude(0) / std::numbers::sqrt2;
        joint(1) = psi.amplitude(1) / std::numbers::sqrt2;
        joint(2) = psi.amplitude(0) / std::numbers::sqrt2;
        joint(3) = psi.amplitude(1) / std::numbers::sqrt2;
        const StateVector resource = apply_cz(StateVector::from_amplitudes(joint), 0, 1);
        const double phi = std::uniform_real_distribution<double>(-3.1, 3.1)(rng);
        const auto probs = xy_branch_probabilities(resource, 0, phi);
        CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("branch completeness and norm preservation") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector psi = random_state(3, rng);
        const int qubit = static_cast<int>(rng() % 3);
        const double phi = std::uniform_real_distribution<double>(-3.1, 3.1)(rng);
        const auto branches = measure_xy_branches(psi, qubit, phi);
        CHECK(branches[0].probability + branches[1].probability ==
              doctest::Approx(1.0).epsilon(1e-12));
        for (const auto& branch : branches) {
            if (branch.possible) {
                CHECK(branch.state->squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("branch mixture equals the dephased pre-measurement state") {
    std::mt19937_64 rng(16);
    const int n = 3;
    for (int trial = 0; trial < 5; ++trial) {
        const StateVector psi = random_state(n, rng);
        const int qubit = static_cast<int>(rng() % n);
        const double phi = std::uniform_real_distribution<double>(-3.1, 3.1)(rng);

        const auto branches = measure_xy_branches(psi, qubit, phi);
        Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(psi.dim(), psi.dim());
        for (const auto& branch : branches) {
            if (!branch.possible) continue;
            const auto& a = branch.state->amplitudes();
            mixture += branch.probability * (a * a.adjoint());
        }

        // Independent route: dephase in the measurement eigenbasis.
        Eigen::Matrix2cd plus_proj;
        const Complex e = std::exp(Complex(0, phi));
        plus_proj << 0.5, 0.5 * std::conj(e), 0.5 * e, 0.5;
        const Eigen::Matrix2cd minus_proj = Eigen::Matrix2cd::Identity() - plus_proj;
        const Eigen::MatrixXcd p0 = test::embed_single(plus_proj, qubit, n);
        const Eigen::MatrixXcd p1 = test::embed_single(minus_proj, qubit, n);
        const Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
        const Eigen::MatrixXcd dephased = p0 * rho * p0 + p1 * rho * p1;

        CHECK((mixture - dephased).cwiseAbs().maxCoeff() < 1e-12);

        // In particular the kept-qubit marginals agree.
        std::vector<int> kept;
        for (int q = 0; q < n; ++q) {
            if (q != qubit) kept.push_back(q);
        }
        const DensityMatrix lhs = DensityMatrix::from_matrix(mixture);
        CHECK(trace_distance(partial_trace(lhs, kept), partial_trace(psi, kept)) <= 1e-10);
    }
}

TEST_CASE("collapse to basis matches the branch probabilities") {
    std::mt19937_64 rng(17);
    const StateVector psi = random_state(3, rng);
    const double phi = 0.8;
    const auto probs = xy_branch_probabilities(psi, 1, phi);
    for (int outcome : {0, 1}) {
        StateVector collapsed = psi;
        const double p = collapse_xy_to_basis(collapsed, 1, phi, outcome);
        CHECK(p == doctest::Approx(probs[outcome]).epsilon(1e-12));
        CHECK(collapsed.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
        // Measured qubit ends in |outcome>.
        for (Eigen::Index i = 0; i < collapsed.dim(); ++i) {
            if (((i >> 1) & 1) != outcome) CHECK(std::abs(collapsed.amplitude(i)) == 0.0);
        }
    }
}

TEST_CASE("fidelity basics") {
    std::mt19937_64 rng(18);
    const StateVector psi = random_state(2, rng);
    CHECK(fidelity_pure(psi, psi) == doctest::Approx(1.0).epsilon(1e-13));

    Eigen::VectorXcd rotated = std::exp(Complex(0, 1.234)) * psi.amplitudes();
    CHECK(fidelity_pure(StateVector::from_amplitudes(rotated), psi) ==
          doctest::Approx(1.0).epsilon(1e-13));

    CHECK(fidelity_pure(StateVector(1), new_plus_state(1)) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(fidelity_pure(StateVector(1), StateVector(2)), ValidationError);
}

TEST_CASE("from_amplitudes validation") {
    CHECK_THROWS_AS(StateVector::from_amplitudes(Eigen::VectorXcd::Zero(3)), ValidationError);
    Eigen::VectorXcd unnormalized(2);
    unnormalized << 1.0, 1.0;
    CHECK_THROWS_AS(StateVector::from_amplitudes(unnormalized), ValidationError);
}
