// Copyright 2026 The lcuqml Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch_amalgamated.hpp>

#include <cmath>

#include "lcuqml/errors.hpp"
#include "lcuqml/lcu.hpp"
#include "support/random_programs.hpp"

using namespace lcuqml;
using Catch::Matchers::WithinAbs;

namespace {

LcuProgram uniform_program(int k, std::vector<Circuit> selects) {
    LcuProgram p;
    p.ancilla_qubits = k;
    const auto dim = Eigen::Index{1} << k;
    p.prep_amplitudes = CVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    for (std::size_t j = 0; j < selects.size(); ++j) {
        if (!selects[j].empty()) {
            p.selects[j] = selects[j];
        }
    }
    return p;
}

} // namespace

TEST_CASE("I + X on |0> gives |+> with probability 1/2") {
    const auto out = run_lcu(uniform_program(1, {{}, {gates::x(0)}}), Statevector(1));
    CHECK_THAT(out.pi_success, WithinAbs(0.5, 1e-12));
    CHECK_THAT(out.post_state[0].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(out.post_state[1].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(out.omega_prime, WithinAbs(std::sqrt(0.5), 1e-12));
}

TEST_CASE("identity-only selects return the input for any prep") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        LcuProgram p;
        p.ancilla_qubits = 2;
        p.prep_amplitudes = haar_random_state(2, s).amplitudes();
        const auto psi = haar_random_state(3, s + 100);
        const auto out = run_lcu(p, psi);
        CHECK_THAT(out.pi_success, WithinAbs(1.0, 1e-12));
        CHECK((out.post_state.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Pauli average on |0>") {
    // (I + X + Y + Z)|0>/4 = (2|0> + (1+i)|1>)/4
    const auto p = uniform_program(2, {{}, {gates::x(0)}, {gates::y(0)}, {gates::z(0)}});
    const auto oracle = apply_lcu_oracle(p, Statevector(1));
    CHECK(std::abs(oracle.unnormalized[0] - cplx(0.5)) < 1e-12);
    CHECK(std::abs(oracle.unnormalized[1] - cplx(0.25, 0.25)) < 1e-12);
    CHECK_THAT(oracle.pi_success, WithinAbs(0.375, 1e-12));
    const auto out = run_lcu(p, Statevector(1));
    CHECK_THAT(out.pi_success, WithinAbs(0.375, 1e-12));
}

TEST_CASE("cancelling terms give a zero oracle vector and an impossible post-selection") {
    const auto p = uniform_program(1, {{}, {GateAction::dense({0}, -CMatrix::Identity(2, 2))}});
    const auto psi = haar_random_state(1, 4);
    const auto oracle = apply_lcu_oracle(p, psi);
    CHECK(oracle.unnormalized.norm() < 1e-15);
    CHECK(oracle.pi_success < 1e-15);
    CHECK_THROWS_AS(run_lcu(p, psi), PostSelectionImpossible);
}

TEST_CASE("random programs match the direct oracle") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto c = testing::random_program(derive_seed(77, s));
        const auto oracle = apply_lcu_oracle(c.program, c.target);
        if (oracle.pi_success < 1e-12) {
            continue;
        }
        const auto out = run_lcu(c.program, c.target);
        CHECK_THAT(out.pi_success, WithinAbs(oracle.pi_success, 1e-10));
        CHECK(out.pi_success <= 1.0 + 1e-12);
        const CVector expect = oracle.unnormalized / std::sqrt(oracle.pi_success);
        CHECK((out.post_state.amplitudes() - expect).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("effective operator matches term weights") {
    const auto c = testing::random_program(5);
    const int n = c.target.num_qubits();
    const CMatrix a = lcu_effective_operator(c.program, n);
    const auto oracle = apply_lcu_oracle(c.program, c.target);
    CHECK((a * c.target.amplitudes() - oracle.unnormalized).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pi is one exactly when the operator acts as a phase on the state") {
    // (I + Z)/2 on |0> is the identity there; on |+> it halves the norm
    const auto p = uniform_program(1, {{}, {gates::z(0)}});
    CHECK_THAT(run_lcu(p, Statevector(1)).pi_success, WithinAbs(1.0, 1e-12));
    CHECK_THAT(run_lcu(p, apply_gate(Statevector(1), gates::h(0))).pi_success, WithinAbs(0.5, 1e-12));
}

TEST_CASE("completion unitary has the requested first column") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const CVector v = haar_random_state(3, s).amplitudes();
        const CMatrix u = completion_unitary(v);
        CHECK(is_unitary(u, 1e-12));
        CHECK((u.col(0) - v).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK_THROWS_AS(completion_unitary(CVector::Ones(2)), DomainError);
}

TEST_CASE("weighted programs use sqrt weights") {
    const auto p = make_weighted_program({1.0, 3.0}, {{}, {gates::x(0)}});
    const auto w = lcu_term_weights(p);
    CHECK_THAT(w[0].real(), WithinAbs(0.25, 1e-12));
    CHECK_THAT(w[1].real(), WithinAbs(0.75, 1e-12));
}

TEST_CASE("program validation") {
    LcuProgram p;
    p.ancilla_qubits = 1;
    p.prep_amplitudes = CVector::Ones(2);
    CHECK_THROWS_AS(validate_program(p, 1), ValidationError);
    p.prep_amplitudes = CVector::Ones(4) / 2.0;
    CHECK_THROWS_AS(validate_program(p, 1), DomainError);
    p.prep_amplitudes = CVector::Ones(2) / std::sqrt(2.0);
    p.selects[1] = {gates::x(3)};
    CHECK_THROWS_AS(validate_program(p, 1), DomainError);
    p.selects.clear();
    p.prep_circuit = {gates::x(0)};
    CHECK_THROWS_AS(validate_program(p, 1), ValidationError);
    CHECK_THROWS_AS(run_lcu(LcuProgram{1, CVector::Ones(2) / std::sqrt(2.0)}, Statevector::from_amplitudes(CVector::Ones(2))), DomainError);
}
