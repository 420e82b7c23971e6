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
/**
 * @file lcu.hpp
 * Prepare / select / unprepare / post-select engine and its direct oracle.
 *
 * The ancilla register occupies the k most significant qubits of the joint
 * state; the target register follows. With preparation unitary P
 * (P|0> = p) and unpreparation unitary V (applied as V^dagger), the
 * unnormalized post-selected target vector is A|psi> with
 *
 *     A = sum_j conj(V(j, s)) * p_j * U_j ,
 *
 * where s is the success index. In the common case V = P and s = 0 this is
 * sum_j |p_j|^2 U_j.
 */
#pragma once

#include <map>
#include <optional>

#include "lcuqml/qsim.hpp"

namespace lcuqml {

/**
 * @brief Description of a linear combination of unitaries.
 */
struct LcuProgram {
    int ancilla_qubits = 0;
    /// Ancilla state after preparation, length 2^k, unit norm.
    CVector prep_amplitudes;
    /// Ancilla state V|0> of the unpreparation unitary; defaults to prep_amplitudes.
    std::optional<CVector> unprepare_amplitudes;
    /// Gate-level preparation on qubits [0, k); empty means a Householder completion.
    Circuit prep_circuit;
    /// Gate-level V on qubits [0, k); run_lcu applies its adjoint. Empty means Householder.
    Circuit unprepare_circuit;
    /// Target-register circuit per ancilla basis index; unmapped indices act as identity.
    std::map<BasisIndex, Circuit> selects;
    /// Optional gate-level selection on the joint register (ancillas first).
    /// When present, run_lcu simulates it instead of the selects map.
    Circuit select_circuit;
    BasisIndex success_index = 0;
};

struct LcuOutcome {
    Statevector post_state;
    double pi_success = 0.0;
    /// Norm of the unnormalized post-selected vector (sqrt of pi_success).
    double omega_prime = 0.0;
};

struct LcuOracleResult {
    CVector unnormalized;
    double pi_success = 0.0;
};

/// Throws DomainError / ValidationError when the program is inconsistent.
void validate_program(const LcuProgram &program, int target_qubits);

/// Full joint-register simulation: prepare, select, unprepare, post-select.
LcuOutcome run_lcu(const LcuProgram &program, const Statevector &target);

/// Direct summation sum_j w_j U_j|psi> without simulating the ancillas jointly.
LcuOracleResult apply_lcu_oracle(const LcuProgram &program, const Statevector &target);

/// Per-term weights w_j = conj(V(j, s)) p_j used by the oracle.
CVector lcu_term_weights(const LcuProgram &program);

/// Dense effective operator on the target register (small targets only).
CMatrix lcu_effective_operator(const LcuProgram &program, int target_qubits);

/**
 * @brief Unitary whose first column is the given unit vector.
 *
 * Built from a single Householder reflection times a global phase.
 */
CMatrix completion_unitary(const CVector &first_column);

/// Program with prep amplitudes sqrt(w_j / sum w) for nonnegative weights.
LcuProgram make_weighted_program(const std::vector<double> &weights,
                                 const std::vector<Circuit> &unitaries);

} // namespace lcuqml
