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
 * @file groupproj.hpp
 * Irreducible-representation projections of finite groups acting on states.
 *
 * Elements are indexed 0..|G|-1 with the identity at index 0. Character
 * rows are indexed by irrep r (row 0 is the trivial irrep), columns by
 * conjugacy class.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lcuqml/encodings.hpp"
#include "lcuqml/lcu.hpp"
#include "lcuqml/qsim.hpp"

namespace lcuqml {

/// Image of 0..n-1; sigma[i] is where i goes.
using Permutation = std::vector<int>;

struct FiniteGroupData {
    std::string name;
    /// table[i][j] = index of g_i g_j.
    std::vector<std::vector<int>> table;
    std::vector<int> inverses;
    std::vector<std::vector<int>> classes;
    std::vector<std::string> class_labels;
    /// class_of[i] = class of element i.
    std::vector<int> class_of;
    /// R x C.
    CMatrix characters;
    /// Filled for permutation groups; element i acts as permutations[i].
    std::vector<Permutation> permutations;

    [[nodiscard]] std::size_t order() const { return table.size(); }
    [[nodiscard]] std::size_t num_irreps() const { return static_cast<std::size_t>(characters.rows()); }
    [[nodiscard]] std::size_t num_classes() const { return classes.size(); }
    [[nodiscard]] int class_size(std::size_t c) const { return static_cast<int>(classes[c].size()); }
    /// n_r = chi_r(identity).
    [[nodiscard]] double degree(std::size_t r) const { return characters(static_cast<Eigen::Index>(r), 0).real(); }
    [[nodiscard]] cplx character(std::size_t r, std::size_t element) const {
        return characters(static_cast<Eigen::Index>(r), class_of[element]);
    }
};

/// Group axioms, class partition, character orthogonality (1e-12), sum n_r^2 = |G|.
void validate_group(const FiniteGroupData &group);

/**
 * @brief S_2, S_3 or S_4 with hard-coded character tables.
 *
 * Elements are the permutations of {0..n-1} in lexicographic order;
 * (sigma tau)(i) = sigma(tau(i)). Class order: S_3 I, (12), (123);
 * S_4 I, (12), (12)(34), (123), (1234).
 */
FiniteGroupData symmetric_group(int n);

/**
 * @brief Group data from JSON.
 *
 * Keys: "name", "table" (|G| x |G| ints, identity at 0), "classes" (lists of
 * element indices, identity class first), "characters" (rows of reals, or
 * [re, im] pairs), optional "class_labels". Inverses and class_of are derived.
 */
FiniteGroupData load_group_json(const std::filesystem::path &path);

/// Unitary action U_g per element on num_qubits target qubits.
struct RepMap {
    int num_qubits = 0;
    std::vector<GateAction> ops;
};

/// Qudit SWAP network: the qudit at position k moves to position sigma(k).
RepMap swap_rep(const FiniteGroupData &group, int qudit_bits = 1);

/// U_g U_h = U_{gh} on every pair and unitarity of each U_g, within 1e-10.
void validate_rep(const FiniteGroupData &group, const RepMap &rep);

/// m_r = (1/|G|) sum_g chi_r(g)^* tr U_g.
std::vector<double> irrep_multiplicities(const FiniteGroupData &group, const RepMap &rep);

struct ProjectionResult {
    CVector vector;
    /// Squared norm of the projected vector.
    double weight = 0.0;
};

/// (n_r/|G|) sum_g chi_r(g)^* U_g |psi> by direct summation.
ProjectionResult apply_projector(const FiniteGroupData &group, const RepMap &rep, std::size_t r,
                                 const Statevector &psi);
CMatrix projector_matrix(const FiniteGroupData &group, const RepMap &rep, std::size_t r);

/// One complex weight a_r per irrep.
struct ProjectionWeights {
    std::vector<cplx> a;
};

/// Pre-initialisation amplitudes c_r = a_r n_r / Omega, padded to 2^k.
CVector projection_prep_vector(const FiniteGroupData &group, const ProjectionWeights &w, int ancilla_qubits);
/// Omega = || (a_r n_r)_r ||.
double projection_normalizer(const FiniteGroupData &group, const ProjectionWeights &w);

/**
 * @brief Completes orthonormal columns to a dim x dim unitary.
 *
 * Candidates are canonical basis vectors in index order; candidates whose
 * residual norm is below 1e-8 are skipped. Throws ConstructionError when
 * the result is not unitary within 1e-12.
 */
CMatrix gram_schmidt_complete(const CMatrix &columns, Eigen::Index dim);

/// chi-hat: column r has entries chi_r(g_i)^* / sqrt(|G|), 2^k x 2^k with 2^k >= |G|.
CMatrix character_unitary(const FiniteGroupData &group);
/// chi-tilde: column r has entries sqrt(d_nu) chi_r(nu)^* / sqrt(|G|) over classes.
CMatrix class_character_unitary(const FiniteGroupData &group);

/**
 * @brief LCU program for (1/Omega) sum_r a_r P_r.
 *
 * Prep circuit: Householder(c) then chi-hat on the ancillas; unprepare:
 * chi-hat. Ancilla basis state i < |G| selects U_{g_i}.
 */
LcuProgram build_projection_program(const FiniteGroupData &group, const RepMap &rep,
                                     const ProjectionWeights &weights);

/// Ancilla layout of the conjugacy-class variant.
struct ClassRegisterLayout {
    int class_qubits = 0;
    /// First qubit and width of the element register of each class.
    std::vector<Register> element_registers;
    [[nodiscard]] int total_qubits() const;
};

ClassRegisterLayout class_register_layout(const FiniteGroupData &group);

/**
 * @brief Same operator using chi-tilde on a class register plus one uniform
 * element register per class.
 *
 * Uses a gate-level select circuit; the selects map is filled as well.
 */
LcuProgram conjugacy_class_program(const FiniteGroupData &group, const RepMap &rep,
                                   const ProjectionWeights &weights);

/// Direct (1/Omega) sum_r a_r P_r |psi>; its squared norm is the success probability.
CVector direct_weighted_projection(const FiniteGroupData &group, const RepMap &rep,
                                   const ProjectionWeights &weights, const Statevector &psi);

struct ProjectionProbability {
    /// sum |a_r|^2 w_r / sum |a_r n_r|^2, which agrees with run_lcu.
    double simulated = 0.0;
    /// sum |a_r|^2 w_r / sum |a_r|^2, the single-projection reading <psi_r|psi_r>.
    double single_projection_claim = 0.0;
};

/// subspace_weights[r] = <psi_r|psi_r>, summing to 1 within 1e-10.
ProjectionProbability projection_success_probability(const ProjectionWeights &weights,
                                                      const std::vector<double> &subspace_weights,
                                                      const std::vector<double> &degrees);

struct ProjectedState {
    Statevector state;
    double pi = 0.0;
};

/// Trivial-irrep projection of n_qudits qudits of qudit_bits qubits, by run_lcu.
ProjectedState permutation_symmetrize(const Statevector &psi, int n_qudits, int qudit_bits = 1);

/// a_1 = 1, a_r = 1 - alpha otherwise.
ProjectionWeights amplify_weights(const FiniteGroupData &group, double alpha);
/// run_lcu with amplify_weights.
ProjectedState amplify_symmetric_subspace(const Statevector &psi, double alpha,
                                          const FiniteGroupData &group, const RepMap &rep);
/// Normalized (1 - alpha) psi + alpha P_1 psi with the matching probability.
ProjectedState amplify_symmetric_direct(const Statevector &psi, double alpha,
                                        const FiniteGroupData &group, const RepMap &rep);

struct SchurBasisS4 {
    CVector d1;
    CVector d2;
};

/// Spin-zero basis of four qubits spanning the r = 3 subspace of S_4.
SchurBasisS4 schur_basis_s4();

struct RotInvRow {
    int cloud_id = 0;
    double theta = 0.0;
    double overlap_invariant = 0.0;
    double overlap_raw = 0.0;
};

/**
 * @brief Overlaps of a 4-point cloud with its rotated copy.
 *
 * Cloud c uses derive_seed(seed, c) for points (re-drawn with a further
 * derived seed if its r = 3 component vanishes) and
 * derive_seed(derive_seed(seed, c), 1) for the axis. Angles are
 * pi k / (n_angles - 1).
 */
std::vector<RotInvRow> rotational_invariance_experiment(int n_clouds, int n_angles, std::uint64_t seed);

} // namespace lcuqml
