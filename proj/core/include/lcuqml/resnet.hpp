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
 * @file resnet.hpp
 * Residual variational layers built from one-ancilla LCUs.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcuqml/lcu.hpp"
#include "lcuqml/qsim.hpp"

namespace lcuqml {

/**
 * @brief Sublayered ansatz of gates exp(i theta H) on adjacent qubit pairs.
 *
 * Each generator is a two-letter Pauli string such as "XY" (X on qubit j,
 * Y on qubit j+1). Per sublayer and per generator, gates are applied first
 * on pairs (0,1), (2,3), ... and then on (1,2), (3,4), ...; params are
 * consumed in that order.
 */
struct ParamCircuit {
    int num_qubits = 0;
    std::vector<std::string> generators;
    int sublayers = 1;
    std::vector<double> params;
};

/// Adjacent pairs in application order (even-start pairs, then odd-start pairs).
std::vector<std::pair<int, int>> adjacent_pair_order(int num_qubits);
std::size_t param_count(int num_qubits, std::size_t num_generators, int sublayers);
/// Params drawn uniformly from [0, 2 pi).
ParamCircuit random_param_circuit(int num_qubits, std::vector<std::string> generators,
                                  int sublayers, std::uint64_t seed);
Circuit param_circuit_gates(const ParamCircuit &circuit);

/// ((1 - beta) I + beta W) applied as a post-selected one-ancilla LCU.
struct ResidualLayer {
    Circuit circuit;
    double beta = 0.5;
};

struct ResidualStepResult {
    Statevector state;
    double pi_layer = 0.0;
};

ResidualStepResult residual_step(const Statevector &state, const ResidualLayer &layer);

/// 1 - 2 beta (1 - beta) (1 - Re<psi|W|psi>).
double residual_probability_formula(const Statevector &state, const Circuit &w, double beta);

struct ForwardResult {
    Statevector state;
    double pi_total = 1.0;
    std::vector<double> per_layer_pis;
};

/// Sequential residual steps; PostSelectionImpossible carries the failing layer.
ForwardResult resnet_forward(const std::vector<ResidualLayer> &layers, const Statevector &psi0);

/// All layers at once: one ancilla per layer, selects are ordered products.
LcuProgram joint_resnet_program(const std::vector<ResidualLayer> &layers);

double beta_lower_bound(double beta);

/**
 * @brief Loss terms of W2 ((I + W1)/2) |psi> measured with O.
 *
 * total_normalized = (l_no_bp + l_bp + l_nonunitary) / (4 omega_prime_sq)
 * where omega_prime_sq is the post-selection probability of the residual
 * layer. When that probability vanishes, zero_probability is set and
 * total_normalized is NaN.
 */
struct LossDecomposition {
    double l_no_bp = 0.0;
    double l_bp = 0.0;
    double l_nonunitary = 0.0;
    double total_normalized = 0.0;
    double omega_prime_sq = 0.0;
    bool zero_probability = false;
};

LossDecomposition loss_decomposition(const Statevector &psi0, const Circuit &w1,
                                     const Circuit &w2, const Observable &obs);
LossDecomposition loss_decomposition(const Statevector &psi0, const CMatrix &w1,
                                     const CMatrix &w2, const Observable &obs);

struct GradientEstimate {
    double finite_difference = 0.0;
    /// f(theta + pi/4) - f(theta - pi/4); exact for exp(i theta H) with H^2 = I.
    std::optional<double> two_point;
};

using LossFunction = std::function<double(const std::vector<double> &)>;

/**
 * @brief Central difference (step 1e-5) and, optionally, the two-point rule.
 *
 * With pauli_generator set, a disagreement above 1e-5 raises NumericalError.
 */
GradientEstimate loss_gradient(const LossFunction &loss, const std::vector<double> &theta,
                               std::size_t index, bool pauli_generator = true);

struct PlateauConfig {
    std::vector<int> n_list{2, 4, 6, 8};
    int samples = 500;
    int sublayers_w1 = 5;
    int sublayers_w2 = 5;
    std::vector<std::string> generators_w1{"XY", "YX", "YZ"};
    std::vector<std::string> generators_w2{"XY"};
    /// Leading Pauli letters; padded with 'I' up to n.
    std::string observable = "YY";
    std::uint64_t seed = 7;
    bool residual = true;
};

struct PlateauRow {
    int n = 0;
    double grad_variance = 0.0;
    double mean_abs_nonunitary = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};

/**
 * @brief Gradient variance of the first W2 parameter over random parameters.
 *
 * Model without residual: O measured on W2 W1 |0>. With residual: on the
 * normalized W2 ((I + W1)/2)|0>. Sample s at width n uses the seed
 * derive_seed(derive_seed(seed, n), s).
 */
std::vector<PlateauRow> plateau_experiment(const PlateauConfig &config);

using SublayerFactory = std::function<Circuit(std::uint64_t seed)>;

/// One Haar-random dense unitary on all qubits per sublayer.
SublayerFactory haar_sublayer_factory(int num_qubits);
/// One random ParamCircuit sublayer per call.
SublayerFactory param_sublayer_factory(int num_qubits, std::vector<std::string> generators);

/**
 * @brief (I + W_L)...(I + W_1) W_0 with 2^(l-1) sublayers in layer l.
 */
struct Ensemble {
    int num_qubits = 0;
    Circuit w0;
    std::vector<ResidualLayer> layers;
    /// Sublayer count per layer, layer 1 first.
    std::vector<int> sublayer_counts;
};

Ensemble build_uniform_ensemble(int num_layers, int num_qubits, const SublayerFactory &factory,
                                std::uint64_t seed, double beta = 0.5);

struct EnsembleTerm {
    std::vector<int> included_layers;
    int depth = 0;
    double weight = 0.0;
    CMatrix op;
};

/// Brute-force expansion into 2^L weighted unitary terms.
std::vector<EnsembleTerm> expand_ensemble(const Ensemble &ensemble);

/// 1 / pi_total for a Haar-sublayer ensemble started from |0...0>.
double ensemble_expected_attempts(int num_layers, double beta, int num_qubits, std::uint64_t seed);

/// Skip connections from the input to every layer.
struct InputSkipSpec {
    std::vector<Circuit> layers;
    CVector gammas;
};

LcuProgram input_skip_program(const InputSkipSpec &spec);
LcuOutcome input_skip_forward(const InputSkipSpec &spec, const Statevector &psi0);
/// Direct sum_f |gamma_f|^2 W_L ... W_f |psi0> (unnormalized).
CVector input_skip_oracle(const InputSkipSpec &spec, const Statevector &psi0);

/// Least-squares slope of ys against xs.
double fitted_slope(const std::vector<double> &xs, const std::vector<double> &ys);

} // namespace lcuqml
