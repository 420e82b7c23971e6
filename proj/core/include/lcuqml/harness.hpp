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
 * @file harness.hpp
 * Quantum-kernel classification: kernel matrix, SMO SVM, PCA dimension, alpha sweep.
 */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lcuqml/qsim.hpp"

namespace lcuqml {

struct KernelMatrix {
    Eigen::MatrixXd k;
    std::vector<std::size_t> ids;
};

/// K_ij = |<psi_i|psi_j>|^2.
KernelMatrix compute_kernel(const std::vector<Statevector> &states);
/// Symmetric (1e-12), unit diagonal (1e-10), smallest eigenvalue >= -1e-8.
void validate_kernel(const KernelMatrix &kernel);

struct SvmConfig {
    double c = 1.0;
    double tol = 1e-4;
    int max_iterations = 10000;
};

struct SvmModel {
    std::vector<std::size_t> train_idx;
    std::vector<double> alpha;
    std::vector<int> labels;
    double rho = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Dual soft-margin SVM by SMO with the maximal-violating-pair selection.
SvmModel svm_train(const KernelMatrix &kernel, const std::vector<int> &labels,
                   const std::vector<std::size_t> &train_idx, const SvmConfig &config = {});
/// sign(sum_i alpha_i y_i K(i, x) - rho), zero maps to +1.
int svm_predict(const SvmModel &model, const KernelMatrix &kernel, std::size_t sample);

struct SvmResult {
    double accuracy = 0.0;
    /// False when the iteration cap was hit; the accuracy is then from the partial solution.
    bool converged = true;
    int iterations = 0;
};

SvmResult svm_train_predict(const KernelMatrix &kernel, const std::vector<int> &labels,
                            const std::vector<std::size_t> &train_idx,
                            const std::vector<std::size_t> &test_idx, const SvmConfig &config = {});

/// Leading principal components (real and imaginary parts stacked) reaching the variance fraction.
int effective_dimension(const std::vector<Statevector> &states, double variance_fraction = 0.95);

struct AlphaSweepConfig {
    std::vector<double> alphas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    int repetitions = 10;
    /// Total clouds per repetition, split evenly between sphere and torus.
    int samples = 100;
    int points_per_cloud = 3;
    std::uint64_t seed = 2024;
    SvmConfig svm;
    /// Samples per repetition and alpha cross-checked against run_lcu.
    int lcu_checks = 5;
};

struct AlphaSweepRow {
    double alpha = 0.0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    double mean_effective_dimension = 0.0;
    double std_effective_dimension = 0.0;
    int repetitions = 0;
};

struct AlphaSweepResult {
    std::vector<AlphaSweepRow> rows;
    /// Largest amplitude deviation between run_lcu and direct amplification.
    double max_lcu_deviation = 0.0;
    bool all_converged = true;
};

/**
 * @brief Accuracy and effective dimension of amplified IQP-encoded clouds versus alpha.
 *
 * Repetition r uses derive_seed(seed, r) for the dataset. Each cloud is
 * normalized to [-pi/2, pi/2], IQP-encoded point by point and amplified
 * towards the S_n-symmetric subspace with points as 2-qubit qudits.
 * Standard deviations are population values.
 */
AlphaSweepResult alpha_sweep_experiment(const AlphaSweepConfig &config);

} // namespace lcuqml
