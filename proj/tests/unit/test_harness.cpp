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
#include <random>

#include "lcuqml/encodings.hpp"
#include "lcuqml/errors.hpp"
#include "lcuqml/groupproj.hpp"
#include "lcuqml/harness.hpp"

using namespace lcuqml;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<std::size_t> iota_idx(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (std::size_t i = from; i < to; ++i) {
        v.push_back(i);
    }
    return v;
}

KernelMatrix identity_kernel(std::size_t n) {
    KernelMatrix k;
    k.k = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    k.ids = iota_idx(0, n);
    return k;
}

} // namespace

TEST_CASE("kernel examples") {
    const auto zero = Statevector(1);
    const auto plus = apply_gate(zero, gates::h(0));
    const auto k = compute_kernel({zero, plus});
    CHECK_THAT(k.k(0, 1), WithinAbs(0.5, 1e-15));
    CHECK_THAT(k.k(1, 1), WithinAbs(1.0, 1e-15));
    const auto same = compute_kernel({plus, plus, plus});
    CHECK((same.k.array() - 1.0).abs().maxCoeff() < 1e-15);
    const auto orth = compute_kernel({zero, apply_gate(zero, gates::x(0))});
    CHECK(orth.k(0, 1) == 0.0);
    CHECK_THROWS_AS(compute_kernel({zero, Statevector(2)}), DomainError);
}

TEST_CASE("kernel invariants on random states") {
    std::vector<Statevector> states;
    for (std::uint64_t s = 0; s < 30; ++s) {
        states.push_back(haar_random_state(3, s));
    }
    const auto k = compute_kernel(states);
    CHECK_NOTHROW(validate_kernel(k));
    CHECK((k.k - k.k.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k.k);
    CHECK(es.eigenvalues().minCoeff() > -1e-8);
    KernelMatrix bad = k;
    bad.k(0, 1) += 0.1;
    CHECK_THROWS(validate_kernel(bad));
}

TEST_CASE("SVM separates orthogonal clusters") {
    std::vector<Statevector> states;
    std::vector<int> labels;
    for (int i = 0; i < 20; ++i) {
        const bool pos = i % 2 == 0;
        CVector a = CVector::Zero(4);
        a[pos ? 0 : 3] = 1.0;
        a[pos ? 1 : 2] = 0.1 * (i % 5);
        states.push_back(Statevector::from_amplitudes(a, true));
        labels.push_back(pos ? 1 : -1);
    }
    const auto k = compute_kernel(states);
    const auto r = svm_train_predict(k, labels, iota_idx(0, 14), iota_idx(14, 20));
    CHECK(r.accuracy == 1.0);
    CHECK(r.converged);
    const auto mem = svm_train_predict(k, labels, iota_idx(0, 20), iota_idx(0, 20));
    CHECK(mem.accuracy == 1.0);
}

TEST_CASE("SVM on random labels is near chance") {
    std::mt19937_64 rng(123);
    std::vector<Statevector> states;
    std::vector<int> labels;
    for (std::uint64_t s = 0; s < 200; ++s) {
        states.push_back(haar_random_state(3, derive_seed(9, s)));
        labels.push_back((rng() & 1U) != 0U ? 1 : -1);
    }
    const auto r = svm_train_predict(compute_kernel(states), labels, iota_idx(0, 100), iota_idx(100, 200));
    CHECK(std::abs(r.accuracy - 0.5) <= 0.15);
}

TEST_CASE("SVM on the identity kernel predicts the majority class") {
    const std::vector<int> labels{1, 1, 1, -1, 1, -1, -1, -1, -1, -1};
    const auto k = identity_kernel(10);
    const auto train = std::vector<std::size_t>{0, 1, 2, 3, 5, 6, 7};
    const auto model = svm_train(k, labels, train);
    CHECK(model.converged);
    CHECK(svm_predict(model, k, 8) == -1);
    CHECK(svm_predict(model, k, 9) == -1);
    CHECK_THROWS_AS(svm_train(k, std::vector<int>{2, 1, 1, -1, 1, -1, -1, -1, -1, -1}, train), DomainError);
}

TEST_CASE("effective dimension") {
    const auto s = haar_random_state(2, 1);
    CHECK(effective_dimension({s, s, s}) == 0);
    CHECK(effective_dimension({Statevector(2), prepare_basis_state(2, 3)}) == 1);
    std::vector<Statevector> two;
    for (int i = 0; i < 4; ++i) {
        two.push_back(prepare_basis_state(2, static_cast<BasisIndex>(i % 2 == 0 ? 0 : 3)));
        two.push_back(prepare_basis_state(2, static_cast<BasisIndex>(i % 2 == 0 ? 1 : 2)));
    }
    CHECK(effective_dimension(two, 0.95) >= 2);
    CHECK_THROWS_AS(effective_dimension({s}), DomainError);

    // symmetrization removes directions from product-state clouds
    const auto s3 = symmetric_group(3);
    std::vector<Statevector> raw;
    std::vector<Statevector> sym;
    for (std::uint64_t i = 0; i < 60; ++i) {
        CVector v = haar_random_state(1, derive_seed(i, 0)).amplitudes();
        for (std::uint64_t q = 1; q < 3; ++q) {
            v = CVector(kron(v, haar_random_state(1, derive_seed(i, q)).amplitudes()));
        }
        raw.push_back(Statevector::from_amplitudes(v));
        sym.push_back(permutation_symmetrize(raw.back(), 3).state);
    }
    CHECK(effective_dimension(sym) < effective_dimension(raw));
}

TEST_CASE("alpha sweep small run") {
    AlphaSweepConfig cfg;
    cfg.alphas = {0.0, 0.5, 1.0};
    cfg.repetitions = 2;
    cfg.samples = 20;
    cfg.lcu_checks = 2;
    const auto a = alpha_sweep_experiment(cfg);
    REQUIRE(a.rows.size() == 3);
    CHECK(a.max_lcu_deviation < 1e-10);
    for (const auto &row : a.rows) {
        CHECK(row.repetitions == 2);
        CHECK(row.mean_accuracy >= 0.0);
        CHECK(row.mean_accuracy <= 1.0);
    }
    CHECK(a.rows[2].mean_effective_dimension <= a.rows[0].mean_effective_dimension + 1.0);
    const auto b = alpha_sweep_experiment(cfg);
    CHECK(b.rows[1].mean_accuracy == a.rows[1].mean_accuracy);
    CHECK(b.rows[1].mean_effective_dimension == a.rows[1].mean_effective_dimension);

    cfg.alphas = {1.5};
    CHECK_THROWS_AS(alpha_sweep_experiment(cfg), DomainError);
}

TEST_CASE("alpha zero equals skipping amplification") {
    const auto s3 = symmetric_group(3);
    const auto rep = swap_rep(s3, 2);
    const auto ds = normalize_to_angle_range(make_shape_dataset(5, 3, 4));
    for (const auto &c : ds.samples) {
        const auto raw = encode_cloud_iqp(c);
        const auto amp = amplify_symmetric_direct(raw, 0.0, s3, rep);
        CHECK(amp.state.amplitudes() == raw.amplitudes());
        // identity combination of all three irreps: 1 / (1 + 2^2 + 1)
        CHECK_THAT(amp.pi, WithinAbs(1.0 / 6.0, 1e-12));
    }
}
