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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcuqml/errors.hpp"
#include "lcuqml/resnet.hpp"

using namespace lcuqml;
using Catch::Matchers::WithinAbs;

namespace {

Circuit dense_layer(int n, std::uint64_t seed) {
    std::vector<int> q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        q[static_cast<std::size_t>(i)] = i;
    }
    return {GateAction::dense(q, haar_random_unitary(1 << n, seed))};
}

Circuit minus_identity() { return {GateAction::dense({0}, -CMatrix::Identity(2, 2))}; }

} // namespace

TEST_CASE("adjacent pairs are applied even-start first") {
    const auto p = adjacent_pair_order(5);
    const std::vector<std::pair<int, int>> expected{{0, 1}, {2, 3}, {1, 2}, {3, 4}};
    CHECK(p == expected);
    CHECK(param_count(5, 3, 2) == 24);
    const auto c = random_param_circuit(4, {"XY", "YZ"}, 3, 1);
    CHECK(c.params.size() == param_count(4, 2, 3));
    CHECK(param_circuit_gates(c).size() == c.params.size());
    for (double t : c.params) {
        CHECK(t >= 0.0);
        CHECK(t < 2.0 * std::numbers::pi);
    }
}

TEST_CASE("residual step special cases") {
    const auto psi = haar_random_state(2, 3);
    const auto id = residual_step(psi, {{}, 0.3});
    CHECK_THAT(id.pi_layer, WithinAbs(1.0, 1e-12));
    CHECK((id.state.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(residual_step(Statevector(1), {minus_identity(), 0.5}), PostSelectionImpossible);

    const auto plus = apply_gate(Statevector(1), gates::h(0));
    const auto z = residual_step(plus, {{gates::z(0)}, 0.5});
    CHECK_THAT(z.pi_layer, WithinAbs(0.5, 1e-12));
    CHECK_THAT(std::abs(z.state[0]), WithinAbs(1.0, 1e-12));
}

TEST_CASE("residual probability formula matches simulation") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto psi = haar_random_state(3, derive_seed(1, s));
        const Circuit w = dense_layer(3, derive_seed(2, s));
        const double beta = (static_cast<double>(s) + 0.5) / 30.0;
        const auto out = residual_step(psi, {w, beta});
        CHECK_THAT(out.pi_layer, WithinAbs(residual_probability_formula(psi, w, beta), 1e-10));
        CHECK(out.pi_layer >= beta_lower_bound(beta) - 1e-12);
    }
}

TEST_CASE("beta lower bound") {
    CHECK(beta_lower_bound(0.5) == 0.0);
    CHECK(beta_lower_bound(0.0) == 1.0);
    CHECK(beta_lower_bound(1.0) == 1.0);
    CHECK_THAT(beta_lower_bound(0.25), WithinAbs(0.25, 1e-15));
    CHECK_THROWS_AS(beta_lower_bound(1.5), DomainError);
}

TEST_CASE("forward pass multiplies per-layer probabilities and matches the joint program") {
    const auto psi = haar_random_state(3, 8);
    const std::vector<ResidualLayer> layers{{dense_layer(3, 1), 0.5}, {dense_layer(3, 2), 0.5}};
    const auto fw = resnet_forward(layers, psi);
    CHECK_THAT(fw.pi_total, WithinAbs(fw.per_layer_pis[0] * fw.per_layer_pis[1], 1e-12));
    const auto joint = run_lcu(joint_resnet_program(layers), psi);
    CHECK_THAT(joint.pi_success, WithinAbs(fw.pi_total, 1e-10));
    CHECK((joint.post_state.amplitudes() - fw.state.amplitudes()).cwiseAbs().maxCoeff() < 1e-10);

    const auto single = resnet_forward({layers[0]}, psi);
    const auto step = residual_step(psi, layers[0]);
    CHECK(single.pi_total == step.pi_layer);

    const auto ident = resnet_forward({{{}, 0.5}, {{}, 0.7}}, psi);
    CHECK_THAT(ident.pi_total, WithinAbs(1.0, 1e-12));
}

TEST_CASE("forward pass reports the failing layer") {
    const std::vector<ResidualLayer> layers{{{gates::x(0)}, 0.2}, {minus_identity(), 0.5}};
    try {
        resnet_forward(layers, Statevector(1));
        FAIL("expected PostSelectionImpossible");
    } catch (const PostSelectionImpossible &e) {
        REQUIRE(e.layer().has_value());
        CHECK(*e.layer() == 1);
    }
}

TEST_CASE("loss decomposition limits") {
    const auto psi = haar_random_state(2, 5);
    const CMatrix w2 = haar_random_unitary(4, 6);
    const auto obs = Observable::pauli("YZ");
    const auto a = loss_decomposition(psi, CMatrix::Identity(4, 4), w2, obs);
    CHECK_THAT(a.l_bp, WithinAbs(a.l_no_bp, 1e-12));
    CHECK_THAT(a.l_nonunitary, WithinAbs(2.0 * a.l_no_bp, 1e-12));
    const auto b = loss_decomposition(psi, -CMatrix::Identity(4, 4), w2, obs);
    CHECK_THAT(b.l_nonunitary, WithinAbs(-2.0 * b.l_no_bp, 1e-12));
    CHECK(b.zero_probability);
    CHECK(std::isnan(b.total_normalized));
}

TEST_CASE("loss decomposition matches the simulated residual model") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto psi = haar_random_state(4, derive_seed(40, s));
        const Circuit w1 = dense_layer(4, derive_seed(41, s));
        const Circuit w2 = dense_layer(4, derive_seed(42, s));
        const auto obs = Observable::pauli("YYII");
        const auto d = loss_decomposition(psi, w1, w2, obs);
        const auto out = residual_step(psi, {w1, 0.5});
        const double expect = expectation_value(apply_circuit(out.state, w2), obs);
        CHECK_THAT(d.total_normalized, WithinAbs(expect, 1e-9));
        CHECK_THAT(d.omega_prime_sq, WithinAbs(out.pi_layer, 1e-10));
    }
}

TEST_CASE("gradient rules") {
    const LossFunction cos2 = [](const std::vector<double> &t) { return std::cos(2.0 * t[0]); };
    CHECK_THAT(*loss_gradient(cos2, {0.0}, 0).two_point, WithinAbs(0.0, 1e-12));
    const auto g = loss_gradient(cos2, {std::numbers::pi / 4}, 0);
    CHECK_THAT(g.finite_difference, WithinAbs(-2.0, 1e-5));
    CHECK_THAT(*g.two_point, WithinAbs(-2.0, 1e-12));

    const auto c = random_param_circuit(2, {"XY", "YX"}, 2, 9);
    const auto obs = Observable::pauli("ZY");
    const LossFunction f = [&](const std::vector<double> &t) {
        ParamCircuit cc = c;
        cc.params = t;
        return expectation_value(apply_circuit(Statevector(2), param_circuit_gates(cc)), obs);
    };
    for (std::size_t i = 0; i < c.params.size(); ++i) {
        const auto gi = loss_gradient(f, c.params, i);
        CHECK_THAT(gi.finite_difference, WithinAbs(*gi.two_point, 1e-5));
    }
    const LossFunction bad = [](const std::vector<double> &t) { return t[0] * t[0] * t[0]; };
    CHECK_THROWS_AS(loss_gradient(bad, {1.0}, 0, true), NumericalError);
    CHECK_FALSE(loss_gradient(bad, {1.0}, 0, false).two_point.has_value());
}

TEST_CASE("plateau experiment is deterministic and collapses when W1 is the identity") {
    PlateauConfig cfg;
    cfg.n_list = {2};
    cfg.samples = 200;
    cfg.residual = false;
    const auto a = plateau_experiment(cfg);
    const auto b = plateau_experiment(cfg);
    CHECK(a[0].grad_variance > 0.0);
    CHECK(a[0].grad_variance == b[0].grad_variance);

    cfg.n_list = {3};
    cfg.samples = 60;
    cfg.sublayers_w1 = 0;
    cfg.residual = true;
    const double with_res = plateau_experiment(cfg)[0].grad_variance;
    cfg.residual = false;
    const double without = plateau_experiment(cfg)[0].grad_variance;
    CHECK_THAT(with_res, WithinAbs(without, 1e-10));

    cfg.samples = 49;
    CHECK_THROWS_AS(plateau_experiment(cfg), DomainError);
}

TEST_CASE("ensemble expansion has one term per sublayer depth") {
    for (int l = 1; l <= 3; ++l) {
        const auto e = build_uniform_ensemble(l, 2, haar_sublayer_factory(2), 5);
        CHECK(e.sublayer_counts.back() == (1 << (l - 1)));
        const auto terms = expand_ensemble(e);
        CHECK(terms.size() == (std::size_t{1} << l));
        std::vector<int> depths;
        for (const auto &t : terms) {
            depths.push_back(t.depth);
        }
        std::sort(depths.begin(), depths.end());
        for (int d = 1; d <= (1 << l); ++d) {
            CHECK(depths[static_cast<std::size_t>(d - 1)] == d);
        }
    }
}

TEST_CASE("expected attempts limits") {
    CHECK_THAT(ensemble_expected_attempts(3, 1.0 - 1e-9, 3, 11), WithinAbs(1.0, 1e-6));
    const double a = ensemble_expected_attempts(3, 0.5, 3, 11);
    CHECK(a >= 1.0);
    double prev = a;
    for (double beta : {0.6, 0.7, 0.8, 0.9}) {
        const double x = ensemble_expected_attempts(3, beta, 3, 11);
        CHECK(x <= prev + 1e-12);
        prev = x;
    }
}

TEST_CASE("input skip connections") {
    InputSkipSpec one{{{gates::x(0)}}, CVector::Ones(1)};
    const auto r1 = input_skip_forward(one, Statevector(1));
    CHECK_THAT(r1.pi_success, WithinAbs(1.0, 1e-12));
    CHECK_THAT(std::abs(r1.post_state[1]), WithinAbs(1.0, 1e-12));

    CVector g(2);
    g << M_SQRT1_2, M_SQRT1_2;
    InputSkipSpec two{{{gates::x(0)}, {}}, g};
    const auto r2 = input_skip_forward(two, Statevector(1));
    CHECK_THAT(r2.pi_success, WithinAbs(0.5, 1e-12));
    CHECK_THAT(r2.post_state[0].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(r2.post_state[1].real(), WithinAbs(M_SQRT1_2, 1e-12));

    CVector g3(3);
    g3 << 0.6, 0.0, 0.8;
    InputSkipSpec three{{dense_layer(2, 1), dense_layer(2, 2), dense_layer(2, 3)}, g3};
    const auto psi = haar_random_state(2, 4);
    const auto r3 = input_skip_forward(three, psi);
    const CVector o = input_skip_oracle(three, psi);
    CHECK_THAT(r3.pi_success, WithinAbs(o.squaredNorm(), 1e-10));
    CHECK((r3.post_state.amplitudes() - o / o.norm()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("fitted slope") {
    CHECK_THAT(fitted_slope({1, 2, 3, 4}, {3, 5, 7, 9}), WithinAbs(2.0, 1e-12));
    CHECK_THROWS_AS(fitted_slope({1}, {1}), DomainError);
}
