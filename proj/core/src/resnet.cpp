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
#include "lcuqml/resnet.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "lcuqml/errors.hpp"

namespace lcuqml {

namespace {

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("beta must lie in [0, 1]");
    }
}

Circuit dense_circuit(const CMatrix &u) {
    int n = 0;
    while ((Eigen::Index{1} << n) < u.rows()) {
        ++n;
    }
    std::vector<int> qs(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        qs[static_cast<std::size_t>(q)] = q;
    }
    return {GateAction::dense(qs, u)};
}

Circuit concat(const Circuit &a, const Circuit &b) {
    Circuit c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

} // namespace

// ------------------------------------------------------------------ ansatz

std::vector<std::pair<int, int>> adjacent_pair_order(int num_qubits) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j + 1 < num_qubits; j += 2) {
        pairs.emplace_back(j, j + 1);
    }
    for (int j = 1; j + 1 < num_qubits; j += 2) {
        pairs.emplace_back(j, j + 1);
    }
    return pairs;
}

std::size_t param_count(int num_qubits, std::size_t num_generators, int sublayers) {
    if (num_qubits < 2) {
        return 0;
    }
    return static_cast<std::size_t>(sublayers) * num_generators *
           static_cast<std::size_t>(num_qubits - 1);
}

ParamCircuit random_param_circuit(int num_qubits, std::vector<std::string> generators,
                                  int sublayers, std::uint64_t seed) {
    ParamCircuit c{num_qubits, std::move(generators), sublayers, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    c.params.resize(param_count(num_qubits, c.generators.size(), sublayers));
    for (auto &t : c.params) {
        t = u(rng);
    }
    return c;
}

Circuit param_circuit_gates(const ParamCircuit &c) {
    if (c.sublayers < 0) {
        throw DomainError("sublayer count must be nonnegative");
    }
    if (c.params.size() != param_count(c.num_qubits, c.generators.size(), c.sublayers)) {
        throw DomainError("parameter vector length does not match the ansatz layout");
    }
    for (const auto &g : c.generators) {
        if (g.size() != 2) {
            throw DomainError("generators must be two-qubit Pauli strings");
        }
    }
    const auto pairs = adjacent_pair_order(c.num_qubits);
    Circuit out;
    out.reserve(c.params.size());
    std::size_t k = 0;
    for (int s = 0; s < c.sublayers; ++s) {
        for (const auto &g : c.generators) {
            for (auto [a, b] : pairs) {
                out.push_back(gates::pauli_exp({a, b}, g, c.params[k++]));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------- residual layers

ResidualStepResult residual_step(const Statevector &state, const ResidualLayer &layer) {
    check_beta(layer.beta);
    LcuProgram p;
    p.ancilla_qubits = 1;
    p.prep_amplitudes = CVector(2);
    p.prep_amplitudes << std::sqrt(1.0 - layer.beta), std::sqrt(layer.beta);
    if (!layer.circuit.empty()) {
        p.selects[1] = layer.circuit;
    }
    auto out = run_lcu(p, state);
    return {std::move(out.post_state), out.pi_success};
}

double residual_probability_formula(const Statevector &state, const Circuit &w, double beta) {
    check_beta(beta);
    const Statevector ws = apply_circuit(state, w);
    const double re = inner_product(state, ws).real();
    return 1.0 - 2.0 * beta * (1.0 - beta) * (1.0 - re);
}

ForwardResult resnet_forward(const std::vector<ResidualLayer> &layers, const Statevector &psi0) {
    ForwardResult r{psi0, 1.0, {}};
    for (std::size_t l = 0; l < layers.size(); ++l) {
        try {
            auto step = residual_step(r.state, layers[l]);
            r.state = std::move(step.state);
            r.pi_total *= step.pi_layer;
            r.per_layer_pis.push_back(step.pi_layer);
        } catch (const PostSelectionImpossible &e) {
            throw PostSelectionImpossible(e.probability(), l);
        }
    }
    return r;
}

LcuProgram joint_resnet_program(const std::vector<ResidualLayer> &layers) {
    const int k = static_cast<int>(layers.size());
    LcuProgram p;
    p.ancilla_qubits = k;
    p.prep_amplitudes = CVector::Ones(1);
    for (const auto &l : layers) {
        check_beta(l.beta);
        CVector one(2);
        one << std::sqrt(1.0 - l.beta), std::sqrt(l.beta);
        p.prep_amplitudes = kron(p.prep_amplitudes, one);
    }
    // ancilla 0 (most significant) belongs to layer 1
    for (BasisIndex j = 0; j < (BasisIndex{1} << k); ++j) {
        Circuit c;
        for (int l = 0; l < k; ++l) {
            if ((j >> (k - 1 - l)) & 1U) {
                c = concat(c, layers[static_cast<std::size_t>(l)].circuit);
            }
        }
        if (!c.empty()) {
            p.selects[j] = std::move(c);
        }
    }
    return p;
}

double beta_lower_bound(double beta) {
    check_beta(beta);
    return 1.0 - 4.0 * beta * (1.0 - beta);
}

// ------------------------------------------------------- loss decomposition

LossDecomposition loss_decomposition(const Statevector &psi0, const Circuit &w1,
                                     const Circuit &w2, const Observable &obs) {
    const int n = psi0.num_qubits();
    const CVector &psi = psi0.amplitudes();
    CVector a = psi; // W1 psi
    apply_circuit_inplace(a, n, w1);
    CVector b = psi; // W2 psi
    apply_circuit_inplace(b, n, w2);
    CVector c = a; // W2 W1 psi
    apply_circuit_inplace(c, n, w2);
    const CVector ob = apply_observable(obs, b, n);
    const CVector oc = apply_observable(obs, c, n);

    LossDecomposition d;
    d.l_no_bp = b.dot(ob).real();
    d.l_bp = c.dot(oc).real();
    d.l_nonunitary = 2.0 * b.dot(oc).real();
    d.omega_prime_sq = (0.5 * (psi + a)).squaredNorm();
    if (d.omega_prime_sq < kPostSelectionThreshold) {
        d.zero_probability = true;
        d.total_normalized = std::numeric_limits<double>::quiet_NaN();
    } else {
        d.total_normalized = (d.l_no_bp + d.l_bp + d.l_nonunitary) / (4.0 * d.omega_prime_sq);
    }
    return d;
}

LossDecomposition loss_decomposition(const Statevector &psi0, const CMatrix &w1,
                                     const CMatrix &w2, const Observable &obs) {
    return loss_decomposition(psi0, dense_circuit(w1), dense_circuit(w2), obs);
}

GradientEstimate loss_gradient(const LossFunction &loss, const std::vector<double> &theta,
                               std::size_t index, bool pauli_generator) {
    if (index >= theta.size()) {
        throw DomainError("gradient index out of range");
    }
    constexpr double h = 1e-5;
    auto at = [&](double delta) {
        std::vector<double> t = theta;
        t[index] += delta;
        return loss(t);
    };
    GradientEstimate g;
    g.finite_difference = (at(h) - at(-h)) / (2.0 * h);
    if (pauli_generator) {
        const double q = std::numbers::pi / 4.0;
        g.two_point = at(q) - at(-q);
        if (std::abs(*g.two_point - g.finite_difference) > 1e-5) {
            throw NumericalError("two-point rule and finite difference disagree");
        }
    }
    return g;
}

// -------------------------------------------------------- plateau experiment

namespace {

double sample_variance(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double s = 0.0;
    for (double x : v) {
        s += (x - mean) * (x - mean);
    }
    return s / static_cast<double>(v.size() - 1);
}

} // namespace

std::vector<PlateauRow> plateau_experiment(const PlateauConfig &cfg) {
    if (cfg.samples < 50) {
        throw DomainError("plateau experiment needs at least 50 samples");
    }
    std::vector<PlateauRow> rows;
    for (int n : cfg.n_list) {
        if (n < 2) {
            throw DomainError("plateau experiment needs n >= 2");
        }
        if (cfg.observable.size() > static_cast<std::size_t>(n)) {
            throw DomainError("observable is wider than the register");
        }
        std::string paulis = cfg.observable;
        paulis.resize(static_cast<std::size_t>(n), 'I');
        const Observable obs = Observable::pauli(paulis);
        const std::uint64_t width_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(n));

        std::vector<double> grads;
        grads.reserve(static_cast<std::size_t>(cfg.samples));
        double abs_nu = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const std::uint64_t sseed = derive_seed(width_seed, static_cast<std::uint64_t>(s));
            const ParamCircuit c1 =
                random_param_circuit(n, cfg.generators_w1, cfg.sublayers_w1, derive_seed(sseed, 1));
            ParamCircuit c2 =
                random_param_circuit(n, cfg.generators_w2, cfg.sublayers_w2, derive_seed(sseed, 2));
            if (c2.params.empty()) {
                throw DomainError("W2 has no parameters to differentiate");
            }
            const Circuit w1 = param_circuit_gates(c1);
            const Statevector psi(n);

            CVector chi = psi.amplitudes();
            apply_circuit_inplace(chi, n, w1);
            if (cfg.residual) {
                chi = 0.5 * (psi.amplitudes() + chi);
                const double nrm = chi.norm();
                if (nrm * nrm < kPostSelectionThreshold) {
                    throw PostSelectionImpossible(nrm * nrm, 0);
                }
                chi /= nrm;
            }
            const LossFunction f = [&](const std::vector<double> &t) {
                ParamCircuit c = c2;
                c.params = t;
                CVector v = chi;
                apply_circuit_inplace(v, n, param_circuit_gates(c));
                return v.dot(apply_observable(obs, v, n)).real();
            };
            const auto g = loss_gradient(f, c2.params, 0, true);
            grads.push_back(*g.two_point);

            const auto d = loss_decomposition(psi, w1, param_circuit_gates(c2), obs);
            abs_nu += std::abs(d.l_nonunitary);
        }
        rows.push_back(PlateauRow{n, sample_variance(grads), abs_nu / cfg.samples, cfg.samples,
                                  cfg.seed});
    }
    return rows;
}

// ------------------------------------------------------------------ ensemble

SublayerFactory haar_sublayer_factory(int num_qubits) {
    return [num_qubits](std::uint64_t seed) {
        return dense_circuit(haar_random_unitary(1 << num_qubits, seed));
    };
}

SublayerFactory param_sublayer_factory(int num_qubits, std::vector<std::string> generators) {
    return [num_qubits, generators](std::uint64_t seed) {
        return param_circuit_gates(random_param_circuit(num_qubits, generators, 1, seed));
    };
}

Ensemble build_uniform_ensemble(int num_layers, int num_qubits, const SublayerFactory &factory,
                                std::uint64_t seed, double beta) {
    if (num_layers < 1) {
        throw DomainError("ensemble needs at least one layer");
    }
    if (num_layers > 20) {
        throw DomainError("ensemble layer count too large");
    }
    check_beta(beta);
    Ensemble e;
    e.num_qubits = num_qubits;
    std::uint64_t counter = 0;
    e.w0 = factory(derive_seed(seed, counter++));
    for (int l = 1; l <= num_layers; ++l) {
        const int count = 1 << (l - 1);
        Circuit c;
        for (int s = 0; s < count; ++s) {
            c = concat(c, factory(derive_seed(seed, counter++)));
        }
        e.layers.push_back(ResidualLayer{std::move(c), beta});
        e.sublayer_counts.push_back(count);
    }
    return e;
}

std::vector<EnsembleTerm> expand_ensemble(const Ensemble &e) {
    const int L = static_cast<int>(e.layers.size());
    const int n = e.num_qubits;
    const CMatrix w0 = circuit_unitary(e.w0, n);
    std::vector<CMatrix> ws;
    for (const auto &l : e.layers) {
        ws.push_back(circuit_unitary(l.circuit, n));
    }
    std::vector<EnsembleTerm> terms;
    for (int mask = 0; mask < (1 << L); ++mask) {
        EnsembleTerm t;
        t.op = w0;
        t.depth = 1;
        t.weight = 1.0;
        for (int l = 0; l < L; ++l) {
            const double beta = e.layers[static_cast<std::size_t>(l)].beta;
            if ((mask >> l) & 1) {
                t.op = (ws[static_cast<std::size_t>(l)] * t.op).eval();
                t.depth += e.sublayer_counts[static_cast<std::size_t>(l)];
                t.weight *= beta;
                t.included_layers.push_back(l + 1);
            } else {
                t.weight *= 1.0 - beta;
            }
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

double ensemble_expected_attempts(int num_layers, double beta, int num_qubits, std::uint64_t seed) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw DomainError("beta must lie in (0, 1)");
    }
    const Ensemble e =
        build_uniform_ensemble(num_layers, num_qubits, haar_sublayer_factory(num_qubits), seed, beta);
    const Statevector start = apply_circuit(Statevector(num_qubits), e.w0);
    const auto r = resnet_forward(e.layers, start);
    return 1.0 / r.pi_total;
}

// -------------------------------------------------------------- input skip

namespace {

void check_input_skip(const InputSkipSpec &spec) {
    if (spec.layers.empty()) {
        throw DomainError("input-skip network needs at least one layer");
    }
    if (spec.gammas.size() != static_cast<Eigen::Index>(spec.layers.size())) {
        throw DomainError("need one gamma per layer");
    }
    if (std::abs(spec.gammas.squaredNorm() - 1.0) > kNormTol) {
        throw ValidationError("gammas must have unit norm");
    }
}

// W_f first, then W_{f+1}, ..., W_L (layer indices zero-based here).
Circuit tail_product(const InputSkipSpec &spec, std::size_t f) {
    Circuit c;
    for (std::size_t l = f; l < spec.layers.size(); ++l) {
        c = concat(c, spec.layers[l]);
    }
    return c;
}

} // namespace

LcuProgram input_skip_program(const InputSkipSpec &spec) {
    check_input_skip(spec);
    const auto L = spec.layers.size();
    int k = 0;
    while ((std::size_t{1} << k) < L) {
        ++k;
    }
    LcuProgram p;
    p.ancilla_qubits = k;
    p.prep_amplitudes = CVector::Zero(Eigen::Index{1} << k);
    p.prep_amplitudes.head(static_cast<Eigen::Index>(L)) = spec.gammas;
    for (std::size_t f = 0; f < L; ++f) {
        Circuit c = tail_product(spec, f);
        if (!c.empty()) {
            p.selects[f] = std::move(c);
        }
    }
    return p;
}

LcuOutcome input_skip_forward(const InputSkipSpec &spec, const Statevector &psi0) {
    return run_lcu(input_skip_program(spec), psi0);
}

CVector input_skip_oracle(const InputSkipSpec &spec, const Statevector &psi0) {
    check_input_skip(spec);
    const int n = psi0.num_qubits();
    CVector acc = CVector::Zero(static_cast<Eigen::Index>(psi0.dim()));
    for (std::size_t f = 0; f < spec.layers.size(); ++f) {
        CVector v = psi0.amplitudes();
        for (std::size_t l = f; l < spec.layers.size(); ++l) {
            apply_circuit_inplace(v, n, spec.layers[l]);
        }
        acc += std::norm(spec.gammas[static_cast<Eigen::Index>(f)]) * v;
    }
    return acc;
}

double fitted_slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw DomainError("slope fit needs at least two paired points");
    }
    const double m = static_cast<double>(xs.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) {
        throw DomainError("slope fit needs distinct x values");
    }
    return sxy / sxx;
}

} // namespace lcuqml
