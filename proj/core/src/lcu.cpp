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
#include "lcuqml/lcu.hpp"

#include <cmath>

#include "lcuqml/errors.hpp"

namespace lcuqml {

namespace {

constexpr double kProgramTol = 1e-10;

const CVector &unprep_vector(const LcuProgram &p) {
    return p.unprepare_amplitudes ? *p.unprepare_amplitudes : p.prep_amplitudes;
}

CVector run_ancilla_circuit(const Circuit &c, int k, BasisIndex start) {
    CVector v = CVector::Zero(Eigen::Index{1} << k);
    v[static_cast<Eigen::Index>(start)] = 1.0;
    apply_circuit_inplace(v, k, c);
    return v;
}

// Column s of the unpreparation unitary V.
CVector unprep_column(const LcuProgram &p, BasisIndex s) {
    if (!p.unprepare_circuit.empty()) {
        return run_ancilla_circuit(p.unprepare_circuit, p.ancilla_qubits, s);
    }
    if (s == 0) {
        return unprep_vector(p);
    }
    return completion_unitary(unprep_vector(p)).col(static_cast<Eigen::Index>(s));
}

// Apply a 2^k x 2^k unitary W to the ancilla index of a joint buffer viewed as
// a (2^n x 2^k) column-major matrix whose column j is ancilla row j.
void apply_ancilla_matrix(CVector &amps, int k, int n, const CMatrix &w) {
    Eigen::Map<CMatrix> m(amps.data(), Eigen::Index{1} << n, Eigen::Index{1} << k);
    m = (m * w.transpose()).eval();
}

} // namespace

CMatrix completion_unitary(const CVector &first_column) {
    const auto d = first_column.size();
    if (d == 0 || std::abs(first_column.norm() - 1.0) > 1e-12) {
        throw DomainError("completion needs a unit vector");
    }
    const cplx v0 = first_column[0];
    const cplx phase = std::abs(v0) > 0.0 ? v0 / std::abs(v0) : cplx(1.0);
    // q has a real nonnegative first entry, so the reflection I - 2ww^+/|w|^2
    // with w = e0 - q maps e0 to q.
    const CVector q = first_column / phase;
    CVector w = -q;
    w[0] += 1.0;
    CMatrix h = CMatrix::Identity(d, d);
    const double wn = w.squaredNorm();
    if (wn > 1e-30) {
        h -= (2.0 / wn) * (w * w.adjoint());
    }
    return phase * h;
}

void validate_program(const LcuProgram &p, int target_qubits) {
    const int k = p.ancilla_qubits;
    if (k < 0 || k > 20) {
        throw DomainError("ancilla count out of range");
    }
    if (target_qubits < 1) {
        throw DomainError("target register must have at least one qubit");
    }
    const auto dim = Eigen::Index{1} << k;
    if (p.prep_amplitudes.size() != dim) {
        throw DomainError("prep amplitudes must have length 2^k");
    }
    if (std::abs(p.prep_amplitudes.norm() - 1.0) > kNormTol) {
        throw ValidationError("prep amplitudes are not normalized");
    }
    const CVector &u = unprep_vector(p);
    if (u.size() != dim) {
        throw DomainError("unprepare amplitudes must have length 2^k");
    }
    if (std::abs(u.norm() - 1.0) > kNormTol) {
        throw ValidationError("unprepare amplitudes are not normalized");
    }
    if (!p.prep_circuit.empty()) {
        const CVector v = run_ancilla_circuit(p.prep_circuit, k, 0);
        if ((v - p.prep_amplitudes).cwiseAbs().maxCoeff() > kProgramTol) {
            throw ValidationError("prep circuit does not produce the prep amplitudes");
        }
    }
    if (!p.unprepare_circuit.empty()) {
        const CVector v = run_ancilla_circuit(p.unprepare_circuit, k, 0);
        if ((v - u).cwiseAbs().maxCoeff() > kProgramTol) {
            throw ValidationError("unprepare circuit does not produce the unprepare amplitudes");
        }
    }
    if (p.success_index >= static_cast<BasisIndex>(dim)) {
        throw DomainError("success index exceeds the ancilla register");
    }
    for (const auto &[j, circ] : p.selects) {
        if (j >= static_cast<BasisIndex>(dim)) {
            throw DomainError("select index exceeds the ancilla register");
        }
        for (const auto &g : circ) {
            g.validate(target_qubits);
        }
    }
    for (const auto &g : p.select_circuit) {
        g.validate(k + target_qubits);
    }
}

LcuOutcome run_lcu(const LcuProgram &p, const Statevector &target) {
    const int k = p.ancilla_qubits;
    const int n = target.num_qubits();
    validate_program(p, n);
    if (std::abs(target.norm() - 1.0) > kProgramTol) {
        throw DomainError("run_lcu expects a normalized target state");
    }
    const int total = k + n;
    const auto tdim = Eigen::Index{1} << n;
    CVector amps = CVector::Zero(Eigen::Index{1} << total);
    amps.head(tdim) = target.amplitudes();

    // prepare
    if (!p.prep_circuit.empty()) {
        apply_circuit_inplace(amps, total, p.prep_circuit);
    } else if (k > 0) {
        apply_ancilla_matrix(amps, k, n, completion_unitary(p.prep_amplitudes));
    }

    // select
    if (!p.select_circuit.empty()) {
        apply_circuit_inplace(amps, total, p.select_circuit);
    } else {
        for (const auto &[j, circ] : p.selects) {
            CVector row = amps.segment(static_cast<Eigen::Index>(j) * tdim, tdim);
            apply_circuit_inplace(row, n, circ);
            amps.segment(static_cast<Eigen::Index>(j) * tdim, tdim) = row;
        }
    }

    // unprepare with V^dagger
    if (!p.unprepare_circuit.empty()) {
        for (auto it = p.unprepare_circuit.rbegin(); it != p.unprepare_circuit.rend(); ++it) {
            apply_gate_inplace(amps, total, it->adjoint());
        }
    } else if (k > 0) {
        apply_ancilla_matrix(amps, k, n, completion_unitary(unprep_vector(p)).adjoint());
    }

    // post-select the ancilla register
    CVector out = amps.segment(static_cast<Eigen::Index>(p.success_index) * tdim, tdim);
    const double pi = out.squaredNorm();
    if (pi < kPostSelectionThreshold) {
        throw PostSelectionImpossible(pi);
    }
    const double omega = std::sqrt(pi);
    out /= omega;
    return {Statevector::from_amplitudes(std::move(out)), pi, omega};
}

CVector lcu_term_weights(const LcuProgram &p) {
    const CVector col = unprep_column(p, p.success_index);
    return col.conjugate().cwiseProduct(p.prep_amplitudes);
}

LcuOracleResult apply_lcu_oracle(const LcuProgram &p, const Statevector &target) {
    const int n = target.num_qubits();
    validate_program(p, n);
    const CVector w = lcu_term_weights(p);
    CVector acc = CVector::Zero(static_cast<Eigen::Index>(target.dim()));
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        if (w[j] == cplx(0.0)) {
            continue;
        }
        const auto it = p.selects.find(static_cast<BasisIndex>(j));
        if (it == p.selects.end()) {
            acc += w[j] * target.amplitudes();
        } else {
            CVector v = target.amplitudes();
            apply_circuit_inplace(v, n, it->second);
            acc += w[j] * v;
        }
    }
    const double pi = acc.squaredNorm();
    return {std::move(acc), pi};
}

CMatrix lcu_effective_operator(const LcuProgram &p, int target_qubits) {
    validate_program(p, target_qubits);
    const CVector w = lcu_term_weights(p);
    const auto d = Eigen::Index{1} << target_qubits;
    CMatrix a = CMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        if (w[j] == cplx(0.0)) {
            continue;
        }
        const auto it = p.selects.find(static_cast<BasisIndex>(j));
        if (it == p.selects.end()) {
            a += w[j] * CMatrix::Identity(d, d);
        } else {
            a += w[j] * circuit_unitary(it->second, target_qubits);
        }
    }
    return a;
}

LcuProgram make_weighted_program(const std::vector<double> &weights,
                                 const std::vector<Circuit> &unitaries) {
    if (weights.empty() || weights.size() != unitaries.size()) {
        throw DomainError("need one nonnegative weight per unitary");
    }
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw DomainError("weights must be nonnegative");
        }
        total += w;
    }
    if (total <= 0.0) {
        throw DomainError("weights must not all vanish");
    }
    int k = 0;
    while ((std::size_t{1} << k) < weights.size()) {
        ++k;
    }
    LcuProgram p;
    p.ancilla_qubits = k;
    p.prep_amplitudes = CVector::Zero(Eigen::Index{1} << k);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        p.prep_amplitudes[static_cast<Eigen::Index>(j)] = std::sqrt(weights[j] / total);
        if (!unitaries[j].empty()) {
            p.selects[j] = unitaries[j];
        }
    }
    return p;
}

} // namespace lcuqml
