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
#include "lcuqml/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "lcuqml/errors.hpp"

namespace lcuqml {

namespace {

int log2_exact(BasisIndex n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw DomainError("length " + std::to_string(n) + " is not a power of two");
    }
    int k = 0;
    while ((BasisIndex{1} << k) < n) {
        ++k;
    }
    return k;
}

BasisIndex bit_of(int qubit, int num_qubits) {
    return BasisIndex{1} << (num_qubits - 1 - qubit);
}

// Offsets of the 2^m local basis states of `qubits` inside a global index.
std::vector<BasisIndex> local_offsets(const std::vector<int> &qubits, int num_qubits) {
    const std::size_t m = qubits.size();
    std::vector<BasisIndex> off(std::size_t{1} << m, 0);
    for (std::size_t r = 0; r < off.size(); ++r) {
        BasisIndex o = 0;
        for (std::size_t b = 0; b < m; ++b) {
            if ((r >> (m - 1 - b)) & 1U) {
                o |= bit_of(qubits[b], num_qubits);
            }
        }
        off[r] = o;
    }
    return off;
}

} // namespace

// ---------------------------------------------------------------- Statevector

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > 30) {
        throw DomainError("num_qubits out of range: " + std::to_string(num_qubits));
    }
    amps_ = CVector::Zero(Eigen::Index{1} << num_qubits);
    amps_[0] = 1.0;
    normalized_ = true;
}

Statevector Statevector::from_amplitudes(CVector amplitudes, bool normalize) {
    Statevector s;
    s.num_qubits_ = log2_exact(static_cast<BasisIndex>(amplitudes.size()));
    s.amps_ = std::move(amplitudes);
    if (normalize) {
        s.normalize();
    } else {
        s.normalized_ = std::abs(s.amps_.norm() - 1.0) < kNormTol;
    }
    return s;
}

void Statevector::normalize() {
    const double nrm = amps_.norm();
    if (nrm <= 0.0 || !std::isfinite(nrm)) {
        throw DomainError("cannot normalize a zero vector");
    }
    amps_ /= nrm;
    normalized_ = true;
}

// ------------------------------------------------------------ RegisterLayout

std::vector<int> Register::qubits() const {
    std::vector<int> q(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        q[static_cast<std::size_t>(i)] = start + i;
    }
    return q;
}

RegisterLayout::RegisterLayout(std::vector<Register> registers) : regs_(std::move(registers)) {
    std::vector<std::pair<int, int>> spans;
    std::set<std::string> names;
    for (const auto &r : regs_) {
        if (r.width < 0 || r.start < 0) {
            throw DomainError("register '" + r.name + "' has a negative range");
        }
        if (!names.insert(r.name).second) {
            throw DomainError("duplicate register name '" + r.name + "'");
        }
        spans.emplace_back(r.start, r.width);
    }
    std::sort(spans.begin(), spans.end());
    int cursor = 0;
    for (auto [s, w] : spans) {
        if (s != cursor) {
            throw DomainError("registers must be disjoint and cover every qubit");
        }
        cursor += w;
    }
    total_ = cursor;
}

RegisterLayout &RegisterLayout::add(const std::string &name, int width) {
    if (width < 0) {
        throw DomainError("negative register width");
    }
    for (const auto &r : regs_) {
        if (r.name == name) {
            throw DomainError("duplicate register name '" + name + "'");
        }
    }
    regs_.push_back(Register{name, total_, width});
    total_ += width;
    return *this;
}

const Register &RegisterLayout::at(const std::string &name) const {
    for (const auto &r : regs_) {
        if (r.name == name) {
            return r;
        }
    }
    throw DomainError("unknown register '" + name + "'");
}

// ---------------------------------------------------------------- GateAction

GateAction GateAction::dense(std::vector<int> qubits, CMatrix matrix) {
    GateAction g;
    g.kind_ = Kind::Dense;
    g.qubits_ = std::move(qubits);
    g.matrix_ = std::move(matrix);
    const auto d = Eigen::Index{1} << g.qubits_.size();
    if (g.matrix_.rows() != d || g.matrix_.cols() != d) {
        throw DomainError("dense gate dimension does not match its qubit count");
    }
    return g;
}

GateAction GateAction::permutation(std::vector<int> qubits, std::vector<BasisIndex> mapping) {
    GateAction g;
    g.kind_ = Kind::Permutation;
    g.qubits_ = std::move(qubits);
    g.mapping_ = std::move(mapping);
    if (g.mapping_.size() != (std::size_t{1} << g.qubits_.size())) {
        throw DomainError("permutation length does not match its register size");
    }
    return g;
}

GateAction GateAction::controlled(std::vector<int> controls, std::vector<int> values,
                                  const GateAction &inner) {
    if (controls.size() != values.size()) {
        throw DomainError("each control qubit needs a required value");
    }
    GateAction g = inner;
    g.controls_ = std::move(controls);
    g.control_values_ = std::move(values);
    g.controls_.insert(g.controls_.end(), inner.controls_.begin(), inner.controls_.end());
    g.control_values_.insert(g.control_values_.end(), inner.control_values_.begin(),
                             inner.control_values_.end());
    return g;
}

GateAction GateAction::adjoint() const {
    GateAction g = *this;
    if (kind_ == Kind::Dense) {
        g.matrix_ = matrix_.adjoint();
    } else {
        std::vector<BasisIndex> inv(mapping_.size());
        for (std::size_t r = 0; r < mapping_.size(); ++r) {
            inv[mapping_[r]] = r;
        }
        g.mapping_ = std::move(inv);
    }
    return g;
}

GateAction GateAction::shifted(int offset) const {
    GateAction g = *this;
    for (auto &q : g.qubits_) {
        q += offset;
    }
    for (auto &c : g.controls_) {
        c += offset;
    }
    return g;
}

void GateAction::validate(int num_qubits) const {
    std::set<int> seen;
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits) {
            throw DomainError("qubit index " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            throw DomainError("qubit " + std::to_string(q) + " used twice in one gate");
        }
    };
    for (int q : qubits_) {
        check(q);
    }
    for (int q : controls_) {
        check(q);
    }
    for (int v : control_values_) {
        if (v != 0 && v != 1) {
            throw DomainError("control values must be 0 or 1");
        }
    }
    if (kind_ == Kind::Dense) {
        if (!is_unitary(matrix_)) {
            throw ValidationError("dense gate matrix is not unitary");
        }
    } else {
        std::vector<char> hit(mapping_.size(), 0);
        for (BasisIndex m : mapping_) {
            if (m >= mapping_.size() || hit[m]) {
                throw ValidationError("basis permutation is not a bijection");
            }
            hit[m] = 1;
        }
    }
}

// --------------------------------------------------------------------- gates

namespace gates {

GateAction h(int q) {
    CMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return GateAction::dense({q}, m);
}

GateAction x(int q) { return GateAction::permutation({q}, {1, 0}); }
GateAction y(int q) { return GateAction::dense({q}, pauli_matrix('Y')); }
GateAction z(int q) { return GateAction::dense({q}, pauli_matrix('Z')); }

GateAction phase(int q, double lambda) {
    CMatrix m = CMatrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, lambda);
    return GateAction::dense({q}, m);
}

GateAction cnot(int control, int target) { return GateAction::controlled({control}, {1}, x(target)); }

GateAction controlled_phase(int a, int b, double lambda) {
    return GateAction::controlled({a}, {1}, phase(b, lambda));
}

GateAction pauli_exp(const std::vector<int> &qubits, const std::string &paulis, double theta) {
    if (qubits.size() != paulis.size()) {
        throw DomainError("Pauli string length must match qubit count");
    }
    CMatrix p = CMatrix::Identity(1, 1);
    for (char c : paulis) {
        p = kron(p, pauli_matrix(c));
    }
    const auto d = p.rows();
    CMatrix u = std::cos(theta) * CMatrix::Identity(d, d) + cplx(0.0, std::sin(theta)) * p;
    return GateAction::dense(qubits, u);
}

} // namespace gates

CMatrix pauli_matrix(char p) {
    CMatrix m(2, 2);
    switch (p) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw DomainError(std::string("unknown Pauli letter '") + p + "'");
    }
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

bool is_unitary(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const CMatrix d = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------- Observable

Observable Observable::pauli(std::string paulis) {
    for (char c : paulis) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ValidationError(std::string("invalid Pauli letter '") + c + "'");
        }
    }
    Observable o;
    o.kind_ = Kind::Pauli;
    o.paulis_ = std::move(paulis);
    return o;
}

Observable Observable::dense(CMatrix matrix) {
    if (!is_hermitian(matrix)) {
        throw ValidationError("observable matrix is not Hermitian");
    }
    Observable o;
    o.kind_ = Kind::Dense;
    o.matrix_ = std::move(matrix);
    return o;
}

CMatrix Observable::to_matrix() const {
    if (kind_ == Kind::Dense) {
        return matrix_;
    }
    CMatrix p = CMatrix::Identity(1, 1);
    for (char c : paulis_) {
        p = kron(p, pauli_matrix(c));
    }
    return p;
}

// ---------------------------------------------------------------- operations

Statevector prepare_basis_state(int num_qubits, BasisIndex index) {
    if (num_qubits < 0 || num_qubits > 30 || index >= (BasisIndex{1} << num_qubits)) {
        throw DomainError("basis index " + std::to_string(index) + " out of range");
    }
    CVector a = CVector::Zero(Eigen::Index{1} << num_qubits);
    a[static_cast<Eigen::Index>(index)] = 1.0;
    return Statevector::from_amplitudes(std::move(a));
}

void apply_gate_inplace(CVector &amps, int num_qubits, const GateAction &action) {
    action.validate(num_qubits);
    const auto &qs = action.qubits();
    const std::vector<BasisIndex> off = local_offsets(qs, num_qubits);
    BasisIndex target_mask = 0;
    for (int q : qs) {
        target_mask |= bit_of(q, num_qubits);
    }
    BasisIndex ctrl_mask = 0;
    BasisIndex ctrl_val = 0;
    for (std::size_t c = 0; c < action.controls().size(); ++c) {
        const BasisIndex b = bit_of(action.controls()[c], num_qubits);
        ctrl_mask |= b;
        if (action.control_values()[c] != 0) {
            ctrl_val |= b;
        }
    }
    const BasisIndex dim = BasisIndex{1} << num_qubits;
    const std::size_t local = off.size();
    std::vector<cplx> buf(local);
    const bool is_dense = action.kind() == GateAction::Kind::Dense;
    const CMatrix &m = action.matrix();
    const auto &map = action.mapping();
    for (BasisIndex base = 0; base < dim; ++base) {
        if ((base & target_mask) != 0 || (base & ctrl_mask) != ctrl_val) {
            continue;
        }
        for (std::size_t r = 0; r < local; ++r) {
            buf[r] = amps[static_cast<Eigen::Index>(base | off[r])];
        }
        if (is_dense) {
            for (std::size_t r = 0; r < local; ++r) {
                cplx acc = 0.0;
                for (std::size_t c = 0; c < local; ++c) {
                    acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * buf[c];
                }
                amps[static_cast<Eigen::Index>(base | off[r])] = acc;
            }
        } else {
            for (std::size_t r = 0; r < local; ++r) {
                amps[static_cast<Eigen::Index>(base | off[map[r]])] = buf[r];
            }
        }
    }
}

void apply_circuit_inplace(CVector &amps, int num_qubits, const Circuit &circuit) {
    for (const auto &g : circuit) {
        apply_gate_inplace(amps, num_qubits, g);
    }
}

Statevector apply_gate(const Statevector &state, const GateAction &action) {
    CVector a = state.amplitudes();
    apply_gate_inplace(a, state.num_qubits(), action);
    auto out = Statevector::from_amplitudes(std::move(a));
    return out;
}

Statevector apply_circuit(const Statevector &state, const Circuit &circuit) {
    CVector a = state.amplitudes();
    apply_circuit_inplace(a, state.num_qubits(), circuit);
    return Statevector::from_amplitudes(std::move(a));
}

CMatrix circuit_unitary(const Circuit &circuit, int num_qubits) {
    const auto dim = Eigen::Index{1} << num_qubits;
    CMatrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        CVector col = CVector::Zero(dim);
        col[c] = 1.0;
        apply_circuit_inplace(col, num_qubits, circuit);
        u.col(c) = col;
    }
    return u;
}

namespace {

void check_register(const Statevector &state, const Register &reg) {
    if (reg.start < 0 || reg.width < 0 || reg.start + reg.width > state.num_qubits()) {
        throw DomainError("register '" + reg.name + "' exceeds the state");
    }
}

BasisIndex register_value(BasisIndex idx, const Register &reg, int n) {
    return (idx >> (n - reg.start - reg.width)) & ((BasisIndex{1} << reg.width) - 1);
}

} // namespace

std::vector<double> register_probabilities(const Statevector &state, const Register &reg) {
    check_register(state, reg);
    std::vector<double> p(reg.dim(), 0.0);
    for (BasisIndex i = 0; i < state.dim(); ++i) {
        p[register_value(i, reg, state.num_qubits())] += std::norm(state[i]);
    }
    return p;
}

PostSelection post_select_register(const Statevector &state, const Register &reg,
                                   BasisIndex outcome) {
    check_register(state, reg);
    if (outcome >= reg.dim()) {
        throw DomainError("outcome exceeds register dimension");
    }
    const int n = state.num_qubits();
    const int rest = n - reg.width;
    const int low_bits = n - reg.start - reg.width;
    const BasisIndex low_mask = (BasisIndex{1} << low_bits) - 1;
    CVector out(Eigen::Index{1} << rest);
    for (BasisIndex j = 0; j < (BasisIndex{1} << rest); ++j) {
        const BasisIndex hi = j >> low_bits;
        const BasisIndex lo = j & low_mask;
        const BasisIndex idx = (((hi << reg.width) | outcome) << low_bits) | lo;
        out[static_cast<Eigen::Index>(j)] = state[idx];
    }
    const double p = out.squaredNorm();
    if (p < kPostSelectionThreshold) {
        throw PostSelectionImpossible(p);
    }
    out /= std::sqrt(p);
    auto s = Statevector::from_amplitudes(std::move(out));
    return {std::move(s), p};
}

cplx inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of states with different qubit counts");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double expectation_value(const Statevector &state, const Observable &obs) {
    cplx val = 0.0;
    if (obs.kind() == Observable::Kind::Pauli) {
        const auto &p = obs.paulis();
        const int n = state.num_qubits();
        if (static_cast<int>(p.size()) != n) {
            throw DomainError("Pauli string length does not match the state");
        }
        BasisIndex flip = 0;
        for (int q = 0; q < n; ++q) {
            if (p[static_cast<std::size_t>(q)] == 'X' || p[static_cast<std::size_t>(q)] == 'Y') {
                flip |= bit_of(q, n);
            }
        }
        for (BasisIndex i = 0; i < state.dim(); ++i) {
            // P|i> = ph |i ^ flip>
            cplx ph = 1.0;
            for (int q = 0; q < n; ++q) {
                const bool one = (i & bit_of(q, n)) != 0;
                const char c = p[static_cast<std::size_t>(q)];
                if (c == 'Z' && one) {
                    ph = -ph;
                } else if (c == 'Y') {
                    ph *= one ? cplx(0, -1) : cplx(0, 1);
                }
            }
            val += std::conj(state[i ^ flip]) * ph * state[i];
        }
    } else {
        const CMatrix &m = obs.matrix();
        if (m.rows() != static_cast<Eigen::Index>(state.dim())) {
            throw DomainError("observable dimension does not match the state");
        }
        val = state.amplitudes().dot(m * state.amplitudes());
    }
    if (std::abs(val.imag()) > 1e-10) {
        throw NumericalError("expectation value has a non-negligible imaginary part");
    }
    return val.real();
}

CVector apply_observable(const Observable &obs, const CVector &v, int num_qubits) {
    if (v.size() != (Eigen::Index{1} << num_qubits)) {
        throw DomainError("vector length does not match the qubit count");
    }
    if (obs.kind() == Observable::Kind::Dense) {
        if (obs.matrix().rows() != v.size()) {
            throw DomainError("observable dimension does not match the state");
        }
        return obs.matrix() * v;
    }
    const auto &p = obs.paulis();
    if (static_cast<int>(p.size()) != num_qubits) {
        throw DomainError("Pauli string length does not match the state");
    }
    CVector out = v;
    for (int q = 0; q < num_qubits; ++q) {
        const char c = p[static_cast<std::size_t>(q)];
        if (c != 'I') {
            apply_gate_inplace(out, num_qubits, GateAction::dense({q}, pauli_matrix(c)));
        }
    }
    return out;
}

CMatrix haar_random_unitary(int dim, std::uint64_t seed) {
    if (dim < 2) {
        throw DomainError("Haar sampling needs dim >= 2");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
    CMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = g(rng);
            const double im = g(rng);
            z(i, j) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const cplx d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : cplx(1.0);
    }
    return q;
}

Statevector haar_random_state(int num_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CVector a(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double re = g(rng);
        const double im = g(rng);
        a[i] = cplx(re, im);
    }
    return Statevector::from_amplitudes(std::move(a), true);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace lcuqml
