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
 * @file qsim.hpp
 * Dense statevector simulation core.
 *
 * Bit convention: qubit 0 is the most significant bit of a basis index, so
 * for n qubits the basis state |b_0 b_1 ... b_{n-1}> has index
 * sum_q b_q 2^(n-1-q). Register values are read the same way, with the
 * first listed qubit as the most significant bit.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lcuqml {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using BasisIndex = std::uint64_t;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/**
 * @brief Dense amplitude buffer over num_qubits qubits.
 */
class Statevector {
  public:
    Statevector() = default;

    /// |0...0> on num_qubits qubits.
    explicit Statevector(int num_qubits);

    /**
     * @brief Wrap an amplitude vector whose length must be a power of two.
     * @param normalize Rescale to unit norm (zero vectors raise DomainError).
     */
    static Statevector from_amplitudes(CVector amplitudes, bool normalize = false);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] BasisIndex dim() const noexcept {
        return static_cast<BasisIndex>(amps_.size());
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] CVector &amplitudes() noexcept { return amps_; }
    [[nodiscard]] cplx operator[](BasisIndex i) const { return amps_[static_cast<Eigen::Index>(i)]; }
    cplx &operator[](BasisIndex i) { return amps_[static_cast<Eigen::Index>(i)]; }

    [[nodiscard]] double squared_norm() const { return amps_.squaredNorm(); }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    /// Whether the state was produced as (or explicitly rescaled to) a unit vector.
    [[nodiscard]] bool normalized() const noexcept { return normalized_; }
    void normalize();

  private:
    int num_qubits_ = 0;
    CVector amps_;
    bool normalized_ = false;
};

/// Named contiguous qubit range.
struct Register {
    std::string name;
    int start = 0;
    int width = 0;
    [[nodiscard]] std::vector<int> qubits() const;
    [[nodiscard]] BasisIndex dim() const { return BasisIndex{1} << width; }
};

/**
 * @brief Ordered set of registers that tile [0, num_qubits).
 */
class RegisterLayout {
  public:
    RegisterLayout() = default;
    /// Validates that the registers are disjoint and cover [0, total).
    explicit RegisterLayout(std::vector<Register> registers);

    /// Append a register after the current last qubit.
    RegisterLayout &add(const std::string &name, int width);

    [[nodiscard]] const Register &at(const std::string &name) const;
    [[nodiscard]] int num_qubits() const noexcept { return total_; }
    [[nodiscard]] const std::vector<Register> &registers() const noexcept { return regs_; }

  private:
    std::vector<Register> regs_;
    int total_ = 0;
};

/**
 * @brief Gate on a subset of qubits: dense unitary or basis permutation,
 *        optionally conditioned on control qubits.
 *
 * Nested controls are flattened into a single control list.
 */
class GateAction {
  public:
    enum class Kind { Dense, Permutation };

    static GateAction dense(std::vector<int> qubits, CMatrix matrix);
    /// mapping[r] is the image of register value r.
    static GateAction permutation(std::vector<int> qubits, std::vector<BasisIndex> mapping);
    static GateAction controlled(std::vector<int> controls, std::vector<int> values,
                                 const GateAction &inner);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<int> &qubits() const noexcept { return qubits_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const std::vector<BasisIndex> &mapping() const noexcept { return mapping_; }
    [[nodiscard]] const std::vector<int> &controls() const noexcept { return controls_; }
    [[nodiscard]] const std::vector<int> &control_values() const noexcept { return control_values_; }

    [[nodiscard]] GateAction adjoint() const;
    /// Same action with every qubit index shifted by offset.
    [[nodiscard]] GateAction shifted(int offset) const;
    /// Throws DomainError / ValidationError when the action is malformed for n qubits.
    void validate(int num_qubits) const;

  private:
    Kind kind_ = Kind::Dense;
    std::vector<int> qubits_;
    CMatrix matrix_;
    std::vector<BasisIndex> mapping_;
    std::vector<int> controls_;
    std::vector<int> control_values_;
};

using Circuit = std::vector<GateAction>;

namespace gates {
GateAction h(int q);
GateAction x(int q);
GateAction y(int q);
GateAction z(int q);
GateAction phase(int q, double lambda);
GateAction cnot(int control, int target);
GateAction controlled_phase(int a, int b, double lambda);
/// exp(i theta P) for a Pauli string P (one letter per listed qubit).
GateAction pauli_exp(const std::vector<int> &qubits, const std::string &paulis, double theta);
} // namespace gates

/// Single-qubit Pauli matrix for 'I', 'X', 'Y' or 'Z'.
CMatrix pauli_matrix(char p);
/// Kronecker product a (x) b.
CMatrix kron(const CMatrix &a, const CMatrix &b);
bool is_unitary(const CMatrix &m, double tol = kUnitaryTol);
bool is_hermitian(const CMatrix &m, double tol = kUnitaryTol);

/**
 * @brief Observable given as a Pauli string or a dense Hermitian matrix.
 */
class Observable {
  public:
    enum class Kind { Pauli, Dense };
    /// One of I/X/Y/Z per qubit, qubit 0 first.
    static Observable pauli(std::string paulis);
    static Observable dense(CMatrix matrix);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string &paulis() const noexcept { return paulis_; }
    [[nodiscard]] CMatrix to_matrix() const;
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

  private:
    Kind kind_ = Kind::Pauli;
    std::string paulis_;
    CMatrix matrix_;
};

Statevector prepare_basis_state(int num_qubits, BasisIndex index);

Statevector apply_gate(const Statevector &state, const GateAction &action);
Statevector apply_circuit(const Statevector &state, const Circuit &circuit);
/// In-place variant on a raw amplitude buffer of 2^num_qubits entries.
void apply_gate_inplace(CVector &amps, int num_qubits, const GateAction &action);
void apply_circuit_inplace(CVector &amps, int num_qubits, const Circuit &circuit);
/// Dense 2^n x 2^n matrix of a circuit (columns are images of basis states).
CMatrix circuit_unitary(const Circuit &circuit, int num_qubits);

struct PostSelection {
    Statevector state;
    double probability = 0.0;
};

/**
 * @brief Condition on register == outcome and trace the register out.
 *
 * The remaining qubits keep their relative order. Throws
 * PostSelectionImpossible below kPostSelectionThreshold.
 */
PostSelection post_select_register(const Statevector &state, const Register &reg,
                                   BasisIndex outcome);
/// Outcome distribution of a register (sums to the squared norm).
std::vector<double> register_probabilities(const Statevector &state, const Register &reg);

cplx inner_product(const Statevector &a, const Statevector &b);
double expectation_value(const Statevector &state, const Observable &obs);
/// O|v> for a raw amplitude buffer on num_qubits qubits.
CVector apply_observable(const Observable &obs, const CVector &v, int num_qubits);

/// Haar-distributed dim x dim unitary (QR of a complex Ginibre matrix).
CMatrix haar_random_unitary(int dim, std::uint64_t seed);
/// Haar-distributed pure state on num_qubits qubits.
Statevector haar_random_state(int num_qubits, std::uint64_t seed);

/// Stateless per-item seed derived from a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace lcuqml
