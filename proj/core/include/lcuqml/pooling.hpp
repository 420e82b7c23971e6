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
 * @file pooling.hpp
 * Average pooling and convolution of amplitude-encoded images.
 *
 * Layout: an N x N image (N = 2^b) lives on 2b qubits, the row index x on
 * qubits [0, b) and the column index y on qubits [b, 2b), so basis index
 * x * N + y carries pixel v(x, y) / Omega. Pooling programs place the x-axis
 * ancillas first, then the y-axis ancillas, ahead of the image register.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "lcuqml/lcu.hpp"
#include "lcuqml/qsim.hpp"

namespace lcuqml {

struct ImageGrid {
    int n_side = 0;
    /// Row-major, pixels[x * n_side + y].
    std::vector<double> pixels;
    /// Side of the image before any zero-padding embedding.
    int original_extent = 0;

    static ImageGrid from_pixels(int n_side, std::vector<double> pixels);
    [[nodiscard]] double at(int x, int y) const {
        return pixels[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_side) +
                      static_cast<std::size_t>(y)];
    }
    /// Omega with Omega^2 = sum of squared pixels.
    [[nodiscard]] double norm_constant() const;
};

enum class BoundaryMode { Periodic, ZeroPadded };

struct PoolingSpec {
    int d = 2;
    BoundaryMode mode = BoundaryMode::Periodic;
};

/// D x D nonnegative weights, weights[dx * d + dy].
struct FilterSpec {
    int d = 0;
    std::vector<double> weights;
};

enum class Axis { X, Y };
enum class ShiftDirection { Add, Subtract };

struct ShiftOp {
    Axis axis = Axis::X;
    BasisIndex amount = 1;
    ShiftDirection direction = ShiftDirection::Subtract;
};

/// Degeneracy handling when D is not a power of two.
enum class PrepScheme {
    /// Control amounts 2^(l-1), ..., 1; states whose composed shift is >= d get zero amplitude.
    ZeroHighShifts,
    /// Last control amount d - 2^(l-1); one state of each degenerate shift is zeroed.
    AdjustedFinal
};

struct AxisPrep {
    CVector amplitudes;
    /// Subtraction amount controlled by each ancilla qubit, most significant first.
    std::vector<BasisIndex> control_amounts;
    /// Composed shift for every ancilla basis state.
    std::vector<BasisIndex> composed_shift;
};

int next_power_of_two(int n);
int ceil_log2(std::uint64_t n);

/// Zero-pad an image into the top-left corner of a side x side grid.
ImageGrid embed_image(const ImageGrid &img, int side);

/// Embeds non-power-of-two images into the next power of two first.
Statevector amplitude_encode_image(const ImageGrid &img);

/// v'(i,j) = (1/D^2) sum v(i+dx, j+dy); wrapped or zero outside the grid.
ImageGrid classical_pool_oracle(const ImageGrid &img, const PoolingSpec &spec);
/// v'(i,j) = (1/D^2) sum w(dx,dy) v(i+dx, j+dy).
ImageGrid classical_conv_oracle(const ImageGrid &img, const FilterSpec &filter, BoundaryMode mode);

/// Basis permutation x -> x -/+ amount (mod 2^side_bits) on one image axis.
GateAction shift_operator(const ShiftOp &op, int side_bits, int qubit_offset = 0);

/// Multi-controlled X cascade adding 1 (mod 2^w) to the register `qubits` (MSB first).
Circuit lower_increment_circuit(const std::vector<int> &qubits);
Circuit lower_increment_circuit(int width);
/// Reverse of the increment cascade.
Circuit lower_decrement_circuit(const std::vector<int> &qubits);
/// Shift by an arbitrary amount as a sequence of power-of-two increments/decrements.
Circuit lower_shift_circuit(BasisIndex amount, ShiftDirection direction,
                            const std::vector<int> &qubits);
/// Toffoli-count style estimate: 1 for X, 2m - 1 for an m-controlled X.
int increment_basic_op_estimate(int width);

AxisPrep prep_amplitudes_degeneracy_free(int d, int l, PrepScheme scheme = PrepScheme::ZeroHighShifts);

/**
 * @brief LCU program whose effective operator is (1/D^2) sum T(dx, dy).
 *
 * Provides both the selects map (composed shifts) and a gate-level select
 * circuit of single-qubit-controlled subtractions.
 */
LcuProgram build_pool_program(const PoolingSpec &spec, int side_bits,
                              PrepScheme scheme = PrepScheme::ZeroHighShifts);

/// Weighted variant with prep amplitude proportional to sqrt(w(dx, dy)).
LcuProgram build_conv_program(const FilterSpec &filter, int side_bits);

struct PoolingGateCount {
    int controlled_per_axis = 0;
    int total_controlled = 0;
    /// Terms of a one-multi-controlled-unitary-per-shift construction.
    int naive_multicontrolled = 0;
};

PoolingGateCount pooling_gate_count(int d);

/// Pool a state that already lives on a power-of-two grid (wraps at the grid edge).
LcuOutcome apply_pooling(const Statevector &state, const PoolingSpec &spec,
                         PrepScheme scheme = PrepScheme::ZeroHighShifts);

struct ImagePoolResult {
    /// Grid the circuit acted on (zero-padded when required by the mode).
    ImageGrid grid;
    LcuOutcome outcome;
};

/**
 * @brief Encode, embed for the boundary mode, and pool by full simulation.
 *
 * Zero-padded mode embeds into a grid of side >= N + D - 1 so that wrapped
 * reads only see zeros.
 */
ImagePoolResult pool_image(const ImageGrid &img, const PoolingSpec &spec);

/// Grid used by pool_image for the given mode.
ImageGrid pooling_grid(const ImageGrid &img, const PoolingSpec &spec);

/// Closed-form success probability |(1/D^2) sum T|psi>|^2 on the pooling grid.
double pooling_success_probability(const ImageGrid &img, const PoolingSpec &spec);

struct FlagDiscardResult {
    Statevector state;
    double keep_probability = 0.0;
};

/// Keep only basis states with x <= N - D and y <= N - D.
FlagDiscardResult flag_discard(const Statevector &state, int original_extent, int d);

struct SweepRow {
    double parameter = 0.0;
    double mean = 0.0;
    double std = 0.0;
    int n_images = 0;
};

/// Mean and population standard deviation of pi_S over images for each D.
std::vector<SweepRow> sweep_over_window(const std::vector<ImageGrid> &images,
                                        const std::vector<int> &d_values,
                                        BoundaryMode mode = BoundaryMode::Periodic);
/// Same with the image resampled to each side N and fixed D.
std::vector<SweepRow> sweep_over_size(const std::vector<ImageGrid> &images,
                                      const std::vector<int> &n_values, int d,
                                      BoundaryMode mode = BoundaryMode::Periodic);

/// Area-average resampling to new_side x new_side.
ImageGrid resample_image(const ImageGrid &img, int new_side);

} // namespace lcuqml
