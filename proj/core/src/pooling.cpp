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
#include "lcuqml/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lcuqml/errors.hpp"

namespace lcuqml {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

double pixel_or_zero(const ImageGrid &img, int x, int y, BoundaryMode mode) {
    const int n = img.n_side;
    if (mode == BoundaryMode::Periodic) {
        return img.at(wrap(x, n), wrap(y, n));
    }
    if (x < 0 || y < 0 || x >= n || y >= n) {
        return 0.0;
    }
    return img.at(x, y);
}

std::vector<int> range_qubits(int start, int count) {
    std::vector<int> q(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        q[static_cast<std::size_t>(i)] = start + i;
    }
    return q;
}

int side_bits_of(const Statevector &state) {
    if (state.num_qubits() % 2 != 0) {
        throw DomainError("image states need an even number of qubits");
    }
    return state.num_qubits() / 2;
}

} // namespace

// ---------------------------------------------------------------- images

ImageGrid ImageGrid::from_pixels(int n_side, std::vector<double> pixels) {
    if (n_side < 1 || pixels.size() != static_cast<std::size_t>(n_side) * static_cast<std::size_t>(n_side)) {
        throw DomainError("pixel count must be n_side^2");
    }
    for (double v : pixels) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("pixel values must be finite and nonnegative");
        }
    }
    return ImageGrid{n_side, std::move(pixels), n_side};
}

double ImageGrid::norm_constant() const {
    double s = 0.0;
    for (double v : pixels) {
        s += v * v;
    }
    return std::sqrt(s);
}

int next_power_of_two(int n) {
    if (n < 1) {
        throw DomainError("next_power_of_two needs n >= 1");
    }
    int p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

int ceil_log2(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("ceil_log2 of zero");
    }
    int k = 0;
    while ((std::uint64_t{1} << k) < n) {
        ++k;
    }
    return k;
}

ImageGrid embed_image(const ImageGrid &img, int side) {
    if (side < img.n_side) {
        throw DomainError("embedding grid is smaller than the image");
    }
    ImageGrid out{side, std::vector<double>(static_cast<std::size_t>(side) * static_cast<std::size_t>(side), 0.0),
                  img.original_extent};
    for (int x = 0; x < img.n_side; ++x) {
        for (int y = 0; y < img.n_side; ++y) {
            out.pixels[static_cast<std::size_t>(x * side + y)] = img.at(x, y);
        }
    }
    return out;
}

Statevector amplitude_encode_image(const ImageGrid &img) {
    const int side = next_power_of_two(img.n_side);
    const ImageGrid g = side == img.n_side ? img : embed_image(img, side);
    const double omega = g.norm_constant();
    if (omega <= 0.0) {
        throw DomainError("cannot encode an all-zero image");
    }
    CVector a(static_cast<Eigen::Index>(g.pixels.size()));
    for (std::size_t i = 0; i < g.pixels.size(); ++i) {
        a[static_cast<Eigen::Index>(i)] = g.pixels[i] / omega;
    }
    return Statevector::from_amplitudes(std::move(a));
}

ImageGrid classical_pool_oracle(const ImageGrid &img, const PoolingSpec &spec) {
    FilterSpec f{spec.d, std::vector<double>(static_cast<std::size_t>(spec.d * spec.d), 1.0)};
    return classical_conv_oracle(img, f, spec.mode);
}

ImageGrid classical_conv_oracle(const ImageGrid &img, const FilterSpec &filter, BoundaryMode mode) {
    const int d = filter.d;
    if (d < 1 || filter.weights.size() != static_cast<std::size_t>(d * d)) {
        throw DomainError("filter must hold d*d weights");
    }
    const int n = img.n_side;
    ImageGrid out{n, std::vector<double>(img.pixels.size(), 0.0), img.original_extent};
    const double scale = 1.0 / static_cast<double>(d * d);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            double s = 0.0;
            for (int dx = 0; dx < d; ++dx) {
                for (int dy = 0; dy < d; ++dy) {
                    s += filter.weights[static_cast<std::size_t>(dx * d + dy)] *
                         pixel_or_zero(img, x + dx, y + dy, mode);
                }
            }
            out.pixels[static_cast<std::size_t>(x * n + y)] = scale * s;
        }
    }
    return out;
}

// ------------------------------------------------------------ shift gates

GateAction shift_operator(const ShiftOp &op, int side_bits, int qubit_offset) {
    if (side_bits < 1) {
        throw DomainError("shift register needs at least one qubit");
    }
    const BasisIndex dim = BasisIndex{1} << side_bits;
    if (op.amount >= dim) {
        throw DomainError("shift amount must be smaller than the register dimension");
    }
    std::vector<BasisIndex> map(dim);
    for (BasisIndex r = 0; r < dim; ++r) {
        map[r] = op.direction == ShiftDirection::Add ? (r + op.amount) % dim
                                                     : (r + dim - op.amount) % dim;
    }
    const int start = qubit_offset + (op.axis == Axis::X ? 0 : side_bits);
    return GateAction::permutation(range_qubits(start, side_bits), std::move(map));
}

Circuit lower_increment_circuit(const std::vector<int> &qubits) {
    if (qubits.empty()) {
        throw DomainError("increment needs at least one qubit");
    }
    const std::size_t w = qubits.size();
    Circuit c;
    for (std::size_t t = 0; t < w; ++t) {
        std::vector<int> ctrl(qubits.begin() + static_cast<std::ptrdiff_t>(t) + 1, qubits.end());
        std::vector<int> vals(ctrl.size(), 1);
        c.push_back(GateAction::controlled(ctrl, vals, gates::x(qubits[t])));
    }
    return c;
}

Circuit lower_increment_circuit(int width) { return lower_increment_circuit(range_qubits(0, width)); }

Circuit lower_decrement_circuit(const std::vector<int> &qubits) {
    Circuit c = lower_increment_circuit(qubits);
    std::reverse(c.begin(), c.end());
    return c;
}

Circuit lower_shift_circuit(BasisIndex amount, ShiftDirection direction,
                            const std::vector<int> &qubits) {
    const std::size_t w = qubits.size();
    if (w == 0 || w >= 63 || amount >= (BasisIndex{1} << w)) {
        throw DomainError("shift amount must be smaller than the register dimension");
    }
    Circuit c;
    for (std::size_t m = 0; m < w; ++m) {
        if (((amount >> m) & 1U) == 0) {
            continue;
        }
        // adding 2^m only touches the w - m most significant qubits
        const std::vector<int> upper(qubits.begin(), qubits.end() - static_cast<std::ptrdiff_t>(m));
        const Circuit part = direction == ShiftDirection::Add ? lower_increment_circuit(upper)
                                                              : lower_decrement_circuit(upper);
        c.insert(c.end(), part.begin(), part.end());
    }
    return c;
}

int increment_basic_op_estimate(int width) {
    if (width < 1) {
        throw DomainError("increment needs at least one qubit");
    }
    int total = 0;
    for (int m = 0; m < width; ++m) {
        total += m == 0 ? 1 : 2 * m - 1;
    }
    return total;
}

// ----------------------------------------------------------- preparation

AxisPrep prep_amplitudes_degeneracy_free(int d, int l, PrepScheme scheme) {
    if (d < 1 || l < 0 || l > 20) {
        throw DomainError("invalid window or ancilla count");
    }
    const bool ok = (l == 0) ? d == 1 : ((1 << (l - 1)) < d && d <= (1 << l));
    if (!ok) {
        throw DomainError("need 2^(l-1) < d <= 2^l");
    }
    AxisPrep p;
    const std::size_t dim = std::size_t{1} << l;
    p.control_amounts.resize(static_cast<std::size_t>(l));
    for (int q = 0; q < l; ++q) {
        p.control_amounts[static_cast<std::size_t>(q)] = BasisIndex{1} << (l - 1 - q);
    }
    if (scheme == PrepScheme::AdjustedFinal && l >= 1) {
        p.control_amounts[0] = static_cast<BasisIndex>(d - (1 << (l - 1)));
    }
    p.composed_shift.resize(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        BasisIndex s = 0;
        for (int q = 0; q < l; ++q) {
            if ((a >> (l - 1 - q)) & 1U) {
                s += p.control_amounts[static_cast<std::size_t>(q)];
            }
        }
        p.composed_shift[a] = s;
    }
    p.amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim));
    std::set<BasisIndex> kept;
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 0; a < dim; ++a) {
        const BasisIndex s = p.composed_shift[a];
        if (s < static_cast<BasisIndex>(d) && kept.insert(s).second) {
            p.amplitudes[static_cast<Eigen::Index>(a)] = amp;
        }
    }
    if (kept.size() != static_cast<std::size_t>(d)) {
        throw ConstructionError("ancilla states do not cover every shift below d");
    }
    return p;
}

namespace {

void check_window(int d, int side_bits) {
    if (d < 1) {
        throw DomainError("window size must be >= 1");
    }
    if (side_bits < 1 || side_bits > 14) {
        throw DomainError("image side out of range");
    }
    if (d > (1 << side_bits)) {
        throw DomainError("window larger than the image");
    }
}

Circuit composed_shift_circuit(BasisIndex sx, BasisIndex sy, int side_bits) {
    Circuit c;
    if (sx != 0) {
        c.push_back(shift_operator({Axis::X, sx, ShiftDirection::Subtract}, side_bits));
    }
    if (sy != 0) {
        c.push_back(shift_operator({Axis::Y, sy, ShiftDirection::Subtract}, side_bits));
    }
    return c;
}

// One single-qubit-controlled subtraction per ancilla qubit and axis.
Circuit controlled_shift_select(const std::vector<BasisIndex> &amounts, int side_bits) {
    const int l = static_cast<int>(amounts.size());
    const int offset = 2 * l;
    Circuit c;
    for (int axis = 0; axis < 2; ++axis) {
        for (int q = 0; q < l; ++q) {
            const BasisIndex amt = amounts[static_cast<std::size_t>(q)];
            if (amt == 0) {
                continue;
            }
            const ShiftOp op{axis == 0 ? Axis::X : Axis::Y, amt, ShiftDirection::Subtract};
            c.push_back(GateAction::controlled({axis * l + q}, {1}, shift_operator(op, side_bits, offset)));
        }
    }
    return c;
}

} // namespace

LcuProgram build_pool_program(const PoolingSpec &spec, int side_bits, PrepScheme scheme) {
    check_window(spec.d, side_bits);
    const int l = ceil_log2(static_cast<std::uint64_t>(spec.d));
    const AxisPrep ax = prep_amplitudes_degeneracy_free(spec.d, l, scheme);
    LcuProgram p;
    p.ancilla_qubits = 2 * l;
    p.prep_amplitudes = kron(ax.amplitudes, ax.amplitudes);
    const std::size_t dim = std::size_t{1} << l;
    for (std::size_t jx = 0; jx < dim; ++jx) {
        for (std::size_t jy = 0; jy < dim; ++jy) {
            Circuit c = composed_shift_circuit(ax.composed_shift[jx], ax.composed_shift[jy], side_bits);
            if (!c.empty()) {
                p.selects[(jx << l) | jy] = std::move(c);
            }
        }
    }
    p.select_circuit = controlled_shift_select(ax.control_amounts, side_bits);
    return p;
}

LcuProgram build_conv_program(const FilterSpec &filter, int side_bits) {
    const int d = filter.d;
    check_window(d, side_bits);
    if (filter.weights.size() != static_cast<std::size_t>(d * d)) {
        throw DomainError("filter must hold d*d weights");
    }
    double total = 0.0;
    for (double w : filter.weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw DomainError("filter weights must be finite and nonnegative");
        }
        total += w;
    }
    if (total <= 0.0) {
        throw DomainError("filter has no nonzero weight");
    }
    const int l = ceil_log2(static_cast<std::uint64_t>(d));
    const std::size_t dim = std::size_t{1} << l;
    LcuProgram p;
    p.ancilla_qubits = 2 * l;
    p.prep_amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim * dim));
    for (int dx = 0; dx < d; ++dx) {
        for (int dy = 0; dy < d; ++dy) {
            const std::size_t j = (static_cast<std::size_t>(dx) << l) | static_cast<std::size_t>(dy);
            p.prep_amplitudes[static_cast<Eigen::Index>(j)] =
                std::sqrt(filter.weights[static_cast<std::size_t>(dx * d + dy)] / total);
        }
    }
    for (std::size_t jx = 0; jx < dim; ++jx) {
        for (std::size_t jy = 0; jy < dim; ++jy) {
            Circuit c = composed_shift_circuit(jx, jy, side_bits);
            if (!c.empty()) {
                p.selects[(jx << l) | jy] = std::move(c);
            }
        }
    }
    std::vector<BasisIndex> amounts(static_cast<std::size_t>(l));
    for (int q = 0; q < l; ++q) {
        amounts[static_cast<std::size_t>(q)] = BasisIndex{1} << (l - 1 - q);
    }
    p.select_circuit = controlled_shift_select(amounts, side_bits);
    return p;
}

PoolingGateCount pooling_gate_count(int d) {
    if (d < 1) {
        throw DomainError("window size must be >= 1");
    }
    const int l = ceil_log2(static_cast<std::uint64_t>(d));
    const auto p = build_pool_program({d, BoundaryMode::Periodic}, std::max(1, l));
    PoolingGateCount c;
    c.total_controlled = static_cast<int>(p.select_circuit.size());
    c.controlled_per_axis = c.total_controlled / 2;
    c.naive_multicontrolled = d * d;
    return c;
}

// --------------------------------------------------------------- pooling

LcuOutcome apply_pooling(const Statevector &state, const PoolingSpec &spec, PrepScheme scheme) {
    const int b = side_bits_of(state);
    return run_lcu(build_pool_program(spec, b, scheme), state);
}

ImageGrid pooling_grid(const ImageGrid &img, const PoolingSpec &spec) {
    if (spec.d < 1 || spec.d > img.n_side) {
        throw DomainError("window must satisfy 1 <= D <= N");
    }
    const int need = spec.mode == BoundaryMode::Periodic ? img.n_side : img.n_side + spec.d - 1;
    return embed_image(img, next_power_of_two(need));
}

ImagePoolResult pool_image(const ImageGrid &img, const PoolingSpec &spec) {
    ImageGrid g = pooling_grid(img, spec);
    const Statevector s = amplitude_encode_image(g);
    auto out = apply_pooling(s, {spec.d, BoundaryMode::Periodic});
    return {std::move(g), std::move(out)};
}

double pooling_success_probability(const ImageGrid &img, const PoolingSpec &spec) {
    const ImageGrid g = pooling_grid(img, spec);
    const double omega = g.norm_constant();
    if (omega <= 0.0) {
        throw DomainError("all-zero image");
    }
    const ImageGrid pooled = classical_pool_oracle(g, {spec.d, BoundaryMode::Periodic});
    const double pn = pooled.norm_constant();
    return (pn * pn) / (omega * omega);
}

FlagDiscardResult flag_discard(const Statevector &state, int original_extent, int d) {
    const int b = side_bits_of(state);
    const int side = 1 << b;
    if (original_extent < 1 || original_extent > side || d < 1 || d > original_extent) {
        throw DomainError("flag discard needs 1 <= D <= N <= grid side");
    }
    const int limit = original_extent - d;
    CVector a = state.amplitudes();
    for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
            if (x > limit || y > limit) {
                a[x * side + y] = 0.0;
            }
        }
    }
    const double p = a.squaredNorm();
    if (p < kPostSelectionThreshold) {
        throw PostSelectionImpossible(p);
    }
    a /= std::sqrt(p);
    return {Statevector::from_amplitudes(std::move(a)), p};
}

// ----------------------------------------------------------------- sweeps

ImageGrid resample_image(const ImageGrid &img, int new_side) {
    if (new_side < 1) {
        throw DomainError("resample target must be positive");
    }
    const int n = img.n_side;
    if (new_side == n) {
        return img;
    }
    // r(X, i) = overlap of source cell i with target cell X, in target units
    const double s = static_cast<double>(n) / static_cast<double>(new_side);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(new_side, n);
    for (int X = 0; X < new_side; ++X) {
        const double lo = X * s;
        const double hi = (X + 1) * s;
        for (int i = 0; i < n; ++i) {
            const double ov = std::min(hi, static_cast<double>(i + 1)) - std::max(lo, static_cast<double>(i));
            if (ov > 0.0) {
                r(X, i) = ov / s;
            }
        }
    }
    Eigen::MatrixXd v(n, n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            v(x, y) = img.at(x, y);
        }
    }
    const Eigen::MatrixXd out = r * v * r.transpose();
    ImageGrid g{new_side, std::vector<double>(static_cast<std::size_t>(new_side * new_side)), new_side};
    for (int x = 0; x < new_side; ++x) {
        for (int y = 0; y < new_side; ++y) {
            g.pixels[static_cast<std::size_t>(x * new_side + y)] = out(x, y);
        }
    }
    return g;
}

namespace {

SweepRow summarize(double parameter, const std::vector<double> &v) {
    SweepRow r;
    r.parameter = parameter;
    r.n_images = static_cast<int>(v.size());
    if (v.empty()) {
        return r;
    }
    double m = 0.0;
    for (double x : v) {
        m += x;
    }
    m /= static_cast<double>(v.size());
    double s = 0.0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    r.mean = m;
    r.std = std::sqrt(s / static_cast<double>(v.size()));
    return r;
}

} // namespace

std::vector<SweepRow> sweep_over_window(const std::vector<ImageGrid> &images,
                                        const std::vector<int> &d_values, BoundaryMode mode) {
    if (images.empty()) {
        throw DomainError("sweep needs at least one image");
    }
    std::vector<SweepRow> rows;
    for (int d : d_values) {
        std::vector<double> pis;
        pis.reserve(images.size());
        for (const auto &img : images) {
            pis.push_back(pooling_success_probability(img, {d, mode}));
        }
        rows.push_back(summarize(d, pis));
    }
    return rows;
}

std::vector<SweepRow> sweep_over_size(const std::vector<ImageGrid> &images,
                                      const std::vector<int> &n_values, int d, BoundaryMode mode) {
    if (images.empty()) {
        throw DomainError("sweep needs at least one image");
    }
    std::vector<SweepRow> rows;
    for (int n : n_values) {
        std::vector<double> pis;
        pis.reserve(images.size());
        for (const auto &img : images) {
            pis.push_back(pooling_success_probability(resample_image(img, n), {d, mode}));
        }
        rows.push_back(summarize(n, pis));
    }
    return rows;
}

} // namespace lcuqml
