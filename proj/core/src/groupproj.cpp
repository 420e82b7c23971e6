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
#include "lcuqml/groupproj.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>

#include "json.hpp"

#include "lcuqml/errors.hpp"
#include "lcuqml/pooling.hpp"

namespace lcuqml {

namespace {

constexpr double kCharTol = 1e-12;

std::vector<int> cycle_type(const Permutation &p) {
    std::vector<int> seen(p.size(), 0);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

void derive_inverses_and_classes(FiniteGroupData &g) {
    const std::size_t n = g.order();
    g.inverses.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.table[i][j] == 0) {
                g.inverses[i] = static_cast<int>(j);
                break;
            }
        }
    }
    g.class_of.assign(n, -1);
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        for (int e : g.classes[c]) {
            if (e < 0 || static_cast<std::size_t>(e) >= n) {
                throw ValidationError("class lists an element out of range");
            }
            if (g.class_of[static_cast<std::size_t>(e)] != -1) {
                throw ValidationError("element appears in two classes");
            }
            g.class_of[static_cast<std::size_t>(e)] = static_cast<int>(c);
        }
    }
}

CVector tensor(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

GateAction ancilla_dense(int start, int width, const CMatrix &m) {
    std::vector<int> q(static_cast<std::size_t>(width));
    std::iota(q.begin(), q.end(), start);
    return GateAction::dense(std::move(q), m);
}

void check_weights(const FiniteGroupData &group, const ProjectionWeights &w) {
    if (w.a.size() != group.num_irreps()) {
        throw DomainError("need one weight per irrep");
    }
}

} // namespace

void validate_group(const FiniteGroupData &g) {
    const std::size_t n = g.order();
    if (n == 0) {
        throw ValidationError("group has no elements");
    }
    for (const auto &row : g.table) {
        if (row.size() != n) {
            throw ValidationError("composition table must be square");
        }
        std::vector<int> seen(n, 0);
        for (int v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
                throw ValidationError("composition table row is not a permutation of the elements");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (g.table[0][i] != static_cast<int>(i) || g.table[i][0] != static_cast<int>(i)) {
            throw ValidationError("element 0 must be the identity");
        }
        const int inv = g.inverses.at(i);
        if (inv < 0 || g.table[i][static_cast<std::size_t>(inv)] != 0 || g.table[static_cast<std::size_t>(inv)][i] != 0) {
            throw ValidationError("missing two-sided inverse");
        }
    }
    // exhaustive for small groups, strided spot check otherwise
    const std::size_t step = n <= 64 ? 1 : n / 16 + 1;
    for (std::size_t a = 0; a < n; a += step) {
        for (std::size_t b = 0; b < n; b += step) {
            for (std::size_t c = 0; c < n; c += step) {
                const auto ab = static_cast<std::size_t>(g.table[a][b]);
                const auto bc = static_cast<std::size_t>(g.table[b][c]);
                if (g.table[ab][c] != g.table[a][bc]) {
                    throw ValidationError("composition table is not associative");
                }
            }
        }
    }
    if (g.class_of.size() != n || std::any_of(g.class_of.begin(), g.class_of.end(), [](int c) { return c < 0; })) {
        throw ValidationError("classes must partition the elements");
    }
    if (g.classes.empty() || g.classes[0] != std::vector<int>{0}) {
        throw ValidationError("first class must be the identity class");
    }
    for (std::size_t x = 0; x < n; ++x) {
        const auto xi = static_cast<std::size_t>(g.inverses[x]);
        for (std::size_t e = 0; e < n; ++e) {
            const auto conj = static_cast<std::size_t>(g.table[static_cast<std::size_t>(g.table[x][e])][xi]);
            if (g.class_of[conj] != g.class_of[e]) {
                throw ValidationError("classes are not closed under conjugation");
            }
        }
    }
    const auto r = static_cast<Eigen::Index>(g.num_irreps());
    const auto c = static_cast<Eigen::Index>(g.num_classes());
    if (g.characters.cols() != c || r != c) {
        throw ValidationError("character table must be square over the classes");
    }
    for (Eigen::Index k = 0; k < c; ++k) {
        if (std::abs(g.characters(0, k) - cplx(1.0)) > kCharTol) {
            throw ValidationError("row 0 must be the trivial character");
        }
    }
    double degree_sq = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
        degree_sq += std::norm(g.characters(j, 0));
        for (Eigen::Index k = 0; k < r; ++k) {
            cplx s = 0.0;
            for (Eigen::Index v = 0; v < c; ++v) {
                s += static_cast<double>(g.classes[static_cast<std::size_t>(v)].size()) * g.characters(j, v) *
                     std::conj(g.characters(k, v));
            }
            s /= static_cast<double>(n);
            if (std::abs(s - cplx(j == k ? 1.0 : 0.0)) > kCharTol) {
                throw ValidationError("character rows are not orthonormal");
            }
        }
    }
    if (std::abs(degree_sq - static_cast<double>(n)) > kCharTol) {
        throw ValidationError("squared degrees do not sum to the group order");
    }
}

FiniteGroupData symmetric_group(int n) {
    if (n < 2) {
        throw DomainError("symmetric group needs n >= 2");
    }
    if (n > 4) {
        throw UnsupportedError("built-in character tables cover S_2, S_3 and S_4 only");
    }
    FiniteGroupData g;
    g.name = "S" + std::to_string(n);
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        g.permutations.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < g.permutations.size(); ++i) {
        index[g.permutations[i]] = static_cast<int>(i);
    }
    const std::size_t order = g.permutations.size();
    g.table.assign(order, std::vector<int>(order));
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            Permutation ab(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                ab[static_cast<std::size_t>(x)] =
                    g.permutations[a][static_cast<std::size_t>(g.permutations[b][static_cast<std::size_t>(x)])];
            }
            g.table[a][b] = index.at(ab);
        }
    }

    std::vector<std::vector<int>> types;
    if (n == 2) {
        types = {{1, 1}, {2}};
        g.class_labels = {"I", "(12)"};
        g.characters = CMatrix(2, 2);
        g.characters << 1, 1, 1, -1;
    } else if (n == 3) {
        types = {{1, 1, 1}, {2, 1}, {3}};
        g.class_labels = {"I", "(12)", "(123)"};
        g.characters = CMatrix(3, 3);
        g.characters << 1, 1, 1, 2, 0, -1, 1, -1, 1;
    } else {
        types = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
        g.class_labels = {"I", "(12)", "(12)(34)", "(123)", "(1234)"};
        g.characters = CMatrix(5, 5);
        g.characters << 1, 1, 1, 1, 1,
                        1, -1, 1, 1, -1,
                        2, 0, 2, -1, 0,
                        3, -1, -1, 0, 1,
                        3, 1, -1, 0, -1;
    }
    g.classes.assign(types.size(), {});
    for (std::size_t i = 0; i < order; ++i) {
        const auto t = cycle_type(g.permutations[i]);
        const auto it = std::find(types.begin(), types.end(), t);
        g.classes[static_cast<std::size_t>(it - types.begin())].push_back(static_cast<int>(i));
    }
    derive_inverses_and_classes(g);
    validate_group(g);
    return g;
}

FiniteGroupData load_group_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
        FiniteGroupData g;
        g.name = j.value("name", path.stem().string());
        g.table = j.at("table").get<std::vector<std::vector<int>>>();
        g.classes = j.at("classes").get<std::vector<std::vector<int>>>();
        if (j.contains("class_labels")) {
            g.class_labels = j.at("class_labels").get<std::vector<std::string>>();
        }
        const auto &rows = j.at("characters");
        g.characters = CMatrix(static_cast<Eigen::Index>(rows.size()),
                               static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != static_cast<std::size_t>(g.characters.cols())) {
                throw ValidationError("ragged character table");
            }
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                const auto &v = rows[r][c];
                g.characters(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    v.is_array() ? cplx(v.at(0).get<double>(), v.at(1).get<double>()) : cplx(v.get<double>());
            }
        }
        derive_inverses_and_classes(g);
        validate_group(g);
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed group file: ") + e.what());
    }
}

RepMap swap_rep(const FiniteGroupData &group, int qudit_bits) {
    if (group.permutations.empty()) {
        throw UnsupportedError("swap representation needs a permutation group");
    }
    if (qudit_bits < 1) {
        throw DomainError("qudits need at least one qubit");
    }
    const int m = static_cast<int>(group.permutations[0].size());
    const int nq = m * qudit_bits;
    if (nq > 24) {
        throw DomainError("register too large for a dense permutation");
    }
    const BasisIndex dim = BasisIndex{1} << nq;
    const BasisIndex mask = (BasisIndex{1} << qudit_bits) - 1;
    RepMap rep;
    rep.num_qubits = nq;
    std::vector<int> qubits(static_cast<std::size_t>(nq));
    std::iota(qubits.begin(), qubits.end(), 0);
    for (const auto &sigma : group.permutations) {
        std::vector<BasisIndex> map(dim);
        for (BasisIndex r = 0; r < dim; ++r) {
            BasisIndex out = 0;
            for (int k = 0; k < m; ++k) {
                const BasisIndex v = (r >> ((m - 1 - k) * qudit_bits)) & mask;
                out |= v << ((m - 1 - sigma[static_cast<std::size_t>(k)]) * qudit_bits);
            }
            map[r] = out;
        }
        rep.ops.push_back(GateAction::permutation(qubits, std::move(map)));
    }
    return rep;
}

void validate_rep(const FiniteGroupData &group, const RepMap &rep) {
    if (rep.ops.size() != group.order()) {
        throw ValidationError("representation needs one operator per element");
    }
    if (rep.num_qubits > 10) {
        throw DomainError("dense representation check limited to 10 qubits");
    }
    std::vector<CMatrix> u;
    for (const auto &op : rep.ops) {
        op.validate(rep.num_qubits);
        u.push_back(circuit_unitary({op}, rep.num_qubits));
        if (!is_unitary(u.back())) {
            throw ValidationError("representation operator is not unitary");
        }
    }
    for (std::size_t a = 0; a < u.size(); ++a) {
        for (std::size_t b = 0; b < u.size(); ++b) {
            const CMatrix diff = u[a] * u[b] - u[static_cast<std::size_t>(group.table[a][b])];
            if (diff.cwiseAbs().maxCoeff() > 1e-10) {
                throw ValidationError("representation is not a homomorphism");
            }
        }
    }
}

std::vector<double> irrep_multiplicities(const FiniteGroupData &group, const RepMap &rep) {
    std::vector<cplx> traces;
    for (const auto &op : rep.ops) {
        traces.push_back(circuit_unitary({op}, rep.num_qubits).trace());
    }
    std::vector<double> m(group.num_irreps());
    for (std::size_t r = 0; r < m.size(); ++r) {
        cplx s = 0.0;
        for (std::size_t g = 0; g < group.order(); ++g) {
            s += std::conj(group.character(r, g)) * traces[g];
        }
        m[r] = s.real() / static_cast<double>(group.order());
    }
    return m;
}

ProjectionResult apply_projector(const FiniteGroupData &group, const RepMap &rep, std::size_t r,
                                 const Statevector &psi) {
    if (r >= group.num_irreps()) {
        throw DomainError("irrep index out of range");
    }
    if (psi.num_qubits() != rep.num_qubits) {
        throw DomainError("state does not match the representation register");
    }
    const double scale = group.degree(r) / static_cast<double>(group.order());
    CVector acc = CVector::Zero(static_cast<Eigen::Index>(psi.dim()));
    for (std::size_t g = 0; g < group.order(); ++g) {
        CVector v = psi.amplitudes();
        apply_gate_inplace(v, psi.num_qubits(), rep.ops[g]);
        acc += std::conj(group.character(r, g)) * v;
    }
    acc *= scale;
    const double w = acc.squaredNorm();
    return {std::move(acc), w};
}

CMatrix projector_matrix(const FiniteGroupData &group, const RepMap &rep, std::size_t r) {
    const auto dim = Eigen::Index{1} << rep.num_qubits;
    CMatrix p = CMatrix::Zero(dim, dim);
    for (std::size_t g = 0; g < group.order(); ++g) {
        p += std::conj(group.character(r, g)) * circuit_unitary({rep.ops[g]}, rep.num_qubits);
    }
    return p * (group.degree(r) / static_cast<double>(group.order()));
}

double projection_normalizer(const FiniteGroupData &group, const ProjectionWeights &w) {
    check_weights(group, w);
    double s = 0.0;
    for (std::size_t r = 0; r < w.a.size(); ++r) {
        s += std::norm(w.a[r] * group.degree(r));
    }
    if (s <= 0.0) {
        throw DomainError("projection weights are all zero");
    }
    return std::sqrt(s);
}

CVector projection_prep_vector(const FiniteGroupData &group, const ProjectionWeights &w, int ancilla_qubits) {
    const double omega = projection_normalizer(group, w);
    const auto dim = Eigen::Index{1} << ancilla_qubits;
    if (dim < static_cast<Eigen::Index>(w.a.size())) {
        throw DomainError("ancilla register too small for the irreps");
    }
    CVector c = CVector::Zero(dim);
    for (std::size_t r = 0; r < w.a.size(); ++r) {
        c[static_cast<Eigen::Index>(r)] = w.a[r] * group.degree(r) / omega;
    }
    return c;
}

CMatrix gram_schmidt_complete(const CMatrix &columns, Eigen::Index dim) {
    if (columns.rows() != dim || columns.cols() > dim) {
        throw DomainError("column block does not fit the target dimension");
    }
    const CMatrix gram = columns.adjoint() * columns;
    if ((gram - CMatrix::Identity(columns.cols(), columns.cols())).cwiseAbs().maxCoeff() > kCharTol) {
        throw ConstructionError("seed columns are not orthonormal");
    }
    CMatrix q(dim, dim);
    q.leftCols(columns.cols()) = columns;
    Eigen::Index filled = columns.cols();
    for (Eigen::Index i = 0; i < dim && filled < dim; ++i) {
        CVector v = CVector::Zero(dim);
        v[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            v -= q.leftCols(filled) * (q.leftCols(filled).adjoint() * v);
        }
        const double nv = v.norm();
        if (nv < 1e-8) {
            continue;
        }
        q.col(filled++) = v / nv;
    }
    if (filled != dim || !is_unitary(q, kCharTol)) {
        throw ConstructionError("completed matrix is not unitary");
    }
    return q;
}

CMatrix character_unitary(const FiniteGroupData &group) {
    const int k = ceil_log2(group.order());
    const auto dim = Eigen::Index{1} << k;
    CMatrix cols = CMatrix::Zero(dim, static_cast<Eigen::Index>(group.num_irreps()));
    const double s = 1.0 / std::sqrt(static_cast<double>(group.order()));
    for (std::size_t r = 0; r < group.num_irreps(); ++r) {
        for (std::size_t g = 0; g < group.order(); ++g) {
            cols(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(r)) = s * std::conj(group.character(r, g));
        }
    }
    return gram_schmidt_complete(cols, dim);
}

CMatrix class_character_unitary(const FiniteGroupData &group) {
    const int k = ceil_log2(group.num_classes());
    const auto dim = Eigen::Index{1} << k;
    CMatrix cols = CMatrix::Zero(dim, static_cast<Eigen::Index>(group.num_irreps()));
    const double s = 1.0 / std::sqrt(static_cast<double>(group.order()));
    for (std::size_t r = 0; r < group.num_irreps(); ++r) {
        for (std::size_t c = 0; c < group.num_classes(); ++c) {
            cols(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)) =
                s * std::sqrt(static_cast<double>(group.class_size(c))) *
                std::conj(group.characters(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
        }
    }
    return gram_schmidt_complete(cols, dim);
}

LcuProgram build_projection_program(const FiniteGroupData &group, const RepMap &rep,
                                     const ProjectionWeights &weights) {
    check_weights(group, weights);
    if (rep.ops.size() != group.order()) {
        throw ValidationError("representation needs one operator per element");
    }
    const int k = ceil_log2(group.order());
    const CMatrix chi = character_unitary(group);
    const CVector c = projection_prep_vector(group, weights, k);
    LcuProgram p;
    p.ancilla_qubits = k;
    p.prep_amplitudes = chi * c;
    p.unprepare_amplitudes = chi.col(0);
    p.prep_circuit = {ancilla_dense(0, k, completion_unitary(c)), ancilla_dense(0, k, chi)};
    p.unprepare_circuit = {ancilla_dense(0, k, chi)};
    for (std::size_t g = 1; g < group.order(); ++g) {
        p.selects[g] = {rep.ops[g]};
    }
    return p;
}

int ClassRegisterLayout::total_qubits() const {
    int t = class_qubits;
    for (const auto &r : element_registers) {
        t += r.width;
    }
    return t;
}

ClassRegisterLayout class_register_layout(const FiniteGroupData &group) {
    ClassRegisterLayout l;
    l.class_qubits = ceil_log2(group.num_classes());
    int next = l.class_qubits;
    for (std::size_t c = 0; c < group.num_classes(); ++c) {
        const int w = ceil_log2(static_cast<std::uint64_t>(group.class_size(c)));
        l.element_registers.push_back({"class" + std::to_string(c), next, w});
        next += w;
    }
    return l;
}

LcuProgram conjugacy_class_program(const FiniteGroupData &group, const RepMap &rep,
                                   const ProjectionWeights &weights) {
    check_weights(group, weights);
    if (rep.ops.size() != group.order()) {
        throw ValidationError("representation needs one operator per element");
    }
    const ClassRegisterLayout lay = class_register_layout(group);
    const int k = lay.total_qubits();
    if (k > 20) {
        throw DomainError("conjugacy-class ancilla register too large");
    }
    const int kc = lay.class_qubits;
    const CMatrix chi = class_character_unitary(group);
    const CVector c = projection_prep_vector(group, weights, kc);

    LcuProgram p;
    p.ancilla_qubits = k;
    p.prep_circuit = {ancilla_dense(0, kc, completion_unitary(c)), ancilla_dense(0, kc, chi)};
    p.unprepare_circuit = {ancilla_dense(0, kc, chi)};
    CVector prep = chi * c;
    CVector unprep = chi.col(0);
    for (std::size_t cl = 0; cl < group.num_classes(); ++cl) {
        const auto &reg = lay.element_registers[cl];
        CVector uni = CVector::Zero(static_cast<Eigen::Index>(reg.dim()));
        uni.head(group.class_size(cl)).setConstant(1.0 / std::sqrt(static_cast<double>(group.class_size(cl))));
        if (reg.width > 0) {
            const GateAction g = ancilla_dense(reg.start, reg.width, completion_unitary(uni));
            p.prep_circuit.push_back(g);
            p.unprepare_circuit.push_back(g);
        }
        prep = tensor(prep, uni);
        unprep = tensor(unprep, uni);
    }
    p.prep_amplitudes = std::move(prep);
    p.unprepare_amplitudes = std::move(unprep);

    std::vector<int> class_qubits(static_cast<std::size_t>(kc));
    std::iota(class_qubits.begin(), class_qubits.end(), 0);
    for (std::size_t cl = 0; cl < group.num_classes(); ++cl) {
        const auto &reg = lay.element_registers[cl];
        for (int l = 0; l < group.class_size(cl); ++l) {
            const int g = group.classes[cl][static_cast<std::size_t>(l)];
            if (g == 0) {
                continue;
            }
            std::vector<int> ctrl = class_qubits;
            std::vector<int> vals;
            for (int b = kc - 1; b >= 0; --b) {
                vals.push_back(static_cast<int>((cl >> b) & 1U));
            }
            for (int b = 0; b < reg.width; ++b) {
                ctrl.push_back(reg.start + b);
                vals.push_back((l >> (reg.width - 1 - b)) & 1);
            }
            p.select_circuit.push_back(
                GateAction::controlled(std::move(ctrl), std::move(vals), rep.ops[static_cast<std::size_t>(g)].shifted(k)));
        }
    }

    // selects map for the oracle: decode (class, element-register values)
    const BasisIndex dim = BasisIndex{1} << k;
    for (BasisIndex idx = 0; idx < dim; ++idx) {
        const BasisIndex cl = idx >> (k - kc);
        if (cl >= group.num_classes()) {
            continue;
        }
        const auto &reg = lay.element_registers[cl];
        const BasisIndex l = (idx >> (k - reg.start - reg.width)) & (reg.dim() - 1);
        if (l >= static_cast<BasisIndex>(group.class_size(cl))) {
            continue;
        }
        const int g = group.classes[cl][l];
        if (g != 0) {
            p.selects[idx] = {rep.ops[static_cast<std::size_t>(g)]};
        }
    }
    return p;
}

CVector direct_weighted_projection(const FiniteGroupData &group, const RepMap &rep,
                                   const ProjectionWeights &weights, const Statevector &psi) {
    const double omega = projection_normalizer(group, weights);
    CVector acc = CVector::Zero(static_cast<Eigen::Index>(psi.dim()));
    for (std::size_t r = 0; r < group.num_irreps(); ++r) {
        if (weights.a[r] != cplx(0.0)) {
            acc += weights.a[r] * apply_projector(group, rep, r, psi).vector;
        }
    }
    return acc / omega;
}

ProjectionProbability projection_success_probability(const ProjectionWeights &weights,
                                                      const std::vector<double> &subspace_weights,
                                                      const std::vector<double> &degrees) {
    if (weights.a.size() != subspace_weights.size() || degrees.size() != subspace_weights.size()) {
        throw DomainError("weights, subspace weights and degrees must have equal length");
    }
    const double total = std::accumulate(subspace_weights.begin(), subspace_weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-10) {
        throw DomainError("subspace weights must sum to 1");
    }
    double num = 0.0;
    double den_sim = 0.0;
    double den_claim = 0.0;
    for (std::size_t r = 0; r < weights.a.size(); ++r) {
        num += std::norm(weights.a[r]) * subspace_weights[r];
        den_sim += std::norm(weights.a[r] * degrees[r]);
        den_claim += std::norm(weights.a[r]);
    }
    if (den_sim <= 0.0) {
        throw DomainError("projection weights are all zero");
    }
    return {num / den_sim, num / den_claim};
}

ProjectedState permutation_symmetrize(const Statevector &psi, int n_qudits, int qudit_bits) {
    const auto group = symmetric_group(n_qudits);
    const auto rep = swap_rep(group, qudit_bits);
    if (psi.num_qubits() != rep.num_qubits) {
        throw DomainError("state width does not match n_qudits * qudit_bits");
    }
    ProjectionWeights w{std::vector<cplx>(group.num_irreps(), 0.0)};
    w.a[0] = 1.0;
    auto out = run_lcu(build_projection_program(group, rep, w), psi);
    return {std::move(out.post_state), out.pi_success};
}

ProjectionWeights amplify_weights(const FiniteGroupData &group, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in [0, 1]");
    }
    ProjectionWeights w{std::vector<cplx>(group.num_irreps(), 1.0 - alpha)};
    w.a[0] = 1.0;
    return w;
}

ProjectedState amplify_symmetric_subspace(const Statevector &psi, double alpha,
                                          const FiniteGroupData &group, const RepMap &rep) {
    auto out = run_lcu(build_projection_program(group, rep, amplify_weights(group, alpha)), psi);
    return {std::move(out.post_state), out.pi_success};
}

ProjectedState amplify_symmetric_direct(const Statevector &psi, double alpha,
                                        const FiniteGroupData &group, const RepMap &rep) {
    const ProjectionWeights w = amplify_weights(group, alpha);
    const double omega = projection_normalizer(group, w);
    if (alpha == 0.0) {
        return {psi, psi.squared_norm() / (omega * omega)};
    }
    const CVector v = (1.0 - alpha) * psi.amplitudes() + alpha * apply_projector(group, rep, 0, psi).vector;
    const double norm_sq = v.squaredNorm();
    const double pi = norm_sq / (omega * omega);
    if (pi < kPostSelectionThreshold) {
        throw PostSelectionImpossible(pi);
    }
    return {Statevector::from_amplitudes(v / std::sqrt(norm_sq)), pi};
}

SchurBasisS4 schur_basis_s4() {
    SchurBasisS4 s{CVector::Zero(16), CVector::Zero(16)};
    const double a = std::sqrt(3.0) / 6.0;
    s.d1[0b0011] = 2 * a;
    s.d1[0b1100] = 2 * a;
    s.d1[0b0101] = -a;
    s.d1[0b1010] = -a;
    s.d1[0b0110] = -a;
    s.d1[0b1001] = -a;
    s.d2[0b0101] = 0.5;
    s.d2[0b1010] = 0.5;
    s.d2[0b0110] = -0.5;
    s.d2[0b1001] = -0.5;
    return s;
}

std::vector<RotInvRow> rotational_invariance_experiment(int n_clouds, int n_angles, std::uint64_t seed) {
    if (n_clouds < 1 || n_angles < 2) {
        throw DomainError("need at least one cloud and two angles");
    }
    const auto group = symmetric_group(4);
    const auto rep = swap_rep(group);
    ProjectionWeights w{std::vector<cplx>(group.num_irreps(), 0.0)};
    w.a[2] = 1.0;
    const LcuProgram prog = build_projection_program(group, rep, w);

    std::vector<RotInvRow> rows;
    for (int c = 0; c < n_clouds; ++c) {
        const std::uint64_t cseed = derive_seed(seed, static_cast<std::uint64_t>(c));
        const Eigen::Vector3d axis = random_axis(derive_seed(cseed, 1));
        PointCloud cloud;
        Statevector proj0(4);
        for (std::uint64_t attempt = 0;; ++attempt) {
            const std::uint64_t pseed = attempt == 0 ? cseed : derive_seed(cseed, 1 + attempt);
            cloud = sample_shape_cloud(Shape::Sphere, 4, pseed);
            try {
                proj0 = run_lcu(prog, encode_cloud_bloch(cloud)).post_state;
                break;
            } catch (const PostSelectionImpossible &) {
                if (attempt > 16) {
                    throw;
                }
            }
        }
        const Statevector psi0 = encode_cloud_bloch(cloud);
        for (int a = 0; a < n_angles; ++a) {
            const double theta = std::numbers::pi * a / (n_angles - 1);
            const Statevector psi = encode_cloud_bloch(rotate_cloud(cloud, axis, theta));
            const Statevector proj = run_lcu(prog, psi).post_state;
            rows.push_back({c, theta, std::abs(inner_product(proj0, proj)), std::abs(inner_product(psi0, psi))});
        }
    }
    return rows;
}

} // namespace lcuqml
