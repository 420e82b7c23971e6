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
#include <filesystem>
#include <fstream>
#include <numbers>

#include "lcuqml/errors.hpp"
#include "lcuqml/groupproj.hpp"

using namespace lcuqml;
using Catch::Matchers::WithinAbs;

namespace {

double max_dev(const CVector &a, const CVector &b) { return (a - b).cwiseAbs().maxCoeff(); }

CVector normalized(const CVector &v) { return v / v.norm(); }

Statevector basis(int n, BasisIndex b) { return prepare_basis_state(n, b); }

} // namespace

TEST_CASE("built-in symmetric groups") {
    const auto s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    CHECK(s3.class_size(0) == 1);
    CHECK(s3.class_size(1) == 3);
    CHECK(s3.class_size(2) == 2);
    CHECK(s3.characters(1, 2).real() == -1.0);

    const auto s4 = symmetric_group(4);
    CHECK(s4.order() == 24);
    CHECK(s4.characters(2, 2).real() == 2.0);
    CHECK(s4.degree(2) == 2.0);
    double sum = 0.0;
    for (std::size_t r = 0; r < s4.num_irreps(); ++r) {
        sum += s4.degree(r) * s4.degree(r);
    }
    CHECK(sum == 24.0);

    const auto s2 = symmetric_group(2);
    CHECK(s2.characters(0, 1).real() == 1.0);
    CHECK(s2.characters(1, 1).real() == -1.0);

    CHECK_THROWS_AS(symmetric_group(5), UnsupportedError);
    for (int n : {2, 3, 4}) {
        CHECK_NOTHROW(validate_group(symmetric_group(n)));
    }
}

TEST_CASE("group validation rejects broken tables") {
    auto g = symmetric_group(3);
    g.characters(1, 1) = 0.5;
    CHECK_THROWS(validate_group(g));
    auto h = symmetric_group(3);
    std::swap(h.table[1][2], h.table[1][3]);
    CHECK_THROWS(validate_group(h));
}

TEST_CASE("group data from JSON") {
    const auto path = std::filesystem::temp_directory_path() / "lcuqml_z2.json";
    {
        std::ofstream f(path);
        f << R"({"name": "Z2", "table": [[0, 1], [1, 0]], "classes": [[0], [1]],
                 "characters": [[1, 1], [1, -1]], "class_labels": ["e", "s"]})";
    }
    const auto g = load_group_json(path);
    CHECK(g.order() == 2);
    CHECK(g.inverses == std::vector<int>{0, 1});
    CHECK(g.class_of == std::vector<int>{0, 1});
    CHECK(g.characters(1, 1).real() == -1.0);
    {
        std::ofstream f(path);
        f << R"({"name": "bad", "table": [[0, 1], [1, 0]], "classes": [[0], [1]], "characters": [[1, 1], [1, 1]]})";
    }
    CHECK_THROWS(load_group_json(path));
    std::filesystem::remove(path);
}

TEST_CASE("swap representations are homomorphisms") {
    for (int n : {2, 3, 4}) {
        const auto g = symmetric_group(n);
        const auto rep = swap_rep(g, 1);
        CHECK_NOTHROW(validate_rep(g, rep));
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) {
                const CMatrix uij = circuit_unitary({rep.ops[j], rep.ops[i]}, n);
                const CMatrix uk = circuit_unitary({rep.ops[static_cast<std::size_t>(g.table[i][j])]}, n);
                CHECK(max_dev(uij.reshaped(), uk.reshaped()) < 1e-10);
            }
        }
    }
    const auto s2 = symmetric_group(2);
    const auto m = irrep_multiplicities(s2, swap_rep(s2, 1));
    CHECK_THAT(m[0], WithinAbs(3.0, 1e-12));
    CHECK_THAT(m[1], WithinAbs(1.0, 1e-12));
}

TEST_CASE("projector examples") {
    const auto s2 = symmetric_group(2);
    const auto r2 = swap_rep(s2, 1);
    const auto p = apply_projector(s2, r2, 0, basis(2, 1));
    CHECK_THAT(p.vector[1].real(), WithinAbs(0.5, 1e-12));
    CHECK_THAT(p.vector[2].real(), WithinAbs(0.5, 1e-12));
    CHECK_THAT(p.weight, WithinAbs(0.5, 1e-12));

    const auto s3 = symmetric_group(3);
    const auto sign = apply_projector(s3, swap_rep(s3, 1), 2, basis(3, 1));
    CHECK(sign.weight < 1e-24);

    const auto s4 = symmetric_group(4);
    const auto sb = schur_basis_s4();
    const auto q = apply_projector(s4, swap_rep(s4, 1), 2, basis(4, 3));
    CHECK_THAT(q.weight, WithinAbs(1.0 / 3.0, 1e-12));
    CHECK(max_dev(q.vector, sb.d1 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("projector algebra and commutation") {
    for (int n : {2, 3, 4}) {
        const auto g = symmetric_group(n);
        const auto rep = swap_rep(g, 1);
        const Eigen::Index dim = Eigen::Index{1} << n;
        CMatrix sum = CMatrix::Zero(dim, dim);
        std::vector<CMatrix> ps;
        for (std::size_t r = 0; r < g.num_irreps(); ++r) {
            ps.push_back(projector_matrix(g, rep, r));
            sum += ps.back();
        }
        CHECK(sum.isIdentity(1e-10));
        for (std::size_t r = 0; r < ps.size(); ++r) {
            CHECK((ps[r] * ps[r] - ps[r]).cwiseAbs().maxCoeff() < 1e-10);
            for (std::size_t s = 0; s < ps.size(); ++s) {
                if (s != r) {
                    CHECK((ps[r] * ps[s]).cwiseAbs().maxCoeff() < 1e-10);
                }
            }
            for (const auto &op : rep.ops) {
                const CMatrix u = circuit_unitary({op}, n);
                CHECK((ps[r] * u - u * ps[r]).cwiseAbs().maxCoeff() < 1e-10);
            }
        }
    }
}

TEST_CASE("character unitaries") {
    for (int n : {2, 3, 4}) {
        const auto g = symmetric_group(n);
        const CMatrix chi = character_unitary(g);
        CHECK((chi.adjoint() * chi).isIdentity(1e-12));
        const CMatrix chit = class_character_unitary(g);
        CHECK((chit.adjoint() * chit).isIdentity(1e-12));
        for (std::size_t r = 0; r < g.num_irreps(); ++r) {
            for (std::size_t i = 0; i < g.order(); ++i) {
                CHECK(std::abs(chi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r)) -
                               std::conj(g.character(r, i)) / std::sqrt(static_cast<double>(g.order()))) < 1e-14);
            }
        }
    }
    // S3 class matrix as printed with the 1/sqrt(6) prefactor on the 3x3 block and a unit corner
    const CMatrix chit = class_character_unitary(symmetric_group(3));
    const double s6 = std::sqrt(6.0);
    const double r3 = std::sqrt(3.0);
    const double r2 = std::sqrt(2.0);
    Eigen::Matrix4d expect;
    expect << 1 / s6, 2 / s6, 1 / s6, 0, r3 / s6, 0, -r3 / s6, 0, r2 / s6, -r2 / s6, r2 / s6, 0, 0, 0, 0, 1;
    CHECK(max_dev(chit.reshaped(), expect.cast<cplx>().reshaped()) < 1e-12);
}

TEST_CASE("Gram-Schmidt completion") {
    CMatrix cols(4, 1);
    cols << 0.5, 0.5, 0.5, 0.5;
    const CMatrix u = gram_schmidt_complete(cols, 4);
    CHECK((u.adjoint() * u).isIdentity(1e-12));
    CHECK(max_dev(u.col(0), cols.col(0)) < 1e-15);
    CMatrix bad(2, 2);
    bad << 1, 1, 0, 0;
    CHECK_THROWS_AS(gram_schmidt_complete(bad, 2), ConstructionError);
}

TEST_CASE("projection program examples") {
    const auto s2 = symmetric_group(2);
    const auto rep2 = swap_rep(s2, 1);
    const auto out = run_lcu(build_projection_program(s2, rep2, {{1.0, 0.0}}), basis(2, 1));
    CHECK_THAT(out.post_state[1].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(out.post_state[2].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(out.pi_success, WithinAbs(0.5, 1e-12));

    const auto s3 = symmetric_group(3);
    const auto rep3 = swap_rep(s3, 1);
    const auto psi = haar_random_state(3, 17);
    const auto ident = run_lcu(build_projection_program(s3, rep3, {{1.0, 1.0, 1.0}}), psi);
    CHECK(max_dev(ident.post_state.amplitudes(), psi.amplitudes()) < 1e-10);
}

TEST_CASE("projection programs match direct summation") {
    for (int n : {2, 3, 4}) {
        const auto g = symmetric_group(n);
        const auto rep = swap_rep(g, 1);
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto psi = haar_random_state(n, derive_seed(static_cast<std::uint64_t>(n), s));
            const CVector ar = haar_random_state(2, derive_seed(100 + static_cast<std::uint64_t>(n), s)).amplitudes();
            ProjectionWeights w;
            for (std::size_t r = 0; r < g.num_irreps(); ++r) {
                w.a.push_back(ar[static_cast<Eigen::Index>(r)]);
            }
            const CVector direct = direct_weighted_projection(g, rep, w, psi);
            const auto out = run_lcu(build_projection_program(g, rep, w), psi);
            CHECK(max_dev(out.post_state.amplitudes(), normalized(direct)) < 1e-10);

            std::vector<double> weights;
            std::vector<double> degrees;
            for (std::size_t r = 0; r < g.num_irreps(); ++r) {
                weights.push_back(apply_projector(g, rep, r, psi).weight);
                degrees.push_back(g.degree(r));
            }
            const auto prob = projection_success_probability(w, weights, degrees);
            CHECK_THAT(out.pi_success, WithinAbs(prob.simulated, 1e-10));
        }
    }
}

TEST_CASE("conjugacy class program") {
    const auto s4 = symmetric_group(4);
    const auto layout = class_register_layout(s4);
    CHECK(layout.class_qubits == 3);
    CHECK(layout.total_qubits() == 14);

    for (int n : {3, 4}) {
        const auto g = symmetric_group(n);
        const auto rep = swap_rep(g, 1);
        for (std::uint64_t s = 0; s < 3; ++s) {
            const auto psi = haar_random_state(n, derive_seed(70, s));
            ProjectionWeights w;
            for (std::size_t r = 0; r < g.num_irreps(); ++r) {
                w.a.push_back(cplx(1.0 + static_cast<double>(r), 0.5 * static_cast<double>(s)));
            }
            const auto a = run_lcu(build_projection_program(g, rep, w), psi);
            const auto b = run_lcu(conjugacy_class_program(g, rep, w), psi);
            CHECK(max_dev(a.post_state.amplitudes(), b.post_state.amplitudes()) < 1e-10);
            CHECK_THAT(a.pi_success, WithinAbs(b.pi_success, 1e-10));
        }
    }
    const auto s3 = symmetric_group(3);
    const auto out = run_lcu(conjugacy_class_program(s3, swap_rep(s3, 1), {{1.0, 0.0, 0.0}}), basis(3, 1));
    const double third = 1.0 / std::sqrt(3.0);
    for (BasisIndex i : {1, 2, 4}) {
        CHECK_THAT(out.post_state[i].real(), WithinAbs(third, 1e-10));
    }
}

TEST_CASE("success probability closed forms") {
    const auto one = projection_success_probability({{1.0}}, {1.0}, {1.0});
    CHECK_THAT(one.simulated, WithinAbs(1.0, 1e-15));
    const auto half = projection_success_probability({{1.0, 0.0}}, {0.5, 0.5}, {1.0, 1.0});
    CHECK_THAT(half.simulated, WithinAbs(0.5, 1e-15));

    const auto s4 = symmetric_group(4);
    const auto rep = swap_rep(s4, 1);
    ProjectionWeights w{{0.0, 0.0, 1.0, 0.0, 0.0}};
    const auto out = run_lcu(build_projection_program(s4, rep, w), basis(4, 3));
    std::vector<double> weights;
    std::vector<double> degrees;
    for (std::size_t r = 0; r < 5; ++r) {
        weights.push_back(apply_projector(s4, rep, r, basis(4, 3)).weight);
        degrees.push_back(s4.degree(r));
    }
    const auto p = projection_success_probability(w, weights, degrees);
    CHECK_THAT(p.simulated, WithinAbs(out.pi_success, 1e-12));
    CHECK_THAT(p.simulated, WithinAbs(1.0 / 12.0, 1e-12));
    CHECK_THAT(p.single_projection_claim, WithinAbs(1.0 / 3.0, 1e-12));
}

TEST_CASE("permutation symmetrization") {
    const auto a = permutation_symmetrize(basis(2, 1), 2);
    CHECK_THAT(a.pi, WithinAbs(0.5, 1e-12));
    CHECK_THAT(a.state[1].real(), WithinAbs(M_SQRT1_2, 1e-12));
    const auto z = permutation_symmetrize(basis(3, 0), 3);
    CHECK_THAT(z.pi, WithinAbs(1.0, 1e-12));

    std::vector<CVector> qs;
    for (std::uint64_t i = 0; i < 3; ++i) {
        qs.push_back(haar_random_state(1, derive_seed(5, i)).amplitudes());
    }
    const auto prod = [](const CVector &x, const CVector &y, const CVector &w) {
        return CVector(kron(kron(x, y), w));
    };
    const CVector psi = prod(qs[0], qs[1], qs[2]);
    CVector sum = CVector::Zero(8);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto &p : perms) {
        sum += prod(qs[static_cast<std::size_t>(p[0])], qs[static_cast<std::size_t>(p[1])],
                    qs[static_cast<std::size_t>(p[2])]);
    }
    const auto sym = permutation_symmetrize(Statevector::from_amplitudes(psi), 3);
    CHECK(max_dev(sym.state.amplitudes(), normalized(sum)) < 1e-10);

    CVector anti = CVector::Zero(4);
    anti[1] = M_SQRT1_2;
    anti[2] = -M_SQRT1_2;
    CHECK_THROWS_AS(permutation_symmetrize(Statevector::from_amplitudes(anti), 2), PostSelectionImpossible);
}

TEST_CASE("symmetric subspace amplification") {
    const auto s2 = symmetric_group(2);
    const auto rep = swap_rep(s2, 1);
    const auto psi = haar_random_state(2, 3);
    const auto zero = amplify_symmetric_subspace(psi, 0.0, s2, rep);
    CHECK(max_dev(zero.state.amplitudes(), psi.amplitudes()) < 1e-10);
    const auto full = amplify_symmetric_subspace(basis(2, 1), 1.0, s2, rep);
    CHECK_THAT(full.state[1].real(), WithinAbs(M_SQRT1_2, 1e-12));
    CHECK_THAT(full.state[2].real(), WithinAbs(M_SQRT1_2, 1e-12));

    // 1 * sym + 0.5 * antisym of |01> = 0.75|01> + 0.25|10>
    const auto half = amplify_symmetric_subspace(basis(2, 1), 0.5, s2, rep);
    CVector expect = CVector::Zero(4);
    expect[1] = 0.75;
    expect[2] = 0.25;
    CHECK(max_dev(half.state.amplitudes(), normalized(expect)) < 1e-12);

    const auto s3 = symmetric_group(3);
    const auto rep6 = swap_rep(s3, 2);
    for (double alpha : {0.0, 0.3, 0.7, 1.0}) {
        const auto st = haar_random_state(6, 9);
        const auto lcu = amplify_symmetric_subspace(st, alpha, s3, rep6);
        const auto direct = amplify_symmetric_direct(st, alpha, s3, rep6);
        CHECK(max_dev(lcu.state.amplitudes(), direct.state.amplitudes()) < 1e-10);
    }
    CVector anti = CVector::Zero(4);
    anti[1] = M_SQRT1_2;
    anti[2] = -M_SQRT1_2;
    CHECK_THROWS_AS(amplify_symmetric_subspace(Statevector::from_amplitudes(anti), 1.0, s2, rep),
                    PostSelectionImpossible);
    CHECK_THROWS_AS(amplify_weights(s2, 1.5), DomainError);
}

TEST_CASE("Schur basis vectors are rotation invariant") {
    const auto sb = schur_basis_s4();
    CHECK_THAT(sb.d1.norm(), WithinAbs(1.0, 1e-15));
    CHECK_THAT(sb.d2.norm(), WithinAbs(1.0, 1e-15));
    CHECK(std::abs(sb.d1.dot(sb.d2)) < 1e-15);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const CMatrix u = haar_random_unitary(2, derive_seed(33, s));
        const CMatrix u4 = kron(kron(u, u), kron(u, u));
        // invariant up to the global phase det(U)^2
        const cplx phase = u.determinant() * u.determinant();
        CHECK(max_dev(u4 * sb.d1, phase * sb.d1) < 1e-10);
        CHECK(max_dev(u4 * sb.d2, phase * sb.d2) < 1e-10);
    }
    const auto s4 = symmetric_group(4);
    const auto rep = swap_rep(s4, 1);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto psi = haar_random_state(4, derive_seed(34, s));
        const CVector p = apply_projector(s4, rep, 2, psi).vector;
        const CVector in_span = sb.d1 * sb.d1.dot(p) + sb.d2 * sb.d2.dot(p);
        CHECK(max_dev(p, in_span) < 1e-10);
    }
}

TEST_CASE("rotational invariance experiment") {
    const auto rows = rotational_invariance_experiment(3, 7, 13);
    REQUIRE(rows.size() == 21);
    for (const auto &row : rows) {
        CHECK_THAT(row.overlap_invariant, WithinAbs(1.0, 1e-8));
        if (row.theta == 0.0) {
            CHECK_THAT(row.overlap_raw, WithinAbs(1.0, 1e-12));
        }
    }
    const auto again = rotational_invariance_experiment(3, 7, 13);
    CHECK(again.back().overlap_raw == rows.back().overlap_raw);
    CHECK(rows.back().theta == std::numbers::pi);
}
