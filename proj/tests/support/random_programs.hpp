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
 * @file random_programs.hpp
 * Seeded random LCU programs shared by unit and acceptance tests.
 */
#pragma once

#include <random>

#include "lcuqml/lcu.hpp"
#include "lcuqml/qsim.hpp"

namespace lcuqml::testing {

struct RandomProgramCase {
    LcuProgram program;
    Statevector target;
};

/// k in [1, 3] ancillas, n in [1, 4] targets, Haar prep/unprep columns, mixed dense and permutation selects.
inline RandomProgramCase random_program(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    RandomProgramCase c;
    c.program.ancilla_qubits = k;
    c.program.prep_amplitudes = haar_random_state(k, derive_seed(seed, 1)).amplitudes();
    if (rng() % 2 == 0) {
        c.program.unprepare_amplitudes = haar_random_state(k, derive_seed(seed, 2)).amplitudes();
    }
    c.program.success_index = rng() % (BasisIndex{1} << k);
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        all[static_cast<std::size_t>(q)] = q;
    }
    const BasisIndex dim = BasisIndex{1} << k;
    for (BasisIndex j = 0; j < dim; ++j) {
        switch (rng() % 4) {
        case 0:
            break; // identity
        case 1:
            c.program.selects[j] = {GateAction::dense(all, haar_random_unitary(1 << n, derive_seed(seed, 10 + j)))};
            break;
        case 2: {
            std::vector<BasisIndex> perm(BasisIndex{1} << n);
            for (BasisIndex i = 0; i < perm.size(); ++i) {
                perm[i] = i;
            }
            std::shuffle(perm.begin(), perm.end(), rng);
            c.program.selects[j] = {GateAction::permutation(all, perm)};
            break;
        }
        default: {
            Circuit circ;
            for (int g = 0; g < 3; ++g) {
                const int q = static_cast<int>(rng() % static_cast<unsigned>(n));
                circ.push_back(GateAction::dense({q}, haar_random_unitary(2, derive_seed(seed, 100 + 3 * j + static_cast<BasisIndex>(g)))));
            }
            c.program.selects[j] = std::move(circ);
        }
        }
    }
    c.target = haar_random_state(n, derive_seed(seed, 3));
    return c;
}

} // namespace lcuqml::testing
