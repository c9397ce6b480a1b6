// Copyright 2026 The qromlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qromlab/adversary/library.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qromlab::adversary {

using qsim::Gate;
using qsim::Register;
using qsim::RegisterLayout;

namespace {

index_t range_dim(unsigned n) {
    if (n == 0 || n > 20) {
        throw std::invalid_argument("adversary: n must be in [1, 20]");
    }
    return index_t{1} << n;
}

} // namespace

Gate swap_gate(const RegisterLayout &layout, Register a, Register b) {
    const index_t d = layout.dim(a);
    if (layout.dim(b) != d) {
        throw DimensionError("swap_gate: registers differ in dimension");
    }
    std::vector<index_t> perm(d * d);
    for (index_t u = 0; u < d; ++u) {
        for (index_t v = 0; v < d; ++v) {
            perm[u * d + v] = v * d + u;
        }
    }
    return Gate::permutation(layout, {a, b}, std::move(perm),
                             "swap" + to_string(a) + to_string(b));
}

OracleAlgorithm classical_query_adversary(index_t dim_x, unsigned n,
                                          index_t x0) {
    const index_t dy = range_dim(n);
    const RegisterLayout layout(dim_x, dy, dy, 1);
    auto init = StateVector::basis(layout, x0, 0, 0, 0);
    Unitary a1{{swap_gate(layout, Register::Y, Register::Z)}};
    return OracleAlgorithm("classical-query", std::move(init), {std::move(a1)});
}

OracleAlgorithm superposed_query_adversary(const std::vector<double> &weights,
                                           unsigned n) {
    CompensatedSum total;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("superposed_query_adversary: negative weight");
        }
        total.add(w);
    }
    if (weights.empty() || std::abs(total.value() - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "superposed_query_adversary: weights must sum to 1");
    }
    const index_t dy = range_dim(n);
    const RegisterLayout layout(weights.size(), dy, dy, 1);
    qsim::Amplitudes amps(layout.total(), amp_t{0.0});
    for (index_t x = 0; x < weights.size(); ++x) {
        amps[layout.index(x, 0, 0, 0)] = std::sqrt(weights[x]);
    }
    auto init = StateVector::from_amplitudes(layout, std::move(amps));
    Unitary a1{{swap_gate(layout, Register::Y, Register::Z)}};
    return OracleAlgorithm("superposed-query", std::move(init), {std::move(a1)});
}

OracleAlgorithm guessing_adversary(index_t dim_x, unsigned n, index_t x0,
                                   index_t z_star) {
    const index_t dy = range_dim(n);
    const RegisterLayout layout(dim_x, dy, dy, 1);
    return OracleAlgorithm("guessing",
                           StateVector::basis(layout, x0, 0, z_star, 0), {});
}

OracleAlgorithm two_query_chain_adversary(index_t dim_x, unsigned n,
                                          index_t x0) {
    const index_t dy = range_dim(n);
    const RegisterLayout layout(dim_x, dy, dy, dy);

    // (y, e) -> (e, y xor e): parks the first answer in E and clears Y.
    std::vector<index_t> park(dy * dy);
    for (index_t y = 0; y < dy; ++y) {
        for (index_t e = 0; e < dy; ++e) {
            park[y * dy + e] = e * dy + (y ^ e);
        }
    }
    // (x, e) -> ((x + e) mod dim_x, e).
    std::vector<index_t> hop(dim_x * dy);
    for (index_t x = 0; x < dim_x; ++x) {
        for (index_t e = 0; e < dy; ++e) {
            hop[x * dy + e] = ((x + e) % dim_x) * dy + e;
        }
    }
    Unitary a1{{Gate::permutation(layout, {Register::Y, Register::E},
                                  std::move(park), "park"),
                Gate::permutation(layout, {Register::X, Register::E},
                                  std::move(hop), "hop")}};
    Unitary a2{{swap_gate(layout, Register::Y, Register::Z)}};
    return OracleAlgorithm("two-query-chain",
                           StateVector::basis(layout, x0, 0, 0, 0),
                           {std::move(a1), std::move(a2)});
}

OracleAlgorithm random_unitary_adversary(std::uint64_t seed, index_t q,
                                         index_t dim_x, unsigned n,
                                         index_t dim_z) {
    if (q == 0) {
        throw std::invalid_argument("random_unitary_adversary: q must be >= 1");
    }
    const index_t dy = range_dim(n);
    const RegisterLayout layout(dim_x, dy, dim_z, dy,
                                qsim::dimension_cap_from_env());
    Rng rng(derive_seed(seed, kOracleStream, 0));
    std::vector<Unitary> steps;
    const std::vector<Register> xyz{Register::X, Register::Y, Register::Z};
    for (index_t k = 1; k <= q; ++k) {
        Unitary u;
        u.gates.push_back(Gate::dense(layout, xyz,
                                      qsim::haar_unitary(layout.joint_dim(xyz), rng),
                                      "haar" + std::to_string(k)));
        if (k == q) {
            u.gates.push_back(swap_gate(layout, Register::Y, Register::E));
        }
        steps.push_back(std::move(u));
    }
    // Random start on X (x) Z with Y = E = |0>, so the first query is
    // already in superposition.
    std::normal_distribution<double> normal(0.0, 1.0);
    qsim::Amplitudes amps(layout.total(), amp_t{0.0});
    for (index_t x = 0; x < dim_x; ++x) {
        for (index_t z = 0; z < dim_z; ++z) {
            const double re = normal(rng);
            amps[layout.index(x, 0, z, 0)] = amp_t(re, normal(rng));
        }
    }
    auto init = StateVector::unnormalized(layout, std::move(amps)).normalized();
    return OracleAlgorithm("random-unitary-" + std::to_string(seed),
                           std::move(init), std::move(steps));
}

} // namespace qromlab::adversary
