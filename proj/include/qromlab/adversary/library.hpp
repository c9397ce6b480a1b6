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

#pragma once

#include <vector>

#include "qromlab/adversary/oracle_algorithm.hpp"

namespace qromlab::adversary {

/// q = 1. Queries x0, moves the answer into Z, leaves Y = |0>, outputs x0.
/// Layout (dim_x, 2^n, 2^n, 1).
OracleAlgorithm classical_query_adversary(index_t dim_x, unsigned n, index_t x0);

/// As classical_query_adversary, querying sum_x sqrt(w_x)|x>. The weights
/// must sum to 1 within 1e-9.
OracleAlgorithm superposed_query_adversary(const std::vector<double> &weights,
                                           unsigned n);

/// q = 0. Outputs (x0, z_star) without querying.
OracleAlgorithm guessing_adversary(index_t dim_x, unsigned n, index_t x0,
                                   index_t z_star);

/**
 * q = 2. Queries x0, then x1 = (x0 + H(x0)) mod dim_x, and outputs x1 with
 * Z = H(x1). The first answer is kept in E. Layout (dim_x, 2^n, 2^n, 2^n).
 */
OracleAlgorithm two_query_chain_adversary(index_t dim_x, unsigned n, index_t x0);

/**
 * Each A_k is a Haar-random unitary on X (x) Y (x) Z; A_q also swaps Y with
 * the fresh register E so that Y ends in |0>. Layout (dim_x, 2^n, dim_z, 2^n).
 */
OracleAlgorithm random_unitary_adversary(std::uint64_t seed, index_t q,
                                         index_t dim_x = 2, unsigned n = 6,
                                         index_t dim_z = 2);

/// Swap of two registers of equal dimension, as a permutation gate.
qsim::Gate swap_gate(const qsim::RegisterLayout &layout, qsim::Register a,
                     qsim::Register b);

} // namespace qromlab::adversary
