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

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "qromlab/common.hpp"

namespace qromlab::extract {

/// Cap on (number of products) * dim for the enumerations below.
inline constexpr std::uint64_t kBoundEnumerationCap = std::uint64_t{1} << 26;

struct BoundCheck {
    double V = 0.0;
    double F = 0.0;
    double bound = 0.0;
    bool holds = false;
};

void to_json(nlohmann::json &j, const BoundCheck &b);

/**
 * V = (1/n) sum_i ||P_i psi||^2 and
 * F = (1/n^t) sum_{i_1..i_t} ||P_{i_t} ... P_{i_1} psi||^2, compared with
 * V^{2t-1}. Every P_i must be a projector within 1e-9.
 */
BoundCheck projection_bound_check(const std::vector<Eigen::MatrixXcd> &p,
                                  const Eigen::VectorXcd &psi, unsigned t);

/**
 * Two-index family P_{ij}, i < n, j < m:
 *   V = (1/nm) sum ||P_ij psi||^2,
 *   F = (1/n^2 m^3) sum ||P_{i2 j3} P_{i2 j2} P_{i1 j1} psi||^2,
 * compared with V^6.
 */
BoundCheck two_part_bound_check(const std::vector<std::vector<Eigen::MatrixXcd>> &p,
                                const Eigen::VectorXcd &psi);

/// Orthogonal projector onto a Haar-random subspace of uniform rank in [0, dim].
Eigen::MatrixXcd random_projector(index_t dim, Rng &rng);

/// Haar-random unit vector.
Eigen::VectorXcd random_state(index_t dim, Rng &rng);

/// CSV header and row: instance-id,V,F,bound,holds.
void write_bound_csv_header(std::ostream &os);
void write_bound_csv_row(std::ostream &os, std::uint64_t id, const BoundCheck &b);

} // namespace qromlab::extract
