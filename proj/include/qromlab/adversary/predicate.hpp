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

#include <functional>
#include <string>
#include <vector>

#include "qromlab/qsim/projector.hpp"

namespace qromlab::adversary {

using qsim::Factor;
using qsim::Projector;
using qsim::Register;
using qsim::RegisterLayout;

/**
 * Quantum predicate: a projector Pi_{x,theta} on Z for each (x, theta).
 * Classical predicates V(x, theta, z) become diagonal masks.
 */
class QuantumPredicate {
  public:
    using ClassicalRule = std::function<bool(index_t x, index_t theta, index_t z)>;
    /// Returns a dim_z x dim_z projector; may throw to mark an undefined cell.
    using QuantumRule = std::function<qsim::DenseFactor(index_t x, index_t theta)>;

    static QuantumPredicate classical(std::string name, index_t dim_z,
                                      ClassicalRule rule);
    static QuantumPredicate quantum(std::string name, index_t dim_z,
                                    QuantumRule rule);

    [[nodiscard]] const std::string &name() const { return name_; }
    [[nodiscard]] index_t dim_z() const { return dim_z_; }
    [[nodiscard]] bool is_classical() const { return bool(classical_); }

    /// The Z factor Pi_{x,theta}. Throws std::invalid_argument for undefined
    /// cells and for quantum cells that are not projectors.
    [[nodiscard]] Factor cell(index_t x, index_t theta) const;

    /// V(x, theta, z) for classical predicates.
    [[nodiscard]] bool holds(index_t x, index_t theta, index_t z) const;

  private:
    std::string name_;
    index_t dim_z_ = 1;
    ClassicalRule classical_;
    QuantumRule quantum_;
};

QuantumPredicate always_true(index_t dim_z);
/// z = theta.
QuantumPredicate z_equals_theta(index_t dim_z);
/// z != theta.
QuantumPredicate z_differs_from_theta(index_t dim_z);
/// z = theta mod dim_z.
QuantumPredicate z_equals_theta_mod(index_t dim_z);
/// popcount(z xor theta) is even.
QuantumPredicate parity_matches(index_t dim_z);

/// The classical predicates used by the exhaustive sweeps.
std::vector<QuantumPredicate> predicate_test_set(index_t dim_z);

/// 1 (x) 1 (x) Pi_{x,theta} (x) 1.
Projector predicate_projector(const QuantumPredicate &v, index_t x,
                              index_t theta, const RegisterLayout &layout);

/// G_x^theta = |x><x| (x) 1 (x) Pi_{x,theta} (x) 1.
Projector goal_projector(const QuantumPredicate &v, index_t x, index_t theta,
                         const RegisterLayout &layout);

} // namespace qromlab::adversary
