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

#include <string>
#include <vector>

#include "qromlab/adversary/predicate.hpp"
#include "qromlab/oracle/oracle.hpp"
#include "qromlab/qsim/state_vector.hpp"

namespace qromlab::adversary {

using oracle::FiniteFunction;
using qsim::StateVector;
using qsim::Unitary;

/// Tolerance on the Y register being |0> after a run.
inline constexpr double kYResetTolerance = 1e-9;

/**
 * An oracle algorithm with q queries: |phi_0> followed by O^H, A_1, ...,
 * O^H, A_q. The output x is read from register X of the final state. There
 * are no measurement slots.
 */
class OracleAlgorithm {
  public:
    OracleAlgorithm(std::string name, StateVector initial,
                    std::vector<Unitary> steps);

    [[nodiscard]] const std::string &name() const { return name_; }
    [[nodiscard]] const qsim::RegisterLayout &layout() const {
        return initial_.layout();
    }
    [[nodiscard]] const StateVector &initial() const { return initial_; }
    [[nodiscard]] index_t q() const { return steps_.size(); }
    /// A_k for k in 1..q.
    [[nodiscard]] const Unitary &step(index_t k) const;

  private:
    std::string name_;
    StateVector initial_;
    std::vector<Unitary> steps_;
};

/// |phi_q^H> = A_q O^H ... A_1 O^H |phi_0>.
StateVector run(const OracleAlgorithm &a, const FiniteFunction &h);

/// A_{i->j}^H = A_j O^H ... A_{i+1} O^H applied to state; identity for i = j.
StateVector run_segment(const OracleAlgorithm &a, const FiniteFunction &h,
                        index_t i, index_t j, StateVector state);

/// Inverse of run_segment: (A_{i->j}^H)^dagger applied to state.
StateVector run_segment_inverse(const OracleAlgorithm &a, const FiniteFunction &h,
                                index_t i, index_t j, StateVector state);

/// |phi_i^H>.
StateVector run_prefix(const OracleAlgorithm &a, const FiniteFunction &h,
                       index_t i);

/// Weight of the final state outside Y = |0>.
double y_residual(const StateVector &final_state);

/// Throws std::logic_error when run(a, h) leaves Y away from |0>.
void check_y_reset(const OracleAlgorithm &a, const FiniteFunction &h);

/// ||G_{x0}^{H(x0)} |phi_q^H>||^2.
double success_prob(const OracleAlgorithm &a, const FiniteFunction &h,
                    const QuantumPredicate &v, index_t x0);

} // namespace qromlab::adversary
