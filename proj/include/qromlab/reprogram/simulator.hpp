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

#include <memory>

#include "qromlab/adversary/oracle_algorithm.hpp"

namespace qromlab::reprogram {

using adversary::OracleAlgorithm;
using adversary::QuantumPredicate;
using oracle::FiniteFunction;
using qsim::StateVector;

/// State of the simulator between its two stages.
struct SimulatorCheckpoint {
    index_t measured_x = 0;
    index_t i = 0;
    /// Post-measurement |phi_i^H>, renormalized.
    StateVector state;
    FiniteFunction h;
    std::shared_ptr<const OracleAlgorithm> algorithm;
};

/// Picks i uniform in {0..q}, runs A_{0->i}^H and measures X.
SimulatorCheckpoint stage_one(std::shared_ptr<const OracleAlgorithm> a,
                              const FiniteFunction &h, Rng &rng);

/// stage_one with a prescribed i.
SimulatorCheckpoint stage_one_at(std::shared_ptr<const OracleAlgorithm> a,
                                 const FiniteFunction &h, index_t i, Rng &rng);

/// Final state after A_{i->i+b}^H and then A_{i+b->q}^{H*theta x}.
StateVector stage_two_state(const SimulatorCheckpoint &cp, index_t theta,
                            unsigned b);

struct StageTwoResult {
    index_t x = 0;
    /// ||G_x^theta |final>||^2, i.e. A's output equals x and V(x, theta, .)
    /// accepts.
    double success = 0.0;
};

StageTwoResult stage_two(const SimulatorCheckpoint &cp, index_t theta,
                         unsigned b, const QuantumPredicate &v);

} // namespace qromlab::reprogram
