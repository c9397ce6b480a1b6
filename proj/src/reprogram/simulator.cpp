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

#include "qromlab/reprogram/simulator.hpp"

#include <algorithm>

namespace qromlab::reprogram {

SimulatorCheckpoint stage_one_at(std::shared_ptr<const OracleAlgorithm> a,
                                 const FiniteFunction &h, index_t i, Rng &rng) {
    if (!a) {
        throw std::invalid_argument("stage_one: null algorithm");
    }
    if (i > a->q()) {
        throw std::invalid_argument("stage_one: i exceeds q");
    }
    auto m = qsim::measure_register(adversary::run_prefix(*a, h, i),
                                    qsim::Register::X, rng);
    return SimulatorCheckpoint{m.outcome, i, std::move(m.post), h, std::move(a)};
}

SimulatorCheckpoint stage_one(std::shared_ptr<const OracleAlgorithm> a,
                              const FiniteFunction &h, Rng &rng) {
    if (!a) {
        throw std::invalid_argument("stage_one: null algorithm");
    }
    const index_t i = uniform_below(rng, a->q() + 1);
    return stage_one_at(std::move(a), h, i, rng);
}

StateVector stage_two_state(const SimulatorCheckpoint &cp, index_t theta,
                            unsigned b) {
    if (b > 1) {
        throw std::invalid_argument("stage_two: b must be 0 or 1");
    }
    if (theta >= cp.h.range_size()) {
        throw std::invalid_argument("stage_two: theta outside Y");
    }
    const auto &a = *cp.algorithm;
    const index_t j = std::min<index_t>(cp.i + b, a.q());
    StateVector s = adversary::run_segment(a, cp.h, cp.i, j, cp.state);
    return adversary::run_segment(
        a, oracle::reprogram(cp.h, cp.measured_x, theta), j, a.q(), std::move(s));
}

StageTwoResult stage_two(const SimulatorCheckpoint &cp, index_t theta,
                         unsigned b, const QuantumPredicate &v) {
    const StateVector fin = stage_two_state(cp, theta, b);
    const double p = qsim::project_prob(
        fin, adversary::goal_projector(v, cp.measured_x, theta, fin.layout()));
    return StageTwoResult{cp.measured_x, p};
}

} // namespace qromlab::reprogram
