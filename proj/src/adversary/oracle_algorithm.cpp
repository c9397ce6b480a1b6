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

#include "qromlab/adversary/oracle_algorithm.hpp"

namespace qromlab::adversary {

OracleAlgorithm::OracleAlgorithm(std::string name, StateVector initial,
                                 std::vector<Unitary> steps)
    : name_(std::move(name)), initial_(std::move(initial)),
      steps_(std::move(steps)) {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        for (const auto &g : steps_[k].gates) {
            if (!(g.layout() == initial_.layout())) {
                throw DimensionError("OracleAlgorithm " + name_ + ": A_" +
                                     std::to_string(k + 1) +
                                     " has a different layout");
            }
        }
    }
}

const Unitary &OracleAlgorithm::step(index_t k) const {
    if (k == 0 || k > steps_.size()) {
        throw std::out_of_range("OracleAlgorithm::step: k outside 1..q");
    }
    return steps_[k - 1];
}

StateVector run_segment(const OracleAlgorithm &a, const FiniteFunction &h,
                        index_t i, index_t j, StateVector state) {
    if (i > j || j > a.q()) {
        throw std::invalid_argument("run_segment: need 0 <= i <= j <= q, got i=" +
                                    std::to_string(i) + ", j=" +
                                    std::to_string(j) + ", q=" +
                                    std::to_string(a.q()));
    }
    if (!(state.layout() == a.layout())) {
        throw DimensionError("run_segment: state layout differs from algorithm");
    }
    for (index_t k = i + 1; k <= j; ++k) {
        state = qsim::apply_oracle(std::move(state), h);
        state = qsim::apply_unitary(std::move(state), a.step(k));
    }
    return state;
}

StateVector run_segment_inverse(const OracleAlgorithm &a,
                                const FiniteFunction &h, index_t i, index_t j,
                                StateVector state) {
    if (i > j || j > a.q()) {
        throw std::invalid_argument("run_segment_inverse: need 0 <= i <= j <= q");
    }
    if (!(state.layout() == a.layout())) {
        throw DimensionError(
            "run_segment_inverse: state layout differs from algorithm");
    }
    for (index_t k = j; k > i; --k) {
        state = qsim::apply_unitary(std::move(state), a.step(k).adjoint());
        state = qsim::apply_oracle(std::move(state), h);
    }
    return state;
}

StateVector run(const OracleAlgorithm &a, const FiniteFunction &h) {
    return run_segment(a, h, 0, a.q(), a.initial());
}

StateVector run_prefix(const OracleAlgorithm &a, const FiniteFunction &h,
                       index_t i) {
    return run_segment(a, h, 0, i, a.initial());
}

double y_residual(const StateVector &final_state) {
    const auto probs =
        qsim::register_probabilities(final_state, qsim::Register::Y);
    CompensatedSum s;
    for (std::size_t y = 1; y < probs.size(); ++y) {
        s.add(probs[y]);
    }
    return s.value();
}

void check_y_reset(const OracleAlgorithm &a, const FiniteFunction &h) {
    const double r = y_residual(run(a, h));
    if (r > kYResetTolerance) {
        throw std::logic_error("adversary " + a.name() +
                               " leaves weight " + std::to_string(r) +
                               " outside Y = |0>");
    }
}

double success_prob(const OracleAlgorithm &a, const FiniteFunction &h,
                    const QuantumPredicate &v, index_t x0) {
    if (x0 >= a.layout().dim(qsim::Register::X)) {
        throw std::invalid_argument("success_prob: x0 outside X");
    }
    return qsim::project_prob(run(a, h), goal_projector(v, x0, h(x0), a.layout()));
}

} // namespace qromlab::adversary
