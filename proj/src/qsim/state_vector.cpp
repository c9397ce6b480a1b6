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

#include "qromlab/qsim/state_vector.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <utility>

namespace qromlab::qsim {

namespace {

constexpr double kZeroBranch = 1e-15;

std::mutex &handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler &handler() {
    static WarningHandler h = [](const std::string &msg) {
        std::cerr << "qromlab warning: " << msg << '\n';
    };
    return h;
}

void warn(const std::string &msg) {
    std::lock_guard<std::mutex> lock(handler_mutex());
    if (handler()) {
        handler()(msg);
    }
}

void check_size(const RegisterLayout &layout, const Amplitudes &amps) {
    if (amps.size() != layout.total()) {
        throw DimensionError("StateVector: " + std::to_string(amps.size()) +
                             " amplitudes for a layout of dimension " +
                             std::to_string(layout.total()));
    }
}

} // namespace

void set_warning_handler(WarningHandler h) {
    std::lock_guard<std::mutex> lock(handler_mutex());
    handler() = std::move(h);
}

StateVector::StateVector(const RegisterLayout &layout, Amplitudes amps)
    : layout_(layout), amps_(std::move(amps)) {}

StateVector StateVector::basis(const RegisterLayout &layout, index_t index) {
    if (index >= layout.total()) {
        throw DimensionError("StateVector::basis: index out of range");
    }
    Amplitudes a(layout.total(), amp_t{0.0});
    a[index] = 1.0;
    return StateVector(layout, std::move(a));
}

StateVector StateVector::basis(const RegisterLayout &layout, index_t x,
                               index_t y, index_t z, index_t e) {
    return basis(layout, layout.index(x, y, z, e));
}

StateVector StateVector::from_amplitudes(const RegisterLayout &layout,
                                         Amplitudes amps) {
    check_size(layout, amps);
    const double n2 = kernels::omp::norm2(amps);
    if (n2 == 0.0) {
        throw std::invalid_argument("StateVector: zero vector");
    }
    if (std::abs(n2 - 1.0) > kRenormalizeWarnThreshold) {
        warn("input amplitudes have squared norm " + std::to_string(n2) +
             "; renormalized");
        const double s = 1.0 / std::sqrt(n2);
        for (auto &a : amps) {
            a *= s;
        }
    }
    return StateVector(layout, std::move(amps));
}

StateVector StateVector::unnormalized(const RegisterLayout &layout,
                                      Amplitudes amps) {
    check_size(layout, amps);
    return StateVector(layout, std::move(amps));
}

double StateVector::norm2() const { return kernels::omp::norm2(amps_); }

StateVector StateVector::normalized() const {
    const double n2 = norm2();
    if (n2 == 0.0) {
        throw std::invalid_argument("StateVector::normalized: zero vector");
    }
    StateVector out = *this;
    const double s = 1.0 / std::sqrt(n2);
    for (auto &a : out.amps_) {
        a *= s;
    }
    return out;
}

StateVector apply_oracle(StateVector state, const oracle::FiniteFunction &h) {
    const auto &layout = state.layout();
    if (h.domain_size() != layout.dim(Register::X) ||
        h.range_size() != layout.dim(Register::Y)) {
        throw DimensionError(
            "apply_oracle: oracle is " + std::to_string(h.domain_size()) +
            " -> 2^" + std::to_string(h.range_bits()) + ", layout has dim_x=" +
            std::to_string(layout.dim(Register::X)) +
            ", dim_y=" + std::to_string(layout.dim(Register::Y)));
    }
    Amplitudes out(state.size());
    kernels::omp::apply_xor_oracle(layout, h.table(), state.amplitudes(), out);
    state.mutable_amplitudes().swap(out);
    return state;
}

StateVector apply_gate(StateVector state, const Gate &g) {
    if (!(g.layout() == state.layout())) {
        throw DimensionError("apply_gate: gate layout differs from state layout");
    }
    g.apply(state.mutable_amplitudes());
    return state;
}

StateVector apply_unitary(StateVector state, const Unitary &u) {
    for (const auto &g : u.gates) {
        state = apply_gate(std::move(state), g);
    }
    return state;
}

StateVector apply_projector(StateVector state, const Projector &p) {
    if (!(p.layout() == state.layout())) {
        throw DimensionError(
            "apply_projector: projector layout differs from state layout");
    }
    p.apply(state.mutable_amplitudes());
    return state;
}

double project_prob(const StateVector &state, const Projector &p) {
    return apply_projector(state, p).norm2();
}

double project_prob_complement(const StateVector &state, const Projector &p) {
    const StateVector proj = apply_projector(state, p);
    Amplitudes diff = state.amplitudes();
    for (index_t i = 0; i < diff.size(); ++i) {
        diff[i] -= proj[i];
    }
    return kernels::omp::norm2(diff);
}

std::vector<double> register_probabilities(const StateVector &state,
                                           Register reg) {
    return kernels::omp::marginal(state.layout(), reg, state.amplitudes());
}

index_t sample_index(const std::vector<double> &weights, Rng &rng) {
    CompensatedSum total;
    for (double w : weights) {
        total.add(w);
    }
    const double u = uniform_unit(rng) * total.value();
    double acc = 0.0;
    index_t last_positive = 0;
    for (index_t k = 0; k < weights.size(); ++k) {
        if (weights[k] > 0.0) {
            last_positive = k;
            acc += weights[k];
            if (u < acc) {
                return k;
            }
        }
    }
    return last_positive;
}

Measurement measure_register(const StateVector &state, Register reg, Rng &rng) {
    const auto probs = register_probabilities(state, reg);
    const index_t k = sample_index(probs, rng);
    return measure_register_forced(state, reg, k);
}

Measurement measure_register_forced(const StateVector &state, Register reg,
                                    index_t outcome) {
    const auto &layout = state.layout();
    if (outcome >= layout.dim(reg)) {
        throw DimensionError("measure_register_forced: outcome out of range");
    }
    StateVector post =
        apply_projector(state, Projector::basis(layout, reg, outcome));
    const double p = post.norm2();
    if (p < kZeroBranch) {
        throw std::domain_error("measure_register_forced: outcome " +
                                std::to_string(outcome) + " on register " +
                                to_string(reg) + " has probability zero");
    }
    return Measurement{outcome, p, post.normalized()};
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("max_abs_diff: size mismatch");
    }
    double m = 0.0;
    for (index_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

amp_t inner(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner: size mismatch");
    }
    amp_t acc = 0.0;
    for (index_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace qromlab::qsim
