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

#include "qromlab/common.hpp"
#include "qromlab/oracle/oracle.hpp"
#include "qromlab/qsim/gate.hpp"
#include "qromlab/qsim/kernels.hpp"
#include "qromlab/qsim/layout.hpp"
#include "qromlab/qsim/projector.hpp"

namespace qromlab::qsim {

/// Inputs with |norm^2 - 1| above this are renormalized with a warning.
inline constexpr double kRenormalizeWarnThreshold = 1e-10;

/// Receives warnings from StateVector construction. Defaults to stderr.
using WarningHandler = std::function<void(const std::string &)>;
void set_warning_handler(WarningHandler handler);

/**
 * Dense pure state over the four-register layout. Normalized unless it was
 * produced by a projection, in which case norm2() is the branch weight.
 */
class StateVector {
  public:
    static StateVector basis(const RegisterLayout &layout, index_t index);
    static StateVector basis(const RegisterLayout &layout, index_t x, index_t y,
                             index_t z, index_t e);

    /// Renormalizes (and warns) when the squared norm is off by more than
    /// kRenormalizeWarnThreshold. The zero vector is rejected.
    static StateVector from_amplitudes(const RegisterLayout &layout,
                                       Amplitudes amps);

    /// No normalization; for projected or intermediate vectors.
    static StateVector unnormalized(const RegisterLayout &layout, Amplitudes amps);

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const Amplitudes &amplitudes() const { return amps_; }
    [[nodiscard]] amp_t operator[](index_t i) const { return amps_[i]; }
    [[nodiscard]] index_t size() const { return amps_.size(); }
    [[nodiscard]] double norm2() const;

    /// Returns a copy scaled to unit norm. Throws on a zero vector.
    [[nodiscard]] StateVector normalized() const;

    Amplitudes &mutable_amplitudes() { return amps_; }

  private:
    StateVector(const RegisterLayout &layout, Amplitudes amps);

    RegisterLayout layout_;
    Amplitudes amps_;
};

/// O^H : |x>|y>|z>|e> -> |x>|y xor H(x)>|z>|e>.
StateVector apply_oracle(StateVector state, const oracle::FiniteFunction &h);

StateVector apply_gate(StateVector state, const Gate &g);
StateVector apply_unitary(StateVector state, const Unitary &u);

/// P|psi>, not renormalized.
StateVector apply_projector(StateVector state, const Projector &p);

/// ||P|psi>||^2.
double project_prob(const StateVector &state, const Projector &p);

/// ||(1 - P)|psi>||^2.
double project_prob_complement(const StateVector &state, const Projector &p);

/// Born probabilities of a computational-basis measurement of one register.
std::vector<double> register_probabilities(const StateVector &state,
                                           Register reg);

struct Measurement {
    index_t outcome = 0;
    double probability = 0.0;
    StateVector post;
};

/// Computational-basis measurement of one register with renormalized
/// post-measurement state. Deterministic given the rng state.
Measurement measure_register(const StateVector &state, Register reg, Rng &rng);

/// Post-measurement state for a prescribed outcome. Throws when the outcome
/// has probability below 1e-15.
Measurement measure_register_forced(const StateVector &state, Register reg,
                                    index_t outcome);

/// Largest absolute amplitude difference.
double max_abs_diff(const StateVector &a, const StateVector &b);

/// <a|b>.
amp_t inner(const StateVector &a, const StateVector &b);

/// Samples an index from a discrete distribution by inversion. The weights
/// need not sum to exactly 1.
index_t sample_index(const std::vector<double> &weights, Rng &rng);

} // namespace qromlab::qsim
