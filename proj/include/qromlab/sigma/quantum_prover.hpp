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

#include "qromlab/qsim/state_vector.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::sigma {

using qsim::StateVector;

/// Output of a prover's first stage.
struct ProverStart {
    std::uint64_t x = 0;
    std::uint64_t a = 0;
    StateVector state;
    /// Prover-specific classical data (randomness, sampled indices).
    std::vector<std::uint64_t> aux;
};

/**
 * A prover given as a first stage producing (x, a, |state>) and, for each
 * challenge c, a unitary U_c on the state. The response is read by measuring
 * register Z in the computational basis.
 */
class QuantumProver {
  public:
    virtual ~QuantumProver() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual ProverStart start(Rng &rng) const = 0;
    /// U_c.
    [[nodiscard]] virtual StateVector respond(const ProverStart &s,
                                              StateVector state,
                                              std::uint64_t c) const = 0;
    /// U_c^dagger.
    [[nodiscard]] virtual StateVector unrespond(const ProverStart &s,
                                                StateVector state,
                                                std::uint64_t c) const = 0;
    /// Response encoded by a Z basis state.
    [[nodiscard]] virtual std::uint64_t response_of(const ProverStart &,
                                                    index_t z_digit) const {
        return z_digit;
    }
};

/// Prover whose U_c is given as a gate sequence.
class UnitaryProver : public QuantumProver {
  public:
    [[nodiscard]] virtual qsim::Unitary unitary(const ProverStart &s,
                                                std::uint64_t c) const = 0;

    [[nodiscard]] StateVector respond(const ProverStart &s, StateVector state,
                                      std::uint64_t c) const override {
        return qsim::apply_unitary(std::move(state), unitary(s, c));
    }
    [[nodiscard]] StateVector unrespond(const ProverStart &s, StateVector state,
                                        std::uint64_t c) const override {
        return qsim::apply_unitary(std::move(state), unitary(s, c).adjoint());
    }
};

/// Mask over Z basis states whose response V accepts for (x, a, c).
std::vector<std::uint8_t> accept_mask(const SigmaProtocol &sigma,
                                      const QuantumProver &prover,
                                      const ProverStart &s, std::uint64_t c);

/// Single interaction: start, uniform c, U_c, measure Z, verify.
Transcript run_quantum_prover(const SigmaProtocol &sigma,
                              const QuantumProver &prover, Rng &rng);

/// Exact acceptance probability given a start, averaged over c.
double acceptance_given_start(const SigmaProtocol &sigma,
                              const QuantumProver &prover, const ProverStart &s);

} // namespace qromlab::sigma
