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
#include <optional>
#include <string>
#include <vector>

#include "qromlab/sigma/quantum_prover.hpp"

namespace qromlab::extract {

using sigma::InstanceWitness;
using sigma::ProverStart;
using sigma::Schnorr;

/// Instance with w != 0, so that x != 1.
InstanceWitness nonzero_instance(const Schnorr &schnorr, Rng &rng);

/**
 * Quantum Schnorr prover on layout (1, 1, r, 2). The first stage picks y,
 * sends a = g^y and prepares E in sqrt(v)|0> + sqrt(1-v)|1>. U_c optionally
 * rotates E by phi_c = scale * pi * c / |C|, then adds y + c' w + e to Z,
 * where c' is c or a fixed challenge. E = 1 yields an invalid response, so
 * responses stay unique.
 */
class SchnorrQuantumProver final : public sigma::UnitaryProver {
  public:
    struct Params {
        std::string name = "honest";
        double know_weight = 1.0;
        double rotation_scale = 0.0;
        std::optional<std::uint64_t> fixed_challenge;
    };

    SchnorrQuantumProver(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw,
                         Params params);

    [[nodiscard]] std::string name() const override { return params_.name; }
    /// aux = {y}.
    [[nodiscard]] ProverStart start(Rng &rng) const override;
    [[nodiscard]] qsim::Unitary unitary(const ProverStart &s,
                                        std::uint64_t c) const override;

  private:
    std::shared_ptr<const Schnorr> schnorr_;
    InstanceWitness iw_;
    Params params_;
    qsim::RegisterLayout layout_;
};

std::shared_ptr<SchnorrQuantumProver>
honest_quantum_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw);
/// Knows the witness on a branch of weight v.
std::shared_ptr<SchnorrQuantumProver>
partial_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw, double v);
/// Challenge-dependent rotation of the knowledge qubit.
std::shared_ptr<SchnorrQuantumProver>
rotating_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw,
                double scale = 0.5);
/// Always answers c_star.
std::shared_ptr<SchnorrQuantumProver>
fixed_challenge_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw,
                       std::uint64_t c_star);

/**
 * Prover for the two-response protocol on layout (1, 1, 2r, 2). Z holds
 * z' = 2z + s. U_c puts s in |+>, rotates the |-> branch of E by
 * theta_c = 2 pi c / |C|, then adds y + c w + e to z. Every honest round
 * accepts, but measuring s and rewinding lets the next round reject.
 */
class TwoResponseProver final : public sigma::UnitaryProver {
  public:
    TwoResponseProver(std::shared_ptr<const sigma::TwoResponseSchnorr> protocol,
                      InstanceWitness iw);

    [[nodiscard]] std::string name() const override { return "two-response"; }
    [[nodiscard]] ProverStart start(Rng &rng) const override;
    [[nodiscard]] qsim::Unitary unitary(const ProverStart &s,
                                        std::uint64_t c) const override;

  private:
    std::shared_ptr<const sigma::TwoResponseSchnorr> protocol_;
    InstanceWitness iw_;
    qsim::RegisterLayout layout_;
    qsim::Gate hadamard_s_;
    // K_c for every challenge.
    std::vector<qsim::Gate> k_gates_;
};

} // namespace qromlab::extract
