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
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::sigma {

/// Classical interactive prover.
class InteractiveProver {
  public:
    virtual ~InteractiveProver() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    /// Instance chosen in the adaptive game.
    [[nodiscard]] virtual std::uint64_t choose_instance(Rng &rng) const = 0;
    [[nodiscard]] virtual Commitment commit(std::uint64_t x, Rng &rng) const = 0;
    [[nodiscard]] virtual std::optional<std::uint64_t>
    respond(std::uint64_t x, const Commitment &com, std::uint64_t c,
            Rng &rng) const = 0;
};

/// Runs the protocol honestly on a fixed (x, w).
class HonestProver final : public InteractiveProver {
  public:
    HonestProver(std::shared_ptr<const SigmaProtocol> sigma, InstanceWitness iw);

    [[nodiscard]] std::string name() const override { return "honest"; }
    [[nodiscard]] std::uint64_t choose_instance(Rng &) const override {
        return iw_.x;
    }
    [[nodiscard]] Commitment commit(std::uint64_t x, Rng &rng) const override;
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, const Commitment &com, std::uint64_t c,
            Rng &rng) const override;

  private:
    std::shared_ptr<const SigmaProtocol> sigma_;
    InstanceWitness iw_;
};

/**
 * Guesses c* and a uniform z up front and sends a = g^z x^{-c*}. Succeeds
 * exactly when the verifier picks c*. The adaptive instance is the
 * non-member of largest order.
 */
class ChallengeGuessingProver final : public InteractiveProver {
  public:
    explicit ChallengeGuessingProver(std::shared_ptr<const Schnorr> schnorr,
                                     std::optional<std::uint64_t> instance = {});

    [[nodiscard]] std::string name() const override { return "challenge-guessing"; }
    [[nodiscard]] std::uint64_t choose_instance(Rng &) const override {
        return instance_;
    }
    [[nodiscard]] Commitment commit(std::uint64_t x, Rng &rng) const override;
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, const Commitment &com, std::uint64_t c,
            Rng &rng) const override;

  private:
    std::shared_ptr<const Schnorr> schnorr_;
    std::uint64_t instance_;
};

enum class SoundnessMode { Static, Adaptive };

struct SoundnessResult {
    SoundnessMode mode = SoundnessMode::Static;
    /// V accepted.
    Proportion accept;
    /// x not in L and V accepted. Equals accept in static mode on x not in L.
    Proportion cheat;
};

void to_json(nlohmann::json &j, const SoundnessResult &r);

/// One interaction with per-stream randomness for trial t.
Transcript interact(const SigmaProtocol &sigma, const InteractiveProver &prover,
                    std::uint64_t x, std::uint64_t seed, std::uint64_t t);

/**
 * Static mode runs on static_x; adaptive mode lets the prover pick x and
 * tests membership by brute force.
 */
SoundnessResult soundness_game(const SigmaProtocol &sigma,
                               const InteractiveProver &prover,
                               SoundnessMode mode, std::uint64_t trials,
                               std::uint64_t seed,
                               std::optional<std::uint64_t> static_x = {});

/**
 * Adaptive game split by first message: for each (x, a) seen, the static
 * game of the prover conditioned on that first message, weighted by how
 * often it occurred.
 */
struct Decomposition {
    Proportion adaptive;
    /// Sum over (x, a) of weight * conditional acceptance, in trial units.
    std::uint64_t recombined_successes = 0;
    std::size_t groups = 0;
};

Decomposition decomposition_check(const SigmaProtocol &sigma,
                                  const InteractiveProver &prover,
                                  std::uint64_t trials, std::uint64_t seed);

/// Ehat >= Vhat^d / p - kappa.
struct PokParams {
    double p = 1.0;
    double d = 1.0;
    double kappa = 0.0;
};

struct PokResult {
    Proportion acceptance;
    Proportion extraction;
    PokParams params;
    double bound = 0.0;
    bool holds = false;
    /// Vhat^d / (Ehat + kappa), the smallest p consistent with the data.
    std::optional<double> p_fit;
};

void to_json(nlohmann::json &j, const PokResult &r);

/**
 * Knowledge-soundness harness. accept_run(t) and extract_run(t) run one
 * independent trial each of the single interaction and of the extractor.
 */
PokResult pok_game(const std::function<bool(std::uint64_t)> &accept_run,
                   const std::function<bool(std::uint64_t)> &extract_run,
                   std::uint64_t trials, PokParams params);

} // namespace qromlab::sigma
