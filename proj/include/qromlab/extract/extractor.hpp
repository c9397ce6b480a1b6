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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qromlab/sigma/quantum_prover.hpp"

namespace qromlab::extract {

using sigma::QuantumProver;
using sigma::SigmaProtocol;
using sigma::Transcript;

enum class ExtractorVariant {
    /// Measure Z fully in every round.
    MeasureResponse,
    /// Measure accept/reject first, then Z on accept.
    MeasurePredicate,
};

std::string to_string(ExtractorVariant v);

struct ExtractionAttempt {
    std::uint64_t x = 0;
    std::optional<std::uint64_t> witness;
    /// Empty on success; "reject", "collision", "algebra" or "insufficient".
    std::string failure;
    std::vector<Transcript> transcripts;
};

/**
 * One run of the rewinding extractor: first stage once, then t rounds of
 * fresh challenge, U_c, measurement, U_c^dagger. Stops at the first
 * rejecting round. Randomness for trial `trial` comes from three separate
 * streams (first stage, challenges, measurements).
 */
ExtractionAttempt extract(const SigmaProtocol &sigma, const QuantumProver &prover,
                          unsigned t, std::uint64_t seed, std::uint64_t trial,
                          ExtractorVariant variant = ExtractorVariant::MeasureResponse);

ExtractionAttempt extract_predicate_variant(const SigmaProtocol &sigma,
                                            const QuantumProver &prover, unsigned t,
                                            std::uint64_t seed, std::uint64_t trial);

struct ExtractorStats {
    Proportion success;
    /// Witnesses confirmed by R(x, w).
    std::uint64_t validated = 0;
    std::map<std::string, std::uint64_t> failures;
    /// Challenge tuples on which the protocol extractor failed after all
    /// rounds accepted.
    std::vector<std::vector<std::uint64_t>> failed_challenges;
};

void to_json(nlohmann::json &j, const ExtractorStats &s);

ExtractorStats run_extractor(const SigmaProtocol &sigma, const QuantumProver &prover,
                             unsigned t, std::uint64_t trials, std::uint64_t seed,
                             ExtractorVariant variant = ExtractorVariant::MeasureResponse);

/// Single-interaction acceptance frequency.
Proportion single_run_acceptance(const SigmaProtocol &sigma,
                                 const QuantumProver &prover, std::uint64_t trials,
                                 std::uint64_t seed);

/// Vhat^{2t-1} - t^2/|C|.
double extractor_bound(double v_hat, unsigned t, std::uint64_t challenge_space);

/// 3 sigma for Ehat - Vhat^{2t-1}, combining both standard errors.
double extractor_tolerance(const Proportion &e_hat, const Proportion &v_hat,
                           unsigned t);

} // namespace qromlab::extract
