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

#include "json.hpp"
#include "qromlab/signatures/scheme.hpp"

namespace qromlab::signatures {

/// Forger in the no-message game: sees pk and H only.
class NmaForger {
  public:
    virtual ~NmaForger() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// Classical H-queries made per attempt.
    [[nodiscard]] virtual unsigned queries() const { return 0; }
    [[nodiscard]] virtual std::optional<Signature>
    forge(const Scheme &scheme, const oracle::Oracle &h, std::uint64_t pk,
          Rng &rng) const = 0;
};

/// Recovers sk by exhaustive discrete log and signs honestly.
class HonestNmaForger final : public NmaForger {
  public:
    [[nodiscard]] std::string name() const override { return "honest"; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &scheme,
                                                 const oracle::Oracle &h,
                                                 std::uint64_t pk,
                                                 Rng &rng) const override;
};

/**
 * Tries q fresh messages; for each guesses c and z, sets a = g^z pk^{-c}
 * and queries H once. Outputs the first hit, or the last attempt.
 */
class GuessingNmaForger final : public NmaForger {
  public:
    explicit GuessingNmaForger(unsigned q) : q_(q) {}
    [[nodiscard]] std::string name() const override { return "challenge-guessing"; }
    [[nodiscard]] unsigned queries() const override { return q_; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &scheme,
                                                 const oracle::Oracle &h,
                                                 std::uint64_t pk,
                                                 Rng &rng) const override;

  private:
    unsigned q_;
};

/// Random message, a uniform in the subgroup, z uniform.
class JunkNmaForger final : public NmaForger {
  public:
    [[nodiscard]] std::string name() const override { return "junk"; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &scheme,
                                                 const oracle::Oracle &h,
                                                 std::uint64_t pk,
                                                 Rng &rng) const override;
};

/// Uniform message of MessageCodec::kMaxBytes bytes.
Message random_message(Rng &rng);

struct GameResult {
    std::string forger;
    Proportion forgeries;
    /// Valid outputs not counted because they repeat a signing answer.
    std::uint64_t replays = 0;
    unsigned oracle_k = 0;
};

void to_json(nlohmann::json &j, const GameResult &r);

/// Fresh key and a fresh 2(q+1)-wise independent oracle per trial.
GameResult nma_game(const Scheme &scheme, const NmaForger &forger,
                    std::uint64_t trials, std::uint64_t seed);

/// Classical signing oracle recording the list of answers.
class SigningOracle {
  public:
    SigningOracle(const Scheme &scheme, const oracle::Oracle &h, KeyPair sk,
                  std::uint64_t max_queries, Rng &rng);
    /// Throws std::out_of_range past the query budget.
    Signature sign(const Message &m);
    [[nodiscard]] const std::vector<Signature> &answers() const { return answers_; }
    [[nodiscard]] bool seen(const Signature &s) const;

  private:
    const Scheme &scheme_;
    const oracle::Oracle &h_;
    KeyPair sk_;
    std::uint64_t max_queries_;
    Rng &rng_;
    std::vector<Signature> answers_;
};

class CmaForger {
  public:
    virtual ~CmaForger() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::optional<Signature>
    forge(const Scheme &scheme, const oracle::Oracle &h, std::uint64_t pk,
          SigningOracle &sig, Rng &rng) const = 0;
};

/// Asks for a signature and returns it unchanged.
class ReplayForger final : public CmaForger {
  public:
    [[nodiscard]] std::string name() const override { return "replay"; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &, const oracle::Oracle &,
                                                 std::uint64_t, SigningOracle &sig,
                                                 Rng &rng) const override;
};

/// Asks for a signature and returns it with z + 1 mod r.
class RerandomizeForger final : public CmaForger {
  public:
    [[nodiscard]] std::string name() const override { return "rerandomize"; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &scheme,
                                                 const oracle::Oracle &,
                                                 std::uint64_t, SigningOracle &sig,
                                                 Rng &rng) const override;
};

/// Queries the oracle once, then signs a different message with the
/// exhaustively recovered key.
class HonestCmaForger final : public CmaForger {
  public:
    [[nodiscard]] std::string name() const override { return "honest"; }
    [[nodiscard]] std::optional<Signature> forge(const Scheme &scheme,
                                                 const oracle::Oracle &h,
                                                 std::uint64_t pk, SigningOracle &sig,
                                                 Rng &rng) const override;
};

/// Strong unforgeability: a valid output counts only if it is not in Sig-q.
GameResult cma_game(const Scheme &scheme, const CmaForger &forger,
                    std::uint64_t max_sign_queries, std::uint64_t trials,
                    std::uint64_t seed);

struct MutationResult {
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    [[nodiscard]] double rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(trials);
    }
};

/// Signs, flips one uniformly chosen byte of m || a || z by a nonzero mask,
/// and counts how often the mutant still verifies.
MutationResult mutation_check(const Scheme &scheme, std::uint64_t trials,
                              std::uint64_t seed);

/// Round trips of keygen, sign, verify with fresh keys, messages and oracles.
Proportion round_trip_check(const Scheme &scheme, std::uint64_t trials,
                            std::uint64_t seed);

/**
 * Forger -> reduction -> extractor: the honest one-query quantum FS forger on
 * a fixed message is reduced to an interactive prover and the rewinding
 * extractor is run on it.
 */
struct PipelineResult {
    double forgery_rate = 0.0;
    Proportion extraction;
    std::uint64_t validated = 0;
    double target = 0.0;
    bool consistent = false;
};

void to_json(nlohmann::json &j, const PipelineResult &r);

PipelineResult nma_extraction_pipeline(const Scheme &scheme, std::uint64_t trials,
                                       std::uint64_t seed);

} // namespace qromlab::signatures
