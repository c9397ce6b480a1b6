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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qromlab/common.hpp"

namespace qromlab::sigma {

struct InstanceWitness {
    std::uint64_t x = 0;
    std::uint64_t w = 0;
};

/// First prover message and the randomness needed to answer.
struct Commitment {
    std::uint64_t a = 0;
    std::uint64_t state = 0;
};

struct Transcript {
    std::uint64_t x = 0;
    std::uint64_t a = 0;
    std::uint64_t c = 0;
    /// Empty when the prover aborted.
    std::optional<std::uint64_t> z;
    bool accept = false;
};

void to_json(nlohmann::json &j, const Transcript &t);
Transcript transcript_from_json(const nlohmann::json &j);

struct Extraction {
    std::optional<std::uint64_t> witness;
    /// Empty on success; otherwise "collision", "reject", "algebra" or
    /// "insufficient".
    std::string failure;
};

/**
 * Three-round public-coin protocol for a relation R with instance generator
 * G. Challenges are integers in [0, |C|).
 */
class SigmaProtocol {
  public:
    virtual ~SigmaProtocol() = default;

    [[nodiscard]] virtual std::string name() const = 0;

    /// (x, w) <- G. Always in R.
    [[nodiscard]] virtual InstanceWitness generate(Rng &rng) const = 0;
    [[nodiscard]] virtual bool relation(std::uint64_t x, std::uint64_t w) const = 0;
    /// Brute-force membership in L = {x : exists w, (x, w) in R}.
    [[nodiscard]] virtual bool in_language(std::uint64_t x) const = 0;

    [[nodiscard]] virtual std::uint64_t challenge_space_size() const = 0;
    /// Responses are integers in [0, response_space_size()).
    [[nodiscard]] virtual std::uint64_t response_space_size() const = 0;
    /// Instances and commitments fit in this many bits.
    [[nodiscard]] virtual unsigned instance_bits() const = 0;
    [[nodiscard]] virtual unsigned commitment_bits() const = 0;

    [[nodiscard]] virtual Commitment commit(std::uint64_t x, std::uint64_t w,
                                            Rng &rng) const = 0;
    /// z, or empty for an abort.
    [[nodiscard]] virtual std::optional<std::uint64_t>
    respond(std::uint64_t x, std::uint64_t w, const Commitment &com,
            std::uint64_t c, Rng &rng) const = 0;
    [[nodiscard]] virtual bool verify(std::uint64_t x, std::uint64_t a,
                                      std::uint64_t c, std::uint64_t z) const = 0;

    /// Number of accepting transcripts with a common commitment the
    /// extractor needs.
    [[nodiscard]] virtual unsigned soundness_parameter() const = 0;
    [[nodiscard]] virtual Extraction
    extract(std::uint64_t x, const std::vector<Transcript> &transcripts) const = 0;

    /// Probability that an honest run accepts.
    [[nodiscard]] virtual double correctness() const { return 1.0; }
};

/**
 * Schnorr identification in the order-r subgroup generated by g modulo p.
 * R = {(h, w) : g^w = h, 0 <= w < r}; a = g^y; z = y + c w mod r;
 * accept iff g^z = a x^c. The challenge space is [0, |C|) with |C| <= r.
 * Verification does not check that a or x lie in the subgroup.
 */
class Schnorr final : public SigmaProtocol {
  public:
    /// challenge_size 0 means |C| = r. Rejects composite p, p > 2^31, and g
    /// whose order is not prime.
    Schnorr(std::uint64_t p, std::uint64_t g, std::uint64_t challenge_size = 0);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] InstanceWitness generate(Rng &rng) const override;
    [[nodiscard]] bool relation(std::uint64_t x, std::uint64_t w) const override;
    [[nodiscard]] bool in_language(std::uint64_t x) const override;
    [[nodiscard]] std::uint64_t challenge_space_size() const override {
        return challenge_size_;
    }
    [[nodiscard]] std::uint64_t response_space_size() const override {
        return r_;
    }
    [[nodiscard]] unsigned instance_bits() const override { return bits_; }
    [[nodiscard]] unsigned commitment_bits() const override { return bits_; }
    [[nodiscard]] Commitment commit(std::uint64_t x, std::uint64_t w,
                                    Rng &rng) const override;
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, std::uint64_t w, const Commitment &com,
            std::uint64_t c, Rng &rng) const override;
    [[nodiscard]] bool verify(std::uint64_t x, std::uint64_t a, std::uint64_t c,
                              std::uint64_t z) const override;
    [[nodiscard]] unsigned soundness_parameter() const override { return 2; }
    [[nodiscard]] Extraction
    extract(std::uint64_t x,
            const std::vector<Transcript> &transcripts) const override;

    [[nodiscard]] std::uint64_t p() const { return p_; }
    [[nodiscard]] std::uint64_t g() const { return g_; }
    [[nodiscard]] std::uint64_t r() const { return r_; }

    /// g^e mod p.
    [[nodiscard]] std::uint64_t exp(std::uint64_t e) const;
    /// Honest response y + c w mod r.
    [[nodiscard]] std::uint64_t response(std::uint64_t y, std::uint64_t c,
                                         std::uint64_t w) const;
    /// Exhaustive discrete log of x in the subgroup, if any.
    [[nodiscard]] std::optional<std::uint64_t> brute_force_dlog(std::uint64_t x) const;
    /// Some element of Z_p^* outside the subgroup with the largest order.
    [[nodiscard]] std::uint64_t non_member() const;

  private:
    std::uint64_t p_;
    std::uint64_t g_;
    std::uint64_t r_;
    std::uint64_t challenge_size_;
    unsigned bits_;
    // Sorted (element, exponent) pairs of the subgroup.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> dlog_table_;
};

/**
 * Schnorr where the prover aborts with probability beta. Models protocols
 * that use rejection sampling.
 */
class RejectingProtocol final : public SigmaProtocol {
  public:
    RejectingProtocol(std::shared_ptr<const Schnorr> inner, double beta);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] InstanceWitness generate(Rng &rng) const override {
        return inner_->generate(rng);
    }
    [[nodiscard]] bool relation(std::uint64_t x, std::uint64_t w) const override {
        return inner_->relation(x, w);
    }
    [[nodiscard]] bool in_language(std::uint64_t x) const override {
        return inner_->in_language(x);
    }
    [[nodiscard]] std::uint64_t challenge_space_size() const override {
        return inner_->challenge_space_size();
    }
    [[nodiscard]] std::uint64_t response_space_size() const override {
        return inner_->response_space_size();
    }
    [[nodiscard]] unsigned instance_bits() const override {
        return inner_->instance_bits();
    }
    [[nodiscard]] unsigned commitment_bits() const override {
        return inner_->commitment_bits();
    }
    [[nodiscard]] Commitment commit(std::uint64_t x, std::uint64_t w,
                                    Rng &rng) const override {
        return inner_->commit(x, w, rng);
    }
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, std::uint64_t w, const Commitment &com,
            std::uint64_t c, Rng &rng) const override;
    [[nodiscard]] bool verify(std::uint64_t x, std::uint64_t a, std::uint64_t c,
                              std::uint64_t z) const override {
        return inner_->verify(x, a, c, z);
    }
    [[nodiscard]] unsigned soundness_parameter() const override { return 2; }
    [[nodiscard]] Extraction
    extract(std::uint64_t x,
            const std::vector<Transcript> &transcripts) const override {
        return inner_->extract(x, transcripts);
    }
    [[nodiscard]] double correctness() const override { return 1.0 - beta_; }

    [[nodiscard]] double beta() const { return beta_; }

  private:
    std::shared_ptr<const Schnorr> inner_;
    double beta_;
};

/**
 * Schnorr with two valid responses per (x, a, c): z' = 2z + s for either
 * bit s. Verification ignores s, so responses are not unique.
 */
class TwoResponseSchnorr final : public SigmaProtocol {
  public:
    explicit TwoResponseSchnorr(std::shared_ptr<const Schnorr> inner);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] InstanceWitness generate(Rng &rng) const override {
        return inner_->generate(rng);
    }
    [[nodiscard]] bool relation(std::uint64_t x, std::uint64_t w) const override {
        return inner_->relation(x, w);
    }
    [[nodiscard]] bool in_language(std::uint64_t x) const override {
        return inner_->in_language(x);
    }
    [[nodiscard]] std::uint64_t challenge_space_size() const override {
        return inner_->challenge_space_size();
    }
    [[nodiscard]] std::uint64_t response_space_size() const override {
        return 2 * inner_->response_space_size();
    }
    [[nodiscard]] unsigned instance_bits() const override {
        return inner_->instance_bits();
    }
    [[nodiscard]] unsigned commitment_bits() const override {
        return inner_->commitment_bits();
    }
    [[nodiscard]] Commitment commit(std::uint64_t x, std::uint64_t w,
                                    Rng &rng) const override {
        return inner_->commit(x, w, rng);
    }
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, std::uint64_t w, const Commitment &com,
            std::uint64_t c, Rng &rng) const override;
    [[nodiscard]] bool verify(std::uint64_t x, std::uint64_t a, std::uint64_t c,
                              std::uint64_t z) const override;
    [[nodiscard]] unsigned soundness_parameter() const override { return 2; }
    [[nodiscard]] Extraction
    extract(std::uint64_t x,
            const std::vector<Transcript> &transcripts) const override;

    [[nodiscard]] const Schnorr &inner() const { return *inner_; }

  private:
    std::shared_ptr<const Schnorr> inner_;
};

/// One honest interaction with a uniformly random challenge.
Transcript honest_run(const SigmaProtocol &sigma, std::uint64_t x,
                      std::uint64_t w, Rng &rng);

/// Standard groups: (269, 16) has r = 67, (23, 2) has r = 11.
std::shared_ptr<const Schnorr> schnorr_group_67(std::uint64_t challenge_size = 64);
std::shared_ptr<const Schnorr> schnorr_group_11(std::uint64_t challenge_size = 8);

} // namespace qromlab::sigma
