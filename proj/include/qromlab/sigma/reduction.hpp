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
#include "qromlab/adversary/oracle_algorithm.hpp"
#include "qromlab/sigma/fiat_shamir.hpp"
#include "qromlab/sigma/quantum_prover.hpp"

namespace qromlab::sigma {

/// Dimension cap used for Fiat-Shamir slices unless QROMLAB_DIM_CAP is larger.
inline constexpr index_t kSliceDimensionCap = index_t{1} << 19;

/**
 * Fiat-Shamir random oracle seen by an adversary with the instance fixed.
 * Register X holds an index k for the commitment a_k = g^k, Y holds
 * challenges, Z holds responses in [0, r). The oracle is
 * k -> H(encode(code, a_k)).
 */
struct FSSlice {
    std::shared_ptr<const Schnorr> schnorr;
    std::uint64_t x = 0;
    std::uint64_t instance_code = 0;
    std::vector<std::uint64_t> commitments;
    oracle::FiniteFunction h;
    adversary::QuantumPredicate predicate;
    qsim::RegisterLayout layout;
};

/// Requires |C| to be a power of two and H's range to be {0,1}^log|C|.
FSSlice make_fs_slice(std::shared_ptr<const Schnorr> schnorr,
                      const oracle::Oracle &h, std::uint64_t x,
                      std::optional<std::uint64_t> instance_code = {},
                      unsigned extra_instance_bits = 0);

/**
 * Honest quantum FS prover with one query: uniform superposition over
 * commitment indices k, query H(k), write z = k + H(k) w mod r into Z and
 * uncompute Y. Requires (x, w) in R with w != 0.
 */
adversary::OracleAlgorithm honest_fs_adversary(const FSSlice &slice,
                                               std::uint64_t w);

/// Zero queries; outputs commitment index k_star and response z_star.
adversary::OracleAlgorithm guessing_fs_adversary(const FSSlice &slice,
                                                 index_t k_star,
                                                 std::uint64_t z_star);

/// Largest number of challenges any fixed (a, z) answers, over the subgroup.
std::uint64_t max_challenges_per_pair(const Schnorr &schnorr, std::uint64_t x);

/**
 * The interactive prover obtained from an FS adversary through the
 * measure-and-reprogram simulator. The first stage samples i and b and
 * measures the query point; the verifier's challenge is the reprogrammed
 * value; the response is read from Z.
 */
class ReducedSigmaAdversary final : public QuantumProver {
  public:
    ReducedSigmaAdversary(std::shared_ptr<const adversary::OracleAlgorithm> a,
                          FSSlice slice);

    [[nodiscard]] std::string name() const override;
    /// aux = {i, b, k}.
    [[nodiscard]] ProverStart start(Rng &rng) const override;
    [[nodiscard]] StateVector respond(const ProverStart &s, StateVector state,
                                      std::uint64_t c) const override;
    [[nodiscard]] StateVector unrespond(const ProverStart &s, StateVector state,
                                        std::uint64_t c) const override;

    [[nodiscard]] const FSSlice &slice() const { return slice_; }
    [[nodiscard]] const adversary::OracleAlgorithm &algorithm() const {
        return *a_;
    }

    /// Pr[commitment index = k0 and V accepts], exactly.
    [[nodiscard]] double exact_acceptance(index_t k0, bool strict = false) const;
    /// Interactive acceptance frequency with per-trial seeds.
    [[nodiscard]] Proportion acceptance_sampled(std::uint64_t trials,
                                                std::uint64_t seed) const;

  private:
    std::shared_ptr<const adversary::OracleAlgorithm> a_;
    FSSlice slice_;
    std::vector<StateVector> prefixes_;
};

struct FSReductionRow {
    index_t k0 = 0;
    std::uint64_t a0 = 0;
    double sigma_success = 0.0;
    double sigma_success_strict = 0.0;
    /// E_Theta of the FS success at k0 under the oracle reprogrammed there.
    double fs_success = 0.0;
    /// FS success at k0 under H itself.
    double fs_success_direct = 0.0;
    double output_weight = 0.0;
    double bound = 0.0;
    bool holds = false;
};

struct FSReductionReport {
    std::string adversary;
    index_t q = 0;
    std::uint64_t challenge_space = 0;
    std::uint64_t order = 0;
    double constant = 0.0;
    std::vector<FSReductionRow> rows;
    double sigma_total = 0.0;
    double fs_total = 0.0;
    double fs_direct_total = 0.0;
    double bound_total = 0.0;
    bool holds = false;
};

void to_json(nlohmann::json &j, const FSReductionRow &r);
void to_json(nlohmann::json &j, const FSReductionReport &r);

/// Exact per-commitment comparison of Sigma success against FS success.
FSReductionReport fs_reduce_exact(const ReducedSigmaAdversary &reduced);

} // namespace qromlab::sigma
