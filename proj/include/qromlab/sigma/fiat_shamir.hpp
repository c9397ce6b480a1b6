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
#include <optional>

#include "json.hpp"

#include "qromlab/oracle/oracle.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::sigma {

/**
 * Oracle-domain encoding of (instance, commitment):
 *   point = (instance_code << commitment_bits) | a.
 * The instance code is x itself, or x || m for signatures.
 */
struct PairEncoding {
    unsigned instance_bits = 0;
    unsigned commitment_bits = 0;

    static PairEncoding for_protocol(const SigmaProtocol &sigma,
                                     unsigned extra_instance_bits = 0);

    [[nodiscard]] std::uint64_t encode(std::uint64_t instance_code,
                                       std::uint64_t a) const;
    [[nodiscard]] std::uint64_t domain_size() const {
        return std::uint64_t{1} << (instance_bits + commitment_bits);
    }
};

struct FSProof {
    std::uint64_t a = 0;
    std::uint64_t z = 0;

    friend bool operator==(const FSProof &, const FSProof &) = default;
};

void to_json(nlohmann::json &j, const FSProof &p);
FSProof fs_proof_from_json(const nlohmann::json &j);

struct FSProveResult {
    /// Empty when every iteration aborted or failed verification.
    std::optional<FSProof> proof;
    std::uint64_t iterations = 0;
};

/// Challenge c = H(encode(code, a)). Requires |C| = 2^n for H's n.
std::uint64_t fs_challenge(const SigmaProtocol &sigma, const oracle::Oracle &h,
                           const PairEncoding &enc, std::uint64_t instance_code,
                           std::uint64_t a);

/**
 * Repeats commit / c = H(x, a) / respond until V accepts, at most max_iters
 * times. Throws std::invalid_argument when (x, w) is not in R.
 */
FSProveResult fs_prove(const SigmaProtocol &sigma, const oracle::Oracle &h,
                       std::uint64_t x, std::uint64_t w, std::uint64_t max_iters,
                       Rng &rng, std::optional<std::uint64_t> instance_code = {},
                       unsigned extra_instance_bits = 0);

/// V(x, a, H(x, a), z). Malformed or missing proofs are rejected.
bool fs_verify(const SigmaProtocol &sigma, const oracle::Oracle &h,
               std::uint64_t x, const std::optional<FSProof> &proof,
               std::optional<std::uint64_t> instance_code = {},
               unsigned extra_instance_bits = 0);

} // namespace qromlab::sigma
