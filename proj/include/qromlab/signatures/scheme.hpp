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
#include "qromlab/oracle/oracle.hpp"
#include "qromlab/sigma/fiat_shamir.hpp"

namespace qromlab::signatures {

using Message = std::vector<std::uint8_t>;

/**
 * Messages of up to three bytes packed as (len << 24) | b0 b1 b2, with
 * unused trailing bytes zero. 26 bits in total.
 */
struct MessageCodec {
    static constexpr unsigned kMaxBytes = 3;
    static constexpr unsigned kBits = 2 + 8 * kMaxBytes;

    static std::uint64_t encode(const Message &m);
    static Message decode(std::uint64_t code);
};

struct KeyPair {
    std::uint64_t pk = 0;
    std::uint64_t w = 0;
};

struct Signature {
    Message m;
    sigma::FSProof proof;
    friend bool operator==(const Signature &, const Signature &) = default;
};

void to_json(nlohmann::json &j, const KeyPair &k);
KeyPair key_pair_from_json(const nlohmann::json &j);
void to_json(nlohmann::json &j, const Signature &s);
Signature signature_from_json(const nlohmann::json &j);

std::string to_hex(const Message &m);
/// Throws std::invalid_argument on odd length or non-hex characters.
Message from_hex(const std::string &s);

/// m || a (4 bytes, big endian) || z (4 bytes, big endian).
std::vector<std::uint8_t> serialize(const Signature &s);
/// Inverse of serialize for a message of msg_len bytes.
std::optional<Signature> parse(const std::vector<std::uint8_t> &bytes,
                               std::size_t msg_len);

/**
 * Fiat-Shamir signatures over Schnorr. The oracle point for (pk, m, a) is
 * PairEncoding::encode((pk << 26) | encode(m), a).
 */
class Scheme {
  public:
    explicit Scheme(std::shared_ptr<const sigma::Schnorr> schnorr,
                    std::uint64_t max_iters = 64);

    [[nodiscard]] const sigma::Schnorr &schnorr() const { return *schnorr_; }
    [[nodiscard]] std::shared_ptr<const sigma::Schnorr> schnorr_ptr() const {
        return schnorr_;
    }
    [[nodiscard]] sigma::PairEncoding encoding() const;
    /// Oracle domain size and output width.
    [[nodiscard]] std::uint64_t domain_size() const;
    [[nodiscard]] unsigned range_bits() const;

    [[nodiscard]] std::uint64_t composite(std::uint64_t pk, const Message &m) const;
    /// Oracle point H is queried at when (pk, m, a) is signed or verified.
    [[nodiscard]] std::uint64_t point(std::uint64_t pk, const Message &m,
                                      std::uint64_t a) const;

    /// w uniform in [1, r), so pk is never the identity.
    [[nodiscard]] KeyPair keygen(Rng &rng) const;
    /// Throws std::runtime_error when every attempt fails.
    [[nodiscard]] Signature sign(const oracle::Oracle &h, const KeyPair &sk,
                                 const Message &m, Rng &rng) const;
    [[nodiscard]] bool verify(const oracle::Oracle &h, std::uint64_t pk,
                              const Signature &s) const;

    /// k-wise independent oracle over the whole pair domain.
    [[nodiscard]] oracle::KWiseFamilyMember sample_oracle(unsigned k, Rng &rng) const;

  private:
    std::shared_ptr<const sigma::Schnorr> schnorr_;
    std::uint64_t max_iters_;
};

} // namespace qromlab::signatures
