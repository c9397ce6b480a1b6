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

#include "qromlab/sigma/fiat_shamir.hpp"

#include <string>

namespace qromlab::sigma {

namespace {

void check_oracle(const SigmaProtocol &sigma, const oracle::Oracle &h,
                  const PairEncoding &enc) {
    if (h.range_size() != sigma.challenge_space_size()) {
        throw DimensionError("Fiat-Shamir: oracle range 2^" +
                             std::to_string(h.range_bits()) +
                             " differs from |C| = " +
                             std::to_string(sigma.challenge_space_size()));
    }
    if (h.domain_size() < enc.domain_size()) {
        throw DimensionError("Fiat-Shamir: oracle domain smaller than the pair encoding");
    }
}

} // namespace

PairEncoding PairEncoding::for_protocol(const SigmaProtocol &sigma,
                                        unsigned extra_instance_bits) {
    PairEncoding e{sigma.instance_bits() + extra_instance_bits,
                   sigma.commitment_bits()};
    if (e.instance_bits + e.commitment_bits >= 63) {
        throw CapacityError("PairEncoding: more than 62 bits");
    }
    return e;
}

std::uint64_t PairEncoding::encode(std::uint64_t instance_code,
                                   std::uint64_t a) const {
    if (instance_code >> instance_bits != 0 || a >> commitment_bits != 0) {
        throw DimensionError("PairEncoding: value wider than its field");
    }
    return (instance_code << commitment_bits) | a;
}

void to_json(nlohmann::json &j, const FSProof &p) {
    j = nlohmann::json{{"a", p.a}, {"z", p.z}};
}

FSProof fs_proof_from_json(const nlohmann::json &j) {
    return FSProof{j.at("a").get<std::uint64_t>(), j.at("z").get<std::uint64_t>()};
}

std::uint64_t fs_challenge(const SigmaProtocol &sigma, const oracle::Oracle &h,
                           const PairEncoding &enc, std::uint64_t instance_code,
                           std::uint64_t a) {
    check_oracle(sigma, h, enc);
    return h(enc.encode(instance_code, a));
}

FSProveResult fs_prove(const SigmaProtocol &sigma, const oracle::Oracle &h,
                       std::uint64_t x, std::uint64_t w, std::uint64_t max_iters,
                       Rng &rng, std::optional<std::uint64_t> instance_code,
                       unsigned extra_instance_bits) {
    if (!sigma.relation(x, w)) {
        throw std::invalid_argument("fs_prove: (x, w) is not in the relation");
    }
    const auto enc = PairEncoding::for_protocol(sigma, extra_instance_bits);
    check_oracle(sigma, h, enc);
    const std::uint64_t code = instance_code.value_or(x);
    FSProveResult out;
    for (out.iterations = 1; out.iterations <= max_iters; ++out.iterations) {
        const Commitment com = sigma.commit(x, w, rng);
        const std::uint64_t c = h(enc.encode(code, com.a));
        const auto z = sigma.respond(x, w, com, c, rng);
        if (z && sigma.verify(x, com.a, c, *z)) {
            out.proof = FSProof{com.a, *z};
            return out;
        }
    }
    out.iterations = max_iters;
    return out;
}

bool fs_verify(const SigmaProtocol &sigma, const oracle::Oracle &h,
               std::uint64_t x, const std::optional<FSProof> &proof,
               std::optional<std::uint64_t> instance_code,
               unsigned extra_instance_bits) {
    if (!proof) {
        return false;
    }
    const auto enc = PairEncoding::for_protocol(sigma, extra_instance_bits);
    check_oracle(sigma, h, enc);
    const std::uint64_t code = instance_code.value_or(x);
    if (code >> enc.instance_bits != 0 || proof->a >> enc.commitment_bits != 0) {
        return false;
    }
    const std::uint64_t c = h(enc.encode(code, proof->a));
    return sigma.verify(x, proof->a, c, proof->z);
}

} // namespace qromlab::sigma
