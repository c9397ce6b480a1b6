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

#include <string>

#include "qromlab/sigma/protocol.hpp"

namespace qromlab::sigma {

RejectingProtocol::RejectingProtocol(std::shared_ptr<const Schnorr> inner,
                                     double beta)
    : inner_(std::move(inner)), beta_(beta) {
    if (!inner_) {
        throw std::invalid_argument("RejectingProtocol: null inner protocol");
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("RejectingProtocol: beta must lie in [0, 1]");
    }
}

std::string RejectingProtocol::name() const {
    return "rejecting(beta=" + std::to_string(beta_) + ")/" + inner_->name();
}

std::optional<std::uint64_t>
RejectingProtocol::respond(std::uint64_t x, std::uint64_t w,
                           const Commitment &com, std::uint64_t c,
                           Rng &rng) const {
    // Strict comparison so that beta = 0 never aborts and beta = 1 always does.
    if (beta_ > 0.0 && uniform_unit(rng) < beta_) {
        return std::nullopt;
    }
    return inner_->respond(x, w, com, c, rng);
}

TwoResponseSchnorr::TwoResponseSchnorr(std::shared_ptr<const Schnorr> inner)
    : inner_(std::move(inner)) {
    if (!inner_) {
        throw std::invalid_argument("TwoResponseSchnorr: null inner protocol");
    }
}

std::string TwoResponseSchnorr::name() const {
    return "two-response/" + inner_->name();
}

std::optional<std::uint64_t>
TwoResponseSchnorr::respond(std::uint64_t x, std::uint64_t w,
                            const Commitment &com, std::uint64_t c,
                            Rng &rng) const {
    const auto z = inner_->respond(x, w, com, c, rng);
    if (!z) {
        return std::nullopt;
    }
    return 2 * *z + uniform_below(rng, 2);
}

bool TwoResponseSchnorr::verify(std::uint64_t x, std::uint64_t a,
                                std::uint64_t c, std::uint64_t z) const {
    return z < response_space_size() && inner_->verify(x, a, c, z / 2);
}

Extraction TwoResponseSchnorr::extract(std::uint64_t x,
                                       const std::vector<Transcript> &ts) const {
    std::vector<Transcript> halved = ts;
    for (auto &t : halved) {
        if (t.z) {
            if (*t.z >= response_space_size()) {
                return {std::nullopt, "reject"};
            }
            t.z = *t.z / 2;
        }
    }
    return inner_->extract(x, halved);
}

} // namespace qromlab::sigma
