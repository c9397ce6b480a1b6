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

#include <algorithm>

#include "qromlab/sigma/modarith.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::sigma {

void to_json(nlohmann::json &j, const Transcript &t) {
    j = nlohmann::json{{"x", t.x}, {"a", t.a}, {"c", t.c}, {"accept", t.accept}};
    j["z"] = t.z ? nlohmann::json(*t.z) : nlohmann::json(nullptr);
}

Transcript transcript_from_json(const nlohmann::json &j) {
    Transcript t;
    t.x = j.at("x").get<std::uint64_t>();
    t.a = j.at("a").get<std::uint64_t>();
    t.c = j.at("c").get<std::uint64_t>();
    if (!j.at("z").is_null()) {
        t.z = j.at("z").get<std::uint64_t>();
    }
    t.accept = j.at("accept").get<bool>();
    return t;
}

Schnorr::Schnorr(std::uint64_t p, std::uint64_t g, std::uint64_t challenge_size)
    : p_(p), g_(g) {
    if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
        throw std::invalid_argument("Schnorr: p must be a prime <= 2^31");
    }
    if (g < 2 || g >= p) {
        throw std::invalid_argument("Schnorr: g must lie in [2, p)");
    }
    r_ = multiplicative_order(g, p);
    if (!is_prime(r_)) {
        throw std::invalid_argument("Schnorr: g generates a subgroup of order " +
                                    std::to_string(r_) + ", which is not prime");
    }
    challenge_size_ = challenge_size == 0 ? r_ : challenge_size;
    if (challenge_size_ < 2 || challenge_size_ > r_) {
        throw std::invalid_argument("Schnorr: challenge space must satisfy 2 <= |C| <= r");
    }
    bits_ = ceil_log2(p);
    dlog_table_.reserve(r_);
    std::uint64_t e = 1;
    for (std::uint64_t k = 0; k < r_; ++k) {
        dlog_table_.emplace_back(e, k);
        e = mulmod(e, g_, p_);
    }
    std::sort(dlog_table_.begin(), dlog_table_.end());
}

std::string Schnorr::name() const {
    return "schnorr(p=" + std::to_string(p_) + ",g=" + std::to_string(g_) +
           ",r=" + std::to_string(r_) + ",|C|=" + std::to_string(challenge_size_) +
           ")";
}

std::uint64_t Schnorr::exp(std::uint64_t e) const { return powmod(g_, e, p_); }

std::uint64_t Schnorr::response(std::uint64_t y, std::uint64_t c,
                                std::uint64_t w) const {
    return (y + mulmod(c % r_, w % r_, r_)) % r_;
}

InstanceWitness Schnorr::generate(Rng &rng) const {
    const std::uint64_t w = uniform_below(rng, r_);
    return {exp(w), w};
}

bool Schnorr::relation(std::uint64_t x, std::uint64_t w) const {
    return w < r_ && x < p_ && exp(w) == x;
}

std::optional<std::uint64_t> Schnorr::brute_force_dlog(std::uint64_t x) const {
    const auto it = std::lower_bound(
        dlog_table_.begin(), dlog_table_.end(),
        std::pair<std::uint64_t, std::uint64_t>{x, 0});
    if (it != dlog_table_.end() && it->first == x) {
        return it->second;
    }
    return std::nullopt;
}

bool Schnorr::in_language(std::uint64_t x) const {
    return brute_force_dlog(x).has_value();
}

std::uint64_t Schnorr::non_member() const {
    std::uint64_t best = 0;
    std::uint64_t best_order = 0;
    for (std::uint64_t h = 2; h < p_ && best_order < p_ - 1; ++h) {
        if (in_language(h)) {
            continue;
        }
        const std::uint64_t o = multiplicative_order(h, p_);
        if (o > best_order) {
            best = h;
            best_order = o;
        }
    }
    if (best == 0) {
        throw std::logic_error("Schnorr::non_member: subgroup is all of Z_p^*");
    }
    return best;
}

Commitment Schnorr::commit(std::uint64_t, std::uint64_t, Rng &rng) const {
    const std::uint64_t y = uniform_below(rng, r_);
    return {exp(y), y};
}

std::optional<std::uint64_t> Schnorr::respond(std::uint64_t, std::uint64_t w,
                                              const Commitment &com,
                                              std::uint64_t c, Rng &) const {
    return response(com.state, c, w);
}

bool Schnorr::verify(std::uint64_t x, std::uint64_t a, std::uint64_t c,
                     std::uint64_t z) const {
    if (a == 0 || a >= p_ || x == 0 || x >= p_ || z >= r_ ||
        c >= challenge_size_) {
        return false;
    }
    return exp(z) == mulmod(a, powmod(x, c, p_), p_);
}

Extraction Schnorr::extract(std::uint64_t x,
                            const std::vector<Transcript> &ts) const {
    if (ts.size() < 2) {
        return {std::nullopt, "insufficient"};
    }
    for (const auto &t : ts) {
        if (!t.z || !verify(x, t.a, t.c, *t.z) || t.a != ts.front().a) {
            return {std::nullopt, "reject"};
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (ts[i].c == ts[j].c) {
                continue;
            }
            const std::uint64_t dz = (*ts[i].z + r_ - *ts[j].z) % r_;
            const std::uint64_t dc = (ts[i].c + r_ - ts[j].c) % r_;
            const std::uint64_t w = mulmod(dz, invmod(dc, r_), r_);
            if (exp(w) != x) {
                return {std::nullopt, "algebra"};
            }
            return {w, ""};
        }
    }
    return {std::nullopt, "collision"};
}

Transcript honest_run(const SigmaProtocol &sigma, std::uint64_t x,
                      std::uint64_t w, Rng &rng) {
    const Commitment com = sigma.commit(x, w, rng);
    Transcript t;
    t.x = x;
    t.a = com.a;
    t.c = uniform_below(rng, sigma.challenge_space_size());
    t.z = sigma.respond(x, w, com, t.c, rng);
    t.accept = t.z && sigma.verify(x, t.a, t.c, *t.z);
    return t;
}

std::shared_ptr<const Schnorr> schnorr_group_67(std::uint64_t challenge_size) {
    return std::make_shared<const Schnorr>(269, 16, challenge_size);
}

std::shared_ptr<const Schnorr> schnorr_group_11(std::uint64_t challenge_size) {
    return std::make_shared<const Schnorr>(23, 2, challenge_size);
}

} // namespace qromlab::sigma
