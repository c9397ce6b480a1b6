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

#include "qromlab/signatures/games.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "../parallel.hpp"
#include "qromlab/extract/extractor.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/sigma/modarith.hpp"
#include "qromlab/sigma/reduction.hpp"

namespace qromlab::signatures {

namespace {

KeyPair recover_key(const Scheme &scheme, std::uint64_t pk) {
    const auto w = scheme.schnorr().brute_force_dlog(pk);
    if (!w) {
        throw std::invalid_argument("public key outside the subgroup");
    }
    return {pk, *w};
}

Proportion count(const std::vector<std::uint8_t> &flags) {
    Proportion p;
    p.trials = flags.size();
    for (auto f : flags) {
        p.successes += f;
    }
    return p;
}

} // namespace

Message random_message(Rng &rng) {
    Message m(MessageCodec::kMaxBytes);
    for (auto &b : m) {
        b = static_cast<std::uint8_t>(uniform_below(rng, 256));
    }
    return m;
}

std::optional<Signature> HonestNmaForger::forge(const Scheme &scheme,
                                                const oracle::Oracle &h,
                                                std::uint64_t pk, Rng &rng) const {
    return scheme.sign(h, recover_key(scheme, pk), random_message(rng), rng);
}

std::optional<Signature> GuessingNmaForger::forge(const Scheme &scheme,
                                                  const oracle::Oracle &h,
                                                  std::uint64_t pk, Rng &rng) const {
    const auto &s = scheme.schnorr();
    std::optional<Signature> last;
    for (unsigned i = 0; i < q_; ++i) {
        const Message m = random_message(rng);
        const std::uint64_t c = uniform_below(rng, s.challenge_space_size());
        const std::uint64_t z = uniform_below(rng, s.r());
        const std::uint64_t a = sigma::mulmod(
            s.exp(z), sigma::invmod(sigma::powmod(pk, c, s.p()), s.p()), s.p());
        last = Signature{m, {a, z}};
        if (h(scheme.point(pk, m, a)) == c) {
            return last;
        }
    }
    return last;
}

std::optional<Signature> JunkNmaForger::forge(const Scheme &scheme,
                                              const oracle::Oracle &, std::uint64_t,
                                              Rng &rng) const {
    const auto &s = scheme.schnorr();
    const Message m = random_message(rng);
    const std::uint64_t a = s.exp(uniform_below(rng, s.r()));
    return Signature{m, {a, uniform_below(rng, s.r())}};
}

void to_json(nlohmann::json &j, const GameResult &r) {
    j = nlohmann::json{{"forger", r.forger},
                       {"forgeries", r.forgeries},
                       {"replays", r.replays},
                       {"oracle_k", r.oracle_k}};
}

GameResult nma_game(const Scheme &scheme, const NmaForger &forger,
                    std::uint64_t trials, std::uint64_t seed) {
    const unsigned k = 2 * (std::max(forger.queries(), 1u) + 1);
    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rk = trial_rng(seed, t);
        const KeyPair key = scheme.keygen(rk);
        Rng ro = trial_rng(seed, t, kOracleStream);
        const auto h = scheme.sample_oracle(k, ro);
        Rng rf = trial_rng(seed, t, kResponseStream);
        const auto sig = forger.forge(scheme, h, key.pk, rf);
        ok[t] = sig && scheme.verify(h, key.pk, *sig) ? 1 : 0;
    });
    return GameResult{forger.name(), count(ok), 0, k};
}

SigningOracle::SigningOracle(const Scheme &scheme, const oracle::Oracle &h,
                             KeyPair sk, std::uint64_t max_queries, Rng &rng)
    : scheme_(scheme), h_(h), sk_(sk), max_queries_(max_queries), rng_(rng) {}

Signature SigningOracle::sign(const Message &m) {
    if (answers_.size() >= max_queries_) {
        throw std::out_of_range("signing oracle: query budget exhausted");
    }
    answers_.push_back(scheme_.sign(h_, sk_, m, rng_));
    return answers_.back();
}

bool SigningOracle::seen(const Signature &s) const {
    return std::find(answers_.begin(), answers_.end(), s) != answers_.end();
}

std::optional<Signature> ReplayForger::forge(const Scheme &, const oracle::Oracle &,
                                             std::uint64_t, SigningOracle &sig,
                                             Rng &rng) const {
    return sig.sign(random_message(rng));
}

std::optional<Signature> RerandomizeForger::forge(const Scheme &scheme,
                                                  const oracle::Oracle &, std::uint64_t,
                                                  SigningOracle &sig, Rng &rng) const {
    Signature s = sig.sign(random_message(rng));
    s.proof.z = (s.proof.z + 1) % scheme.schnorr().r();
    return s;
}

std::optional<Signature> HonestCmaForger::forge(const Scheme &scheme,
                                                const oracle::Oracle &h,
                                                std::uint64_t pk, SigningOracle &sig,
                                                Rng &rng) const {
    const Message seen = random_message(rng);
    (void)sig.sign(seen);
    Message fresh = random_message(rng);
    if (fresh == seen) {
        fresh[0] ^= 1;
    }
    return scheme.sign(h, recover_key(scheme, pk), fresh, rng);
}

GameResult cma_game(const Scheme &scheme, const CmaForger &forger,
                    std::uint64_t max_sign_queries, std::uint64_t trials,
                    std::uint64_t seed) {
    const unsigned k = static_cast<unsigned>(2 * (max_sign_queries + 2));
    std::vector<std::uint8_t> ok(trials, 0);
    std::vector<std::uint8_t> replay(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rk = trial_rng(seed, t);
        const KeyPair key = scheme.keygen(rk);
        Rng ro = trial_rng(seed, t, kOracleStream);
        const auto h = scheme.sample_oracle(k, ro);
        Rng rs = trial_rng(seed, t, kChallengeStream);
        SigningOracle sig(scheme, h, key, max_sign_queries, rs);
        Rng rf = trial_rng(seed, t, kResponseStream);
        const auto out = forger.forge(scheme, h, key.pk, sig, rf);
        if (out && scheme.verify(h, key.pk, *out)) {
            if (sig.seen(*out)) {
                replay[t] = 1;
            } else {
                ok[t] = 1;
            }
        }
    });
    GameResult r{forger.name(), count(ok), 0, k};
    r.replays = count(replay).successes;
    return r;
}

MutationResult mutation_check(const Scheme &scheme, std::uint64_t trials,
                              std::uint64_t seed) {
    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        const KeyPair key = scheme.keygen(rng);
        Rng ro = trial_rng(seed, t, kOracleStream);
        const auto h = scheme.sample_oracle(4, ro);
        const Signature s = scheme.sign(h, key, random_message(rng), rng);
        auto bytes = serialize(s);
        const std::size_t pos = uniform_below(rng, bytes.size());
        bytes[pos] ^= static_cast<std::uint8_t>(1 + uniform_below(rng, 255));
        const auto mutant = parse(bytes, s.m.size());
        ok[t] = mutant && scheme.verify(h, key.pk, *mutant) ? 1 : 0;
    });
    return MutationResult{trials, count(ok).successes};
}

Proportion round_trip_check(const Scheme &scheme, std::uint64_t trials,
                            std::uint64_t seed) {
    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        const KeyPair key = scheme.keygen(rng);
        Rng ro = trial_rng(seed, t, kOracleStream);
        const auto h = scheme.sample_oracle(4, ro);
        Message m = random_message(rng);
        m.resize(uniform_below(rng, MessageCodec::kMaxBytes + 1));
        ok[t] = scheme.verify(h, key.pk, scheme.sign(h, key, m, rng)) ? 1 : 0;
    });
    return count(ok);
}

void to_json(nlohmann::json &j, const PipelineResult &r) {
    j = nlohmann::json{{"forgery_rate", r.forgery_rate},
                       {"extraction", r.extraction},
                       {"validated", r.validated},
                       {"target", r.target},
                       {"consistent", r.consistent}};
}

PipelineResult nma_extraction_pipeline(const Scheme &scheme, std::uint64_t trials,
                                       std::uint64_t seed) {
    constexpr index_t q = 1;
    constexpr unsigned t_sound = 2;
    const auto schnorr = scheme.schnorr_ptr();
    std::vector<std::uint8_t> forged(trials, 0);
    std::vector<std::uint8_t> extracted(trials, 0);
    std::vector<std::uint8_t> valid(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rk = trial_rng(seed, t);
        const KeyPair key = scheme.keygen(rk);
        const Message m = random_message(rk);
        Rng ro = trial_rng(seed, t, kOracleStream);
        const auto h = scheme.sample_oracle(2 * (q + 1), ro);
        auto slice = sigma::make_fs_slice(schnorr, h, key.pk, scheme.composite(key.pk, m),
                                          MessageCodec::kBits);
        auto a = std::make_shared<const adversary::OracleAlgorithm>(
            sigma::honest_fs_adversary(slice, key.w));

        // The forger's own output: measure X and Z of its final state.
        Rng rm = trial_rng(seed, t, kMeasurementStream);
        const auto fin = adversary::run(*a, slice.h);
        const auto mx = qsim::measure_register(fin, qsim::Register::X, rm);
        const auto mz = qsim::measure_register(mx.post, qsim::Register::Z, rm);
        forged[t] = scheme.verify(h, key.pk,
                                  Signature{m, {slice.commitments[mx.outcome], mz.outcome}})
                        ? 1
                        : 0;

        const sigma::ReducedSigmaAdversary reduced(std::move(a), std::move(slice));
        const auto att = extract::extract(*schnorr, reduced, t_sound, seed, t);
        extracted[t] = att.witness ? 1 : 0;
        valid[t] = att.witness && scheme.schnorr().brute_force_dlog(key.pk) == att.witness;
    });
    PipelineResult r;
    r.forgery_rate = count(forged).mean();
    r.extraction = count(extracted);
    r.validated = count(valid).successes;
    const double base = r.forgery_rate / reprogram::lemma1_constant(q) -
                        1.0 / (2.0 * (q + 1) *
                               static_cast<double>(scheme.schnorr().challenge_space_size()));
    r.target = std::pow(std::max(base, 0.0), 3.0);
    r.consistent = r.extraction.mean() >= r.target - 3.0 * r.extraction.stderr_() &&
                   r.validated == r.extraction.successes;
    return r;
}

} // namespace qromlab::signatures
