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

#include "qromlab/sigma/games.hpp"

#include <cmath>
#include <tuple>

#include "../parallel.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/sigma/modarith.hpp"

namespace qromlab::sigma {

HonestProver::HonestProver(std::shared_ptr<const SigmaProtocol> sigma,
                           InstanceWitness iw)
    : sigma_(std::move(sigma)), iw_(iw) {
    if (!sigma_->relation(iw_.x, iw_.w)) {
        throw std::invalid_argument("HonestProver: (x, w) not in R");
    }
}

Commitment HonestProver::commit(std::uint64_t x, Rng &rng) const {
    return sigma_->commit(x, iw_.w, rng);
}

std::optional<std::uint64_t> HonestProver::respond(std::uint64_t x,
                                                   const Commitment &com,
                                                   std::uint64_t c,
                                                   Rng &rng) const {
    if (x != iw_.x) {
        return std::nullopt;
    }
    return sigma_->respond(x, iw_.w, com, c, rng);
}

ChallengeGuessingProver::ChallengeGuessingProver(
    std::shared_ptr<const Schnorr> schnorr, std::optional<std::uint64_t> instance)
    : schnorr_(std::move(schnorr)),
      instance_(instance ? *instance : schnorr_->non_member()) {}

Commitment ChallengeGuessingProver::commit(std::uint64_t x, Rng &rng) const {
    const std::uint64_t p = schnorr_->p();
    const std::uint64_t r = schnorr_->r();
    const std::uint64_t c_star = uniform_below(rng, schnorr_->challenge_space_size());
    const std::uint64_t z = uniform_below(rng, r);
    const std::uint64_t a =
        mulmod(schnorr_->exp(z), invmod(powmod(x % p, c_star, p), p), p);
    return {a, c_star * r + z};
}

std::optional<std::uint64_t>
ChallengeGuessingProver::respond(std::uint64_t, const Commitment &com,
                                 std::uint64_t, Rng &) const {
    return com.state % schnorr_->r();
}

namespace {

const char *mode_name(SoundnessMode m) {
    return m == SoundnessMode::Static ? "static" : "adaptive";
}

/// Replays a fixed first message and delegates the response.
class FixedFirstMessage final : public InteractiveProver {
  public:
    FixedFirstMessage(const InteractiveProver &inner, Commitment com)
        : inner_(inner), com_(com) {}
    [[nodiscard]] std::string name() const override {
        return "fixed(" + inner_.name() + ")";
    }
    [[nodiscard]] std::uint64_t choose_instance(Rng &rng) const override {
        return inner_.choose_instance(rng);
    }
    [[nodiscard]] Commitment commit(std::uint64_t, Rng &) const override {
        return com_;
    }
    [[nodiscard]] std::optional<std::uint64_t>
    respond(std::uint64_t x, const Commitment &com, std::uint64_t c,
            Rng &rng) const override {
        return inner_.respond(x, com, c, rng);
    }

  private:
    const InteractiveProver &inner_;
    Commitment com_;
};

Transcript finish(const SigmaProtocol &sigma, const InteractiveProver &prover,
                  std::uint64_t x, const Commitment &com, std::uint64_t seed,
                  std::uint64_t t) {
    Transcript tr;
    tr.x = x;
    tr.a = com.a;
    Rng rc = trial_rng(seed, t, kChallengeStream);
    tr.c = uniform_below(rc, sigma.challenge_space_size());
    Rng rr = trial_rng(seed, t, kResponseStream);
    tr.z = prover.respond(x, com, tr.c, rr);
    tr.accept = tr.z && sigma.verify(x, tr.a, tr.c, *tr.z);
    return tr;
}

} // namespace

void to_json(nlohmann::json &j, const SoundnessResult &r) {
    j = nlohmann::json{
        {"mode", mode_name(r.mode)}, {"accept", r.accept}, {"cheat", r.cheat}};
}

Transcript interact(const SigmaProtocol &sigma, const InteractiveProver &prover,
                    std::uint64_t x, std::uint64_t seed, std::uint64_t t) {
    Rng rp = trial_rng(seed, t);
    const Commitment com = prover.commit(x, rp);
    return finish(sigma, prover, x, com, seed, t);
}

SoundnessResult soundness_game(const SigmaProtocol &sigma,
                               const InteractiveProver &prover,
                               SoundnessMode mode, std::uint64_t trials,
                               std::uint64_t seed,
                               std::optional<std::uint64_t> static_x) {
    if (mode == SoundnessMode::Static && !static_x) {
        throw std::invalid_argument("soundness_game: static mode needs an instance");
    }
    std::vector<std::uint8_t> acc(trials, 0);
    std::vector<std::uint8_t> cheat(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        std::uint64_t x = 0;
        if (mode == SoundnessMode::Static) {
            x = *static_x;
        } else {
            Rng ri = trial_rng(seed, t, kOracleStream);
            x = prover.choose_instance(ri);
        }
        const bool ok = interact(sigma, prover, x, seed, t).accept;
        acc[t] = ok ? 1 : 0;
        cheat[t] = (ok && !sigma.in_language(x)) ? 1 : 0;
    });
    SoundnessResult res;
    res.mode = mode;
    res.accept.trials = res.cheat.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        res.accept.successes += acc[t];
        res.cheat.successes += cheat[t];
    }
    return res;
}

Decomposition decomposition_check(const SigmaProtocol &sigma,
                                  const InteractiveProver &prover,
                                  std::uint64_t trials, std::uint64_t seed) {
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
    std::map<Key, std::vector<std::uint64_t>> groups;
    std::vector<Commitment> coms(trials);
    std::vector<std::uint64_t> xs(trials);
    Decomposition d;
    d.adaptive.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng ri = trial_rng(seed, t, kOracleStream);
        xs[t] = prover.choose_instance(ri);
        Rng rp = trial_rng(seed, t);
        coms[t] = prover.commit(xs[t], rp);
        const bool ok = finish(sigma, prover, xs[t], coms[t], seed, t).accept &&
                        !sigma.in_language(xs[t]);
        d.adaptive.successes += ok ? 1 : 0;
        groups[{xs[t], coms[t].a, coms[t].state}].push_back(t);
    }
    // Each group is a static game for the prover with its first message fixed.
    for (const auto &[key, members] : groups) {
        const auto &[x, a, state] = key;
        const FixedFirstMessage wrapped(prover, Commitment{a, state});
        if (sigma.in_language(x)) {
            continue;
        }
        for (std::uint64_t t : members) {
            d.recombined_successes += interact(sigma, wrapped, x, seed, t).accept ? 1 : 0;
        }
    }
    d.groups = groups.size();
    return d;
}

void to_json(nlohmann::json &j, const PokResult &r) {
    j = nlohmann::json{{"acceptance", r.acceptance},
                       {"extraction", r.extraction},
                       {"p", r.params.p},
                       {"d", r.params.d},
                       {"kappa", r.params.kappa},
                       {"bound", r.bound},
                       {"holds", r.holds}};
    j["p_fit"] = r.p_fit ? nlohmann::json(*r.p_fit) : nlohmann::json(nullptr);
}

PokResult pok_game(const std::function<bool(std::uint64_t)> &accept_run,
                   const std::function<bool(std::uint64_t)> &extract_run,
                   std::uint64_t trials, PokParams params) {
    if (params.p <= 0.0) {
        throw std::invalid_argument("pok_game: p must be positive");
    }
    std::vector<std::uint8_t> acc(trials, 0);
    std::vector<std::uint8_t> ext(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        acc[t] = accept_run(t) ? 1 : 0;
        ext[t] = extract_run(t) ? 1 : 0;
    });
    PokResult res;
    res.params = params;
    res.acceptance.trials = res.extraction.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        res.acceptance.successes += acc[t];
        res.extraction.successes += ext[t];
    }
    const double vd = std::pow(res.acceptance.mean(), params.d);
    res.bound = vd / params.p - params.kappa;
    res.holds = res.extraction.mean() >= res.bound - kInequalitySlack;
    const double denom = res.extraction.mean() + params.kappa;
    if (denom > 0.0) {
        res.p_fit = vd / denom;
    }
    return res;
}

} // namespace qromlab::sigma
