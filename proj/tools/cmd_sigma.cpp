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

#include "cli_common.hpp"
#include "qromlab/extract/extractor.hpp"
#include "qromlab/extract/prover_library.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/sigma/games.hpp"
#include "qromlab/sigma/reduction.hpp"

namespace qromlab::cli {

namespace {

using sigma::Schnorr;
using sigma::SigmaProtocol;

struct FsReduceFlags {
    unsigned group = 11;
    std::string adversary = "honest";
    std::string mode = "exact";
    std::uint64_t trials = 10000;
    index_t k_star = 0;
    std::uint64_t z_star = 0;
};

Report run_fsreduce(const Common &c, const FsReduceFlags &f) {
    const auto schnorr = make_group(f.group);
    Rng ri = trial_rng(c.seed, 0);
    const auto iw = extract::nonzero_instance(*schnorr, ri);
    Rng ro = trial_rng(c.seed, 0, kOracleStream);
    const auto enc = sigma::PairEncoding::for_protocol(*schnorr);
    const auto h = oracle::KWiseFamilyMember::sample(
        4, enc.domain_size(), ceil_log2(schnorr->challenge_space_size()), ro);
    auto slice = sigma::make_fs_slice(schnorr, h, iw.x);
    if (f.adversary == "guessing" && (f.k_star >= schnorr->r() || f.z_star >= schnorr->r())) {
        throw ConfigError("k-star", "k-star and z-star must be below r");
    }
    auto a = std::make_shared<const adversary::OracleAlgorithm>(
        f.adversary == "honest" ? sigma::honest_fs_adversary(slice, iw.w)
                                : sigma::guessing_fs_adversary(slice, f.k_star, f.z_star));
    const sigma::ReducedSigmaAdversary reduced(a, std::move(slice));
    const double cs = static_cast<double>(schnorr->challenge_space_size());
    const index_t q = a->q();

    Report rep;
    rep.config = {{"group", f.group}, {"adversary", f.adversary}, {"mode", f.mode},
                  {"trials", f.trials}, {"x", iw.x}};
    rep.constants = {{"|C|", schnorr->challenge_space_size()},
                     {"r", schnorr->r()},
                     {"q", q},
                     {"constant", reprogram::lemma1_constant(q)},
                     {"oracle_k", 4}};
    if (f.mode == "exact") {
        const auto r = sigma::fs_reduce_exact(reduced);
        rep.result = r;
        rep.csv << "k0,a0,sigma_success,sigma_success_strict,fs_success,fs_success_direct,"
                   "output_weight,bound,holds\n";
        for (const auto &row : r.rows) {
            rep.csv << row.k0 << ',' << row.a0 << ',' << num(row.sigma_success) << ','
                    << num(row.sigma_success_strict) << ',' << num(row.fs_success) << ','
                    << num(row.fs_success_direct) << ',' << num(row.output_weight) << ','
                    << num(row.bound) << ',' << (row.holds ? 1 : 0) << '\n';
        }
        rep.check(r.holds);
        if (f.adversary == "guessing") {
            const auto sweep = sigma::max_challenges_per_pair(*schnorr, iw.x);
            rep.result["max_challenges_per_pair"] = sweep;
            rep.check(sweep <= 1);
            rep.check(r.sigma_total <= 1.0 / cs + kInequalitySlack);
        }
        return rep;
    }
    const auto p = reduced.acceptance_sampled(f.trials, derive_seed(c.seed, kTrialStream, 1));
    rep.result = {{"acceptance", p}};
    rep.csv << "trials,successes,acceptance,stderr,target\n";
    double target = 0.0;
    if (f.adversary == "honest") {
        target = 1.0 / reprogram::lemma1_constant(q) - 1.0 / (2.0 * (q + 1) * cs);
        rep.check(p.mean() >= target - 3.0 * p.stderr_());
    } else {
        target = 1.0 / cs;
        rep.check(p.mean() <= target + 3.0 * p.stderr_() + kInequalitySlack);
    }
    rep.result["target"] = target;
    rep.csv << p.trials << ',' << p.successes << ',' << num(p.mean()) << ','
            << num(p.stderr_()) << ',' << num(target) << '\n';
    return rep;
}

struct SigmaRunFlags {
    unsigned group = 67;
    std::string protocol = "schnorr";
    double beta = 0.25;
    std::string prover = "honest";
    std::string mode = "static";
    std::uint64_t trials = 10000;
};

Report run_sigma(const Common &c, const SigmaRunFlags &f) {
    const auto schnorr = make_group(f.group);
    std::shared_ptr<const SigmaProtocol> proto;
    if (f.protocol == "schnorr") {
        proto = schnorr;
    } else if (f.protocol == "rejecting") {
        if (!(f.beta >= 0.0 && f.beta < 1.0)) {
            throw ConfigError("beta", "must lie in [0, 1)");
        }
        proto = std::make_shared<sigma::RejectingProtocol>(schnorr, f.beta);
    } else {
        proto = std::make_shared<sigma::TwoResponseSchnorr>(schnorr);
    }
    Rng ri = trial_rng(c.seed, 0, kOracleStream);
    const auto iw = proto->generate(ri);
    std::shared_ptr<const sigma::InteractiveProver> prover;
    std::uint64_t x = iw.x;
    if (f.prover == "honest") {
        prover = std::make_shared<sigma::HonestProver>(proto, iw);
    } else {
        if (f.protocol == "two-response") {
            throw ConfigError("prover", "challenge-guessing needs a unique-response protocol");
        }
        prover = std::make_shared<sigma::ChallengeGuessingProver>(schnorr);
        x = schnorr->non_member();
    }
    const auto mode =
        f.mode == "adaptive" ? sigma::SoundnessMode::Adaptive : sigma::SoundnessMode::Static;
    const std::uint64_t seed = derive_seed(c.seed, kTrialStream, 1);
    const auto res = sigma::soundness_game(*proto, *prover, mode, f.trials, seed, x);

    Report rep;
    rep.config = {{"group", f.group},   {"protocol", proto->name()}, {"prover", f.prover},
                  {"mode", f.mode},     {"trials", f.trials},        {"x", x}};
    if (f.protocol == "rejecting") {
        rep.config["beta"] = f.beta;
    }
    const double cs = static_cast<double>(proto->challenge_space_size());
    rep.constants = {{"|C|", proto->challenge_space_size()},
                     {"correctness", proto->correctness()},
                     {"guess_rate", 1.0 / cs}};
    rep.result = res;
    if (f.prover == "honest") {
        rep.check(within_3sigma(res.accept, proto->correctness()));
    } else {
        rep.check(within_3sigma(res.cheat, 1.0 / cs));
    }
    if (mode == sigma::SoundnessMode::Adaptive) {
        const auto d = sigma::decomposition_check(*proto, *prover, f.trials, seed);
        rep.result["decomposition"] = {{"adaptive", d.adaptive},
                                       {"recombined_successes", d.recombined_successes},
                                       {"groups", d.groups}};
        rep.check(d.recombined_successes == d.adaptive.successes);
    }
    rep.csv << "trial,x,a,c,z,accept\n";
    for (std::uint64_t t = 0; t < f.trials; ++t) {
        const std::uint64_t xt =
            mode == sigma::SoundnessMode::Adaptive
                ? [&] {
                      Rng rx = trial_rng(seed, t, kOracleStream);
                      return prover->choose_instance(rx);
                  }()
                : x;
        const auto tr = sigma::interact(*proto, *prover, xt, seed, t);
        rep.csv << t << ',' << tr.x << ',' << tr.a << ',' << tr.c << ',';
        if (tr.z) {
            rep.csv << *tr.z;
        }
        rep.csv << ',' << (tr.accept ? 1 : 0) << '\n';
    }
    return rep;
}

struct ExtractFlags {
    unsigned group = 67;
    std::string prover = "honest";
    unsigned t = 2;
    std::uint64_t trials = 10000;
    std::string variant = "response";
    double v = 0.5;
    double scale = 0.5;
    std::uint64_t c_star = 0;
};

Report run_sigma_extract(const Common &c, const ExtractFlags &f) {
    const auto schnorr = make_group(f.group);
    Rng ri = trial_rng(c.seed, 0, kOracleStream);
    const auto iw = extract::nonzero_instance(*schnorr, ri);
    std::shared_ptr<const SigmaProtocol> proto = schnorr;
    std::shared_ptr<const sigma::QuantumProver> prover;
    if (f.prover == "honest") {
        prover = extract::honest_quantum_prover(schnorr, iw);
    } else if (f.prover == "partial") {
        if (!(f.v >= 0.0 && f.v <= 1.0)) {
            throw ConfigError("v", "must lie in [0, 1]");
        }
        prover = extract::partial_prover(schnorr, iw, f.v);
    } else if (f.prover == "rotating") {
        prover = extract::rotating_prover(schnorr, iw, f.scale);
    } else if (f.prover == "fixed-challenge") {
        if (f.c_star >= schnorr->challenge_space_size()) {
            throw ConfigError("c-star", "must be below |C|");
        }
        prover = extract::fixed_challenge_prover(schnorr, iw, f.c_star);
    } else {
        auto two = std::make_shared<const sigma::TwoResponseSchnorr>(schnorr);
        proto = two;
        prover = std::make_shared<extract::TwoResponseProver>(two, iw);
    }
    std::vector<extract::ExtractorVariant> variants;
    if (f.variant != "predicate") {
        variants.push_back(extract::ExtractorVariant::MeasureResponse);
    }
    if (f.variant != "response") {
        variants.push_back(extract::ExtractorVariant::MeasurePredicate);
    }
    const std::uint64_t cs = proto->challenge_space_size();
    const bool unique = f.prover != "two-response";
    const auto v_hat = extract::single_run_acceptance(*proto, *prover, f.trials,
                                                      derive_seed(c.seed, kTrialStream, 1));

    Report rep;
    rep.config = {{"group", f.group}, {"protocol", proto->name()}, {"prover", prover->name()},
                  {"t", f.t},         {"trials", f.trials},        {"variant", f.variant},
                  {"x", iw.x}};
    if (f.prover == "partial") {
        rep.config["v"] = f.v;
    }
    if (f.prover == "rotating") {
        rep.config["scale"] = f.scale;
    }
    if (f.prover == "fixed-challenge") {
        rep.config["c_star"] = f.c_star;
    }
    rep.constants = {{"|C|", cs},
                     {"d", 2 * f.t - 1},
                     {"kappa", static_cast<double>(f.t * f.t) / static_cast<double>(cs)},
                     {"honest_floor", 1.0 - 2.0 * f.t * f.t / static_cast<double>(cs)}};
    rep.result = {{"acceptance", v_hat}, {"variants", nlohmann::json::object()}};
    rep.csv << "variant,trials,acceptance,extraction,bound,tolerance,validated,holds\n";
    std::vector<Proportion> successes;
    for (auto variant : variants) {
        const auto stats = extract::run_extractor(*proto, *prover, f.t, f.trials,
                                                  derive_seed(c.seed, kTrialStream, 2),
                                                  variant);
        const double bound = extract::extractor_bound(v_hat.mean(), f.t, cs);
        const double tol = extract::extractor_tolerance(stats.success, v_hat, f.t);
        bool holds = stats.success.mean() >= bound - tol;
        if (f.prover == "honest") {
            holds = holds && stats.success.mean() >=
                                 1.0 - 2.0 * f.t * f.t / static_cast<double>(cs) -
                                     3.0 * stats.success.stderr_();
        }
        holds = holds && stats.validated == stats.success.successes;
        nlohmann::json j = stats;
        j["bound"] = bound;
        j["tolerance"] = tol;
        j["holds"] = holds;
        rep.result["variants"][extract::to_string(variant)] = j;
        rep.csv << extract::to_string(variant) << ',' << f.trials << ',' << num(v_hat.mean())
                << ',' << num(stats.success.mean()) << ',' << num(bound) << ',' << num(tol)
                << ',' << stats.validated << ',' << (holds ? 1 : 0) << '\n';
        successes.push_back(stats.success);
        if (unique) {
            rep.check(holds);
        }
    }
    if (successes.size() == 2) {
        const double diff = successes[0].mean() - successes[1].mean();
        const double se = std::sqrt(successes[0].stderr_() * successes[0].stderr_() +
                                    successes[1].stderr_() * successes[1].stderr_());
        const bool agree = std::abs(diff) <= 3.0 * se + kInequalitySlack;
        rep.result["variant_difference"] = diff;
        rep.result["variants_agree"] = agree;
        if (unique) {
            rep.check(agree);
        }
    }
    return rep;
}

} // namespace

void register_sigma(CLI::App &app, Registry &reg) {
    {
        auto f = std::make_shared<FsReduceFlags>();
        CLI::App *sub = add_command(app, "fsreduce",
                                    "Fiat-Shamir adversary reduced to an interactive prover",
                                    reg.common);
        sub->add_option("--group", f->group, "subgroup order")->check(CLI::IsMember({11, 67}));
        sub->add_option("--adversary", f->adversary)
            ->check(CLI::IsMember({"honest", "guessing"}));
        sub->add_option("--mode", f->mode)->check(CLI::IsMember({"exact", "sampled"}));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        sub->add_option("--k-star", f->k_star, "guessing: commitment index");
        sub->add_option("--z-star", f->z_star, "guessing: response");
        reg.add(sub, [&reg, f] { return run_fsreduce(reg.common, *f); });
    }
    {
        auto f = std::make_shared<SigmaRunFlags>();
        CLI::App *sub = add_command(app, "sigma-run", "interactive soundness games", reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--protocol", f->protocol)
            ->check(CLI::IsMember({"schnorr", "rejecting", "two-response"}));
        sub->add_option("--beta", f->beta, "abort probability (rejecting)");
        sub->add_option("--prover", f->prover)
            ->check(CLI::IsMember({"honest", "challenge-guessing"}));
        sub->add_option("--mode", f->mode)->check(CLI::IsMember({"static", "adaptive"}));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        reg.add(sub, [&reg, f] { return run_sigma(reg.common, *f); });
    }
    {
        auto f = std::make_shared<ExtractFlags>();
        CLI::App *sub =
            add_command(app, "sigma-extract", "rewinding extractor on quantum provers",
                        reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--prover", f->prover)
            ->check(CLI::IsMember(
                {"honest", "partial", "rotating", "fixed-challenge", "two-response"}));
        sub->add_option("--t", f->t, "rounds")->check(CLI::Range(1, 8));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        sub->add_option("--variant", f->variant)
            ->check(CLI::IsMember({"response", "predicate", "both"}));
        sub->add_option("--v", f->v, "knowledge weight (partial)");
        sub->add_option("--scale", f->scale, "rotation scale (rotating)");
        sub->add_option("--c-star", f->c_star, "fixed challenge");
        reg.add(sub, [&reg, f] { return run_sigma_extract(reg.common, *f); });
    }
}

} // namespace qromlab::cli
