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

#include <fstream>

#include "cli_common.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/signatures/games.hpp"

namespace qromlab::cli {

namespace {

using signatures::Scheme;

// Oracle shared by sign and verify: 4-wise independent, keyed by a seed.
oracle::KWiseFamilyMember keyed_oracle(const Scheme &scheme, std::uint64_t oracle_seed) {
    Rng rng = trial_rng(oracle_seed, 0, kOracleStream);
    return scheme.sample_oracle(4, rng);
}

nlohmann::json read_json(const std::string &field, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(field, "cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

void write_json(const std::string &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("path", "cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

signatures::Message parse_message(const std::string &hex) {
    signatures::Message m;
    try {
        m = signatures::from_hex(hex);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("message", e.what());
    }
    if (m.size() > signatures::MessageCodec::kMaxBytes) {
        throw ConfigError("message", "at most 3 bytes");
    }
    return m;
}

struct KeyFlags {
    unsigned group = 67;
    std::string key;
    std::string message;
    std::string sig;
    std::uint64_t oracle_seed = 0;
};

Report run_keygen(const Common &c, const KeyFlags &f) {
    const Scheme scheme(make_group(f.group));
    Rng rng = trial_rng(c.seed, 0);
    const auto key = scheme.keygen(rng);
    nlohmann::json j = key;
    j["group"] = f.group;
    if (!f.key.empty()) {
        write_json(f.key, j);
    }
    Report rep;
    rep.config = {{"group", f.group}};
    rep.result = {{"pk", key.pk}};
    return rep;
}

Report run_sign(const Common &c, const KeyFlags &f) {
    const auto kj = read_json("key", f.key);
    const unsigned group = kj.value("group", f.group);
    const Scheme scheme(make_group(group));
    const auto key = signatures::key_pair_from_json(kj);
    if (!scheme.schnorr().relation(key.pk, key.w)) {
        throw ConfigError("key", "secret key does not match pk");
    }
    const auto h = keyed_oracle(scheme, f.oracle_seed);
    Rng rng = trial_rng(c.seed, 0, kResponseStream);
    const auto s = scheme.sign(h, key, parse_message(f.message), rng);
    if (!f.sig.empty()) {
        write_json(f.sig, s);
    }
    Report rep;
    rep.config = {{"group", group}, {"oracle_seed", f.oracle_seed}, {"message", f.message}};
    rep.result = {{"pk", key.pk}, {"signature", s}};
    rep.check(scheme.verify(h, key.pk, s));
    return rep;
}

Report run_verify(const Common &, const KeyFlags &f) {
    const auto kj = read_json("key", f.key);
    const unsigned group = kj.value("group", f.group);
    const Scheme scheme(make_group(group));
    const std::uint64_t pk = kj.at("pk").get<std::uint64_t>();
    const auto s = signatures::signature_from_json(read_json("sig", f.sig));
    const bool ok = scheme.verify(keyed_oracle(scheme, f.oracle_seed), pk, s);
    Report rep;
    rep.config = {{"group", group}, {"oracle_seed", f.oracle_seed}};
    rep.result = {{"pk", pk}, {"signature", s}, {"valid", ok}};
    rep.check(ok);
    return rep;
}

struct GameFlags {
    unsigned group = 67;
    std::string forger = "challenge-guessing";
    unsigned q = 4;
    std::uint64_t max_queries = 4;
    std::uint64_t trials = 10000;
    bool pipeline = false;
};

Report run_nma(const Common &c, const GameFlags &f) {
    const Scheme scheme(make_group(f.group));
    std::unique_ptr<signatures::NmaForger> forger;
    if (f.forger == "honest") {
        forger = std::make_unique<signatures::HonestNmaForger>();
    } else if (f.forger == "junk") {
        forger = std::make_unique<signatures::JunkNmaForger>();
    } else {
        forger = std::make_unique<signatures::GuessingNmaForger>(f.q);
    }
    const double cs = static_cast<double>(scheme.schnorr().challenge_space_size());
    const auto r = signatures::nma_game(scheme, *forger, f.trials,
                                        derive_seed(c.seed, kTrialStream, 1));
    Report rep;
    rep.config = {{"group", f.group}, {"forger", f.forger}, {"trials", f.trials}};
    if (f.forger == "challenge-guessing") {
        rep.config["q"] = f.q;
    }
    const double guess = static_cast<double>(forger->queries()) / cs;
    rep.constants = {{"|C|", scheme.schnorr().challenge_space_size()},
                     {"r", scheme.schnorr().r()},
                     {"q_over_C", guess},
                     {"guess_exact", 1.0 - std::pow(1.0 - 1.0 / cs, forger->queries())}};
    rep.result = r;
    if (f.forger == "honest") {
        rep.check(r.forgeries.successes == r.forgeries.trials);
    } else if (f.forger == "challenge-guessing") {
        rep.check(within_3sigma(r.forgeries, guess));
    } else {
        rep.check(r.forgeries.mean() <= 1.0 / cs + 3.0 * r.forgeries.stderr_());
    }
    rep.csv << "forger,trials,forgeries,rate,stderr\n"
            << r.forger << ',' << r.forgeries.trials << ',' << r.forgeries.successes << ','
            << num(r.forgeries.mean()) << ',' << num(r.forgeries.stderr_()) << '\n';
    if (f.pipeline) {
        const auto p = signatures::nma_extraction_pipeline(
            scheme, f.trials, derive_seed(c.seed, kTrialStream, 2));
        rep.result["pipeline"] = p;
        rep.check(p.consistent);
    }
    return rep;
}

Report run_cma(const Common &c, const GameFlags &f) {
    const Scheme scheme(make_group(f.group));
    std::unique_ptr<signatures::CmaForger> forger;
    if (f.forger == "replay") {
        forger = std::make_unique<signatures::ReplayForger>();
    } else if (f.forger == "rerandomize") {
        forger = std::make_unique<signatures::RerandomizeForger>();
    } else {
        forger = std::make_unique<signatures::HonestCmaForger>();
    }
    if (f.max_queries == 0) {
        throw ConfigError("max-queries", f.forger + " needs at least one signing query");
    }
    const double cs = static_cast<double>(scheme.schnorr().challenge_space_size());
    const auto r = signatures::cma_game(scheme, *forger, f.max_queries, f.trials,
                                        derive_seed(c.seed, kTrialStream, 1));
    Report rep;
    rep.config = {{"group", f.group},
                  {"forger", f.forger},
                  {"max_queries", f.max_queries},
                  {"trials", f.trials}};
    rep.constants = {{"|C|", scheme.schnorr().challenge_space_size()}};
    rep.result = r;
    if (f.forger == "honest") {
        rep.check(r.forgeries.successes == r.forgeries.trials);
    } else if (f.forger == "replay") {
        rep.check(r.forgeries.successes == 0 && r.replays == r.forgeries.trials);
    } else {
        rep.check(r.forgeries.mean() <= 1.0 / cs + 3.0 * r.forgeries.stderr_());
    }
    rep.csv << "forger,trials,forgeries,replays\n"
            << r.forger << ',' << r.forgeries.trials << ',' << r.forgeries.successes << ','
            << r.replays << '\n';
    return rep;
}

Report run_sig_check(const Common &c, const GameFlags &f) {
    const Scheme scheme(make_group(f.group));
    const double cs = static_cast<double>(scheme.schnorr().challenge_space_size());
    const auto rt =
        signatures::round_trip_check(scheme, f.trials, derive_seed(c.seed, kTrialStream, 1));
    const auto mut =
        signatures::mutation_check(scheme, f.trials, derive_seed(c.seed, kTrialStream, 2));
    Report rep;
    rep.config = {{"group", f.group}, {"trials", f.trials}};
    rep.constants = {{"|C|", scheme.schnorr().challenge_space_size()},
                     {"mutation_limit", 2.0 / cs}};
    rep.result = {{"round_trips", rt},
                  {"mutations", {{"trials", mut.trials}, {"accepted", mut.accepted},
                                 {"rate", mut.rate()}}}};
    rep.check(rt.successes == rt.trials);
    rep.check(mut.rate() <= 2.0 / cs);
    rep.csv << "check,trials,accepted\n"
            << "round-trip," << rt.trials << ',' << rt.successes << '\n'
            << "mutation," << mut.trials << ',' << mut.accepted << '\n';
    return rep;
}

} // namespace

void register_signatures(CLI::App &app, Registry &reg) {
    {
        auto f = std::make_shared<KeyFlags>();
        CLI::App *sub = add_command(app, "keygen", "Schnorr key pair", reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--key", f->key, "write the key pair here");
        reg.add(sub, [&reg, f] { return run_keygen(reg.common, *f); });
    }
    {
        auto f = std::make_shared<KeyFlags>();
        CLI::App *sub = add_command(app, "sign", "sign a message of up to 3 bytes", reg.common);
        sub->add_option("--key", f->key, "key pair file")->required();
        sub->add_option("--message", f->message, "hex message")->required();
        sub->add_option("--sig", f->sig, "write the signature here");
        sub->add_option("--oracle-seed", f->oracle_seed, "seed of the hash oracle");
        reg.add(sub, [&reg, f] { return run_sign(reg.common, *f); });
    }
    {
        auto f = std::make_shared<KeyFlags>();
        CLI::App *sub = add_command(app, "verify", "exit 0 iff the signature verifies",
                                    reg.common);
        sub->add_option("--key", f->key, "key file (only pk is read)")->required();
        sub->add_option("--sig", f->sig, "signature file")->required();
        sub->add_option("--oracle-seed", f->oracle_seed, "seed of the hash oracle");
        reg.add(sub, [&reg, f] { return run_verify(reg.common, *f); });
    }
    {
        auto f = std::make_shared<GameFlags>();
        CLI::App *sub = add_command(app, "nma-game", "no-message-attack forgery game",
                                    reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--forger", f->forger)
            ->check(CLI::IsMember({"honest", "challenge-guessing", "junk"}));
        sub->add_option("--q", f->q, "oracle queries of the guessing forger")
            ->check(CLI::Range(1, 64));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        sub->add_flag("--pipeline", f->pipeline, "also run forger -> reduction -> extractor");
        reg.add(sub, [&reg, f] { return run_nma(reg.common, *f); });
    }
    {
        auto f = std::make_shared<GameFlags>();
        f->forger = "replay";
        CLI::App *sub = add_command(app, "cma-game", "strong unforgeability game", reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--forger", f->forger)
            ->check(CLI::IsMember({"replay", "rerandomize", "honest"}));
        sub->add_option("--max-queries", f->max_queries)->check(CLI::Range(0, 64));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        reg.add(sub, [&reg, f] { return run_cma(reg.common, *f); });
    }
    {
        auto f = std::make_shared<GameFlags>();
        f->trials = 1000;
        CLI::App *sub = add_command(app, "sig-check", "round trips and byte mutations",
                                    reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        reg.add(sub, [&reg, f] { return run_sig_check(reg.common, *f); });
    }
}

} // namespace qromlab::cli
