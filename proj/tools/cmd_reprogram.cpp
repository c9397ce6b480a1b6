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
#include "qromlab/adversary/library.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/reprogram/theorem1.hpp"

#include <fstream>
#include <limits>

namespace qromlab::cli {

namespace {

using adversary::OracleAlgorithm;
using adversary::QuantumPredicate;

const std::vector<std::string> kAdversaries = {"classical-query", "superposed-query",
                                               "guessing", "two-query-chain",
                                               "random-unitary"};

struct AdversaryFlags {
    std::string name = "classical-query";
    index_t dim_x = 2;
    unsigned n = 6;
    int q = -1;
    index_t target = 0;
};

void add_adversary_flags(CLI::App *sub, AdversaryFlags &f) {
    sub->add_option("--adversary", f.name, "library adversary")
        ->check(CLI::IsMember(kAdversaries));
    sub->add_option("--X", f.dim_x, "|X|")->check(CLI::Range(1, 1 << 12));
    sub->add_option("--n", f.n, "output bits, |Y| = 2^n")->check(CLI::Range(0, 16));
    sub->add_option("--q", f.q, "queries (random-unitary; checked for the others)");
    sub->add_option("--target", f.target, "point the fixed adversaries query");
}

OracleAlgorithm make_adversary(const AdversaryFlags &f, std::uint64_t seed) {
    if (f.target >= f.dim_x) {
        throw ConfigError("target", "must be below |X|");
    }
    auto fixed_q = [&](int q) {
        if (f.q >= 0 && f.q != q) {
            throw ConfigError("q", f.name + " makes exactly " + std::to_string(q) +
                                       " queries");
        }
    };
    if (f.name == "classical-query") {
        fixed_q(1);
        return adversary::classical_query_adversary(f.dim_x, f.n, f.target);
    }
    if (f.name == "superposed-query") {
        fixed_q(1);
        return adversary::superposed_query_adversary(
            std::vector<double>(f.dim_x, 1.0 / static_cast<double>(f.dim_x)), f.n);
    }
    if (f.name == "guessing") {
        fixed_q(0);
        return adversary::guessing_adversary(f.dim_x, f.n, f.target, 0);
    }
    if (f.name == "two-query-chain") {
        fixed_q(2);
        return adversary::two_query_chain_adversary(f.dim_x, f.n, f.target);
    }
    const int q = f.q < 0 ? 1 : f.q;
    if (q > 4) {
        throw ConfigError("q", "random-unitary supports q <= 4");
    }
    return adversary::random_unitary_adversary(derive_seed(seed, kOracleStream, 1),
                                               static_cast<index_t>(q), f.dim_x, f.n);
}

std::vector<QuantumPredicate> select_predicates(const std::string &name, index_t dim_z) {
    auto all = adversary::predicate_test_set(dim_z);
    if (name == "all") {
        return all;
    }
    for (auto &p : all) {
        if (p.name() == name) {
            return {p};
        }
    }
    throw ConfigError("predicate", "unknown predicate " + name);
}

nlohmann::json adversary_config(const AdversaryFlags &f, const OracleAlgorithm &a) {
    return nlohmann::json{{"adversary", f.name}, {"|X|", f.dim_x},  {"n", f.n},
                          {"q", a.q()},          {"target", f.target}};
}

Report run_lemma1(const Common &c, const AdversaryFlags &f, const std::string &predicate,
                  const std::string &x0_flag, const std::string &oracle_file,
                  bool exhaustive) {
    const OracleAlgorithm a = make_adversary(f, c.seed);
    const auto preds = select_predicates(predicate, a.layout().dim(qsim::Register::Z));
    std::vector<index_t> x0s;
    if (x0_flag == "all") {
        for (index_t x = 0; x < f.dim_x; ++x) {
            x0s.push_back(x);
        }
    } else {
        const index_t x0 = std::stoull(x0_flag);
        if (x0 >= f.dim_x) {
            throw ConfigError("x0", "must be below |X| or 'all'");
        }
        x0s.push_back(x0);
    }

    std::vector<oracle::FiniteFunction> oracles;
    if (!oracle_file.empty()) {
        if (exhaustive) {
            throw ConfigError("oracle-file", "cannot be combined with --exhaustive");
        }
        std::ifstream in(oracle_file);
        if (!in) {
            throw ConfigError("oracle-file", "cannot open " + oracle_file);
        }
        oracles.push_back(oracle::finite_function_from_json(nlohmann::json::parse(in)));
    } else if (exhaustive) {
        oracles = oracle::enumerate_all(f.dim_x, f.n);
    } else {
        oracles.push_back(oracle::sample_uniform(f.dim_x, f.n,
                                                 derive_seed(c.seed, kOracleStream, 0)));
    }

    Report rep;
    rep.config = adversary_config(f, a);
    rep.config["predicate"] = predicate;
    rep.config["x0"] = x0_flag;
    rep.config["exhaustive"] = exhaustive;
    rep.constants = {{"constant", reprogram::lemma1_constant(a.q())},
                     {"constant_formula", "2(q+1)(2q+3)"},
                     {"tail_formula", "term2/(2(q+1)|Y|)"},
                     {"slack", kInequalitySlack}};
    rep.csv << "h_index,adversary,predicate,q,x0,lhs,term1,term2,bound,holds\n";

    std::uint64_t cells = 0;
    std::uint64_t violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t hi = 0; hi < oracles.size(); ++hi) {
        for (index_t x0 : x0s) {
            for (const auto &r : reprogram::verify_lemma1_multi(a, oracles[hi], x0, preds)) {
                ++cells;
                violations += r.holds ? 0 : 1;
                min_margin = std::min(min_margin, r.lhs - r.bound);
                rep.csv << hi << ',' << r.adversary << ',' << r.predicate << ',' << r.q
                        << ',' << r.x0 << ',' << num(r.lhs) << ',' << num(r.term1) << ','
                        << num(r.term2) << ',' << num(r.bound) << ','
                        << (r.holds ? 1 : 0) << '\n';
                if (oracles.size() == 1) {
                    reports.push_back(r);
                }
            }
        }
    }
    rep.result = {{"oracles", oracles.size()},
                  {"cells", cells},
                  {"violations", violations},
                  {"min_margin", min_margin}};
    if (oracles.size() == 1) {
        rep.result["oracle"] = oracles.front();
        rep.result["reports"] = reports;
    }
    rep.check(violations == 0);
    return rep;
}

Report run_thm1(const Common &c, const AdversaryFlags &f, const std::string &predicate,
                std::uint64_t members) {
    const OracleAlgorithm a = make_adversary(f, c.seed);
    const auto preds = select_predicates(predicate, a.layout().dim(qsim::Register::Z));
    if (preds.size() != 1) {
        throw ConfigError("predicate", "thm1 takes a single predicate");
    }
    const auto r = reprogram::verify_thm1(a, preds.front(), members, c.seed);
    Report rep;
    rep.config = adversary_config(f, a);
    rep.config["predicate"] = predicate;
    rep.config["members"] = members;
    rep.constants = {{"constant", r.constant},
                     {"constant_formula", "2(q+1)(2q+3)"},
                     {"k", r.k},
                     {"additive_term", r.additive_term},
                     {"additive_term_tight", r.additive_term_tight},
                     {"slack", kInequalitySlack}};
    rep.result = r;
    rep.csv << "x0,family_lhs,family_lhs_stderr,uniform_lhs,family_direct,"
               "uniform_direct,rhs,holds,matches_uniform\n";
    for (const auto &p : r.per_x0) {
        rep.csv << p.x0 << ',' << num(p.family.lhs.mean) << ','
                << num(p.family.lhs.stderr_) << ',' << num(p.uniform.lhs.mean) << ','
                << num(p.family.direct.mean) << ',' << num(p.uniform.direct.mean) << ','
                << num(p.rhs) << ',' << (p.holds ? 1 : 0) << ','
                << (p.matches_uniform ? 1 : 0) << '\n';
    }
    rep.check(r.holds && r.family_matches_uniform && r.lemma_violations == 0);
    return rep;
}

} // namespace

void register_reprogram(CLI::App &app, Registry &reg) {
    {
        auto f = std::make_shared<AdversaryFlags>();
        auto predicate = std::make_shared<std::string>("all");
        auto x0 = std::make_shared<std::string>("all");
        auto oracle_file = std::make_shared<std::string>();
        auto exhaustive = std::make_shared<bool>(false);
        CLI::App *sub = add_command(app, "lemma1", "exact measure-and-reprogram check",
                                    reg.common);
        add_adversary_flags(sub, *f);
        sub->add_option("--predicate", *predicate, "predicate name or 'all'");
        sub->add_option("--x0", *x0, "x0 or 'all'");
        sub->add_option("--oracle-file", *oracle_file, "JSON oracle table");
        sub->add_flag("--exhaustive", *exhaustive, "every H: X -> {0,1}^n");
        reg.add(sub, [&reg, f, predicate, x0, oracle_file, exhaustive] {
            return run_lemma1(reg.common, *f, *predicate, *x0, *oracle_file, *exhaustive);
        });
    }
    {
        auto f = std::make_shared<AdversaryFlags>();
        f->dim_x = 8;
        f->n = 1;
        auto predicate = std::make_shared<std::string>("z=theta");
        auto members = std::make_shared<std::uint64_t>(200);
        CLI::App *sub = add_command(app, "thm1", "family-averaged reprogramming bound",
                                    reg.common);
        add_adversary_flags(sub, *f);
        sub->add_option("--predicate", *predicate, "predicate name");
        sub->add_option("--members", *members, "family members")->check(CLI::Range(2, 100000));
        reg.add(sub, [&reg, f, predicate, members] {
            return run_thm1(reg.common, *f, *predicate, *members);
        });
    }
}

} // namespace qromlab::cli
