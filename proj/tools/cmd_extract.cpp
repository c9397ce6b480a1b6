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

#include <limits>

#include "cli_common.hpp"
#include "qromlab/extract/collapsing.hpp"
#include "qromlab/extract/projection_bounds.hpp"
#include "qromlab/extract/prover_library.hpp"
#include "qromlab/json_io.hpp"

namespace qromlab::cli {

namespace {

using extract::BoundCheck;

struct BoundsFlags {
    std::string lemma = "fvsv";
    unsigned t = 2;
    std::uint64_t instances = 1000;
    index_t dim = 4;
    unsigned n = 3;
    unsigned m = 2;
};

// |0><0| and |1><1| on a qubit with psi = |+>: V = 1/2 and, for t = 2, F = 1/4.
BoundCheck hand_case() {
    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(2, 1.0 / std::sqrt(2.0));
    return extract::projection_bound_check({p0, p1}, psi, 2);
}

Report run_bounds(const Common &c, const BoundsFlags &f) {
    if (f.dim == 0 || f.n == 0 || f.m == 0) {
        throw ConfigError("dim", "dim, n and m must be positive");
    }
    const bool two_part = f.lemma == "fvsv2";
    std::vector<BoundCheck> checks(f.instances);
    for (std::uint64_t i = 0; i < f.instances; ++i) {
        Rng rng = trial_rng(c.seed, i);
        if (two_part) {
            std::vector<std::vector<Eigen::MatrixXcd>> p(f.n);
            for (auto &row : p) {
                for (unsigned j = 0; j < f.m; ++j) {
                    row.push_back(extract::random_projector(f.dim, rng));
                }
            }
            checks[i] = extract::two_part_bound_check(p, extract::random_state(f.dim, rng));
        } else {
            std::vector<Eigen::MatrixXcd> p;
            for (unsigned j = 0; j < f.n; ++j) {
                p.push_back(extract::random_projector(f.dim, rng));
            }
            checks[i] = extract::projection_bound_check(p, extract::random_state(f.dim, rng), f.t);
        }
    }
    Report rep;
    rep.config = {{"lemma", f.lemma}, {"instances", f.instances}, {"dim", f.dim},
                  {"n", f.n}};
    if (two_part) {
        rep.config["m"] = f.m;
    } else {
        rep.config["t"] = f.t;
    }
    rep.constants = {{"exponent", two_part ? 6u : 2 * f.t - 1}, {"slack", kInequalitySlack}};
    extract::write_bound_csv_header(rep.csv);
    std::uint64_t violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < checks.size(); ++i) {
        extract::write_bound_csv_row(rep.csv, i, checks[i]);
        violations += checks[i].holds ? 0 : 1;
        min_margin = std::min(min_margin, checks[i].F - checks[i].bound);
    }
    const auto hand = hand_case();
    rep.result = {{"violations", violations}, {"min_margin", min_margin}, {"hand_case", hand}};
    rep.check(violations == 0);
    rep.check(hand.holds && std::abs(hand.V - 0.5) <= kInequalitySlack &&
              std::abs(hand.F - 0.25) <= kInequalitySlack);
    return rep;
}

struct CollapseFlags {
    std::string relation = "two-preimage";
    std::string distinguisher = "fourier";
    index_t dim = 8;
    std::uint64_t trials = 10000;
    unsigned group = 11;
    std::string protocol = "schnorr";
};

extract::CollapsingAdversary distinguish(extract::CollapsingAdversary adv,
                                         const std::string &name, std::uint64_t seed) {
    if (name == "fourier") {
        return extract::with_fourier_distinguisher(std::move(adv));
    }
    if (name == "blind") {
        return extract::with_blind_distinguisher(std::move(adv));
    }
    return extract::with_random_distinguisher(std::move(adv), derive_seed(seed, kOracleStream, 2));
}

// Fills the common part of a collapsing report and checks that the sampled
// advantage agrees with the exact one.
void collapse_common(Report &rep, const extract::CollapsingRelation &rel,
                     const extract::CollapsingAdversary &adv, const Common &c,
                     std::uint64_t trials) {
    const auto exact = extract::collapsing_game_exact(rel, adv);
    const auto sampled = extract::collapsing_report(adv.name, rel, adv, trials,
                                                    derive_seed(c.seed, kTrialStream, 1));
    rep.constants = {{"|X|", rel.dim_x()},
                     {"|Y|", rel.dim_y()},
                     {"max_partners", rel.max_partners()},
                     {"slack", kInequalitySlack}};
    rep.result = {{"exact", exact}, {"sampled", sampled}};
    extract::write_collapse_csv_header(rep.csv);
    extract::write_collapse_csv_row(rep.csv, sampled);
    rep.check(std::abs(sampled.advantage - exact.advantage) <=
              3.0 * sampled.stderr_ + kInequalitySlack);
    if (rel.max_partners() <= 1) {
        rep.check(std::abs(exact.advantage) <= kInequalitySlack);
    }
}

Report run_collapse(const Common &c, const CollapseFlags &f) {
    if (f.dim < 2) {
        throw ConfigError("dim", "must be at least 2");
    }
    const auto rel = f.relation == "bijective" ? extract::bijective_relation(f.dim, 1, 1)
                                               : extract::two_preimage_relation(f.dim);
    auto adv = f.relation == "bijective" ? extract::bijective_adversary(rel)
                                         : extract::two_preimage_adversary(rel);
    adv = distinguish(std::move(adv), f.distinguisher, c.seed);
    Report rep;
    collapse_common(rep, rel, adv, c, f.trials);
    rep.config = {{"relation", f.relation},
                  {"distinguisher", f.distinguisher},
                  {"dim", f.dim},
                  {"trials", f.trials}};
    if (f.relation == "two-preimage" && f.distinguisher == "fourier") {
        const auto &s = rep.result["sampled"];
        rep.check(std::abs(s["advantage"].get<double>() - 0.5) <=
                  3.0 * s["stderr"].get<double>() + kInequalitySlack);
    }
    return rep;
}

Report run_qcur(const Common &c, const CollapseFlags &f) {
    const auto group = make_group(f.group);
    std::shared_ptr<const sigma::SigmaProtocol> proto = group;
    if (f.protocol == "two-response") {
        proto = std::make_shared<sigma::TwoResponseSchnorr>(group);
    }
    Rng ri = trial_rng(c.seed, 0, kOracleStream);
    const auto iw = extract::nonzero_instance(*group, ri);
    auto setup = extract::qcur_setup(*proto, *group, iw.x);
    const auto adv = distinguish(std::move(setup.adversary), f.distinguisher, c.seed);
    Report rep;
    collapse_common(rep, setup.relation, adv, c, f.trials);
    rep.config = {{"group", f.group},
                  {"protocol", proto->name()},
                  {"distinguisher", f.distinguisher},
                  {"trials", f.trials},
                  {"x", iw.x}};
    return rep;
}

} // namespace

void register_extract(CLI::App &app, Registry &reg) {
    {
        auto f = std::make_shared<BoundsFlags>();
        CLI::App *sub = add_command(app, "bounds", "projector sequence inequalities on random "
                                                   "instances",
                                    reg.common);
        sub->add_option("--lemma", f->lemma)->check(CLI::IsMember({"fvsv", "fvsv2"}));
        sub->add_option("--t", f->t, "sequence length (fvsv)")->check(CLI::Range(1, 6));
        sub->add_option("--instances,--trials", f->instances)->check(CLI::Range(1, 10000000));
        sub->add_option("--dim", f->dim, "Hilbert space dimension")->check(CLI::Range(1, 64));
        sub->add_option("--n", f->n, "projectors (first index)")->check(CLI::Range(1, 16));
        sub->add_option("--m", f->m, "second index (fvsv2)")->check(CLI::Range(1, 16));
        reg.add(sub, [&reg, f] { return run_bounds(reg.common, *f); });
    }
    {
        auto f = std::make_shared<CollapseFlags>();
        CLI::App *sub = add_command(app, "collapse-game", "collapsing games on toy relations",
                                    reg.common);
        sub->add_option("--relation", f->relation)
            ->check(CLI::IsMember({"bijective", "two-preimage"}));
        sub->add_option("--distinguisher", f->distinguisher)
            ->check(CLI::IsMember({"fourier", "blind", "random"}));
        sub->add_option("--dim", f->dim, "|Y| (and |X| for bijective)")
            ->check(CLI::Range(2, 1 << 12));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        reg.add(sub, [&reg, f] { return run_collapse(reg.common, *f); });
    }
    {
        auto f = std::make_shared<CollapseFlags>();
        CLI::App *sub = add_command(app, "qcur", "unique-response collapsing check",
                                    reg.common);
        sub->add_option("--group", f->group)->check(CLI::IsMember({11, 67}));
        sub->add_option("--protocol", f->protocol)
            ->check(CLI::IsMember({"schnorr", "two-response"}));
        sub->add_option("--distinguisher", f->distinguisher)
            ->check(CLI::IsMember({"fourier", "blind", "random"}));
        sub->add_option("--trials", f->trials)->check(CLI::Range(1, 100000000));
        reg.add(sub, [&reg, f] { return run_qcur(reg.common, *f); });
    }
}

} // namespace qromlab::cli
