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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "qromlab/adversary/library.hpp"
#include "qromlab/extract/collapsing.hpp"
#include "qromlab/extract/extractor.hpp"
#include "qromlab/extract/projection_bounds.hpp"
#include "qromlab/extract/prover_library.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/reprogram/theorem1.hpp"
#include "qromlab/sigma/fiat_shamir.hpp"
#include "qromlab/sigma/reduction.hpp"
#include "qromlab/signatures/games.hpp"

#ifndef QROMLAB_CLI
#error "QROMLAB_CLI must name the CLI binary"
#endif

using namespace qromlab;

namespace {

constexpr std::uint64_t kSeed = 20261016;
constexpr double kSlack = 1e-9;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

bool within(double value, double target, double sigma) {
    return std::abs(value - target) <= 3.0 * sigma + kSlack;
}

// Exhaustive sweep on |X| = 2, |Y| = 4 plus the |Y| = 64 closed form.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<adversary::OracleAlgorithm> lib;
    for (index_t x = 0; x < 2; ++x) {
        lib.push_back(adversary::classical_query_adversary(2, 2, x));
        lib.push_back(adversary::guessing_adversary(2, 2, x, 3));
        lib.push_back(adversary::two_query_chain_adversary(2, 2, x));
    }
    lib.push_back(adversary::superposed_query_adversary({0.5, 0.5}, 2));
    lib.push_back(adversary::superposed_query_adversary({0.2, 0.8}, 2));
    for (index_t q = 1; q <= 2; ++q) {
        lib.push_back(adversary::random_unitary_adversary(kSeed + q, q, 2, 2));
    }
    std::uint64_t cells = 0;
    std::uint64_t violations = 0;
    for (const auto &a : lib) {
        const auto preds =
            adversary::predicate_test_set(a.layout().dim(qsim::Register::Z));
        for (const auto &h : oracle::enumerate_all(2, 2)) {
            for (index_t x0 = 0; x0 < 2; ++x0) {
                for (const auto &r : reprogram::verify_lemma1_multi(a, h, x0, preds)) {
                    ++cells;
                    violations += r.holds ? 0 : 1;
                }
            }
        }
    }
    const auto h = oracle::sample_uniform(2, 6, kSeed);
    const auto v = adversary::z_equals_theta(64);
    const auto cq = adversary::classical_query_adversary(2, 6, 0);
    const double lhs = reprogram::lemma1_lhs(cq, h, 0, v);
    const auto rhs = reprogram::lemma1_rhs(cq, h, 0, v);
    const bool closed = std::abs(lhs - 0.26171875) <= 1e-12 &&
                        std::abs(rhs.bound - (1.0 / 20.0 - 1.0 / 256.0)) <= 1e-12;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {violations == 0 && closed && secs < 60.0,
            std::to_string(cells) + " cells, " + std::to_string(violations) +
                " violations; closed form lhs=" + fmt(lhs) + " bound=" + fmt(rhs.bound) +
                "; " + fmt(secs) + "s"};
}

// 20 Haar-random adversaries with total dimension 2^14.
Outcome criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t cells = 0;
    std::uint64_t violations = 0;
    index_t max_dim = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const index_t q = 1 + s % 2;
        const auto a = adversary::random_unitary_adversary(kSeed + 100 + s, q, 2, 6);
        max_dim = std::max(max_dim, a.layout().total());
        const auto h = oracle::sample_uniform(2, 6, derive_seed(kSeed, kOracleStream, s));
        const auto preds = adversary::predicate_test_set(a.layout().dim(qsim::Register::Z));
        for (index_t x0 = 0; x0 < 2; ++x0) {
            for (const auto &r : reprogram::verify_lemma1_multi(a, h, x0, preds)) {
                ++cells;
                violations += r.holds ? 0 : 1;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {violations == 0 && max_dim <= (index_t{1} << 14) && secs < 600.0,
            "20 adversaries, " + std::to_string(cells) + " cells, " +
                std::to_string(violations) + " violations, max dim " +
                std::to_string(max_dim) + "; " + fmt(secs) + "s"};
}

Outcome criterion3() {
    const std::vector<adversary::OracleAlgorithm> lib{
        adversary::classical_query_adversary(2, 4, 0),
        adversary::superposed_query_adversary({0.5, 0.5}, 4),
        adversary::guessing_adversary(2, 4, 1, 5),
        adversary::two_query_chain_adversary(2, 4, 0),
        adversary::random_unitary_adversary(kSeed, 1, 2, 4),
        adversary::random_unitary_adversary(kSeed + 1, 2, 2, 4)};
    int ok = 0;
    std::string failed;
    for (std::size_t i = 0; i < lib.size(); ++i) {
        const auto &a = lib[i];
        const auto preds = adversary::predicate_test_set(a.layout().dim(qsim::Register::Z));
        const auto r = reprogram::verify_thm1(a, preds[1], 200, derive_seed(kSeed, kTrialStream, i));
        const index_t dy = a.layout().dim(qsim::Register::Y);
        const double expect_add =
            a.q() == 0 ? 1.0 / (2.0 * dy) : 1.0 / (2.0 * static_cast<double>(a.q()) * dy);
        const bool good = r.holds && r.family_matches_uniform && r.lemma_violations == 0 &&
                          r.members >= 200 &&
                          std::abs(r.constant - reprogram::lemma1_constant(a.q())) <= kSlack &&
                          std::abs(r.additive_term - expect_add) <= kSlack;
        ok += good ? 1 : 0;
        if (!good) {
            failed += " " + r.adversary;
        }
    }
    return {ok == static_cast<int>(lib.size()),
            std::to_string(ok) + "/" + std::to_string(lib.size()) +
                " adversaries hold with 200 members and match uniform" +
                (failed.empty() ? "" : "; failed:" + failed)};
}

Outcome criterion4() {
    const auto schnorr = sigma::schnorr_group_67();
    Rng ri = trial_rng(kSeed, 0);
    const auto iw = extract::nonzero_instance(*schnorr, ri);
    Rng ro = trial_rng(kSeed, 0, kOracleStream);
    const auto enc = sigma::PairEncoding::for_protocol(*schnorr);
    const auto h = oracle::KWiseFamilyMember::sample(4, enc.domain_size(), 6, ro);
    auto slice = sigma::make_fs_slice(schnorr, h, iw.x);
    auto a = std::make_shared<const adversary::OracleAlgorithm>(
        sigma::honest_fs_adversary(slice, iw.w));
    const sigma::ReducedSigmaAdversary reduced(a, std::move(slice));
    const auto p = reduced.acceptance_sampled(10000, derive_seed(kSeed, kTrialStream, 1));
    const double target = 1.0 / 20.0 - 1.0 / 256.0;
    return {p.mean() >= target - 3.0 * p.stderr_() - kSlack,
            "frequency " + fmt(p.mean()) + " +- " + fmt(p.stderr_()) + " vs " + fmt(target)};
}

Outcome criterion5() {
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng = trial_rng(kSeed, i);
        const unsigned t = 2 + static_cast<unsigned>(i % 2);
        const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 6));
        const index_t dim = 1 + uniform_below(rng, 16);
        std::vector<Eigen::MatrixXcd> ps;
        for (unsigned j = 0; j < n; ++j) {
            ps.push_back(extract::random_projector(dim, rng));
        }
        violations += extract::projection_bound_check(ps, extract::random_state(dim, rng), t)
                              .holds
                          ? 0
                          : 1;
    }
    std::uint64_t violations2 = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = trial_rng(kSeed, i, kMeasurementStream);
        const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 3));
        const unsigned m = 1 + static_cast<unsigned>(uniform_below(rng, 3));
        const index_t dim = 1 + uniform_below(rng, 8);
        std::vector<std::vector<Eigen::MatrixXcd>> ps(n);
        for (auto &row : ps) {
            for (unsigned j = 0; j < m; ++j) {
                row.push_back(extract::random_projector(dim, rng));
            }
        }
        violations2 += extract::two_part_bound_check(ps, extract::random_state(dim, rng)).holds
                           ? 0
                           : 1;
    }
    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(2, 1.0 / std::sqrt(2.0));
    const auto hand = extract::projection_bound_check({p0, p1}, plus, 2);
    const bool hand_ok = hand.holds && std::abs(hand.V - 0.5) <= kSlack &&
                         std::abs(hand.F - 0.25) <= kSlack;
    return {violations == 0 && violations2 == 0 && hand_ok,
            std::to_string(violations) + "/1000 and " + std::to_string(violations2) +
                "/500 violations; hand case V=" + fmt(hand.V) + " F=" + fmt(hand.F)};
}

struct ExtractorRun {
    Proportion v;
    extract::ExtractorStats e;
};

ExtractorRun run_prover(const sigma::Schnorr &s, const sigma::QuantumProver &p,
                        std::uint64_t trials, std::uint64_t salt) {
    return {extract::single_run_acceptance(s, p, trials, derive_seed(kSeed, salt, 1)),
            extract::run_extractor(s, p, 2, trials, derive_seed(kSeed, salt, 2))};
}

Outcome criterion6() {
    const auto s = sigma::schnorr_group_67();
    Rng ri = trial_rng(kSeed, 6);
    const auto iw = extract::nonzero_instance(*s, ri);
    const auto p = extract::honest_quantum_prover(s, iw);
    const auto st = extract::run_extractor(*s, *p, 2, 10000, derive_seed(kSeed, 6, 2));
    const double target = 1.0 - 2.0 * 4.0 / 64.0;
    const bool dlog = s->brute_force_dlog(iw.x) == iw.w;
    return {st.success.mean() >= target && st.validated == st.success.successes && dlog,
            "extraction " + fmt(st.success.mean()) + " vs " + fmt(target) + ", validated " +
                std::to_string(st.validated) + "/" + std::to_string(st.success.successes)};
}

Outcome criterion7() {
    const auto s = sigma::schnorr_group_67();
    Rng ri = trial_rng(kSeed, 7);
    const auto iw = extract::nonzero_instance(*s, ri);
    const std::vector<std::shared_ptr<extract::SchnorrQuantumProver>> provers{
        extract::honest_quantum_prover(s, iw), extract::partial_prover(s, iw, 0.5),
        extract::partial_prover(s, iw, 0.8), extract::rotating_prover(s, iw, 0.5),
        extract::fixed_challenge_prover(s, iw, 3)};
    int ok = 0;
    std::string detail;
    for (std::size_t i = 0; i < provers.size(); ++i) {
        const auto r = run_prover(*s, *provers[i], 3000, 70 + i);
        const double bound = extract::extractor_bound(r.v.mean(), 2, 64);
        const double tol = extract::extractor_tolerance(r.e.success, r.v, 2);
        const bool good = r.e.success.mean() >= bound - tol &&
                          r.e.validated == r.e.success.successes;
        ok += good ? 1 : 0;
        detail += " " + provers[i]->name() + ":" + fmt(r.e.success.mean()) + ">=" +
                  fmt(bound);
    }
    return {ok == static_cast<int>(provers.size()),
            std::to_string(ok) + "/" + std::to_string(provers.size()) + " provers;" + detail};
}

Outcome criterion8() {
    const signatures::Scheme scheme(sigma::schnorr_group_67());
    const auto rt = signatures::round_trip_check(scheme, 1000, derive_seed(kSeed, 8, 1));
    const auto mu = signatures::mutation_check(scheme, 1000, derive_seed(kSeed, 8, 2));
    const auto nma = signatures::nma_game(scheme, signatures::GuessingNmaForger(4), 10000,
                                          derive_seed(kSeed, 8, 3));
    const double p = 4.0 / 64.0;
    const auto cma = signatures::cma_game(scheme, signatures::ReplayForger{}, 4, 1000,
                                          derive_seed(kSeed, 8, 4));
    const bool ok = rt.successes == 1000 && mu.rate() <= 2.0 / 64.0 &&
                    within(nma.forgeries.mean(), p, std::sqrt(p * (1 - p) / 10000.0)) &&
                    cma.forgeries.successes == 0 && cma.replays == cma.forgeries.trials;
    return {ok, "round trips " + std::to_string(rt.successes) + "/1000, mutation rate " +
                    fmt(mu.rate()) + ", nma " + fmt(nma.forgeries.mean()) + " vs " + fmt(p) +
                    ", cma forgeries " + std::to_string(cma.forgeries.successes) +
                    " replays " + std::to_string(cma.replays)};
}

Outcome criterion9() {
    const auto bij = extract::bijective_relation(8, 3, 1);
    const double bij_adv =
        extract::collapsing_game_exact(
            bij, extract::with_fourier_distinguisher(extract::bijective_adversary(bij)))
            .advantage;

    const auto two = extract::two_preimage_relation(8);
    const auto rep = extract::collapsing_report(
        "two-preimage", two,
        extract::with_fourier_distinguisher(extract::two_preimage_adversary(two)), 10000,
        derive_seed(kSeed, 9, 1));

    const auto g = sigma::schnorr_group_11();
    double worst = 0.0;
    for (std::uint64_t w = 1; w < g->r(); ++w) {
        auto setup = extract::qcur_setup(*g, *g, g->exp(w));
        const auto adv = extract::with_fourier_distinguisher(std::move(setup.adversary));
        worst = std::max(worst,
                         std::abs(extract::collapsing_game_exact(setup.relation, adv).advantage));
    }
    const bool ok = std::abs(bij_adv) <= 1e-12 && within(rep.advantage, 0.5, rep.stderr_) &&
                    worst <= 1e-12;
    return {ok, "bijective " + fmt(bij_adv) + ", two-preimage " + fmt(rep.advantage) +
                    " +- " + fmt(rep.stderr_) + ", schnorr r=11 max |adv| " + fmt(worst)};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs a CLI invocation writing JSON and CSV to files; returns both contents.
std::string run_cli(const std::string &args, const std::filesystem::path &dir, int tag) {
    const auto out = dir / ("out" + std::to_string(tag) + ".json");
    const auto csv = dir / ("out" + std::to_string(tag) + ".csv");
    const std::string cmd = std::string("\"") + QROMLAB_CLI + "\" " + args + " --out \"" +
                            out.string() + "\" --csv \"" + csv.string() + "\"";
    const int rc = std::system(cmd.c_str());
    return std::to_string(rc) + "\n" + slurp(out) + "\n" + slurp(csv);
}

Outcome criterion10() {
    const std::vector<std::string> commands{
        "lemma1 --adversary classical-query --X 2 --n 6 --q 1 --seed 7",
        "lemma1 --adversary random-unitary --X 2 --n 3 --q 2 --seed 3",
        "thm1 --adversary guessing --X 2 --n 3 --members 50 --seed 4",
        "fsreduce --group 11 --adversary honest --seed 5",
        "fsreduce --group 11 --adversary honest --mode sampled --trials 300 --seed 5",
        "sigma-run --group 67 --trials 500 --seed 6",
        "sigma-run --prover challenge-guessing --mode adaptive --trials 2000 --seed 6",
        "sigma-extract --prover partial --v 0.6 --trials 300 --variant both --seed 8",
        "keygen --group 11 --key KEY --seed 9",
        "nma-game --forger challenge-guessing --trials 500 --seed 10",
        "cma-game --forger replay --trials 200 --seed 11",
        "sig-check --trials 100 --seed 12",
        "bounds --lemma fvsv --t 3 --trials 200 --seed 7",
        "bounds --lemma fvsv2 --trials 50 --seed 7",
        "collapse-game --relation two-preimage --distinguisher random --trials 500 --seed 13",
        "qcur --group 11 --protocol two-response --trials 500 --seed 14"};
    const auto dir = std::filesystem::temp_directory_path() /
                     ("qromlab_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    int same = 0;
    std::string diff;
    for (const auto &c : commands) {
        std::string args = c;
        if (const auto k = args.find("KEY"); k != std::string::npos) {
            args.replace(k, 3, (dir / "key.json").string());
        }
        const std::string a = run_cli(args, dir, 1);
        const std::string b = run_cli(args, dir, 2);
        const bool ok = a == b && a.rfind("0\n", 0) == 0;
        same += ok ? 1 : 0;
        if (!ok) {
            diff += " [" + c.substr(0, c.find(' ')) + "]";
        }
    }
    std::filesystem::remove_all(dir);
    return {same == static_cast<int>(commands.size()),
            std::to_string(same) + "/" + std::to_string(commands.size()) +
                " subcommands byte-identical with exit 0" + diff};
}

} // namespace

int main(int argc, char **argv) {
    qsim::set_warning_handler(nullptr);
    const std::array<std::function<Outcome()>, 10> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10};
    // Optional argument: run a single criterion.
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        if (only != 0 && only != i + 1) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
