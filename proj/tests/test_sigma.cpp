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

#include "doctest.h"

#include "qromlab/extract/prover_library.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/sigma/fiat_shamir.hpp"
#include "qromlab/sigma/games.hpp"
#include "qromlab/sigma/modarith.hpp"
#include "qromlab/sigma/reduction.hpp"

using namespace qromlab;
using namespace qromlab::sigma;

namespace {

oracle::KWiseFamilyMember fs_oracle(const SigmaProtocol &s, std::uint64_t seed) {
    Rng ro = trial_rng(seed, 0, kOracleStream);
    const auto enc = PairEncoding::for_protocol(s);
    return oracle::KWiseFamilyMember::sample(4, enc.domain_size(),
                                             ceil_log2(s.challenge_space_size()), ro);
}

} // namespace

TEST_CASE("modular arithmetic") {
    CHECK(powmod(16, 67, 269) == 1);
    CHECK(powmod(2, 11, 23) == 1);
    CHECK(mulmod(invmod(5, 67), 5, 67) == 1);
    CHECK(is_prime(269));
    CHECK_FALSE(is_prime(267));
    CHECK(multiplicative_order(16, 269) == 67);
    CHECK(multiplicative_order(2, 23) == 11);
}

TEST_CASE("standard groups") {
    const auto g67 = schnorr_group_67();
    CHECK(g67->p() == 269);
    CHECK(g67->r() == 67);
    CHECK(g67->challenge_space_size() == 64);
    const auto g11 = schnorr_group_11();
    CHECK(g11->r() == 11);
    CHECK(g11->challenge_space_size() == 8);
    CHECK_THROWS(Schnorr(267, 2));
    CHECK_FALSE(g11->in_language(g11->non_member()));
    for (std::uint64_t w = 0; w < 11; ++w) {
        CHECK(g11->brute_force_dlog(g11->exp(w)) == w);
    }
}

TEST_CASE("Schnorr completeness and special soundness") {
    const auto s = schnorr_group_67();
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto iw = s->generate(rng);
        CHECK(s->relation(iw.x, iw.w));
        const auto t1 = honest_run(*s, iw.x, iw.w, rng);
        CHECK(t1.accept);
        Transcript t2 = t1;
        t2.c = (t1.c + 1) % s->challenge_space_size();
        // Same y: z2 - z1 = (c2 - c1) w.
        t2.z = (*t1.z + (t2.c + s->r() - t1.c) % s->r() * iw.w) % s->r();
        t2.accept = s->verify(iw.x, t2.a, t2.c, *t2.z);
        REQUIRE(t2.accept);
        const auto e = s->extract(iw.x, {t1, t2});
        REQUIRE(e.witness.has_value());
        CHECK(*e.witness == iw.w);
        CHECK(s->extract(iw.x, {t1, t1}).failure == "collision");
    }
}

TEST_CASE("rejecting protocol: expected iterations") {
    const auto s = schnorr_group_67();
    const RejectingProtocol rp(s, 0.25);
    CHECK(rp.correctness() == doctest::Approx(0.75));
    const auto h = fs_oracle(rp, 1);
    Rng ri(2);
    const auto iw = rp.generate(ri);
    double total = 0.0;
    constexpr int kRuns = 4000;
    for (int i = 0; i < kRuns; ++i) {
        Rng rng = trial_rng(3, i);
        const auto r = fs_prove(rp, h, iw.x, iw.w, 1000, rng);
        REQUIRE(r.proof.has_value());
        CHECK(fs_verify(rp, h, iw.x, r.proof));
        total += static_cast<double>(r.iterations);
    }
    // Geometric with mean 4/3 and variance 4/9.
    CHECK(std::abs(total / kRuns - 4.0 / 3.0) <= 4.0 * std::sqrt(4.0 / 9.0 / kRuns));

    const RejectingProtocol always(s, 1.0);
    Rng rng(5);
    const auto r = fs_prove(always, h, iw.x, iw.w, 7, rng);
    CHECK_FALSE(r.proof.has_value());
    CHECK(r.iterations == 7);
}

TEST_CASE("Fiat-Shamir prove and verify") {
    const auto s = schnorr_group_67();
    const auto h = fs_oracle(*s, 9);
    Rng rng(1);
    const auto iw = s->generate(rng);
    const auto r = fs_prove(*s, h, iw.x, iw.w, 1, rng);
    REQUIRE(r.proof.has_value());
    CHECK(r.iterations == 1);
    CHECK(fs_verify(*s, h, iw.x, r.proof));
    CHECK_FALSE(fs_verify(*s, h, iw.x, std::nullopt));
    FSProof bad = *r.proof;
    bad.z ^= 1;
    CHECK_FALSE(fs_verify(*s, h, iw.x, bad));
    bad = *r.proof;
    bad.a = s->p() + 1;
    CHECK_FALSE(fs_verify(*s, h, iw.x, bad));
    CHECK_THROWS_AS(fs_prove(*s, h, iw.x, (iw.w + 1) % s->r(), 1, rng), std::invalid_argument);

    nlohmann::json j = *r.proof;
    CHECK(fs_proof_from_json(j) == *r.proof);
}

TEST_CASE("two-response protocol accepts both responses") {
    const auto s = schnorr_group_11();
    const TwoResponseSchnorr tr(s);
    Rng rng(6);
    const auto iw = tr.generate(rng);
    for (int i = 0; i < 50; ++i) {
        const auto t = honest_run(tr, iw.x, iw.w, rng);
        REQUIRE(t.accept);
        CHECK(tr.verify(iw.x, t.a, t.c, *t.z ^ 1));
    }
}

TEST_CASE("soundness games") {
    const auto s = schnorr_group_67();
    Rng ri(2);
    const auto iw = s->generate(ri);
    const HonestProver honest(s, iw);
    const auto h = soundness_game(*s, honest, SoundnessMode::Static, 500, 1, iw.x);
    CHECK(h.accept.successes == 500);
    CHECK(h.cheat.successes == 0);

    const ChallengeGuessingProver guess(s);
    const auto g = soundness_game(*s, guess, SoundnessMode::Adaptive, 20000, 3);
    const double p = 1.0 / 64.0;
    CHECK(std::abs(g.cheat.mean() - p) <= 3.0 * std::sqrt(p * (1 - p) / 20000.0));
    CHECK(g.cheat.successes == g.accept.successes);

    const auto d = decomposition_check(*s, guess, 2000, 4);
    CHECK(d.recombined_successes == d.adaptive.successes);
    CHECK(d.groups > 1);
}

TEST_CASE("interact is deterministic per trial") {
    const auto s = schnorr_group_11();
    Rng ri(2);
    const auto iw = s->generate(ri);
    const HonestProver honest(s, iw);
    const auto a = interact(*s, honest, iw.x, 8, 3);
    const auto b = interact(*s, honest, iw.x, 8, 3);
    CHECK(a.a == b.a);
    CHECK(a.c == b.c);
    CHECK(a.z == b.z);
}

TEST_CASE("measure-and-reprogram reduction on the small group") {
    const auto s = schnorr_group_11();
    Rng ri = trial_rng(7, 0);
    const auto iw = extract::nonzero_instance(*s, ri);
    CHECK(iw.w != 0);
    const auto h = fs_oracle(*s, 7);
    auto slice = make_fs_slice(s, h, iw.x);
    CHECK(slice.commitments.size() == 11);

    SUBCASE("honest") {
        auto a = std::make_shared<const adversary::OracleAlgorithm>(
            honest_fs_adversary(slice, iw.w));
        const ReducedSigmaAdversary reduced(a, slice);
        const auto r = fs_reduce_exact(reduced);
        CHECK(r.q == 1);
        CHECK(r.constant == reprogram::lemma1_constant(1));
        CHECK(r.holds);
        CHECK(r.fs_direct_total == doctest::Approx(1.0));
        CHECK(r.sigma_total >= 1.0 / 20.0 - 1.0 / (4.0 * 8.0) - 1e-9);
        for (const auto &row : r.rows) {
            CHECK(row.holds);
        }
        const auto p = reduced.acceptance_sampled(2000, 5);
        CHECK(std::abs(p.mean() - r.sigma_total) <= 4.0 * p.stderr_() + 1e-9);
    }
    SUBCASE("guessing") {
        auto a = std::make_shared<const adversary::OracleAlgorithm>(
            guessing_fs_adversary(slice, 2, 5));
        const ReducedSigmaAdversary reduced(a, slice);
        const auto r = fs_reduce_exact(reduced);
        CHECK(r.q == 0);
        CHECK(r.holds);
        CHECK(r.sigma_total <= 1.0 / 8.0 + 1e-12);
        CHECK(max_challenges_per_pair(*s, iw.x) <= 1);
    }
}

TEST_CASE("pok harness") {
    const auto r = pok_game([](std::uint64_t t) { return t % 2 == 0; },
                            [](std::uint64_t t) { return t % 4 != 3; }, 1000,
                            PokParams{1.0, 3.0, 0.0});
    CHECK(r.acceptance.mean() == doctest::Approx(0.5));
    CHECK(r.extraction.mean() == doctest::Approx(0.75));
    CHECK(r.bound == doctest::Approx(0.125));
    CHECK(r.holds);
}
