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

#include "qromlab/adversary/library.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/reprogram/simulator.hpp"
#include "qromlab/reprogram/theorem1.hpp"

using namespace qromlab;
using namespace qromlab::reprogram;
using namespace qromlab::adversary;

TEST_CASE("reprogramming constant") {
    CHECK(lemma1_constant(0) == 6.0);
    CHECK(lemma1_constant(1) == 20.0);
    CHECK(lemma1_constant(2) == 42.0);
}

TEST_CASE("stage one on a classical query always measures the queried point") {
    auto a = std::make_shared<const OracleAlgorithm>(classical_query_adversary(4, 2, 3));
    const auto h = oracle::sample_uniform(4, 2, 1);
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng(s);
        const auto cp = stage_one(a, h, rng);
        CHECK(cp.measured_x == 3);
        CHECK(cp.i <= 1);
    }
}

TEST_CASE("stage one on a balanced superposition measures each point half the time") {
    auto a = std::make_shared<const OracleAlgorithm>(superposed_query_adversary({0.5, 0.5}, 2));
    const auto h = oracle::sample_uniform(2, 2, 1);
    Proportion zero;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        Rng rng = trial_rng(5, s);
        const auto cp = stage_one_at(a, h, 0, rng);
        zero.trials++;
        zero.successes += cp.measured_x == 0 ? 1 : 0;
    }
    CHECK(std::abs(zero.mean() - 0.5) <= 3.0 * zero.stderr_());
}

TEST_CASE("stage one with q = 0 measures the output") {
    auto a = std::make_shared<const OracleAlgorithm>(guessing_adversary(4, 2, 2, 1));
    const auto h = oracle::sample_uniform(4, 2, 1);
    Rng rng(3);
    const auto cp = stage_one(a, h, rng);
    CHECK(cp.i == 0);
    CHECK(cp.measured_x == 2);
}

TEST_CASE("stage two of the classical query adversary") {
    auto a = std::make_shared<const OracleAlgorithm>(classical_query_adversary(2, 3, 1));
    const auto h = oracle::sample_uniform(2, 3, 4);
    const auto v = z_equals_theta(8);
    Rng rng(1);
    const auto cp0 = stage_one_at(a, h, 0, rng);
    const auto cp1 = stage_one_at(a, h, 1, rng);
    int hits_b1 = 0;
    for (index_t theta = 0; theta < 8; ++theta) {
        CHECK(stage_two(cp0, theta, 0, v).success == doctest::Approx(1.0));
        const double s1 = stage_two(cp0, theta, 1, v).success;
        CHECK(s1 == doctest::Approx(theta == h(1) ? 1.0 : 0.0));
        hits_b1 += s1 > 0.5 ? 1 : 0;
        for (unsigned b : {0u, 1u}) {
            CHECK(stage_two(cp1, theta, b, v).success ==
                  doctest::Approx(theta == h(1) ? 1.0 : 0.0));
        }
    }
    CHECK(hits_b1 == 1);
}

TEST_CASE("single-oracle LHS closed forms") {
    const auto h = oracle::sample_uniform(2, 6, 7);
    const auto v = z_equals_theta(64);
    const auto a = classical_query_adversary(2, 6, 0);
    CHECK(lemma1_lhs(a, h, 0, v) == doctest::Approx(0.26171875).epsilon(1e-12));
    CHECK(lemma1_lhs(a, h, 1, v) == 0.0);

    const auto g = guessing_adversary(2, 6, 1, 17);
    CHECK(lemma1_lhs(g, h, 1, v) == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
}

TEST_CASE("single-oracle RHS closed forms") {
    const auto h = oracle::sample_uniform(2, 6, 7);
    const auto v = z_equals_theta(64);
    const auto r = lemma1_rhs(classical_query_adversary(2, 6, 0), h, 0, v);
    CHECK(r.term1 == doctest::Approx(1.0));
    CHECK(r.term2 == doctest::Approx(1.0));
    CHECK(r.bound == doctest::Approx(1.0 / 20.0 - 1.0 / 256.0).epsilon(1e-12));

    const auto g = lemma1_rhs(guessing_adversary(2, 6, 1, 17), h, 1, v);
    CHECK(g.term1 == doctest::Approx(1.0 / 64));
    CHECK(g.term2 == doctest::Approx(1.0));
    CHECK(g.bound == doctest::Approx(1.0 / (6 * 64.0) - 1.0 / (2 * 64.0)));
    CHECK(g.bound < 0.0);

    CHECK(lemma1_rhs(classical_query_adversary(2, 6, 0), h, 1, v).term2 == 0.0);
}

TEST_CASE("single-oracle bound holds on the worked cells") {
    const auto h = oracle::sample_uniform(2, 6, 7);
    const auto v = z_equals_theta(64);
    CHECK(verify_lemma1(classical_query_adversary(2, 6, 0), h, 0, v).holds);
    CHECK(verify_lemma1(classical_query_adversary(2, 6, 0), h, 1, v).holds);
    CHECK(verify_lemma1(guessing_adversary(2, 6, 1, 17), h, 1, v).holds);
}

TEST_CASE("single-oracle bound holds for every H on two points with 2-bit outputs") {
    const std::vector<OracleAlgorithm> lib{
        classical_query_adversary(2, 2, 0), superposed_query_adversary({0.5, 0.5}, 2),
        guessing_adversary(2, 2, 1, 2), two_query_chain_adversary(2, 2, 0)};
    for (const auto &a : lib) {
        const auto preds = predicate_test_set(a.layout().dim(qsim::Register::Z));
        for (const auto &h : oracle::enumerate_all(2, 2)) {
            for (index_t x0 = 0; x0 < 2; ++x0) {
                for (const auto &r : verify_lemma1_multi(a, h, x0, preds)) {
                    CAPTURE(r.adversary);
                    CAPTURE(r.predicate);
                    CHECK(r.holds);
                }
            }
        }
    }
}

TEST_CASE("single-oracle bound holds for random dense adversaries") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        for (index_t q : {1, 2}) {
            const auto a = random_unitary_adversary(seed, q, 2, 3);
            const auto h = oracle::sample_uniform(2, 3, seed);
            for (index_t x0 = 0; x0 < 2; ++x0) {
                for (const auto &r : verify_lemma1_multi(a, h, x0, predicate_test_set(2))) {
                    CHECK(r.holds);
                }
            }
        }
    }
}

TEST_CASE("sampled and simulated LHS agree with the exact one") {
    const auto a = std::make_shared<const OracleAlgorithm>(
        superposed_query_adversary({0.5, 0.5}, 3));
    const auto h = oracle::sample_uniform(2, 3, 2);
    const auto v = z_equals_theta(8);
    const double exact = lemma1_lhs(*a, h, 0, v);
    const auto sampled = lemma1_lhs_sampled(*a, h, 0, v, 4000, 9);
    CHECK(std::abs(sampled.mean - exact) <= 4.0 * sampled.stderr_ + 1e-9);
    const auto sim = simulate_lemma1_lhs(a, h, 0, v, 4000, 9);
    CHECK(std::abs(sim.mean - exact) <= 4.0 * sim.stderr_ + 1e-9);
}

TEST_CASE("family average matches the uniform average for the classical query adversary") {
    const auto r = verify_thm1(classical_query_adversary(4, 1, 2), z_equals_theta(2), 200, 3);
    CHECK(r.k == 4);
    CHECK(r.holds);
    CHECK(r.family_matches_uniform);
    CHECK(r.lemma_violations == 0);
}

TEST_CASE("guessing adversary aggregate") {
    const auto r = verify_thm1(guessing_adversary(4, 2, 1, 2), z_equals_theta(4), 50, 3);
    CHECK(r.lhs_sum.mean == doctest::Approx(0.25));
    CHECK(r.rhs_sum <= 1.0 / (6.0 * 4.0) + 1e-12);
    CHECK(r.holds);
}
