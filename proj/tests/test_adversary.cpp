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
#include "qromlab/adversary/oracle_algorithm.hpp"
#include "qromlab/adversary/predicate.hpp"

using namespace qromlab;
using namespace qromlab::adversary;
using qsim::Register;

TEST_CASE("predicates") {
    const auto eq = z_equals_theta(4);
    CHECK(eq.holds(0, 2, 2));
    CHECK_FALSE(eq.holds(0, 2, 3));
    const auto m = std::get<qsim::MaskFactor>(eq.cell(1, 3));
    CHECK(m == qsim::MaskFactor{0, 0, 0, 1});
    const auto t = always_true(4).cell(0, 0);
    const bool all_ones = std::holds_alternative<qsim::IdentityFactor>(t) ||
                          std::get<qsim::MaskFactor>(t) == qsim::MaskFactor{1, 1, 1, 1};
    CHECK(all_ones);
    CHECK_FALSE(parity_matches(4).holds(0, 1, 0));
    CHECK(parity_matches(4).holds(0, 1, 2));
    CHECK(predicate_test_set(4).size() >= 4);

    const auto bad = QuantumPredicate::quantum(
        "bad", 2, [](index_t, index_t) { return qsim::DenseFactor::Ones(2, 2); });
    CHECK_THROWS((void)bad.cell(0, 0));
}

TEST_CASE("run with q = 0 leaves the initial state") {
    const auto a = guessing_adversary(4, 2, 1, 3);
    const auto h = oracle::sample_uniform(4, 2, 1);
    CHECK(a.q() == 0);
    CHECK(qsim::max_abs_diff(run(a, h), a.initial()) == 0.0);
}

TEST_CASE("classical query adversary evaluates H classically") {
    const auto a = classical_query_adversary(1, 2, 0);
    const oracle::FiniteFunction h(2, {3});
    const auto fin = run(a, h);
    CHECK(std::abs(fin[a.layout().index(0, 0, 3, 0)] - amp_t(1.0)) < 1e-12);
    CHECK(y_residual(fin) < 1e-12);
}

TEST_CASE("a no-op reprogram does not change the run") {
    const auto h = oracle::sample_uniform(4, 3, 5);
    for (const auto &a : {classical_query_adversary(4, 3, 2), two_query_chain_adversary(4, 3, 1),
                          random_unitary_adversary(9, 2, 4, 3)}) {
        for (index_t x = 0; x < 4; ++x) {
            CHECK(qsim::max_abs_diff(run(a, h), run(a, oracle::reprogram(h, x, h(x)))) == 0.0);
        }
    }
}

TEST_CASE("segments") {
    const auto a = random_unitary_adversary(4, 2, 2, 3);
    const auto h = oracle::sample_uniform(2, 3, 2);
    const auto psi = run_prefix(a, h, 1);
    CHECK(qsim::max_abs_diff(run_segment(a, h, 1, 1, psi), psi) == 0.0);
    CHECK(qsim::max_abs_diff(run_segment(a, h, 1, 2, psi), run(a, h)) < 1e-12);
    CHECK(qsim::max_abs_diff(run_segment(a, h, 0, 1, a.initial()), psi) < 1e-12);
    const auto fwd = run_segment(a, h, 0, 2, a.initial());
    CHECK(qsim::max_abs_diff(run_segment_inverse(a, h, 0, 2, fwd), a.initial()) < 1e-10);
    CHECK_THROWS(run_segment(a, h, 2, 1, psi));
    CHECK_THROWS(run_segment(a, h, 0, 3, psi));
}

TEST_CASE("segments ignore reprogramming of points never queried") {
    // Queries only x = 0, so H*theta at x = 1 is invisible.
    const auto a = classical_query_adversary(2, 3, 0);
    const auto h = oracle::sample_uniform(2, 3, 8);
    for (index_t theta = 0; theta < 8; ++theta) {
        CHECK(qsim::max_abs_diff(run_segment(a, h, 0, 1, a.initial()),
                                 run_segment(a, oracle::reprogram(h, 1, theta), 0, 1,
                                             a.initial())) == 0.0);
    }
}

TEST_CASE("success probability") {
    const auto h = oracle::sample_uniform(4, 2, 3);
    const auto a = classical_query_adversary(4, 2, 1);
    CHECK(success_prob(a, h, always_true(4), 1) == doctest::Approx(1.0));
    CHECK(success_prob(a, h, z_equals_theta(4), 1) == doctest::Approx(1.0));
    CHECK(success_prob(a, h, z_equals_theta(4), 0) == doctest::Approx(0.0));

    const auto s = superposed_query_adversary({0.25, 0.25, 0.25, 0.25}, 2);
    double total = 0.0;
    for (index_t x0 = 0; x0 < 4; ++x0) {
        total += success_prob(s, h, always_true(4), x0);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("library adversaries reset Y") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto h = oracle::sample_uniform(2, 6, seed);
        CHECK_NOTHROW(check_y_reset(classical_query_adversary(2, 6, 1), h));
        CHECK_NOTHROW(check_y_reset(two_query_chain_adversary(2, 4, 0), oracle::sample_uniform(2, 4, seed)));
        CHECK_NOTHROW(check_y_reset(random_unitary_adversary(seed, 2), h));
    }
    CHECK_THROWS(superposed_query_adversary({0.5, 0.6}, 2));
}

TEST_CASE("swap gate") {
    const qsim::RegisterLayout l(1, 4, 4, 1);
    const auto g = swap_gate(l, Register::Y, Register::Z);
    const auto s = qsim::apply_gate(qsim::StateVector::basis(l, 0, 1, 3, 0), g);
    CHECK(std::abs(s[l.index(0, 3, 1, 0)] - amp_t(1.0)) < 1e-12);
}
