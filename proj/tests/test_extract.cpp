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

#include "qromlab/extract/collapsing.hpp"
#include "qromlab/extract/extractor.hpp"
#include "qromlab/extract/projection_bounds.hpp"
#include "qromlab/extract/prover_library.hpp"

using namespace qromlab;
using namespace qromlab::extract;

namespace {

Eigen::MatrixXcd basis_projector(index_t dim, index_t k) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    p(k, k) = 1.0;
    return p;
}

Eigen::VectorXcd basis_vector(index_t dim, index_t k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(k) = 1.0;
    return v;
}

} // namespace

TEST_CASE("projection bound: worked examples") {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(3, 3);
    Rng rng(1);
    const auto b = projection_bound_check({id, id}, random_state(3, rng), 3);
    CHECK(b.V == doctest::Approx(1.0));
    CHECK(b.F == doctest::Approx(1.0));
    CHECK(b.holds);

    Eigen::MatrixXcd p0 = basis_projector(2, 0);
    Eigen::MatrixXcd p1 = basis_projector(2, 1);
    const Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(2, 1.0 / std::sqrt(2.0));
    const auto h = projection_bound_check({p0, p1}, plus, 2);
    CHECK(h.V == doctest::Approx(0.5));
    CHECK(h.F == doctest::Approx(0.25));
    CHECK(h.bound == doctest::Approx(0.125));
    CHECK(h.holds);

    const auto z = projection_bound_check({p0, Eigen::MatrixXcd::Zero(2, 2)},
                                          basis_vector(2, 0), 2);
    CHECK(z.V == doctest::Approx(0.5));
    CHECK(z.F == doctest::Approx(0.25));

    CHECK_THROWS(projection_bound_check({Eigen::MatrixXcd::Ones(2, 2)}, plus, 2));
}

TEST_CASE("two-part bound: worked examples") {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    const auto all = two_part_bound_check({{id, id}, {id, id}}, basis_vector(4, 2));
    CHECK(all.V == doctest::Approx(1.0));
    CHECK(all.F == doctest::Approx(1.0));
    CHECK(all.holds);

    // Rank one, P_i0 = |0><0|, P_i1 = 0, psi = |0>: V = 1/2 and F = 4/32.
    const Eigen::MatrixXcd p = basis_projector(4, 0);
    const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(4, 4);
    const auto r1 = two_part_bound_check({{p, zero}, {p, zero}}, basis_vector(4, 0));
    CHECK(r1.V == doctest::Approx(0.5));
    CHECK(r1.F == doctest::Approx(0.125));
    CHECK(r1.bound == doctest::Approx(1.0 / 64.0));
    CHECK(r1.holds);
}

TEST_CASE("projection bounds hold on random instances") {
    for (std::uint64_t i = 0; i < 150; ++i) {
        Rng rng = trial_rng(21, i);
        const index_t dim = 1 + uniform_below(rng, 8);
        const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 4));
        const unsigned t = 2 + static_cast<unsigned>(uniform_below(rng, 2));
        std::vector<Eigen::MatrixXcd> ps;
        for (unsigned j = 0; j < n; ++j) {
            ps.push_back(random_projector(dim, rng));
        }
        const auto psi = random_state(dim, rng);
        CHECK(psi.norm() == doctest::Approx(1.0));
        const auto b = projection_bound_check(ps, psi, t);
        CHECK(b.V >= -1e-12);
        CHECK(b.V <= 1.0 + 1e-12);
        CHECK(b.F <= b.V + 1e-12);
        CHECK(b.holds);
    }
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng rng = trial_rng(22, i);
        std::vector<std::vector<Eigen::MatrixXcd>> ps(2);
        for (auto &row : ps) {
            for (int j = 0; j < 3; ++j) {
                row.push_back(random_projector(4, rng));
            }
        }
        CHECK(two_part_bound_check(ps, random_state(4, rng)).holds);
    }
}

TEST_CASE("random projectors are projectors") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_projector(6, rng);
        CHECK((p * p - p).norm() < 1e-10);
        CHECK((p.adjoint() - p).norm() < 1e-10);
    }
}

TEST_CASE("extractor on the honest and fixed-challenge provers") {
    const auto s = sigma::schnorr_group_67();
    Rng ri(3);
    const auto iw = nonzero_instance(*s, ri);
    const auto honest = honest_quantum_prover(s, iw);
    const auto st = run_extractor(*s, *honest, 2, 300, 4);
    CHECK(st.success.mean() >= 1.0 - 8.0 / 64.0 - 3.0 * st.success.stderr_());
    CHECK(st.validated == st.success.successes);
    CHECK(single_run_acceptance(*s, *honest, 200, 5).successes == 200);

    const auto fixed = fixed_challenge_prover(s, iw, 7);
    const auto v = single_run_acceptance(*s, *fixed, 2000, 6);
    CHECK(v.mean() <= 1.0 / 64.0 + 3.0 * std::sqrt(1.0 / 64.0 / 2000.0));
    const auto fe = run_extractor(*s, *fixed, 2, 300, 7);
    CHECK(fe.success.successes == 0);
}

TEST_CASE("extractor bound arithmetic") {
    CHECK(extractor_bound(1.0, 2, 64) == doctest::Approx(1.0 - 4.0 / 64.0));
    CHECK(extractor_bound(0.5, 3, 64) == doctest::Approx(std::pow(0.5, 5) - 9.0 / 64.0));
}

TEST_CASE("both extractor variants agree in distribution") {
    const auto s = sigma::schnorr_group_11();
    Rng ri(9);
    const auto iw = nonzero_instance(*s, ri);
    const auto p = partial_prover(s, iw, 0.6);
    const auto a = run_extractor(*s, *p, 2, 3000, 11, ExtractorVariant::MeasureResponse);
    const auto b = run_extractor(*s, *p, 2, 3000, 12, ExtractorVariant::MeasurePredicate);
    const double se = std::hypot(a.success.stderr_(), b.success.stderr_());
    CHECK(std::abs(a.success.mean() - b.success.mean()) <= 3.0 * se);
    CHECK(b.validated == b.success.successes);
}

TEST_CASE("partial and rotating provers satisfy the extractor bound") {
    const auto s = sigma::schnorr_group_11();
    Rng ri(2);
    const auto iw = nonzero_instance(*s, ri);
    for (const auto &p : {partial_prover(s, iw, 0.5), rotating_prover(s, iw, 0.5)}) {
        const auto v = single_run_acceptance(*s, *p, 1500, 1);
        const auto e = run_extractor(*s, *p, 2, 1500, 2);
        CHECK(e.success.mean() >= extractor_bound(v.mean(), 2, 8) -
                                      extractor_tolerance(e.success, v, 2));
        CHECK(e.validated == e.success.successes);
    }
}

TEST_CASE("collapsing relations") {
    const auto bij = bijective_relation(8, 3, 1);
    CHECK(bij.max_partners() == 1);
    CHECK(bij(0, 1));
    CHECK(bij(1, 4));
    const auto two = two_preimage_relation(8);
    CHECK(two.dim_x() == 16);
    CHECK(two.max_partners() == 2);
    CHECK_THROWS(CollapsingRelation(2, 2, {1, 0, 0}));
}

TEST_CASE("collapsing games") {
    const auto bij = bijective_relation(8, 1, 1);
    const auto ex = collapsing_game_exact(bij, with_fourier_distinguisher(bijective_adversary(bij)));
    CHECK(ex.advantage == doctest::Approx(0.0).epsilon(1e-12));

    const auto two = two_preimage_relation(8);
    const auto f = with_fourier_distinguisher(two_preimage_adversary(two));
    const auto tx = collapsing_game_exact(two, f);
    CHECK(tx.advantage == doctest::Approx(0.5));
    const auto rep = collapsing_report("two", two, f, 4000, 3);
    CHECK(std::abs(rep.advantage - 0.5) <= 3.0 * rep.stderr_ + 1e-12);

    const auto blind = with_blind_distinguisher(two_preimage_adversary(two));
    CHECK(collapsing_game_exact(two, blind).advantage == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Schnorr has unique responses so its collapsing advantage is zero") {
    const auto g = sigma::schnorr_group_11();
    Rng ri(1);
    const auto iw = nonzero_instance(*g, ri);
    auto setup = qcur_setup(*g, *g, iw.x);
    CHECK(setup.relation.max_partners() == 1);
    const auto adv = with_fourier_distinguisher(std::move(setup.adversary));
    CHECK(std::abs(collapsing_game_exact(setup.relation, adv).advantage) < 1e-12);

    const sigma::TwoResponseSchnorr tr(g);
    auto s2 = qcur_setup(tr, *g, iw.x);
    CHECK(s2.relation.max_partners() == 2);
    const auto a2 = with_fourier_distinguisher(std::move(s2.adversary));
    CHECK(collapsing_game_exact(s2.relation, a2).advantage == doctest::Approx(0.5));
}
