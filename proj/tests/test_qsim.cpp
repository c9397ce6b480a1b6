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

#include <numeric>

#include "qromlab/oracle/oracle.hpp"
#include "qromlab/qsim/gate.hpp"
#include "qromlab/qsim/projector.hpp"
#include "qromlab/qsim/state_vector.hpp"

using namespace qromlab;
using namespace qromlab::qsim;

namespace {

StateVector random_state(const RegisterLayout &l, Rng &rng) {
    std::normal_distribution<double> normal;
    Amplitudes a(l.total());
    for (auto &v : a) {
        v = amp_t(normal(rng), normal(rng));
    }
    return StateVector::unnormalized(l, a).normalized();
}

std::vector<index_t> random_perm(index_t d, Rng &rng) {
    std::vector<index_t> p(d);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

double max_diff(const Amplitudes &a, const Amplitudes &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

struct QuietWarnings {
    std::vector<std::string> seen;
    QuietWarnings() {
        set_warning_handler([this](const std::string &m) { seen.push_back(m); });
    }
    ~QuietWarnings() { set_warning_handler(nullptr); }
};

} // namespace

TEST_CASE("layout indexing puts X most significant") {
    const RegisterLayout l(3, 4, 5, 2);
    CHECK(l.total() == 120);
    CHECK(l.index(1, 2, 3, 1) == ((1 * 4 + 2) * 5 + 3) * 2 + 1);
    CHECK(l.digit(l.index(2, 3, 4, 1), Register::Z) == 4);
    CHECK(l.range_bits() == 2);
    CHECK(l.joint_dim({Register::Z, Register::E}) == 10);
    CHECK_THROWS_AS(RegisterLayout(2, 3, 1, 1), DimensionError);
    CHECK_THROWS_AS(RegisterLayout(1024, 1024, 1, 1), CapacityError);
}

TEST_CASE("state construction") {
    const RegisterLayout l(4, 2, 2, 1);
    const auto b = StateVector::basis(l, 0);
    CHECK(b[0] == amp_t(1.0));
    CHECK(b.norm2() == doctest::Approx(1.0));

    Amplitudes u(l.total(), 0.0);
    for (index_t x = 0; x < 4; ++x) {
        u[l.index(x, 0, 0, 0)] = 0.5;
    }
    CHECK(StateVector::from_amplitudes(l, u).norm2() == doctest::Approx(1.0));

    QuietWarnings w;
    Amplitudes big(l.total(), 0.0);
    big[3] = 2.0;
    const auto s = StateVector::from_amplitudes(l, big);
    CHECK(s.norm2() == doctest::Approx(1.0));
    CHECK(w.seen.size() == 1);
    CHECK_THROWS(StateVector::from_amplitudes(l, Amplitudes(l.total(), 0.0)));
}

TEST_CASE("oracle application") {
    const RegisterLayout l(2, 4, 2, 2);
    const oracle::FiniteFunction h(2, {3, 1});
    const auto s = apply_oracle(StateVector::basis(l, 1, 0, 1, 1), h);
    CHECK(std::abs(s[l.index(1, 1, 1, 1)] - amp_t(1.0)) < 1e-12);

    Rng rng(4);
    const auto psi = random_state(l, rng);
    CHECK(max_abs_diff(apply_oracle(apply_oracle(psi, h), h), psi) < 1e-12);
}

TEST_CASE("gates: identity, adjoint and validation") {
    const RegisterLayout l(2, 2, 4, 2);
    Rng rng(5);
    const auto psi = random_state(l, rng);
    const auto id = Gate::dense(l, {Register::Z}, Eigen::MatrixXcd::Identity(4, 4));
    CHECK(max_abs_diff(apply_gate(psi, id), psi) < 1e-12);

    Unitary u{{Gate::dense(l, {Register::X, Register::Z}, haar_unitary(8, rng)),
               Gate::permutation(l, {Register::E, Register::Y}, {1, 2, 3, 0}),
               Gate::dense(l, {Register::E}, hadamard())}};
    const auto back = apply_unitary(apply_unitary(psi, u), u.adjoint());
    CHECK(max_abs_diff(back, psi) < 1e-10);

    CHECK_THROWS_AS(Gate::dense(l, {Register::Z}, Eigen::MatrixXcd::Identity(2, 2)),
                    DimensionError);
    CHECK_THROWS(Gate::dense(l, {Register::E}, Eigen::MatrixXcd::Ones(2, 2)));
    CHECK_THROWS(Gate::permutation(l, {Register::E}, {0, 0}));
}

TEST_CASE("projector probabilities") {
    const RegisterLayout l(4, 1, 1, 1);
    Amplitudes u(4, 0.5);
    const auto psi = StateVector::from_amplitudes(l, u);
    CHECK(project_prob(psi, Projector::identity(l)) == doctest::Approx(1.0));
    CHECK(project_prob(psi, Projector::zero(l)) == doctest::Approx(0.0));
    CHECK(project_prob(psi, Projector::basis(l, Register::X, 0)) == doctest::Approx(0.25));
    CHECK(project_prob_complement(psi, Projector::basis(l, Register::X, 0)) ==
          doctest::Approx(0.75));
    CHECK_THROWS(Projector::dense(l, Register::X, Eigen::MatrixXcd::Ones(4, 4)));
    CHECK(is_projector(Eigen::MatrixXcd::Ones(4, 4) / 4.0));
}

TEST_CASE("measurement") {
    const RegisterLayout l(3, 2, 2, 1);
    Rng rng(1);
    const auto b = StateVector::basis(l, 2, 1, 0, 0);
    const auto m = measure_register(b, Register::X, rng);
    CHECK(m.outcome == 2);
    CHECK(m.probability == doctest::Approx(1.0));
    CHECK(max_abs_diff(m.post, b) < 1e-12);

    Amplitudes a(l.total(), 0.0);
    a[l.index(0, 0, 0, 0)] = 1.0;
    a[l.index(1, 0, 0, 0)] = 1.0;
    const auto even = StateVector::from_amplitudes(l, a);
    Rng r1(99);
    Rng r2(99);
    CHECK(measure_register(even, Register::X, r1).outcome ==
          measure_register(even, Register::X, r2).outcome);
    CHECK_THROWS(measure_register_forced(even, Register::X, 2));
    const auto forced = measure_register_forced(even, Register::X, 1);
    CHECK(forced.probability == doctest::Approx(0.5));
    CHECK(forced.post.norm2() == doctest::Approx(1.0));
}

TEST_CASE("parallel kernels agree with the serial reference") {
    Rng rng(12);
    const std::vector<RegisterLayout> layouts{RegisterLayout(3, 4, 5, 2),
                                              RegisterLayout(16, 8, 8, 4),
                                              RegisterLayout(1, 64, 33, 1)};
    const std::vector<std::vector<Register>> target_sets{
        {Register::X}, {Register::Z, Register::X}, {Register::E, Register::Y},
        {Register::Y, Register::Z, Register::E}};
    for (const auto &l : layouts) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto psi = random_state(l, rng);
            for (const auto &t : target_sets) {
                const index_t d = l.joint_dim(t);
                if (d > 512) {
                    continue;
                }
                const auto g = Gate::dense(l, t, haar_unitary(d, rng));
                Amplitudes a = psi.amplitudes();
                Amplitudes b = psi.amplitudes();
                g.apply(a);
                g.apply_serial(b);
                CHECK(max_diff(a, b) < 1e-12);

                const auto p = Gate::permutation(l, t, random_perm(d, rng));
                a = psi.amplitudes();
                b = psi.amplitudes();
                p.apply(a);
                p.apply_serial(b);
                CHECK(max_diff(a, b) == 0.0);
            }
            std::vector<std::uint64_t> table(l.dim(Register::X));
            for (auto &v : table) {
                v = uniform_below(rng, l.dim(Register::Y));
            }
            Amplitudes a(l.total());
            Amplitudes b(l.total());
            kernels::omp::apply_xor_oracle(l, table, psi.amplitudes(), a);
            kernels::serial::apply_xor_oracle(l, table, psi.amplitudes(), b);
            CHECK(max_diff(a, b) == 0.0);

            std::vector<std::uint8_t> mz(l.dim(Register::Z));
            for (auto &v : mz) {
                v = static_cast<std::uint8_t>(uniform_below(rng, 2));
            }
            const Projector pr = Projector::mask(l, Register::Z, mz) *
                                 Projector::basis(l, Register::X, 0);
            a = psi.amplitudes();
            b = psi.amplitudes();
            pr.apply(a);
            pr.apply_serial(b);
            CHECK(max_diff(a, b) == 0.0);

            CHECK(kernels::omp::norm2(psi.amplitudes()) ==
                  kernels::serial::norm2(psi.amplitudes()));
            for (auto reg : kAllRegisters) {
                const auto ma = kernels::omp::marginal(l, reg, psi.amplitudes());
                const auto mb = kernels::serial::marginal(l, reg, psi.amplitudes());
                REQUIRE(ma.size() == mb.size());
                for (std::size_t i = 0; i < ma.size(); ++i) {
                    CHECK(ma[i] == doctest::Approx(mb[i]).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("norm reduction does not depend on the thread count") {
    const RegisterLayout l(64, 64, 16, 1);
    Rng rng(3);
    const auto psi = random_state(l, rng);
    const double n1 = kernels::omp::norm2(psi.amplitudes());
    const double n2 = kernels::omp::norm2(psi.amplitudes());
    CHECK(n1 == n2);
    CHECK(n1 == doctest::Approx(1.0));
}

TEST_CASE("haar_unitary is unitary") {
    Rng rng(8);
    for (index_t d : {1, 2, 7, 16}) {
        const auto u = haar_unitary(d, rng);
        CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-10);
    }
}
