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

#include "qromlab/extract/prover_library.hpp"

#include <cmath>
#include <numbers>

#include "qromlab/sigma/modarith.hpp"

namespace qromlab::extract {

using qsim::Register;

InstanceWitness nonzero_instance(const Schnorr &schnorr, Rng &rng) {
    const std::uint64_t w = 1 + uniform_below(rng, schnorr.r() - 1);
    return {schnorr.exp(w), w};
}

namespace {

void check_witness(const sigma::SigmaProtocol &sigma, const InstanceWitness &iw) {
    if (!sigma.relation(iw.x, iw.w)) {
        throw std::invalid_argument("prover library: (x, w) not in R");
    }
}

Eigen::MatrixXcd block_diagonal(index_t copies, const Eigen::MatrixXcd &block) {
    const auto b = block.rows();
    const auto n = static_cast<Eigen::Index>(copies) * b;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(copies); ++k) {
        m.block(k * b, k * b, b, b) = block;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd m(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return m;
}

Eigen::MatrixXcd rotation(double phi) {
    Eigen::MatrixXcd r(2, 2);
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return r;
}

} // namespace

SchnorrQuantumProver::SchnorrQuantumProver(std::shared_ptr<const Schnorr> schnorr,
                                           InstanceWitness iw, Params params)
    : schnorr_(std::move(schnorr)), iw_(iw), params_(std::move(params)),
      layout_(1, 1, schnorr_->r(), 2) {
    check_witness(*schnorr_, iw_);
    if (params_.know_weight < 0.0 || params_.know_weight > 1.0) {
        throw std::invalid_argument("SchnorrQuantumProver: weight outside [0, 1]");
    }
    if (params_.fixed_challenge &&
        *params_.fixed_challenge >= schnorr_->challenge_space_size()) {
        throw std::invalid_argument("SchnorrQuantumProver: fixed challenge outside C");
    }
}

ProverStart SchnorrQuantumProver::start(Rng &rng) const {
    const std::uint64_t y = uniform_below(rng, schnorr_->r());
    qsim::Amplitudes amps(layout_.total(), amp_t{0.0});
    amps[layout_.index(0, 0, 0, 0)] = std::sqrt(params_.know_weight);
    amps[layout_.index(0, 0, 0, 1)] = std::sqrt(1.0 - params_.know_weight);
    return ProverStart{iw_.x, schnorr_->exp(y),
                       qsim::StateVector::from_amplitudes(layout_, std::move(amps)),
                       {y}};
}

qsim::Unitary SchnorrQuantumProver::unitary(const ProverStart &s,
                                            std::uint64_t c) const {
    const std::uint64_t r = schnorr_->r();
    const std::uint64_t ce = params_.fixed_challenge.value_or(c);
    const std::uint64_t shift = (s.aux.at(0) + sigma::mulmod(ce, iw_.w, r)) % r;
    qsim::Unitary u;
    if (params_.rotation_scale != 0.0) {
        const double phi = params_.rotation_scale * std::numbers::pi *
                           static_cast<double>(c) /
                           static_cast<double>(schnorr_->challenge_space_size());
        u.gates.push_back(qsim::Gate::dense(layout_, {Register::E}, rotation(phi), "rot"));
    }
    std::vector<index_t> perm(2 * r);
    for (index_t z = 0; z < r; ++z) {
        for (index_t e = 0; e < 2; ++e) {
            perm[z * 2 + e] = ((z + shift + e) % r) * 2 + e;
        }
    }
    u.gates.push_back(
        qsim::Gate::permutation(layout_, {Register::Z, Register::E}, std::move(perm), "respond"));
    return u;
}

std::shared_ptr<SchnorrQuantumProver>
honest_quantum_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw) {
    return std::make_shared<SchnorrQuantumProver>(std::move(schnorr), iw,
                                                  SchnorrQuantumProver::Params{});
}

std::shared_ptr<SchnorrQuantumProver>
partial_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw, double v) {
    SchnorrQuantumProver::Params p;
    p.name = "partial";
    p.know_weight = v;
    return std::make_shared<SchnorrQuantumProver>(std::move(schnorr), iw, p);
}

std::shared_ptr<SchnorrQuantumProver>
rotating_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw,
                double scale) {
    SchnorrQuantumProver::Params p;
    p.name = "rotating";
    p.rotation_scale = scale;
    return std::make_shared<SchnorrQuantumProver>(std::move(schnorr), iw, p);
}

std::shared_ptr<SchnorrQuantumProver>
fixed_challenge_prover(std::shared_ptr<const Schnorr> schnorr, InstanceWitness iw,
                       std::uint64_t c_star) {
    SchnorrQuantumProver::Params p;
    p.name = "fixed-challenge";
    p.fixed_challenge = c_star;
    return std::make_shared<SchnorrQuantumProver>(std::move(schnorr), iw, p);
}

TwoResponseProver::TwoResponseProver(
    std::shared_ptr<const sigma::TwoResponseSchnorr> protocol, InstanceWitness iw)
    : protocol_(std::move(protocol)), iw_(iw),
      layout_(1, 1, 2 * protocol_->inner().r(), 2),
      hadamard_s_(qsim::Gate::dense(layout_, {Register::Z},
                                    block_diagonal(protocol_->inner().r(),
                                                   qsim::hadamard()),
                                    "H_s")) {
    check_witness(*protocol_, iw_);
    const Schnorr &s = protocol_->inner();
    const Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const Eigen::Vector2cd minus(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    k_gates_.reserve(s.challenge_space_size());
    for (std::uint64_t c = 0; c < s.challenge_space_size(); ++c) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(c) /
                             static_cast<double>(s.challenge_space_size());
        // (s, e) block: identity on |+>, rotation of e on |->.
        const Eigen::MatrixXcd k4 =
            kron(plus * plus.adjoint(), Eigen::Matrix2cd::Identity()) +
            kron(minus * minus.adjoint(), rotation(theta));
        k_gates_.push_back(qsim::Gate::dense(layout_, {Register::Z, Register::E},
                                             block_diagonal(s.r(), k4), "K_c"));
    }
}

ProverStart TwoResponseProver::start(Rng &rng) const {
    const Schnorr &s = protocol_->inner();
    const std::uint64_t y = uniform_below(rng, s.r());
    return ProverStart{iw_.x, s.exp(y), qsim::StateVector::basis(layout_, 0), {y}};
}

qsim::Unitary TwoResponseProver::unitary(const ProverStart &st,
                                         std::uint64_t c) const {
    const Schnorr &s = protocol_->inner();
    const std::uint64_t r = s.r();
    const std::uint64_t shift = (st.aux.at(0) + sigma::mulmod(c, iw_.w, r)) % r;
    std::vector<index_t> perm(4 * r);
    for (index_t zp = 0; zp < r; ++zp) {
        for (index_t se = 0; se < 4; ++se) {
            const index_t e = se & 1;
            perm[zp * 4 + se] = ((zp + shift + e) % r) * 4 + se;
        }
    }
    qsim::Unitary u;
    u.gates.push_back(hadamard_s_);
    u.gates.push_back(k_gates_.at(c));
    u.gates.push_back(qsim::Gate::permutation(layout_, {Register::Z, Register::E},
                                              std::move(perm), "respond"));
    return u;
}

} // namespace qromlab::extract
