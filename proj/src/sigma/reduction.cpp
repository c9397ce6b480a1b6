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

#include "qromlab/sigma/reduction.hpp"

#include <algorithm>

#include "../parallel.hpp"
#include "qromlab/reprogram/lemma1.hpp"
#include "qromlab/sigma/modarith.hpp"

namespace qromlab::sigma {

using adversary::OracleAlgorithm;
using qsim::Register;

FSSlice make_fs_slice(std::shared_ptr<const Schnorr> schnorr,
                      const oracle::Oracle &h, std::uint64_t x,
                      std::optional<std::uint64_t> instance_code,
                      unsigned extra_instance_bits) {
    if (!schnorr) {
        throw std::invalid_argument("make_fs_slice: null protocol");
    }
    const std::uint64_t nc = schnorr->challenge_space_size();
    if (!is_power_of_two(nc)) {
        throw DimensionError("make_fs_slice: |C| must be a power of two");
    }
    if (h.range_size() != nc) {
        throw DimensionError("make_fs_slice: oracle range differs from |C|");
    }
    const auto enc = PairEncoding::for_protocol(*schnorr, extra_instance_bits);
    const std::uint64_t code = instance_code.value_or(x);
    const std::uint64_t r = schnorr->r();
    std::vector<std::uint64_t> commitments(r);
    std::vector<std::uint64_t> points(r);
    for (std::uint64_t k = 0; k < r; ++k) {
        commitments[k] = schnorr->exp(k);
        points[k] = enc.encode(code, commitments[k]);
    }
    auto restricted = oracle::restrict_to(h, points);
    auto pred = adversary::QuantumPredicate::classical(
        "fs-verify", r,
        [schnorr, x, commitments](index_t k, index_t theta, index_t z) {
            return schnorr->verify(x, commitments[k], theta, z);
        });
    const index_t cap = std::max(qsim::dimension_cap_from_env(), kSliceDimensionCap);
    qsim::RegisterLayout layout(r, nc, r, 1, cap);
    return FSSlice{std::move(schnorr), x,        code,
                   std::move(commitments), std::move(restricted),
                   std::move(pred),        layout};
}

OracleAlgorithm honest_fs_adversary(const FSSlice &slice, std::uint64_t w) {
    const Schnorr &s = *slice.schnorr;
    if (!s.relation(slice.x, w)) {
        throw std::invalid_argument("honest_fs_adversary: (x, w) not in R");
    }
    const std::uint64_t r = s.r();
    if (w % r == 0) {
        throw std::invalid_argument("honest_fs_adversary: w = 0 cannot uncompute");
    }
    const std::uint64_t winv = invmod(w, r);
    const auto &layout = slice.layout;
    const index_t nc = layout.dim(Register::Y);

    std::vector<index_t> perm(r * nc * r);
    for (index_t k = 0; k < r; ++k) {
        for (index_t y = 0; y < nc; ++y) {
            for (index_t z = 0; z < r; ++z) {
                const index_t zp = (z + k + mulmod(y, w, r)) % r;
                const index_t val = mulmod((zp + r - k) % r, winv, r);
                const index_t yp = y ^ (val < nc ? val : 0);
                perm[(k * nc + y) * r + z] = (k * nc + yp) * r + zp;
            }
        }
    }
    auto gate = qsim::Gate::permutation(layout, {Register::X, Register::Y, Register::Z},
                                        std::move(perm), "respond-uncompute");

    qsim::Amplitudes amps(layout.total(), amp_t{0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(r));
    for (index_t k = 0; k < r; ++k) {
        amps[layout.index(k, 0, 0, 0)] = amp;
    }
    return OracleAlgorithm("honest-fs", StateVector::from_amplitudes(layout, std::move(amps)),
                           {qsim::Unitary{{std::move(gate)}}});
}

OracleAlgorithm guessing_fs_adversary(const FSSlice &slice, index_t k_star,
                                      std::uint64_t z_star) {
    const auto &layout = slice.layout;
    if (k_star >= layout.dim(Register::X) || z_star >= layout.dim(Register::Z)) {
        throw std::invalid_argument("guessing_fs_adversary: guess outside range");
    }
    return OracleAlgorithm("guessing-fs",
                           StateVector::basis(layout, k_star, 0, z_star, 0), {});
}

std::uint64_t max_challenges_per_pair(const Schnorr &schnorr, std::uint64_t x) {
    std::uint64_t best = 0;
    for (std::uint64_t k = 0; k < schnorr.r(); ++k) {
        const std::uint64_t a = schnorr.exp(k);
        for (std::uint64_t z = 0; z < schnorr.r(); ++z) {
            std::uint64_t n = 0;
            for (std::uint64_t c = 0; c < schnorr.challenge_space_size(); ++c) {
                n += schnorr.verify(x, a, c, z) ? 1 : 0;
            }
            best = std::max(best, n);
        }
    }
    return best;
}

ReducedSigmaAdversary::ReducedSigmaAdversary(
    std::shared_ptr<const OracleAlgorithm> a, FSSlice slice)
    : a_(std::move(a)), slice_(std::move(slice)) {
    if (!a_) {
        throw std::invalid_argument("ReducedSigmaAdversary: null algorithm");
    }
    if (!(a_->layout() == slice_.layout)) {
        throw DimensionError("ReducedSigmaAdversary: layout differs from slice");
    }
    prefixes_.reserve(a_->q() + 1);
    prefixes_.push_back(a_->initial());
    for (index_t i = 1; i <= a_->q(); ++i) {
        prefixes_.push_back(
            adversary::run_segment(*a_, slice_.h, i - 1, i, prefixes_.back()));
    }
}

std::string ReducedSigmaAdversary::name() const {
    return "reduced(" + a_->name() + ")";
}

ProverStart ReducedSigmaAdversary::start(Rng &rng) const {
    const index_t i = uniform_below(rng, a_->q() + 1);
    auto m = qsim::measure_register(prefixes_[i], Register::X, rng);
    const index_t b = uniform_below(rng, 2);
    return ProverStart{slice_.x, slice_.commitments[m.outcome], std::move(m.post),
                       {i, b, m.outcome}};
}

StateVector ReducedSigmaAdversary::respond(const ProverStart &s, StateVector state,
                                           std::uint64_t c) const {
    const index_t i = s.aux.at(0);
    const index_t j = std::min<index_t>(i + s.aux.at(1), a_->q());
    state = adversary::run_segment(*a_, slice_.h, i, j, std::move(state));
    return adversary::run_segment(*a_, oracle::reprogram(slice_.h, s.aux.at(2), c),
                                  j, a_->q(), std::move(state));
}

StateVector ReducedSigmaAdversary::unrespond(const ProverStart &s,
                                             StateVector state,
                                             std::uint64_t c) const {
    const index_t i = s.aux.at(0);
    const index_t j = std::min<index_t>(i + s.aux.at(1), a_->q());
    state = adversary::run_segment_inverse(
        *a_, oracle::reprogram(slice_.h, s.aux.at(2), c), j, a_->q(),
        std::move(state));
    return adversary::run_segment_inverse(*a_, slice_.h, i, j, std::move(state));
}

double ReducedSigmaAdversary::exact_acceptance(index_t k0, bool strict) const {
    return reprogram::lemma1_lhs_multi(*a_, slice_.h, k0, {slice_.predicate},
                                       strict ? reprogram::SuccessEvent::OutputMatches
                                              : reprogram::SuccessEvent::PredicateOnly)
        .at(0);
}

Proportion ReducedSigmaAdversary::acceptance_sampled(std::uint64_t trials,
                                                     std::uint64_t seed) const {
    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        ok[t] = run_quantum_prover(*slice_.schnorr, *this, rng).accept ? 1 : 0;
    });
    Proportion p;
    p.trials = trials;
    for (auto v : ok) {
        p.successes += v;
    }
    return p;
}

void to_json(nlohmann::json &j, const FSReductionRow &r) {
    j = nlohmann::json{{"k0", r.k0},
                       {"a0", r.a0},
                       {"sigma_success", r.sigma_success},
                       {"sigma_success_strict", r.sigma_success_strict},
                       {"fs_success", r.fs_success},
                       {"fs_success_direct", r.fs_success_direct},
                       {"output_weight", r.output_weight},
                       {"bound", r.bound},
                       {"holds", r.holds}};
}

void to_json(nlohmann::json &j, const FSReductionReport &r) {
    j = nlohmann::json{{"adversary", r.adversary},
                       {"q", r.q},
                       {"|C|", r.challenge_space},
                       {"r", r.order},
                       {"constant", r.constant},
                       {"sigma_total", r.sigma_total},
                       {"fs_total", r.fs_total},
                       {"fs_direct_total", r.fs_direct_total},
                       {"bound_total", r.bound_total},
                       {"holds", r.holds},
                       {"rows", r.rows}};
}

FSReductionReport fs_reduce_exact(const ReducedSigmaAdversary &reduced) {
    const auto &a = reduced.algorithm();
    const auto &slice = reduced.slice();
    FSReductionReport rep;
    rep.adversary = a.name();
    rep.q = a.q();
    rep.challenge_space = slice.schnorr->challenge_space_size();
    rep.order = slice.schnorr->r();
    rep.constant = reprogram::lemma1_constant(a.q());
    const double nc = static_cast<double>(rep.challenge_space);
    const double tail = 2.0 * static_cast<double>(a.q() + 1) * nc;

    CompensatedSum sigma_total, fs_total, fs_direct, weight;
    rep.holds = true;
    for (index_t k0 = 0; k0 < rep.order; ++k0) {
        FSReductionRow row;
        row.k0 = k0;
        row.a0 = slice.commitments[k0];
        row.sigma_success = reduced.exact_acceptance(k0, false);
        row.sigma_success_strict = reduced.exact_acceptance(k0, true);
        const auto rhs = reprogram::lemma1_rhs(a, slice.h, k0, slice.predicate);
        row.fs_success = rhs.term1;
        row.output_weight = rhs.term2;
        row.fs_success_direct = adversary::success_prob(a, slice.h, slice.predicate, k0);
        row.bound = rhs.bound;
        row.holds = row.sigma_success_strict >= row.bound - kInequalitySlack;
        rep.holds = rep.holds && row.holds;
        sigma_total.add(row.sigma_success);
        fs_total.add(row.fs_success);
        fs_direct.add(row.fs_success_direct);
        weight.add(row.output_weight);
        rep.rows.push_back(row);
    }
    rep.sigma_total = sigma_total.value();
    rep.fs_total = fs_total.value();
    rep.fs_direct_total = fs_direct.value();
    rep.bound_total = rep.fs_total / rep.constant - weight.value() / tail;
    rep.holds = rep.holds && rep.sigma_total >= rep.bound_total - kInequalitySlack;
    return rep;
}

} // namespace qromlab::sigma
