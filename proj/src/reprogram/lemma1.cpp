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

#include "qromlab/reprogram/lemma1.hpp"

#include <algorithm>
#include <cmath>

#include "../parallel.hpp"

namespace qromlab::reprogram {

using qsim::Projector;
using qsim::Register;

namespace {

void check_inputs(const OracleAlgorithm &a, const FiniteFunction &h,
                  index_t x0) {
    if (x0 >= a.layout().dim(Register::X)) {
        throw std::invalid_argument("x0 outside X");
    }
    if (h.domain_size() != a.layout().dim(Register::X) ||
        h.range_size() != a.layout().dim(Register::Y)) {
        throw DimensionError("oracle does not match the algorithm's layout");
    }
}

Projector success_projector(const QuantumPredicate &v, index_t x0,
                            index_t theta, const qsim::RegisterLayout &layout,
                            SuccessEvent event) {
    if (event == SuccessEvent::OutputMatches) {
        return adversary::goal_projector(v, x0, theta, layout);
    }
    return adversary::predicate_projector(v, x0, theta, layout);
}

} // namespace

double lemma1_constant(index_t q) {
    const double qq = static_cast<double>(q);
    return 2.0 * (qq + 1.0) * (2.0 * qq + 3.0);
}

std::vector<double> lemma1_lhs_multi(const OracleAlgorithm &a,
                                     const FiniteFunction &h, index_t x0,
                                     const std::vector<QuantumPredicate> &preds,
                                     SuccessEvent event) {
    check_inputs(a, h, x0);
    const index_t q = a.q();
    const index_t dy = h.range_size();
    const index_t cells = dy * (q + 1) * 2;
    if (dy > kExhaustiveCellCap || cells > kExhaustiveCellCap) {
        throw CapacityError("lemma1_lhs: |Y|(q+1)*2 = " + std::to_string(cells) +
                            " exceeds " + std::to_string(kExhaustiveCellCap));
    }
    const auto &layout = a.layout();
    const std::size_t np = preds.size();
    // values[(cell * np) + p], cell = (i * 2 + b) * dy + theta.
    std::vector<double> values(cells * np, 0.0);

    const Projector x_proj = Projector::basis(layout, Register::X, x0);
    StateVector phi = a.initial();
    for (index_t i = 0; i <= q; ++i) {
        if (i > 0) {
            phi = adversary::run_segment(a, h, i - 1, i, std::move(phi));
        }
        const StateVector xphi = qsim::apply_projector(phi, x_proj);
        if (xphi.norm2() == 0.0) {
            continue;
        }
        for (unsigned b = 0; b < 2; ++b) {
            const index_t j = std::min<index_t>(i + b, q);
            const StateVector base = adversary::run_segment(a, h, i, j, xphi);
            const index_t offset = (i * 2 + b) * dy;

            detail::parallel_for(dy, [&](index_t theta) {
                const StateVector fin = adversary::run_segment(
                    a, oracle::reprogram(h, x0, theta), j, q, base);
                for (std::size_t p = 0; p < np; ++p) {
                    values[(offset + theta) * np + p] = qsim::project_prob(
                        fin, success_projector(preds[p], x0, theta, layout, event));
                }
            });
        }
    }

    std::vector<double> out(np);
    for (std::size_t p = 0; p < np; ++p) {
        CompensatedSum s;
        for (index_t c = 0; c < cells; ++c) {
            s.add(values[c * np + p]);
        }
        out[p] = s.value() / static_cast<double>(cells);
    }
    return out;
}

double lemma1_lhs(const OracleAlgorithm &a, const FiniteFunction &h, index_t x0,
                  const QuantumPredicate &v) {
    return lemma1_lhs_multi(a, h, x0, {v}).front();
}

std::vector<Lemma1Rhs> lemma1_rhs_multi(const OracleAlgorithm &a,
                                        const FiniteFunction &h, index_t x0,
                                        const std::vector<QuantumPredicate> &preds) {
    check_inputs(a, h, x0);
    const index_t q = a.q();
    const index_t dy = h.range_size();
    if (dy > kExhaustiveCellCap) {
        throw CapacityError("lemma1_rhs: |Y| exceeds the exhaustive cap");
    }
    const auto &layout = a.layout();
    const std::size_t np = preds.size();
    std::vector<double> values(dy * np, 0.0);

    detail::parallel_for(dy, [&](index_t theta) {
        const StateVector fin = adversary::run(a, oracle::reprogram(h, x0, theta));
        for (std::size_t p = 0; p < np; ++p) {
            values[theta * np + p] = qsim::project_prob(
                fin, adversary::goal_projector(preds[p], x0, theta, layout));
        }
    });

    const double term2 = qsim::project_prob(
        adversary::run(a, h), Projector::basis(layout, Register::X, x0));
    const double c = lemma1_constant(q);
    const double qq = static_cast<double>(q);
    std::vector<Lemma1Rhs> out(np);
    for (std::size_t p = 0; p < np; ++p) {
        CompensatedSum s;
        for (index_t theta = 0; theta < dy; ++theta) {
            s.add(values[theta * np + p]);
        }
        Lemma1Rhs r;
        r.term1 = s.value() / static_cast<double>(dy);
        r.term2 = term2;
        r.bound = r.term1 / c -
                  r.term2 / (2.0 * (qq + 1.0) * static_cast<double>(dy));
        out[p] = r;
    }
    return out;
}

Lemma1Rhs lemma1_rhs(const OracleAlgorithm &a, const FiniteFunction &h,
                     index_t x0, const QuantumPredicate &v) {
    return lemma1_rhs_multi(a, h, x0, {v}).front();
}

void to_json(nlohmann::json &j, const Lemma1Report &r) {
    j = nlohmann::json{{"adversary", r.adversary},
                       {"predicate", r.predicate},
                       {"q", r.q},
                       {"|X|", r.dim_x},
                       {"|Y|", r.dim_y},
                       {"x0", r.x0},
                       {"lhs", r.lhs},
                       {"term1", r.term1},
                       {"term2", r.term2},
                       {"bound", r.bound},
                       {"holds", r.holds}};
    j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
}

std::vector<Lemma1Report>
verify_lemma1_multi(const OracleAlgorithm &a, const FiniteFunction &h,
                    index_t x0, const std::vector<QuantumPredicate> &preds) {
    const auto lhs = lemma1_lhs_multi(a, h, x0, preds);
    const auto rhs = lemma1_rhs_multi(a, h, x0, preds);
    std::vector<Lemma1Report> out;
    out.reserve(preds.size());
    for (std::size_t p = 0; p < preds.size(); ++p) {
        Lemma1Report r;
        r.adversary = a.name();
        r.predicate = preds[p].name();
        r.q = a.q();
        r.dim_x = a.layout().dim(Register::X);
        r.dim_y = a.layout().dim(Register::Y);
        r.x0 = x0;
        r.lhs = lhs[p];
        r.term1 = rhs[p].term1;
        r.term2 = rhs[p].term2;
        r.bound = rhs[p].bound;
        r.holds = r.lhs >= r.bound - kInequalitySlack;
        if (r.bound > 0.0) {
            r.ratio = r.lhs / r.bound;
        }
        out.push_back(std::move(r));
    }
    return out;
}

Lemma1Report verify_lemma1(const OracleAlgorithm &a, const FiniteFunction &h,
                           index_t x0, const QuantumPredicate &v) {
    return verify_lemma1_multi(a, h, x0, {v}).front();
}

SampleStats lemma1_lhs_sampled(const OracleAlgorithm &a, const FiniteFunction &h,
                               index_t x0, const QuantumPredicate &v,
                               std::uint64_t samples, std::uint64_t seed) {
    check_inputs(a, h, x0);
    const index_t q = a.q();
    const auto &layout = a.layout();
    std::vector<double> values(samples);

    detail::parallel_for(samples, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        const index_t theta = uniform_below(rng, h.range_size());
        const index_t i = uniform_below(rng, q + 1);
        const auto b = static_cast<unsigned>(uniform_below(rng, 2));
        const index_t j = std::min<index_t>(i + b, q);
        StateVector s = qsim::apply_projector(
            adversary::run_prefix(a, h, i), Projector::basis(layout, Register::X, x0));
        s = adversary::run_segment(a, h, i, j, std::move(s));
        s = adversary::run_segment(a, oracle::reprogram(h, x0, theta), j, q,
                                   std::move(s));
        values[t] = qsim::project_prob(s, adversary::goal_projector(v, x0, theta, layout));
    });
    return sample_stats(values);
}

SampleStats simulate_lemma1_lhs(std::shared_ptr<const OracleAlgorithm> a,
                                const FiniteFunction &h, index_t x0,
                                const QuantumPredicate &v, std::uint64_t trials,
                                std::uint64_t seed) {
    check_inputs(*a, h, x0);
    std::vector<double> values(trials);

    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        const auto cp = stage_one(a, h, rng);
        if (cp.measured_x != x0) {
            values[t] = 0.0;
            return;
        }
        const index_t theta = uniform_below(rng, h.range_size());
        const auto b = static_cast<unsigned>(uniform_below(rng, 2));
        values[t] = stage_two(cp, theta, b, v).success;
    });
    return sample_stats(values);
}

} // namespace qromlab::reprogram
