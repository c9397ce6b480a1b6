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

#include "qromlab/extract/extractor.hpp"

#include <cmath>

#include "../parallel.hpp"
#include "qromlab/json_io.hpp"

namespace qromlab::extract {

std::string to_string(ExtractorVariant v) {
    return v == ExtractorVariant::MeasureResponse ? "measure-response"
                                                  : "measure-predicate";
}

ExtractionAttempt extract(const SigmaProtocol &sigma, const QuantumProver &prover,
                          unsigned t, std::uint64_t seed, std::uint64_t trial,
                          ExtractorVariant variant) {
    if (t == 0) {
        throw std::invalid_argument("extract: t must be positive");
    }
    Rng rs = trial_rng(seed, trial, kTrialStream);
    Rng rc = trial_rng(seed, trial, kChallengeStream);
    Rng rm = trial_rng(seed, trial, kMeasurementStream);

    const sigma::ProverStart start = prover.start(rs);
    ExtractionAttempt out;
    out.x = start.x;
    qsim::StateVector state = start.state;
    for (unsigned round = 0; round < t; ++round) {
        Transcript tr;
        tr.x = start.x;
        tr.a = start.a;
        tr.c = uniform_below(rc, sigma.challenge_space_size());
        qsim::StateVector fin = prover.respond(start, std::move(state), tr.c);
        if (variant == ExtractorVariant::MeasurePredicate) {
            const auto acc = qsim::Projector::mask(
                fin.layout(), qsim::Register::Z,
                sigma::accept_mask(sigma, prover, start, tr.c));
            const double p = qsim::project_prob(fin, acc);
            if (!(uniform_unit(rm) < p)) {
                out.transcripts.push_back(tr);
                out.failure = "reject";
                return out;
            }
            fin = qsim::apply_projector(std::move(fin), acc).normalized();
        }
        auto m = qsim::measure_register(fin, qsim::Register::Z, rm);
        tr.z = prover.response_of(start, m.outcome);
        tr.accept = sigma.verify(tr.x, tr.a, tr.c, *tr.z);
        out.transcripts.push_back(tr);
        if (!tr.accept) {
            out.failure = "reject";
            return out;
        }
        state = prover.unrespond(start, std::move(m.post), tr.c);
    }
    const sigma::Extraction e = sigma.extract(start.x, out.transcripts);
    if (e.witness && sigma.relation(start.x, *e.witness)) {
        out.witness = e.witness;
    } else {
        out.failure = e.failure.empty() ? "algebra" : e.failure;
    }
    return out;
}

ExtractionAttempt extract_predicate_variant(const SigmaProtocol &sigma,
                                            const QuantumProver &prover, unsigned t,
                                            std::uint64_t seed, std::uint64_t trial) {
    return extract(sigma, prover, t, seed, trial, ExtractorVariant::MeasurePredicate);
}

void to_json(nlohmann::json &j, const ExtractorStats &s) {
    j = nlohmann::json{{"success", s.success},
                       {"validated", s.validated},
                       {"failures", s.failures},
                       {"failed_challenges", s.failed_challenges}};
}

ExtractorStats run_extractor(const SigmaProtocol &sigma, const QuantumProver &prover,
                             unsigned t, std::uint64_t trials, std::uint64_t seed,
                             ExtractorVariant variant) {
    std::vector<ExtractionAttempt> runs(trials);
    detail::parallel_for(trials, [&](std::uint64_t k) {
        runs[k] = extract(sigma, prover, t, seed, k, variant);
    });
    ExtractorStats s;
    s.success.trials = trials;
    for (const auto &r : runs) {
        if (r.witness) {
            ++s.success.successes;
            s.validated += sigma.relation(r.x, *r.witness) ? 1 : 0;
            continue;
        }
        ++s.failures[r.failure];
        if (r.failure != "reject") {
            std::vector<std::uint64_t> cs;
            for (const auto &tr : r.transcripts) {
                cs.push_back(tr.c);
            }
            s.failed_challenges.push_back(std::move(cs));
        }
    }
    return s;
}

Proportion single_run_acceptance(const SigmaProtocol &sigma,
                                 const QuantumProver &prover, std::uint64_t trials,
                                 std::uint64_t seed) {
    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t k) {
        Rng rng = trial_rng(seed, k);
        ok[k] = sigma::run_quantum_prover(sigma, prover, rng).accept ? 1 : 0;
    });
    Proportion p;
    p.trials = trials;
    for (auto v : ok) {
        p.successes += v;
    }
    return p;
}

double extractor_bound(double v_hat, unsigned t, std::uint64_t challenge_space) {
    return std::pow(v_hat, 2.0 * t - 1.0) -
           static_cast<double>(t) * t / static_cast<double>(challenge_space);
}

double extractor_tolerance(const Proportion &e_hat, const Proportion &v_hat,
                           unsigned t) {
    const double slope = (2.0 * t - 1.0) * std::pow(v_hat.mean(), 2.0 * t - 2.0);
    const double se_v = slope * v_hat.stderr_();
    const double se_e = e_hat.stderr_();
    return 3.0 * std::sqrt(se_e * se_e + se_v * se_v);
}

} // namespace qromlab::extract
