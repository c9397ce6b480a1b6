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

#include "qromlab/sigma/quantum_prover.hpp"

namespace qromlab::sigma {

std::vector<std::uint8_t> accept_mask(const SigmaProtocol &sigma,
                                      const QuantumProver &prover,
                                      const ProverStart &s, std::uint64_t c) {
    const index_t dz = s.state.layout().dim(qsim::Register::Z);
    std::vector<std::uint8_t> m(dz);
    for (index_t z = 0; z < dz; ++z) {
        m[z] = sigma.verify(s.x, s.a, c, prover.response_of(s, z)) ? 1 : 0;
    }
    return m;
}

Transcript run_quantum_prover(const SigmaProtocol &sigma,
                              const QuantumProver &prover, Rng &rng) {
    const ProverStart s = prover.start(rng);
    Transcript t;
    t.x = s.x;
    t.a = s.a;
    t.c = uniform_below(rng, sigma.challenge_space_size());
    const StateVector fin = prover.respond(s, s.state, t.c);
    const auto m = qsim::measure_register(fin, qsim::Register::Z, rng);
    t.z = prover.response_of(s, m.outcome);
    t.accept = sigma.verify(t.x, t.a, t.c, *t.z);
    return t;
}

double acceptance_given_start(const SigmaProtocol &sigma,
                              const QuantumProver &prover, const ProverStart &s) {
    const std::uint64_t nc = sigma.challenge_space_size();
    CompensatedSum acc;
    for (std::uint64_t c = 0; c < nc; ++c) {
        const StateVector fin = prover.respond(s, s.state, c);
        const auto p = qsim::Projector::mask(fin.layout(), qsim::Register::Z,
                                             accept_mask(sigma, prover, s, c));
        acc.add(qsim::project_prob(fin, p));
    }
    return acc.value() / static_cast<double>(nc);
}

} // namespace qromlab::sigma
