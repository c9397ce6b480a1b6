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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qromlab/reprogram/lemma1.hpp"

namespace qromlab::reprogram {

/// Uniform-H averages are exhaustive up to this many table bits |X|*n.
inline constexpr unsigned kExhaustiveUniformBits = 12;

/// Averages over a set of oracles.
struct OracleAverages {
    /// Simulator success Pr[x = x0 and V(x, Theta, z)] (measured x only).
    SampleStats lhs;
    /// Same, additionally requiring A's final output to equal x0.
    SampleStats lhs_strict;
    /// Pr[x = x0 and V(x, H(x), z) : A^H].
    SampleStats direct;
    /// ||X|phi_q^H>||^2.
    SampleStats output_weight;
};

struct Thm1PerX0 {
    index_t x0 = 0;
    OracleAverages family;
    OracleAverages uniform;
    double rhs = 0.0;
    bool holds = false;
    bool matches_uniform = false;
};

struct Thm1Report {
    std::string adversary;
    std::string predicate;
    index_t q = 0;
    index_t dim_x = 0;
    index_t dim_y = 0;
    unsigned k = 0;
    std::uint64_t members = 0;
    bool uniform_exhaustive = false;
    std::uint64_t uniform_count = 0;
    double constant = 0.0;
    /// 1/(2q|Y|) for q >= 1; 1/(2(q+1)|Y|) at q = 0.
    double additive_term = 0.0;
    /// 1/(2(q+1)|Y|), the single-oracle tail, for every q.
    double additive_term_tight = 0.0;
    std::vector<Thm1PerX0> per_x0;
    /// Per-member sums over x0.
    SampleStats lhs_sum;
    SampleStats direct_sum;
    double rhs_sum = 0.0;
    double rhs_sum_tight = 0.0;
    /// Sum LHS >= Sum direct / constant - additive, within 3 sigma of the
    /// per-member difference.
    bool holds = false;
    bool holds_tight = false;
    /// Exact single-oracle checks on every (member, x0).
    std::uint64_t lemma_cells = 0;
    std::uint64_t lemma_violations = 0;
    bool family_matches_uniform = false;
    double ratio = 0.0;
};

void to_json(nlohmann::json &j, const Thm1Report &r);

/**
 * Draws `members` oracles from the 2(q+1)-wise independent family, evaluates
 * both sides of the measure-and-reprogram bound per x0 and summed over x0,
 * and compares family averages with uniform-H averages.
 */
Thm1Report verify_thm1(const OracleAlgorithm &a, const QuantumPredicate &v,
                       std::uint64_t members, std::uint64_t seed);

} // namespace qromlab::reprogram
