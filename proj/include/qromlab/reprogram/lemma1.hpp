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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qromlab/reprogram/simulator.hpp"

namespace qromlab::reprogram {

/// Exhaustive (Theta, i, b) enumeration is used up to |Y|(q+1)*2 cells.
inline constexpr index_t kExhaustiveCellCap = index_t{1} << 14;

/// The explicit constant 2(q+1)(2q+3).
double lemma1_constant(index_t q);

enum class SuccessEvent {
    /// G_x^Theta: A's final X equals x0 and the predicate accepts.
    OutputMatches,
    /// Only the predicate on Z, with x0 the measured point.
    PredicateOnly,
};

/**
 * E_{Theta,i,b} ||P_{x0}^Theta A_{i+b->q}^{H*Theta x0} A_{i->i+b}^H X|phi_i^H>||^2
 * for each predicate, where P is G_{x0}^Theta or the Z factor alone.
 * Throws CapacityError above kExhaustiveCellCap cells.
 */
std::vector<double> lemma1_lhs_multi(const OracleAlgorithm &a,
                                     const FiniteFunction &h, index_t x0,
                                     const std::vector<QuantumPredicate> &preds,
                                     SuccessEvent event = SuccessEvent::OutputMatches);

double lemma1_lhs(const OracleAlgorithm &a, const FiniteFunction &h, index_t x0,
                  const QuantumPredicate &v);

struct Lemma1Rhs {
    double bound = 0.0;
    /// E_Theta ||G_{x0}^Theta |phi_q^{H*Theta x0}>||^2.
    double term1 = 0.0;
    /// ||X|phi_q^H>||^2.
    double term2 = 0.0;
};

std::vector<Lemma1Rhs> lemma1_rhs_multi(const OracleAlgorithm &a,
                                        const FiniteFunction &h, index_t x0,
                                        const std::vector<QuantumPredicate> &preds);

Lemma1Rhs lemma1_rhs(const OracleAlgorithm &a, const FiniteFunction &h,
                     index_t x0, const QuantumPredicate &v);

struct Lemma1Report {
    std::string adversary;
    std::string predicate;
    index_t q = 0;
    index_t dim_x = 0;
    index_t dim_y = 0;
    index_t x0 = 0;
    double lhs = 0.0;
    double term1 = 0.0;
    double term2 = 0.0;
    double bound = 0.0;
    bool holds = false;
    /// lhs / bound when the bound is positive.
    std::optional<double> ratio;
};

void to_json(nlohmann::json &j, const Lemma1Report &r);

std::vector<Lemma1Report>
verify_lemma1_multi(const OracleAlgorithm &a, const FiniteFunction &h,
                    index_t x0, const std::vector<QuantumPredicate> &preds);

Lemma1Report verify_lemma1(const OracleAlgorithm &a, const FiniteFunction &h,
                           index_t x0, const QuantumPredicate &v);

/// Monte Carlo over (Theta, i, b) of the exact per-cell value; for sizes
/// above the exhaustive cap.
SampleStats lemma1_lhs_sampled(const OracleAlgorithm &a, const FiniteFunction &h,
                               index_t x0, const QuantumPredicate &v,
                               std::uint64_t samples, std::uint64_t seed);

/// Operational estimate: per trial, stage_one with sampled measurement, then
/// stage_two with uniform (Theta, b); records 1[x = x0] * success.
SampleStats simulate_lemma1_lhs(std::shared_ptr<const OracleAlgorithm> a,
                                const FiniteFunction &h, index_t x0,
                                const QuantumPredicate &v, std::uint64_t trials,
                                std::uint64_t seed);

} // namespace qromlab::reprogram
