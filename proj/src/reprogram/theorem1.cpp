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

#include "qromlab/reprogram/theorem1.hpp"

#include <cmath>

#include "qromlab/json_io.hpp"

namespace qromlab::reprogram {

using qsim::Register;

namespace {

// Values for one oracle, indexed by x0.
struct OracleValues {
    std::vector<double> lhs, lhs_strict, direct, output_weight, bound;
};

OracleValues evaluate(const OracleAlgorithm &a, const FiniteFunction &h,
                      const QuantumPredicate &v) {
    const index_t dx = a.layout().dim(Register::X);
    OracleValues out;
    const StateVector fin = adversary::run(a, h);
    const std::vector<QuantumPredicate> preds{v};
    for (index_t x0 = 0; x0 < dx; ++x0) {
        out.lhs.push_back(
            lemma1_lhs_multi(a, h, x0, preds, SuccessEvent::PredicateOnly).front());
        out.lhs_strict.push_back(lemma1_lhs_multi(a, h, x0, preds).front());
        out.direct.push_back(qsim::project_prob(
            fin, adversary::goal_projector(v, x0, h(x0), a.layout())));
        const Lemma1Rhs rhs = lemma1_rhs_multi(a, h, x0, preds).front();
        out.output_weight.push_back(rhs.term2);
        out.bound.push_back(rhs.bound);
    }
    return out;
}

OracleAverages average(const std::vector<OracleValues> &vals, index_t x0) {
    std::vector<double> l, ls, d, w;
    for (const auto &v : vals) {
        l.push_back(v.lhs[x0]);
        ls.push_back(v.lhs_strict[x0]);
        d.push_back(v.direct[x0]);
        w.push_back(v.output_weight[x0]);
    }
    return OracleAverages{sample_stats(l), sample_stats(ls), sample_stats(d),
                          sample_stats(w)};
}

bool within_3sigma(const SampleStats &a, const SampleStats &b) {
    return std::abs(a.mean - b.mean) <=
           3.0 * (a.stderr_ + b.stderr_) + kInequalitySlack;
}

} // namespace

void to_json(nlohmann::json &j, const Thm1Report &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &p : r.per_x0) {
        rows.push_back({{"x0", p.x0},
                        {"family_lhs", p.family.lhs},
                        {"family_lhs_strict", p.family.lhs_strict},
                        {"family_direct", p.family.direct},
                        {"family_output_weight", p.family.output_weight},
                        {"uniform_lhs", p.uniform.lhs},
                        {"uniform_direct", p.uniform.direct},
                        {"rhs", p.rhs},
                        {"holds", p.holds},
                        {"matches_uniform", p.matches_uniform}});
    }
    j = nlohmann::json{{"adversary", r.adversary},
                       {"predicate", r.predicate},
                       {"q", r.q},
                       {"|X|", r.dim_x},
                       {"|Y|", r.dim_y},
                       {"k", r.k},
                       {"members", r.members},
                       {"uniform_exhaustive", r.uniform_exhaustive},
                       {"uniform_count", r.uniform_count},
                       {"constant_2(q+1)(2q+3)", r.constant},
                       {"additive_term", r.additive_term},
                       {"additive_term_tight", r.additive_term_tight},
                       {"per_x0", rows},
                       {"lhs_sum", r.lhs_sum},
                       {"direct_sum", r.direct_sum},
                       {"rhs_sum", r.rhs_sum},
                       {"rhs_sum_tight", r.rhs_sum_tight},
                       {"holds", r.holds},
                       {"holds_tight", r.holds_tight},
                       {"lemma_cells", r.lemma_cells},
                       {"lemma_violations", r.lemma_violations},
                       {"family_matches_uniform", r.family_matches_uniform},
                       {"ratio", r.ratio}};
}

Thm1Report verify_thm1(const OracleAlgorithm &a, const QuantumPredicate &v,
                       std::uint64_t members, std::uint64_t seed) {
    if (members < 2) {
        throw std::invalid_argument("verify_thm1: need at least 2 family members");
    }
    const auto &layout = a.layout();
    const index_t dx = layout.dim(Register::X);
    const index_t dy = layout.dim(Register::Y);
    const unsigned n = layout.range_bits();
    if (n == 0) {
        throw std::invalid_argument("verify_thm1: the layout has no oracle output");
    }
    const index_t q = a.q();

    Thm1Report r;
    r.adversary = a.name();
    r.predicate = v.name();
    r.q = q;
    r.dim_x = dx;
    r.dim_y = dy;
    r.k = static_cast<unsigned>(2 * (q + 1));
    r.members = members;
    r.constant = lemma1_constant(q);
    const double qq = static_cast<double>(q);
    r.additive_term_tight = 1.0 / (2.0 * (qq + 1.0) * static_cast<double>(dy));
    r.additive_term = q == 0 ? r.additive_term_tight
                             : 1.0 / (2.0 * qq * static_cast<double>(dy));

    std::vector<OracleValues> fam(members);
    for (std::uint64_t m = 0; m < members; ++m) {
        Rng rng = trial_rng(seed, m, kOracleStream);
        const auto f = oracle::KWiseFamilyMember::sample(r.k, dx, n, rng);
        fam[m] = evaluate(a, oracle::materialize(f), v);
    }

    std::vector<OracleValues> uni;
    const unsigned table_bits = static_cast<unsigned>(dx) * n;
    r.uniform_exhaustive = dx <= 64 && table_bits <= kExhaustiveUniformBits;
    if (r.uniform_exhaustive) {
        for (const auto &h : oracle::enumerate_all(dx, n)) {
            uni.push_back(evaluate(a, h, v));
        }
    } else {
        for (std::uint64_t m = 0; m < members; ++m) {
            const auto h = oracle::sample_uniform(
                dx, n, derive_seed(seed, kTrialStream, m));
            uni.push_back(evaluate(a, h, v));
        }
    }
    r.uniform_count = uni.size();

    r.family_matches_uniform = true;
    for (index_t x0 = 0; x0 < dx; ++x0) {
        Thm1PerX0 p;
        p.x0 = x0;
        p.family = average(fam, x0);
        p.uniform = average(uni, x0);
        if (r.uniform_exhaustive) {
            // Exact averages carry no sampling error.
            p.uniform.lhs.stderr_ = p.uniform.lhs_strict.stderr_ = 0.0;
            p.uniform.direct.stderr_ = p.uniform.output_weight.stderr_ = 0.0;
        }
        p.rhs = p.family.direct.mean / r.constant -
                p.family.output_weight.mean * r.additive_term_tight;
        p.holds = p.family.lhs.mean + 3.0 * p.family.lhs.stderr_ >=
                  p.rhs - kInequalitySlack;
        p.matches_uniform = within_3sigma(p.family.lhs, p.uniform.lhs) &&
                            within_3sigma(p.family.direct, p.uniform.direct);
        r.family_matches_uniform = r.family_matches_uniform && p.matches_uniform;
        r.per_x0.push_back(std::move(p));
    }

    std::vector<double> lhs_sums, direct_sums, diffs, diffs_tight;
    for (const auto &f : fam) {
        CompensatedSum l, d;
        for (index_t x0 = 0; x0 < dx; ++x0) {
            l.add(f.lhs[x0]);
            d.add(f.direct[x0]);
            ++r.lemma_cells;
            if (f.lhs_strict[x0] < f.bound[x0] - kInequalitySlack) {
                ++r.lemma_violations;
            }
        }
        lhs_sums.push_back(l.value());
        direct_sums.push_back(d.value());
        diffs.push_back(l.value() - d.value() / r.constant + r.additive_term);
        diffs_tight.push_back(l.value() - d.value() / r.constant +
                              r.additive_term_tight);
    }
    r.lhs_sum = sample_stats(lhs_sums);
    r.direct_sum = sample_stats(direct_sums);
    r.rhs_sum = r.direct_sum.mean / r.constant - r.additive_term;
    r.rhs_sum_tight = r.direct_sum.mean / r.constant - r.additive_term_tight;
    const SampleStats d = sample_stats(diffs);
    const SampleStats dt = sample_stats(diffs_tight);
    r.holds = d.mean + 3.0 * d.stderr_ >= -kInequalitySlack;
    r.holds_tight = dt.mean + 3.0 * dt.stderr_ >= -kInequalitySlack;
    r.ratio = r.rhs_sum > 0.0 ? r.lhs_sum.mean / r.rhs_sum : 0.0;
    return r;
}

} // namespace qromlab::reprogram
