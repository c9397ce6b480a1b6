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

#include "qromlab/extract/collapsing.hpp"

#include <cmath>

#include "../parallel.hpp"
#include "qromlab/json_io.hpp"
#include "qromlab/qsim/gate.hpp"

namespace qromlab::extract {

using qsim::Register;
using qsim::StateVector;

CollapsingRelation::CollapsingRelation(index_t dim_x, index_t dim_y,
                                       std::vector<std::uint8_t> table)
    : dim_x_(dim_x), dim_y_(dim_y), table_(std::move(table)) {
    if (dim_x_ == 0 || dim_y_ == 0 || table_.size() != dim_x_ * dim_y_) {
        throw DimensionError("CollapsingRelation: table size differs from |X| |Y|");
    }
}

CollapsingRelation
CollapsingRelation::from_rule(index_t dim_x, index_t dim_y,
                              const std::function<bool(index_t, index_t)> &rule) {
    std::vector<std::uint8_t> t(dim_x * dim_y);
    for (index_t x = 0; x < dim_x; ++x) {
        for (index_t y = 0; y < dim_y; ++y) {
            t[x * dim_y + y] = rule(x, y) ? 1 : 0;
        }
    }
    return CollapsingRelation(dim_x, dim_y, std::move(t));
}

index_t CollapsingRelation::max_partners() const {
    index_t best = 0;
    for (index_t y = 0; y < dim_y_; ++y) {
        index_t n = 0;
        for (index_t x = 0; x < dim_x_; ++x) {
            n += (*this)(x, y) ? 1 : 0;
        }
        best = std::max(best, n);
    }
    return best;
}

namespace {

void check_shape(const CollapsingRelation &rel, const CollapsingAdversary &adv) {
    const auto &l = adv.initial.layout();
    if (l.dim(Register::X) != rel.dim_x() || l.dim(Register::Z) != rel.dim_y() ||
        l.dim(Register::Y) != 1) {
        throw DimensionError("collapsing game: adversary layout does not match R");
    }
}

/// Keeps the amplitudes whose (x, y) digits satisfy keep.
template <class Keep> StateVector restrict_state(const StateVector &s, Keep keep) {
    const auto &l = s.layout();
    qsim::Amplitudes out(s.size(), amp_t{0.0});
    for (index_t i = 0; i < s.size(); ++i) {
        if (keep(l.digit(i, Register::X), l.digit(i, Register::Z))) {
            out[i] = s[i];
        }
    }
    return StateVector::unnormalized(l, std::move(out));
}

double finish_exact(const CollapsingAdversary &adv, StateVector branch) {
    if (branch.norm2() == 0.0) {
        return 0.0;
    }
    return qsim::project_prob(qsim::apply_unitary(std::move(branch), adv.a2),
                              adv.output_one);
}

} // namespace

void to_json(nlohmann::json &j, const CollapsingExact &r) {
    j = nlohmann::json{{"p1", r.p1}, {"p2", r.p2}, {"advantage", r.advantage}};
}

void to_json(nlohmann::json &j, const CollapsingReport &r) {
    j = nlohmann::json{{"game", r.game},           {"p1", r.p1},
                       {"p2", r.p2},               {"advantage", r.advantage},
                       {"stderr", r.stderr_}};
}

CollapsingExact collapsing_game_exact(const CollapsingRelation &rel,
                                      const CollapsingAdversary &adv) {
    check_shape(rel, adv);
    const StateVector &psi = adv.initial;
    CompensatedSum p1, p2;
    for (index_t y = 0; y < rel.dim_y(); ++y) {
        for (index_t x = 0; x < rel.dim_x(); ++x) {
            if (rel(x, y)) {
                p1.add(finish_exact(adv, restrict_state(psi, [&](index_t a, index_t b) {
                                        return a == x && b == y;
                                    })));
            }
        }
        p2.add(finish_exact(adv, restrict_state(psi, [&](index_t a, index_t b) {
                                return b == y && rel(a, b);
                            })));
    }
    CollapsingExact e;
    e.p1 = p1.value();
    e.p2 = p2.value();
    e.advantage = std::abs(e.p1 - e.p2);
    return e;
}

Proportion collapsing_game(const CollapsingRelation &rel,
                           const CollapsingAdversary &adv, int game_id,
                           std::uint64_t trials, std::uint64_t seed) {
    check_shape(rel, adv);
    if (game_id != 1 && game_id != 2) {
        throw std::invalid_argument("collapsing_game: game must be 1 or 2");
    }
    const StateVector in_r =
        restrict_state(adv.initial, [&](index_t a, index_t b) { return rel(a, b); });
    const double p_r = in_r.norm2();
    const std::optional<StateVector> post =
        p_r > 0.0 ? std::optional<StateVector>(in_r.normalized()) : std::nullopt;

    std::vector<std::uint8_t> ok(trials, 0);
    detail::parallel_for(trials, [&](std::uint64_t t) {
        Rng rng = trial_rng(seed, t);
        if (!post || !(uniform_unit(rng) < p_r)) {
            return;
        }
        StateVector s = *post;
        if (game_id == 1) {
            s = qsim::measure_register(s, Register::X, rng).post;
        }
        s = qsim::measure_register(s, Register::Z, rng).post;
        s = qsim::apply_unitary(std::move(s), adv.a2);
        ok[t] = uniform_unit(rng) < qsim::project_prob(s, adv.output_one) ? 1 : 0;
    });
    Proportion p;
    p.trials = trials;
    for (auto v : ok) {
        p.successes += v;
    }
    return p;
}

CollapsingReport collapsing_report(const std::string &name,
                                   const CollapsingRelation &rel,
                                   const CollapsingAdversary &adv,
                                   std::uint64_t trials, std::uint64_t seed) {
    CollapsingReport r;
    r.game = name;
    r.p1 = collapsing_game(rel, adv, 1, trials, derive_seed(seed, kTrialStream, 1));
    r.p2 = collapsing_game(rel, adv, 2, trials, derive_seed(seed, kTrialStream, 2));
    r.advantage = std::abs(r.p1.mean() - r.p2.mean());
    r.stderr_ = std::sqrt(r.p1.stderr_() * r.p1.stderr_() + r.p2.stderr_() * r.p2.stderr_());
    return r;
}

void write_collapse_csv_header(std::ostream &os) {
    os << "game,trials,p1,p2,advantage,stderr\n";
}

void write_collapse_csv_row(std::ostream &os, const CollapsingReport &r) {
    const auto old = os.precision(17);
    os << r.game << ',' << r.p1.trials << ',' << r.p1.mean() << ',' << r.p2.mean()
       << ',' << r.advantage << ',' << r.stderr_ << '\n';
    os.precision(old);
}

CollapsingRelation bijective_relation(index_t dim, index_t mult, index_t add) {
    return CollapsingRelation::from_rule(dim, dim, [=](index_t x, index_t y) {
        return (x * mult + add) % dim == y;
    });
}

CollapsingAdversary bijective_adversary(const CollapsingRelation &rel) {
    const qsim::RegisterLayout l(rel.dim_x(), 1, rel.dim_y(), 1);
    qsim::Amplitudes amps(l.total(), amp_t{0.0});
    index_t pairs = 0;
    for (index_t x = 0; x < rel.dim_x(); ++x) {
        for (index_t y = 0; y < rel.dim_y(); ++y) {
            pairs += rel(x, y) ? 1 : 0;
        }
    }
    for (index_t x = 0; x < rel.dim_x(); ++x) {
        for (index_t y = 0; y < rel.dim_y(); ++y) {
            if (rel(x, y)) {
                amps[l.index(x, 0, y, 0)] = 1.0 / std::sqrt(static_cast<double>(pairs));
            }
        }
    }
    return {"bijective", StateVector::from_amplitudes(l, std::move(amps)), {},
            qsim::Projector::identity(l)};
}

CollapsingRelation two_preimage_relation(index_t dim_y) {
    return CollapsingRelation::from_rule(2 * dim_y, dim_y,
                                         [](index_t x, index_t y) { return x / 2 == y; });
}

CollapsingAdversary two_preimage_adversary(const CollapsingRelation &rel) {
    CollapsingAdversary a = bijective_adversary(rel);
    a.name = "two-preimage";
    return a;
}

CollapsingAdversary with_fourier_distinguisher(CollapsingAdversary adv) {
    const auto &l = adv.initial.layout();
    const index_t d = l.dim(Register::X);
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::MatrixXcd h = qsim::hadamard();
    for (index_t j = 0; j + 1 < d; j += 2) {
        f.block(j, j, 2, 2) = h;
    }
    std::vector<std::uint8_t> even(d);
    for (index_t x = 0; x < d; ++x) {
        even[x] = x % 2 == 0 ? 1 : 0;
    }
    adv.name += "+fourier";
    adv.a2 = qsim::Unitary{{qsim::Gate::dense(l, {Register::X}, f, "fourier")}};
    adv.output_one = qsim::Projector::mask(l, Register::X, even);
    return adv;
}

CollapsingAdversary with_blind_distinguisher(CollapsingAdversary adv) {
    adv.name += "+blind";
    adv.a2 = {};
    adv.output_one = qsim::Projector::identity(adv.initial.layout());
    return adv;
}

CollapsingAdversary with_random_distinguisher(CollapsingAdversary adv,
                                              std::uint64_t seed) {
    const auto &l = adv.initial.layout();
    const index_t d = l.dim(Register::X);
    Rng rng(derive_seed(seed, kOracleStream, 0));
    std::vector<std::uint8_t> even(d);
    for (index_t x = 0; x < d; ++x) {
        even[x] = x % 2 == 0 ? 1 : 0;
    }
    adv.name += "+random";
    adv.a2 = qsim::Unitary{
        {qsim::Gate::dense(l, {Register::X}, qsim::haar_unitary(d, rng), "haar")}};
    adv.output_one = qsim::Projector::mask(l, Register::X, even);
    return adv;
}

QcurSetup qcur_setup(const sigma::SigmaProtocol &sigma, const sigma::Schnorr &group,
                     std::uint64_t x) {
    const index_t nz = sigma.response_space_size();
    const index_t nc = sigma.challenge_space_size();
    const index_t r = group.r();
    std::vector<std::uint64_t> commitments(r);
    for (index_t k = 0; k < r; ++k) {
        commitments[k] = group.exp(k);
    }
    auto rel = CollapsingRelation::from_rule(nz, r * nc, [&](index_t z, index_t kc) {
        return sigma.verify(x, commitments[kc / nc], kc % nc, z);
    });
    const qsim::RegisterLayout l(nz, 1, r * nc, 1, qsim::dimension_cap_from_env());
    qsim::Amplitudes amps(l.total(), amp_t{0.0});
    for (index_t kc = 0; kc < r * nc; ++kc) {
        index_t valid = 0;
        for (index_t z = 0; z < nz; ++z) {
            valid += rel(z, kc) ? 1 : 0;
        }
        for (index_t z = 0; z < nz; ++z) {
            if (rel(z, kc)) {
                amps[l.index(z, 0, kc, 0)] =
                    1.0 / std::sqrt(static_cast<double>(valid * r * nc));
            }
        }
    }
    CollapsingAdversary adv{"qcur-" + sigma.name(),
                            StateVector::from_amplitudes(l, std::move(amps)),
                            {},
                            qsim::Projector::identity(l)};
    return {std::move(rel), std::move(adv)};
}

} // namespace qromlab::extract
