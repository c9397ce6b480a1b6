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

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qromlab/qsim/projector.hpp"
#include "qromlab/qsim/state_vector.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::extract {

/**
 * Relation table R(x, y) on finite sets. In the games below the x side
 * lives in register X, the y side in register Z and the adversary's
 * private state in E; register Y is unused (dimension 1).
 */
class CollapsingRelation {
  public:
    CollapsingRelation(index_t dim_x, index_t dim_y, std::vector<std::uint8_t> table);
    static CollapsingRelation from_rule(index_t dim_x, index_t dim_y,
                                        const std::function<bool(index_t, index_t)> &rule);

    [[nodiscard]] index_t dim_x() const { return dim_x_; }
    [[nodiscard]] index_t dim_y() const { return dim_y_; }
    [[nodiscard]] bool operator()(index_t x, index_t y) const {
        return table_[x * dim_y_ + y] != 0;
    }
    /// Largest number of x partners of any y.
    [[nodiscard]] index_t max_partners() const;

  private:
    index_t dim_x_;
    index_t dim_y_;
    std::vector<std::uint8_t> table_;
};

/// A1 is a prepared state; A2 is a unitary followed by the projector for b = 1.
struct CollapsingAdversary {
    std::string name;
    qsim::StateVector initial;
    qsim::Unitary a2;
    qsim::Projector output_one;
};

struct CollapsingExact {
    double p1 = 0.0;
    double p2 = 0.0;
    double advantage = 0.0;
};

struct CollapsingReport {
    std::string game;
    Proportion p1;
    Proportion p2;
    double advantage = 0.0;
    double stderr_ = 0.0;
};

void to_json(nlohmann::json &j, const CollapsingExact &r);
void to_json(nlohmann::json &j, const CollapsingReport &r);

/// Exact Pr[r = b = 1] in both games from amplitudes.
CollapsingExact collapsing_game_exact(const CollapsingRelation &rel,
                                      const CollapsingAdversary &adv);

/// Pr[r = b = 1] in game 1 (X measured) or game 2 (X not measured).
Proportion collapsing_game(const CollapsingRelation &rel,
                           const CollapsingAdversary &adv, int game_id,
                           std::uint64_t trials, std::uint64_t seed);

/// Both games with independent trial streams.
CollapsingReport collapsing_report(const std::string &name,
                                   const CollapsingRelation &rel,
                                   const CollapsingAdversary &adv,
                                   std::uint64_t trials, std::uint64_t seed);

/// CSV header and row: game,trials,p1,p2,advantage,stderr.
void write_collapse_csv_header(std::ostream &os);
void write_collapse_csv_row(std::ostream &os, const CollapsingReport &r);

/// y = f(x) for a bijection f(x) = (x * mult + add) mod dim; A1 prepares
/// sum_x |x>|f(x)>.
CollapsingRelation bijective_relation(index_t dim, index_t mult, index_t add);
CollapsingAdversary bijective_adversary(const CollapsingRelation &rel);

/// y = floor(x / 2) with A1 preparing sum_y |y>(|2y> + |2y+1>).
CollapsingRelation two_preimage_relation(index_t dim_y);
CollapsingAdversary two_preimage_adversary(const CollapsingRelation &rel);

/// Applies the pairwise Fourier involution on X and outputs b = 1 for an
/// even result.
CollapsingAdversary with_fourier_distinguisher(CollapsingAdversary adv);
/// Ignores X and Z and always outputs b = 1.
CollapsingAdversary with_blind_distinguisher(CollapsingAdversary adv);
/// Haar-random unitary on X and a fixed output bit from the lowest X bit.
CollapsingAdversary with_random_distinguisher(CollapsingAdversary adv,
                                              std::uint64_t seed);

/**
 * Unique-response check as a collapsing game: the x side is the response z,
 * the y side the pair (k, c) with a = g^k, and R is V(x, g^k, c, z). A1
 * prepares a uniform superposition over (k, c) and, for each, over every
 * accepting z.
 */
struct QcurSetup {
    CollapsingRelation relation;
    CollapsingAdversary adversary;
};

QcurSetup qcur_setup(const sigma::SigmaProtocol &sigma, const sigma::Schnorr &group,
                     std::uint64_t x);

} // namespace qromlab::extract
