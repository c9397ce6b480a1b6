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

#include "qromlab/extract/projection_bounds.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "qromlab/qsim/gate.hpp"
#include "qromlab/qsim/projector.hpp"

namespace qromlab::extract {

namespace {

void check_family(const std::vector<Eigen::MatrixXcd> &p, Eigen::Index dim) {
    for (const auto &m : p) {
        if (m.rows() != dim || m.cols() != dim) {
            throw DimensionError("projection family: size differs from the state");
        }
        if (!qsim::is_projector(m)) {
            throw std::invalid_argument("projection family: member is not a projector");
        }
    }
}

void check_cap(double products, Eigen::Index dim) {
    if (products * static_cast<double>(dim) > static_cast<double>(kBoundEnumerationCap)) {
        throw CapacityError("projection bound: enumeration exceeds cap");
    }
}

} // namespace

void to_json(nlohmann::json &j, const BoundCheck &b) {
    j = nlohmann::json{{"V", b.V}, {"F", b.F}, {"bound", b.bound}, {"holds", b.holds}};
}

BoundCheck projection_bound_check(const std::vector<Eigen::MatrixXcd> &p,
                                  const Eigen::VectorXcd &psi, unsigned t) {
    if (p.empty() || t == 0) {
        throw std::invalid_argument("projection_bound_check: need n >= 1 and t >= 1");
    }
    check_family(p, psi.size());
    const double n = static_cast<double>(p.size());
    check_cap(std::pow(n, t), psi.size());

    CompensatedSum v;
    for (const auto &m : p) {
        v.add((m * psi).squaredNorm());
    }
    CompensatedSum f;
    std::function<void(const Eigen::VectorXcd &, unsigned)> walk =
        [&](const Eigen::VectorXcd &cur, unsigned depth) {
            if (depth == t) {
                f.add(cur.squaredNorm());
                return;
            }
            for (const auto &m : p) {
                walk(m * cur, depth + 1);
            }
        };
    walk(psi, 0);

    BoundCheck b;
    b.V = v.value() / n;
    b.F = f.value() / std::pow(n, t);
    b.bound = std::pow(b.V, 2.0 * t - 1.0);
    b.holds = b.F >= b.bound - kInequalitySlack;
    return b;
}

BoundCheck two_part_bound_check(const std::vector<std::vector<Eigen::MatrixXcd>> &p,
                                const Eigen::VectorXcd &psi) {
    if (p.empty() || p.front().empty()) {
        throw std::invalid_argument("two_part_bound_check: empty family");
    }
    const std::size_t n = p.size();
    const std::size_t m = p.front().size();
    for (const auto &row : p) {
        if (row.size() != m) {
            throw DimensionError("two_part_bound_check: ragged family");
        }
        check_family(row, psi.size());
    }
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    check_cap(nd * nd * md * md * md, psi.size());

    CompensatedSum v;
    for (const auto &row : p) {
        for (const auto &pij : row) {
            v.add((pij * psi).squaredNorm());
        }
    }
    CompensatedSum f;
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t j1 = 0; j1 < m; ++j1) {
            const Eigen::VectorXcd s1 = p[i1][j1] * psi;
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                for (std::size_t j2 = 0; j2 < m; ++j2) {
                    const Eigen::VectorXcd s2 = p[i2][j2] * s1;
                    for (std::size_t j3 = 0; j3 < m; ++j3) {
                        f.add((p[i2][j3] * s2).squaredNorm());
                    }
                }
            }
        }
    }
    BoundCheck b;
    b.V = v.value() / (nd * md);
    b.F = f.value() / (nd * nd * md * md * md);
    b.bound = std::pow(b.V, 6.0);
    b.holds = b.F >= b.bound - kInequalitySlack;
    return b;
}

Eigen::MatrixXcd random_projector(index_t dim, Rng &rng) {
    const auto rank = static_cast<Eigen::Index>(uniform_below(rng, dim + 1));
    const Eigen::MatrixXcd u = qsim::haar_unitary(dim, rng);
    const Eigen::MatrixXcd cols = u.leftCols(rank);
    return cols * cols.adjoint();
}

Eigen::VectorXcd random_state(index_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(k) = amp_t(re, im);
    }
    return v / v.norm();
}

void write_bound_csv_header(std::ostream &os) {
    os << "instance-id,V,F,bound,holds\n";
}

void write_bound_csv_row(std::ostream &os, std::uint64_t id, const BoundCheck &b) {
    const auto old = os.precision(17);
    os << id << ',' << b.V << ',' << b.F << ',' << b.bound << ','
       << (b.holds ? 1 : 0) << '\n';
    os.precision(old);
}

} // namespace qromlab::extract
