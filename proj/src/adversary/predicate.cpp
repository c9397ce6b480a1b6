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

#include "qromlab/adversary/predicate.hpp"

#include <bit>

namespace qromlab::adversary {

QuantumPredicate QuantumPredicate::classical(std::string name, index_t dim_z,
                                             ClassicalRule rule) {
    if (dim_z == 0 || !rule) {
        throw std::invalid_argument("QuantumPredicate: bad classical rule");
    }
    QuantumPredicate p;
    p.name_ = std::move(name);
    p.dim_z_ = dim_z;
    p.classical_ = std::move(rule);
    return p;
}

QuantumPredicate QuantumPredicate::quantum(std::string name, index_t dim_z,
                                           QuantumRule rule) {
    if (dim_z == 0 || !rule) {
        throw std::invalid_argument("QuantumPredicate: bad quantum rule");
    }
    QuantumPredicate p;
    p.name_ = std::move(name);
    p.dim_z_ = dim_z;
    p.quantum_ = std::move(rule);
    return p;
}

Factor QuantumPredicate::cell(index_t x, index_t theta) const {
    if (classical_) {
        qsim::MaskFactor m(dim_z_);
        for (index_t z = 0; z < dim_z_; ++z) {
            m[z] = classical_(x, theta, z) ? 1 : 0;
        }
        return m;
    }
    qsim::DenseFactor f = quantum_(x, theta);
    const auto d = static_cast<Eigen::Index>(dim_z_);
    if (f.rows() != d || f.cols() != d || !qsim::is_projector(f)) {
        throw std::invalid_argument("predicate " + name_ + ": cell (" +
                                    std::to_string(x) + ", " +
                                    std::to_string(theta) +
                                    ") is not a projector on Z");
    }
    return f;
}

bool QuantumPredicate::holds(index_t x, index_t theta, index_t z) const {
    if (!classical_) {
        throw std::logic_error("predicate " + name_ + " is not classical");
    }
    return classical_(x, theta, z);
}

QuantumPredicate always_true(index_t dim_z) {
    return QuantumPredicate::classical(
        "always-true", dim_z, [](index_t, index_t, index_t) { return true; });
}

QuantumPredicate z_equals_theta(index_t dim_z) {
    return QuantumPredicate::classical(
        "z=theta", dim_z,
        [](index_t, index_t theta, index_t z) { return z == theta; });
}

QuantumPredicate z_differs_from_theta(index_t dim_z) {
    return QuantumPredicate::classical(
        "z!=theta", dim_z,
        [](index_t, index_t theta, index_t z) { return z != theta; });
}

QuantumPredicate z_equals_theta_mod(index_t dim_z) {
    return QuantumPredicate::classical(
        "z=theta-mod", dim_z,
        [dim_z](index_t, index_t theta, index_t z) { return z == theta % dim_z; });
}

QuantumPredicate parity_matches(index_t dim_z) {
    return QuantumPredicate::classical(
        "parity", dim_z, [](index_t, index_t theta, index_t z) {
            return std::popcount(z ^ theta) % 2 == 0;
        });
}

std::vector<QuantumPredicate> predicate_test_set(index_t dim_z) {
    return {always_true(dim_z), z_equals_theta(dim_z),
            z_differs_from_theta(dim_z), z_equals_theta_mod(dim_z),
            parity_matches(dim_z)};
}

Projector predicate_projector(const QuantumPredicate &v, index_t x,
                              index_t theta, const RegisterLayout &layout) {
    if (v.dim_z() != layout.dim(Register::Z)) {
        throw qromlab::DimensionError("predicate " + v.name() +
                                      " is defined for dim_z=" +
                                      std::to_string(v.dim_z()));
    }
    Factor f = v.cell(x, theta);
    if (auto *m = std::get_if<qsim::MaskFactor>(&f)) {
        return Projector::mask(layout, Register::Z, std::move(*m));
    }
    return Projector::dense(layout, Register::Z,
                            std::get<qsim::DenseFactor>(std::move(f)));
}

Projector goal_projector(const QuantumPredicate &v, index_t x, index_t theta,
                         const RegisterLayout &layout) {
    return Projector::basis(layout, Register::X, x) *
           predicate_projector(v, x, theta, layout);
}

} // namespace qromlab::adversary
