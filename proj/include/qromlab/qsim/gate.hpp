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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qromlab/qsim/kernels.hpp"
#include "qromlab/qsim/layout.hpp"

namespace qromlab::qsim {

/// Tolerance for accepting a user matrix as unitary.
inline constexpr double kUnitarityTolerance = 1e-9;

/**
 * A unitary acting on a subset of registers, stored either as a dense matrix
 * or as a basis permutation. The joint basis of the targets is ordered with
 * the first listed register most significant.
 */
class Gate {
  public:
    /// Rejects matrices that are not unitary within kUnitarityTolerance.
    static Gate dense(const RegisterLayout &layout, std::vector<Register> targets,
                      Eigen::MatrixXcd matrix, std::string label = "");

    /// perm[s] is the image of basis state s. Rejects non-bijections.
    static Gate permutation(const RegisterLayout &layout,
                            std::vector<Register> targets,
                            std::vector<index_t> perm, std::string label = "");

    [[nodiscard]] Gate adjoint() const;

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const std::vector<Register> &targets() const {
        return targets_;
    }
    [[nodiscard]] const std::string &label() const { return label_; }
    [[nodiscard]] bool is_permutation() const {
        return std::holds_alternative<std::vector<index_t>>(op_);
    }
    [[nodiscard]] index_t sub_dim() const { return map_->sub_dim(); }

    /// Dense matrix of the gate on its target subspace.
    [[nodiscard]] Eigen::MatrixXcd matrix() const;

    /// Applies the gate in place using the parallel kernels.
    void apply(Amplitudes &psi) const;

    /// Same, through the serial reference kernels.
    void apply_serial(Amplitudes &psi) const;

  private:
    Gate(const RegisterLayout &layout, std::vector<Register> targets,
         std::variant<Eigen::MatrixXcd, std::vector<index_t>> op,
         std::string label);

    RegisterLayout layout_;
    std::vector<Register> targets_;
    std::shared_ptr<const SubspaceMap> map_;
    std::variant<Eigen::MatrixXcd, std::vector<index_t>> op_;
    std::string label_;
};

/// A product of gates, applied front to back.
struct Unitary {
    std::vector<Gate> gates;

    [[nodiscard]] Unitary adjoint() const;
};

/// Haar-random unitary of dimension d via QR of a complex Gaussian matrix.
Eigen::MatrixXcd haar_unitary(index_t d, Rng &rng);

/// The 2x2 Hadamard matrix.
Eigen::MatrixXcd hadamard();

} // namespace qromlab::qsim
