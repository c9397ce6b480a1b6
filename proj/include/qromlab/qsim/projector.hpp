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

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qromlab/qsim/kernels.hpp"
#include "qromlab/qsim/layout.hpp"

namespace qromlab::qsim {

/// Tolerance for idempotence and self-adjointness of dense factors.
inline constexpr double kProjectorTolerance = 1e-9;

struct IdentityFactor {};
using MaskFactor = std::vector<std::uint8_t>;
using DenseFactor = Eigen::MatrixXcd;
using Factor = std::variant<IdentityFactor, MaskFactor, DenseFactor>;

/**
 * Tensor product of one projector per register. Covers |x><x| on X, the
 * predicate projectors on Z and their products.
 */
class Projector {
  public:
    explicit Projector(const RegisterLayout &layout);

    static Projector identity(const RegisterLayout &layout);
    static Projector zero(const RegisterLayout &layout);
    static Projector basis(const RegisterLayout &layout, Register reg, index_t k);
    static Projector mask(const RegisterLayout &layout, Register reg,
                          MaskFactor m);
    /// Rejects matrices that are not orthogonal projectors.
    static Projector dense(const RegisterLayout &layout, Register reg,
                           DenseFactor m);

    /// Product with another projector. Factors on the same register are
    /// multiplied and the result must again be a projector.
    [[nodiscard]] Projector operator*(const Projector &other) const;

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const Factor &factor(Register r) const {
        return factors_[static_cast<std::size_t>(r)];
    }
    [[nodiscard]] bool is_diagonal() const;

    /// Full matrix; only for small layouts (total <= 4096).
    [[nodiscard]] Eigen::MatrixXcd to_dense() const;

    void apply(Amplitudes &psi) const;
    void apply_serial(Amplitudes &psi) const;

  private:
    void set(Register r, Factor f);

    RegisterLayout layout_;
    std::array<Factor, 4> factors_;
};

/// Checks P*P = P and P^dag = P within kProjectorTolerance.
bool is_projector(const Eigen::MatrixXcd &p,
                  double tol = kProjectorTolerance);

} // namespace qromlab::qsim
