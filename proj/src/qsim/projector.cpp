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

#include "qromlab/qsim/projector.hpp"

#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace qromlab::qsim {

namespace {

DenseFactor factor_matrix(const Factor &f, index_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    if (std::holds_alternative<IdentityFactor>(f)) {
        return DenseFactor::Identity(n, n);
    }
    if (const auto *m = std::get_if<MaskFactor>(&f)) {
        DenseFactor out = DenseFactor::Zero(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            out(k, k) = (*m)[static_cast<std::size_t>(k)] != 0 ? 1.0 : 0.0;
        }
        return out;
    }
    return std::get<DenseFactor>(f);
}

template <bool Serial>
void apply_impl(const RegisterLayout &layout, const std::array<Factor, 4> &factors,
                Amplitudes &psi) {
    MaskSet masks{nullptr, nullptr, nullptr, nullptr};
    bool any_mask = false;
    for (std::size_t r = 0; r < 4; ++r) {
        if (const auto *m = std::get_if<MaskFactor>(&factors[r])) {
            masks[r] = m;
            any_mask = true;
        }
    }
    if (any_mask) {
        if constexpr (Serial) {
            kernels::serial::apply_masks(layout, masks, psi);
        } else {
            kernels::omp::apply_masks(layout, masks, psi);
        }
    }
    for (std::size_t r = 0; r < 4; ++r) {
        if (const auto *m = std::get_if<DenseFactor>(&factors[r])) {
            const SubspaceMap map(layout, {static_cast<Register>(r)});
            if constexpr (Serial) {
                kernels::serial::apply_matrix(map, *m, psi);
            } else {
                kernels::omp::apply_matrix(map, *m, psi);
            }
        }
    }
}

} // namespace

bool is_projector(const Eigen::MatrixXcd &p, double tol) {
    if (p.rows() != p.cols()) {
        return false;
    }
    const double idem = (p * p - p).cwiseAbs().maxCoeff();
    const double herm = (p.adjoint() - p).cwiseAbs().maxCoeff();
    return idem <= tol && herm <= tol;
}

Projector::Projector(const RegisterLayout &layout) : layout_(layout) {}

Projector Projector::identity(const RegisterLayout &layout) {
    return Projector(layout);
}

Projector Projector::zero(const RegisterLayout &layout) {
    return mask(layout, Register::X, MaskFactor(layout.dim(Register::X), 0));
}

Projector Projector::basis(const RegisterLayout &layout, Register reg,
                           index_t k) {
    if (k >= layout.dim(reg)) {
        throw DimensionError("Projector::basis: index " + std::to_string(k) +
                             " outside register " + to_string(reg));
    }
    MaskFactor m(layout.dim(reg), 0);
    m[k] = 1;
    return mask(layout, reg, std::move(m));
}

Projector Projector::mask(const RegisterLayout &layout, Register reg,
                          MaskFactor m) {
    if (m.size() != layout.dim(reg)) {
        throw DimensionError("Projector::mask: mask length differs from dim " +
                             to_string(reg));
    }
    for (auto &v : m) {
        v = v != 0 ? 1 : 0;
    }
    Projector p(layout);
    p.set(reg, std::move(m));
    return p;
}

Projector Projector::dense(const RegisterLayout &layout, Register reg,
                           DenseFactor m) {
    const auto d = static_cast<Eigen::Index>(layout.dim(reg));
    if (m.rows() != d || m.cols() != d) {
        throw DimensionError("Projector::dense: matrix size differs from dim " +
                             to_string(reg));
    }
    if (!is_projector(m)) {
        throw std::invalid_argument(
            "Projector::dense: matrix is not idempotent and self-adjoint");
    }
    Projector p(layout);
    p.set(reg, std::move(m));
    return p;
}

void Projector::set(Register r, Factor f) {
    factors_[static_cast<std::size_t>(r)] = std::move(f);
}

Projector Projector::operator*(const Projector &other) const {
    if (!(layout_ == other.layout_)) {
        throw DimensionError("Projector product: layouts differ");
    }
    Projector out(layout_);
    for (Register r : kAllRegisters) {
        const Factor &a = factor(r);
        const Factor &b = other.factor(r);
        if (std::holds_alternative<IdentityFactor>(a)) {
            out.set(r, b);
        } else if (std::holds_alternative<IdentityFactor>(b)) {
            out.set(r, a);
        } else if (std::holds_alternative<MaskFactor>(a) &&
                   std::holds_alternative<MaskFactor>(b)) {
            MaskFactor m = std::get<MaskFactor>(a);
            const auto &mb = std::get<MaskFactor>(b);
            for (std::size_t k = 0; k < m.size(); ++k) {
                m[k] = static_cast<std::uint8_t>(m[k] & mb[k]);
            }
            out.set(r, std::move(m));
        } else {
            const index_t d = layout_.dim(r);
            DenseFactor prod = factor_matrix(a, d) * factor_matrix(b, d);
            if (!is_projector(prod)) {
                throw std::invalid_argument(
                    "Projector product: factors on " + to_string(r) +
                    " do not commute");
            }
            out.set(r, std::move(prod));
        }
    }
    return out;
}

bool Projector::is_diagonal() const {
    for (const auto &f : factors_) {
        if (std::holds_alternative<DenseFactor>(f)) {
            return false;
        }
    }
    return true;
}

Eigen::MatrixXcd Projector::to_dense() const {
    if (layout_.total() > 4096) {
        throw CapacityError("Projector::to_dense: layout too large");
    }
    Eigen::MatrixXcd out = factor_matrix(factors_[0], layout_.dim(Register::X));
    for (std::size_t r = 1; r < 4; ++r) {
        const Eigen::MatrixXcd next = factor_matrix(
            factors_[r], layout_.dim(static_cast<Register>(r)));
        out = Eigen::kroneckerProduct(out, next).eval();
    }
    return out;
}

void Projector::apply(Amplitudes &psi) const {
    apply_impl<false>(layout_, factors_, psi);
}

void Projector::apply_serial(Amplitudes &psi) const {
    apply_impl<true>(layout_, factors_, psi);
}

} // namespace qromlab::qsim
