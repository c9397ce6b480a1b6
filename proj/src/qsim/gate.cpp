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

#include "qromlab/qsim/gate.hpp"

#include <cmath>
#include <random>

namespace qromlab::qsim {

Gate::Gate(const RegisterLayout &layout, std::vector<Register> targets,
           std::variant<Eigen::MatrixXcd, std::vector<index_t>> op,
           std::string label)
    : layout_(layout), targets_(std::move(targets)),
      map_(std::make_shared<const SubspaceMap>(layout_, targets_)),
      op_(std::move(op)), label_(std::move(label)) {}

Gate Gate::dense(const RegisterLayout &layout, std::vector<Register> targets,
                 Eigen::MatrixXcd matrix, std::string label) {
    const index_t d = layout.joint_dim(targets);
    if (static_cast<index_t>(matrix.rows()) != d ||
        static_cast<index_t>(matrix.cols()) != d) {
        throw DimensionError("Gate::dense: matrix is " +
                             std::to_string(matrix.rows()) + "x" +
                             std::to_string(matrix.cols()) + ", targets span " +
                             std::to_string(d));
    }
    const double err =
        (matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (err > kUnitarityTolerance) {
        throw std::invalid_argument("Gate::dense: matrix is not unitary (max "
                                    "deviation " +
                                    std::to_string(err) + ")");
    }
    return Gate(layout, std::move(targets), std::move(matrix), std::move(label));
}

Gate Gate::permutation(const RegisterLayout &layout,
                       std::vector<Register> targets, std::vector<index_t> perm,
                       std::string label) {
    const index_t d = layout.joint_dim(targets);
    if (perm.size() != d) {
        throw DimensionError("Gate::permutation: length " +
                             std::to_string(perm.size()) + ", targets span " +
                             std::to_string(d));
    }
    std::vector<bool> seen(d, false);
    for (index_t v : perm) {
        if (v >= d || seen[v]) {
            throw std::invalid_argument("Gate::permutation: not a bijection");
        }
        seen[v] = true;
    }
    return Gate(layout, std::move(targets), std::move(perm), std::move(label));
}

Gate Gate::adjoint() const {
    Gate g = *this;
    if (const auto *m = std::get_if<Eigen::MatrixXcd>(&op_)) {
        g.op_ = Eigen::MatrixXcd(m->adjoint());
    } else {
        const auto &p = std::get<std::vector<index_t>>(op_);
        std::vector<index_t> inv(p.size());
        for (index_t s = 0; s < p.size(); ++s) {
            inv[p[s]] = s;
        }
        g.op_ = std::move(inv);
    }
    if (!label_.empty()) {
        g.label_ = label_ + "^dag";
    }
    return g;
}

Eigen::MatrixXcd Gate::matrix() const {
    if (const auto *m = std::get_if<Eigen::MatrixXcd>(&op_)) {
        return *m;
    }
    const auto &p = std::get<std::vector<index_t>>(op_);
    const auto d = static_cast<Eigen::Index>(p.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (index_t s = 0; s < p.size(); ++s) {
        m(static_cast<Eigen::Index>(p[s]), static_cast<Eigen::Index>(s)) = 1.0;
    }
    return m;
}

void Gate::apply(Amplitudes &psi) const {
    if (const auto *m = std::get_if<Eigen::MatrixXcd>(&op_)) {
        kernels::omp::apply_matrix(*map_, *m, psi);
    } else {
        Amplitudes out(psi.size());
        kernels::omp::apply_permutation(*map_, std::get<std::vector<index_t>>(op_),
                                        psi, out);
        psi.swap(out);
    }
}

void Gate::apply_serial(Amplitudes &psi) const {
    if (const auto *m = std::get_if<Eigen::MatrixXcd>(&op_)) {
        kernels::serial::apply_matrix(*map_, *m, psi);
    } else {
        Amplitudes out(psi.size());
        kernels::serial::apply_permutation(
            *map_, std::get<std::vector<index_t>>(op_), psi, out);
        psi.swap(out);
    }
}

Unitary Unitary::adjoint() const {
    Unitary u;
    u.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        u.gates.push_back(it->adjoint());
    }
    return u;
}

Eigen::MatrixXcd haar_unitary(index_t d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = amp_t(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so that Q is Haar distributed.
    for (Eigen::Index k = 0; k < n; ++k) {
        const amp_t diag = r(k, k);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(k) *= diag / mag;
        }
    }
    return q;
}

Eigen::MatrixXcd hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd h(2, 2);
    h << s, s, s, -s;
    return h;
}

} // namespace qromlab::qsim
