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
#include <vector>

#include <Eigen/Dense>

#include "qromlab/common.hpp"
#include "qromlab/qsim/layout.hpp"

namespace qromlab::qsim {

using Amplitudes = std::vector<amp_t>;

/// Per-register 0/1 diagonal masks; nullptr means identity on that register.
using MaskSet = std::array<const std::vector<std::uint8_t> *, 4>;

/// Norm reductions are summed over fixed chunks of this many amplitudes, so
/// the result does not depend on the thread count.
inline constexpr index_t kReductionChunk = index_t{1} << 12;

/// Plain loops. Kept as the reference the parallel kernels are tested against.
namespace kernels::serial {
void apply_matrix(const SubspaceMap &map, const Eigen::MatrixXcd &u,
                  Amplitudes &psi);
void apply_permutation(const SubspaceMap &map, const std::vector<index_t> &perm,
                       const Amplitudes &in, Amplitudes &out);
void apply_xor_oracle(const RegisterLayout &layout,
                      const std::vector<std::uint64_t> &table,
                      const Amplitudes &in, Amplitudes &out);
void apply_masks(const RegisterLayout &layout, const MaskSet &masks,
                 Amplitudes &psi);
double norm2(const Amplitudes &psi);
std::vector<double> marginal(const RegisterLayout &layout, Register reg,
                             const Amplitudes &psi);
} // namespace kernels::serial

/// OpenMP kernels used by the library. Dense gates go through Eigen GEMM.
namespace kernels::omp {
void apply_matrix(const SubspaceMap &map, const Eigen::MatrixXcd &u,
                  Amplitudes &psi);
void apply_permutation(const SubspaceMap &map, const std::vector<index_t> &perm,
                       const Amplitudes &in, Amplitudes &out);
void apply_xor_oracle(const RegisterLayout &layout,
                      const std::vector<std::uint64_t> &table,
                      const Amplitudes &in, Amplitudes &out);
void apply_masks(const RegisterLayout &layout, const MaskSet &masks,
                 Amplitudes &psi);
double norm2(const Amplitudes &psi);
std::vector<double> marginal(const RegisterLayout &layout, Register reg,
                             const Amplitudes &psi);
} // namespace kernels::omp

} // namespace qromlab::qsim
