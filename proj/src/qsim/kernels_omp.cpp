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

#include <algorithm>

#include "qromlab/qsim/kernels.hpp"

namespace qromlab::qsim::kernels::omp {

namespace {

// Below this many amplitudes the fork/join costs more than the loop.
constexpr index_t kParallelThreshold = index_t{1} << 13;

// Bases handled per GEMM call.
constexpr index_t kBaseBatch = 64;

} // namespace

void apply_matrix(const SubspaceMap &map, const Eigen::MatrixXcd &u,
                  Amplitudes &psi) {
    const auto d = static_cast<Eigen::Index>(map.sub_dim());
    const auto &off = map.offsets();
    const index_t nbases = map.base_count();
    const index_t nbatches = (nbases + kBaseBatch - 1) / kBaseBatch;
    const bool par = psi.size() >= kParallelThreshold && nbatches > 1;

#pragma omp parallel for schedule(static) if (par)
    for (index_t batch = 0; batch < nbatches; ++batch) {
        const index_t k0 = batch * kBaseBatch;
        const auto cols = static_cast<Eigen::Index>(
            std::min(kBaseBatch, nbases - k0));
        Eigen::MatrixXcd in(d, cols);
        std::vector<index_t> bases(static_cast<std::size_t>(cols));
        for (Eigen::Index c = 0; c < cols; ++c) {
            bases[c] = map.base(k0 + static_cast<index_t>(c));
            for (Eigen::Index s = 0; s < d; ++s) {
                in(s, c) = psi[bases[c] + off[s]];
            }
        }
        const Eigen::MatrixXcd out = u * in;
        for (Eigen::Index c = 0; c < cols; ++c) {
            for (Eigen::Index s = 0; s < d; ++s) {
                psi[bases[c] + off[s]] = out(s, c);
            }
        }
    }
}

void apply_permutation(const SubspaceMap &map, const std::vector<index_t> &perm,
                       const Amplitudes &in, Amplitudes &out) {
    const auto &off = map.offsets();
    const index_t nbases = map.base_count();
    const index_t d = perm.size();

#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
    for (index_t k = 0; k < nbases; ++k) {
        const index_t base = map.base(k);
        for (index_t s = 0; s < d; ++s) {
            out[base + off[perm[s]]] = in[base + off[s]];
        }
    }
}

void apply_xor_oracle(const RegisterLayout &layout,
                      const std::vector<std::uint64_t> &table,
                      const Amplitudes &in, Amplitudes &out) {
    const index_t dy = layout.dim(Register::Y);
    const index_t block = layout.stride(Register::Y);
    const index_t rows = layout.dim(Register::X) * dy;

#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
    for (index_t xy = 0; xy < rows; ++xy) {
        const index_t x = xy / dy;
        const index_t y = xy % dy;
        const amp_t *src = in.data() + xy * block;
        amp_t *dst = out.data() + (x * dy + (y ^ table[x])) * block;
        std::copy(src, src + block, dst);
    }
}

void apply_masks(const RegisterLayout &layout, const MaskSet &masks,
                 Amplitudes &psi) {
    const index_t dx = layout.dim(Register::X);
    const index_t dy = layout.dim(Register::Y);
    const index_t dz = layout.dim(Register::Z);
    const index_t de = layout.dim(Register::E);
    const auto *mx = masks[0];
    const auto *my = masks[1];
    const auto *mz = masks[2];
    const auto *me = masks[3];

#pragma omp parallel for schedule(static) if (psi.size() >= kParallelThreshold)
    for (index_t xy = 0; xy < dx * dy; ++xy) {
        const index_t x = xy / dy;
        const index_t y = xy % dy;
        amp_t *row = psi.data() + xy * dz * de;
        if ((mx != nullptr && (*mx)[x] == 0) || (my != nullptr && (*my)[y] == 0)) {
            std::fill(row, row + dz * de, amp_t{0.0});
            continue;
        }
        for (index_t z = 0; z < dz; ++z) {
            const bool zoff = mz != nullptr && (*mz)[z] == 0;
            for (index_t e = 0; e < de; ++e) {
                if (zoff || (me != nullptr && (*me)[e] == 0)) {
                    row[z * de + e] = 0.0;
                }
            }
        }
    }
}

double norm2(const Amplitudes &psi) {
    const index_t n = psi.size();
    const index_t nchunks = (n + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(nchunks);

#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (index_t c = 0; c < nchunks; ++c) {
        CompensatedSum s;
        const index_t end = std::min(n, (c + 1) * kReductionChunk);
        for (index_t i = c * kReductionChunk; i < end; ++i) {
            s.add(std::norm(psi[i]));
        }
        partial[c] = s.value();
    }
    CompensatedSum total;
    for (double p : partial) {
        total.add(p);
    }
    return total.value();
}

std::vector<double> marginal(const RegisterLayout &layout, Register reg,
                             const Amplitudes &psi) {
    const index_t d = layout.dim(reg);
    const index_t stride = layout.stride(reg);
    const index_t outer = psi.size() / (d * stride);
    std::vector<double> out(d);

#pragma omp parallel for schedule(static) if (psi.size() >= kParallelThreshold)
    for (index_t k = 0; k < d; ++k) {
        CompensatedSum s;
        for (index_t hi = 0; hi < outer; ++hi) {
            const amp_t *p = psi.data() + (hi * d + k) * stride;
            for (index_t lo = 0; lo < stride; ++lo) {
                s.add(std::norm(p[lo]));
            }
        }
        out[k] = s.value();
    }
    return out;
}

} // namespace qromlab::qsim::kernels::omp
