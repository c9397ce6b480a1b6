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

#include "qromlab/qsim/kernels.hpp"

namespace qromlab::qsim::kernels::serial {

void apply_matrix(const SubspaceMap &map, const Eigen::MatrixXcd &u,
                  Amplitudes &psi) {
    const index_t d = map.sub_dim();
    const auto &off = map.offsets();
    std::vector<amp_t> tmp(d);
    for (index_t k = 0; k < map.base_count(); ++k) {
        const index_t base = map.base(k);
        for (index_t s = 0; s < d; ++s) {
            tmp[s] = psi[base + off[s]];
        }
        for (index_t r = 0; r < d; ++r) {
            amp_t acc = 0.0;
            for (index_t c = 0; c < d; ++c) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                       tmp[c];
            }
            psi[base + off[r]] = acc;
        }
    }
}

void apply_permutation(const SubspaceMap &map, const std::vector<index_t> &perm,
                       const Amplitudes &in, Amplitudes &out) {
    const auto &off = map.offsets();
    for (index_t k = 0; k < map.base_count(); ++k) {
        const index_t base = map.base(k);
        for (index_t s = 0; s < perm.size(); ++s) {
            out[base + off[perm[s]]] = in[base + off[s]];
        }
    }
}

void apply_xor_oracle(const RegisterLayout &layout,
                      const std::vector<std::uint64_t> &table,
                      const Amplitudes &in, Amplitudes &out) {
    const index_t block = layout.stride(Register::Y);
    for (index_t x = 0; x < layout.dim(Register::X); ++x) {
        for (index_t y = 0; y < layout.dim(Register::Y); ++y) {
            const index_t src = layout.index(x, y, 0, 0);
            const index_t dst = layout.index(x, y ^ table[x], 0, 0);
            for (index_t j = 0; j < block; ++j) {
                out[dst + j] = in[src + j];
            }
        }
    }
}

void apply_masks(const RegisterLayout &layout, const MaskSet &masks,
                 Amplitudes &psi) {
    for (index_t i = 0; i < psi.size(); ++i) {
        for (Register r : kAllRegisters) {
            const auto *m = masks[static_cast<std::size_t>(r)];
            if (m != nullptr && (*m)[layout.digit(i, r)] == 0) {
                psi[i] = 0.0;
                break;
            }
        }
    }
}

double norm2(const Amplitudes &psi) {
    CompensatedSum sum;
    for (const amp_t &a : psi) {
        sum.add(std::norm(a));
    }
    return sum.value();
}

std::vector<double> marginal(const RegisterLayout &layout, Register reg,
                             const Amplitudes &psi) {
    std::vector<CompensatedSum> acc(layout.dim(reg));
    for (index_t i = 0; i < psi.size(); ++i) {
        acc[layout.digit(i, reg)].add(std::norm(psi[i]));
    }
    std::vector<double> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        out[k] = acc[k].value();
    }
    return out;
}

} // namespace qromlab::qsim::kernels::serial
