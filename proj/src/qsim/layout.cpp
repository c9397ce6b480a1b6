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

#include "qromlab/qsim/layout.hpp"

#include <algorithm>
#include <cstdlib>

namespace qromlab::qsim {

index_t dimension_cap_from_env() {
    if (const char *v = std::getenv("QROMLAB_DIM_CAP")) {
        char *end = nullptr;
        const unsigned long long cap = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && cap > 0) {
            return static_cast<index_t>(cap);
        }
        throw std::invalid_argument("QROMLAB_DIM_CAP must be a positive integer");
    }
    return kDefaultDimensionCap;
}

std::string to_string(Register r) {
    switch (r) {
    case Register::X:
        return "X";
    case Register::Y:
        return "Y";
    case Register::Z:
        return "Z";
    case Register::E:
        return "E";
    }
    return "?";
}

RegisterLayout::RegisterLayout(index_t dim_x, index_t dim_y, index_t dim_z,
                               index_t dim_e, index_t cap)
    : dims_{dim_x, dim_y, dim_z, dim_e} {
    for (index_t d : dims_) {
        if (d == 0) {
            throw DimensionError("RegisterLayout: register dimensions must be >= 1");
        }
    }
    if (!is_power_of_two(dim_y)) {
        throw DimensionError("RegisterLayout: dim_y must be a power of two");
    }
    range_bits_ = ceil_log2(dim_y);
    total_ = 1;
    for (index_t d : dims_) {
        if (total_ > cap / d) {
            throw CapacityError("RegisterLayout: total dimension exceeds cap " +
                                std::to_string(cap));
        }
        total_ *= d;
    }
    if (total_ > cap) {
        throw CapacityError("RegisterLayout: total dimension " +
                            std::to_string(total_) + " exceeds cap " +
                            std::to_string(cap));
    }
    strides_[3] = 1;
    strides_[2] = dims_[3];
    strides_[1] = dims_[3] * dims_[2];
    strides_[0] = strides_[1] * dims_[1];
}

index_t RegisterLayout::index(index_t x, index_t y, index_t z, index_t e) const {
    if (x >= dims_[0] || y >= dims_[1] || z >= dims_[2] || e >= dims_[3]) {
        throw DimensionError("RegisterLayout::index: digit out of range");
    }
    return x * strides_[0] + y * strides_[1] + z * strides_[2] + e;
}

index_t RegisterLayout::joint_dim(const std::vector<Register> &regs) const {
    index_t d = 1;
    for (Register r : regs) {
        d *= dim(r);
    }
    return d;
}

SubspaceMap::SubspaceMap(const RegisterLayout &layout,
                         const std::vector<Register> &targets) {
    if (targets.empty()) {
        throw DimensionError("SubspaceMap: no target registers");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw DimensionError("SubspaceMap: repeated target register");
            }
        }
    }
    const index_t d = layout.joint_dim(targets);
    offsets_.resize(d);
    for (index_t s = 0; s < d; ++s) {
        index_t rem = s;
        index_t off = 0;
        for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
            const index_t dim = layout.dim(*it);
            off += (rem % dim) * layout.stride(*it);
            rem /= dim;
        }
        offsets_[s] = off;
    }
    base_count_ = 1;
    for (Register r : kAllRegisters) {
        if (std::find(targets.begin(), targets.end(), r) == targets.end()) {
            rest_dims_.push_back(layout.dim(r));
            rest_strides_.push_back(layout.stride(r));
            base_count_ *= layout.dim(r);
        }
    }
}

index_t SubspaceMap::base(index_t k) const {
    index_t off = 0;
    for (std::size_t i = rest_dims_.size(); i-- > 0;) {
        off += (k % rest_dims_[i]) * rest_strides_[i];
        k /= rest_dims_[i];
    }
    return off;
}

} // namespace qromlab::qsim
