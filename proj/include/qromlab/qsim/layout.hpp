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
#include <string>
#include <vector>

#include "qromlab/common.hpp"

namespace qromlab::qsim {

/// Default cap on the joint dimension of X, Y, Z, E.
inline constexpr index_t kDefaultDimensionCap = index_t{1} << 18;

/// Reads QROMLAB_DIM_CAP from the environment, falling back to the default.
index_t dimension_cap_from_env();

enum class Register : std::uint8_t { X = 0, Y = 1, Z = 2, E = 3 };

inline constexpr std::array<Register, 4> kAllRegisters = {
    Register::X, Register::Y, Register::Z, Register::E};

std::string to_string(Register r);

/**
 * Four-register layout. The flat index is
 *   ((x * dim_y + y) * dim_z + z) * dim_e + e,
 * so X is the most significant digit and E the least.
 */
class RegisterLayout {
  public:
    /// dim_y must be a power of two (the oracle's output space {0,1}^n).
    RegisterLayout(index_t dim_x, index_t dim_y, index_t dim_z, index_t dim_e,
                   index_t cap = kDefaultDimensionCap);

    [[nodiscard]] index_t dim(Register r) const {
        return dims_[static_cast<std::size_t>(r)];
    }
    [[nodiscard]] index_t stride(Register r) const {
        return strides_[static_cast<std::size_t>(r)];
    }
    [[nodiscard]] index_t total() const { return total_; }
    [[nodiscard]] unsigned range_bits() const { return range_bits_; }

    [[nodiscard]] index_t digit(index_t flat, Register r) const {
        return (flat / stride(r)) % dim(r);
    }
    [[nodiscard]] index_t index(index_t x, index_t y, index_t z,
                                index_t e) const;

    /// Joint dimension of a register subset, first listed most significant.
    [[nodiscard]] index_t joint_dim(const std::vector<Register> &regs) const;

    friend bool operator==(const RegisterLayout &a, const RegisterLayout &b) {
        return a.dims_ == b.dims_;
    }

  private:
    std::array<index_t, 4> dims_;
    std::array<index_t, 4> strides_;
    index_t total_;
    unsigned range_bits_;
};

/**
 * Flat offsets of every basis state of a register subset, and an enumeration
 * of the complementary registers. A full index is base(k) + offsets[s].
 */
class SubspaceMap {
  public:
    SubspaceMap(const RegisterLayout &layout, const std::vector<Register> &targets);

    [[nodiscard]] index_t sub_dim() const { return offsets_.size(); }
    [[nodiscard]] index_t base_count() const { return base_count_; }
    [[nodiscard]] const std::vector<index_t> &offsets() const {
        return offsets_;
    }
    [[nodiscard]] index_t base(index_t k) const;

  private:
    std::vector<index_t> offsets_;
    std::vector<index_t> rest_dims_;
    std::vector<index_t> rest_strides_;
    index_t base_count_;
};

} // namespace qromlab::qsim
