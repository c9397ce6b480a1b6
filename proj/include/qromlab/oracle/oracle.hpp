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

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "qromlab/common.hpp"
#include "qromlab/oracle/gf2m.hpp"

namespace qromlab::oracle {

/// Default bound on |X| * 2^n for anything that gets tabulated.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Largest supported output width. Outputs are n-bit strings under XOR.
inline constexpr unsigned kMaxRangeBits = 32;

/// A function H: X -> {0,1}^n with X = {0, ..., domain_size - 1}.
class Oracle {
  public:
    virtual ~Oracle() = default;
    [[nodiscard]] virtual std::uint64_t domain_size() const = 0;
    [[nodiscard]] virtual unsigned range_bits() const = 0;
    [[nodiscard]] virtual std::uint64_t operator()(std::uint64_t x) const = 0;

    [[nodiscard]] std::uint64_t range_size() const {
        return std::uint64_t{1} << range_bits();
    }
};

/// Fully tabulated oracle.
class FiniteFunction final : public Oracle {
  public:
    FiniteFunction(unsigned range_bits, std::vector<std::uint64_t> table);

    [[nodiscard]] std::uint64_t domain_size() const override {
        return table_.size();
    }
    [[nodiscard]] unsigned range_bits() const override { return range_bits_; }
    [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const override;
    [[nodiscard]] const std::vector<std::uint64_t> &table() const {
        return table_;
    }

    friend bool operator==(const FiniteFunction &a, const FiniteFunction &b) {
        return a.range_bits_ == b.range_bits_ && a.table_ == b.table_;
    }

  private:
    unsigned range_bits_;
    std::vector<std::uint64_t> table_;
};

/// Throws CapacityError when |X| * 2^n exceeds cap.
void check_enumeration_cap(std::uint64_t domain_size, unsigned range_bits,
                           std::uint64_t cap);

/// Uniformly random table; deterministic in seed.
FiniteFunction sample_uniform(std::uint64_t domain_size, unsigned range_bits,
                              std::uint64_t seed,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// H with the value at x replaced by theta. H is not modified.
FiniteFunction reprogram(const FiniteFunction &h, std::uint64_t x,
                         std::uint64_t theta);

/// Restriction of an arbitrary oracle to a list of points, re-indexed 0..k-1.
FiniteFunction restrict_to(const Oracle &h,
                           const std::vector<std::uint64_t> &points);

/// Every function X -> {0,1}^n, in lexicographic table order (x = 0 least
/// significant). Capped at 2^20 functions.
std::vector<FiniteFunction> enumerate_all(std::uint64_t domain_size,
                                          unsigned range_bits);

/**
 * Member of the k-wise independent family
 *   h(x) = trunc_n(c_0 + c_1 x + ... + c_{k-1} x^{k-1})   over GF(2^m),
 * with m = max(ceil(log2 |X|), n, 1). Domain points embed as field elements
 * by their binary representation; outputs keep the low n bits.
 */
class KWiseFamilyMember final : public Oracle {
  public:
    KWiseFamilyMember(std::uint64_t domain_size, unsigned range_bits,
                      std::vector<std::uint64_t> coefficients);

    static KWiseFamilyMember sample(unsigned k, std::uint64_t domain_size,
                                    unsigned range_bits, Rng &rng);

    /// Field degree used for a given domain and range.
    static unsigned field_degree(std::uint64_t domain_size, unsigned range_bits);

    [[nodiscard]] std::uint64_t domain_size() const override {
        return domain_size_;
    }
    [[nodiscard]] unsigned range_bits() const override { return range_bits_; }
    [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const override;

    [[nodiscard]] unsigned k() const {
        return static_cast<unsigned>(coefficients_.size());
    }
    [[nodiscard]] const std::vector<std::uint64_t> &coefficients() const {
        return coefficients_;
    }
    [[nodiscard]] const GF2m &field() const { return field_; }

  private:
    std::uint64_t domain_size_;
    unsigned range_bits_;
    GF2m field_;
    std::vector<std::uint64_t> coefficients_;
};

std::uint64_t evaluate_kwise(const KWiseFamilyMember &f, std::uint64_t x);

FiniteFunction materialize(const Oracle &f,
                           std::uint64_t cap = kDefaultEnumerationCap);

void to_json(nlohmann::json &j, const FiniteFunction &h);
FiniteFunction finite_function_from_json(const nlohmann::json &j);

} // namespace qromlab::oracle
