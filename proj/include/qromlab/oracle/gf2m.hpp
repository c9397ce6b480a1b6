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

namespace qromlab::oracle {

/**
 * Arithmetic in GF(2^m) for 1 <= m <= 63, elements stored as the low m bits
 * of a uint64_t in polynomial basis.
 *
 * The modulus for each m is fixed: the irreducible trinomial
 * x^m + x^k + 1 with the smallest k, and when no trinomial exists the
 * irreducible pentanomial x^m + x^k3 + x^k2 + x^k1 + 1 that is smallest in
 * (k3, k2, k1) lexicographic order. The full table lives in gf2m.cpp and is
 * listed in the README.
 */
class GF2m {
  public:
    static constexpr unsigned kMaxDegree = 63;

    explicit GF2m(unsigned m);

    [[nodiscard]] unsigned degree() const { return m_; }
    /// Modulus including the x^m term.
    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    [[nodiscard]] std::uint64_t order() const { return std::uint64_t{1} << m_; }

    [[nodiscard]] static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        return a ^ b;
    }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    /// Modulus for degree m, including the x^m term.
    [[nodiscard]] static std::uint64_t irreducible(unsigned m);

  private:
    unsigned m_;
    std::uint64_t modulus_;
    std::uint64_t top_;
};

} // namespace qromlab::oracle
