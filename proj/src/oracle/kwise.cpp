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
#include <string>

#include "qromlab/oracle/oracle.hpp"

namespace qromlab::oracle {

unsigned KWiseFamilyMember::field_degree(std::uint64_t domain_size,
                                         unsigned range_bits) {
    return std::max({ceil_log2(domain_size), range_bits, 1U});
}

KWiseFamilyMember::KWiseFamilyMember(std::uint64_t domain_size,
                                     unsigned range_bits,
                                     std::vector<std::uint64_t> coefficients)
    : domain_size_(domain_size), range_bits_(range_bits),
      field_(field_degree(domain_size, range_bits)),
      coefficients_(std::move(coefficients)) {
    if (domain_size_ == 0) {
        throw std::invalid_argument("KWiseFamilyMember: empty domain");
    }
    if (range_bits_ == 0 || range_bits_ > kMaxRangeBits) {
        throw std::invalid_argument("KWiseFamilyMember: bad range_bits");
    }
    if (coefficients_.empty()) {
        throw std::invalid_argument("KWiseFamilyMember: k must be >= 1");
    }
    for (std::uint64_t c : coefficients_) {
        if (c >= field_.order()) {
            throw std::invalid_argument(
                "KWiseFamilyMember: coefficient outside GF(2^" +
                std::to_string(field_.degree()) + ")");
        }
    }
}

KWiseFamilyMember KWiseFamilyMember::sample(unsigned k,
                                            std::uint64_t domain_size,
                                            unsigned range_bits, Rng &rng) {
    const unsigned m = field_degree(domain_size, range_bits);
    std::vector<std::uint64_t> coeffs(k);
    for (auto &c : coeffs) {
        c = uniform_below(rng, std::uint64_t{1} << m);
    }
    return KWiseFamilyMember(domain_size, range_bits, std::move(coeffs));
}

std::uint64_t KWiseFamilyMember::operator()(std::uint64_t x) const {
    if (x >= domain_size_) {
        throw std::out_of_range("KWiseFamilyMember: point " +
                                std::to_string(x) + " outside the domain");
    }
    std::uint64_t acc = coefficients_.back();
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend();
         ++it) {
        acc = field_.mul(acc, x) ^ *it;
    }
    return acc & ((std::uint64_t{1} << range_bits_) - 1);
}

std::uint64_t evaluate_kwise(const KWiseFamilyMember &f, std::uint64_t x) {
    return f(x);
}

} // namespace qromlab::oracle
