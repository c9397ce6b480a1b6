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

#include <string>

#include "qromlab/oracle/oracle.hpp"

namespace qromlab::oracle {

namespace {

void check_range_bits(unsigned range_bits) {
    if (range_bits == 0 || range_bits > kMaxRangeBits) {
        throw std::invalid_argument("range_bits must be in [1, " +
                                    std::to_string(kMaxRangeBits) + "]");
    }
}

} // namespace

FiniteFunction::FiniteFunction(unsigned range_bits,
                               std::vector<std::uint64_t> table)
    : range_bits_(range_bits), table_(std::move(table)) {
    check_range_bits(range_bits_);
    if (table_.empty()) {
        throw std::invalid_argument("FiniteFunction: empty domain");
    }
    const std::uint64_t bound = std::uint64_t{1} << range_bits_;
    for (std::uint64_t v : table_) {
        if (v >= bound) {
            throw std::invalid_argument("FiniteFunction: table entry " +
                                        std::to_string(v) +
                                        " outside the range");
        }
    }
}

std::uint64_t FiniteFunction::operator()(std::uint64_t x) const {
    if (x >= table_.size()) {
        throw std::out_of_range("FiniteFunction: point " + std::to_string(x) +
                                " outside the domain");
    }
    return table_[x];
}

void check_enumeration_cap(std::uint64_t domain_size, unsigned range_bits,
                           std::uint64_t cap) {
    const unsigned log_domain = ceil_log2(domain_size);
    if (log_domain + range_bits >= 64 ||
        domain_size * (std::uint64_t{1} << range_bits) > cap) {
        throw CapacityError("oracle table |X|*2^n = " +
                            std::to_string(domain_size) + "*2^" +
                            std::to_string(range_bits) + " exceeds cap " +
                            std::to_string(cap));
    }
}

FiniteFunction sample_uniform(std::uint64_t domain_size, unsigned range_bits,
                              std::uint64_t seed, std::uint64_t cap) {
    if (domain_size == 0) {
        throw std::invalid_argument("sample_uniform: domain_size must be >= 1");
    }
    check_range_bits(range_bits);
    check_enumeration_cap(domain_size, range_bits, cap);
    Rng rng(seed);
    const std::uint64_t range = std::uint64_t{1} << range_bits;
    std::vector<std::uint64_t> table(domain_size);
    for (auto &v : table) {
        v = uniform_below(rng, range);
    }
    return FiniteFunction(range_bits, std::move(table));
}

FiniteFunction reprogram(const FiniteFunction &h, std::uint64_t x,
                         std::uint64_t theta) {
    if (x >= h.domain_size()) {
        throw std::invalid_argument("reprogram: point outside the domain");
    }
    if (theta >= h.range_size()) {
        throw std::invalid_argument("reprogram: value outside the range");
    }
    std::vector<std::uint64_t> table = h.table();
    table[x] = theta;
    return FiniteFunction(h.range_bits(), std::move(table));
}

FiniteFunction restrict_to(const Oracle &h,
                           const std::vector<std::uint64_t> &points) {
    std::vector<std::uint64_t> table;
    table.reserve(points.size());
    for (std::uint64_t p : points) {
        if (p >= h.domain_size()) {
            throw std::invalid_argument("restrict_to: point outside the domain");
        }
        table.push_back(h(p));
    }
    return FiniteFunction(h.range_bits(), std::move(table));
}

std::vector<FiniteFunction> enumerate_all(std::uint64_t domain_size,
                                          unsigned range_bits) {
    check_range_bits(range_bits);
    const std::uint64_t total_bits = domain_size * range_bits;
    if (domain_size == 0 || total_bits > 20) {
        throw CapacityError("enumerate_all: more than 2^20 functions");
    }
    const std::uint64_t count = std::uint64_t{1} << total_bits;
    const std::uint64_t mask = (std::uint64_t{1} << range_bits) - 1;
    std::vector<FiniteFunction> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint64_t> table(domain_size);
        for (std::uint64_t x = 0; x < domain_size; ++x) {
            table[x] = (code >> (x * range_bits)) & mask;
        }
        out.emplace_back(range_bits, std::move(table));
    }
    return out;
}

FiniteFunction materialize(const Oracle &f, std::uint64_t cap) {
    check_enumeration_cap(f.domain_size(), f.range_bits(), cap);
    std::vector<std::uint64_t> table(f.domain_size());
    for (std::uint64_t x = 0; x < table.size(); ++x) {
        table[x] = f(x);
    }
    return FiniteFunction(f.range_bits(), std::move(table));
}

void to_json(nlohmann::json &j, const FiniteFunction &h) {
    j = nlohmann::json{{"domain_size", h.domain_size()},
                       {"range_bits", h.range_bits()},
                       {"table", h.table()}};
}

FiniteFunction finite_function_from_json(const nlohmann::json &j) {
    const auto domain = j.at("domain_size").get<std::uint64_t>();
    auto table = j.at("table").get<std::vector<std::uint64_t>>();
    if (table.size() != domain) {
        throw std::invalid_argument(
            "FiniteFunction json: table length differs from domain_size");
    }
    return FiniteFunction(j.at("range_bits").get<unsigned>(), std::move(table));
}

} // namespace qromlab::oracle
