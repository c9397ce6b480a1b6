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

#include "qromlab/common.hpp"
#include "qromlab/json_io.hpp"

namespace qromlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) {
    return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
}

std::uint64_t uniform_below(Rng &rng, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    return dist(rng);
}

unsigned ceil_log2(std::uint64_t n) {
    unsigned b = 0;
    while (b < 64 && (std::uint64_t{1} << b) < n) {
        ++b;
    }
    return b;
}

} // namespace qromlab

namespace qromlab {

void to_json(nlohmann::json &j, const SampleStats &s) {
    j = nlohmann::json{{"mean", s.mean}, {"stderr", s.stderr_}, {"count", s.count}};
}

void to_json(nlohmann::json &j, const Proportion &p) {
    j = nlohmann::json{{"successes", p.successes},
                       {"trials", p.trials},
                       {"mean", p.mean()},
                       {"stderr", p.stderr_()}};
}

} // namespace qromlab
