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

#include "doctest.h"

#include <set>

#include "qromlab/common.hpp"

using namespace qromlab;

TEST_CASE("derive_seed is a pure function of (master, stream, index)") {
    CHECK(derive_seed(7, kTrialStream, 3) == derive_seed(7, kTrialStream, 3));
    CHECK(derive_seed(7, kTrialStream, 3) != derive_seed(7, kTrialStream, 4));
    CHECK(derive_seed(7, kTrialStream, 3) != derive_seed(8, kTrialStream, 3));
    CHECK(derive_seed(7, kTrialStream, 3) != derive_seed(7, kOracleStream, 3));
}

TEST_CASE("stream tags are distinct") {
    const std::set<std::uint64_t> tags{kTrialStream, kChallengeStream, kMeasurementStream,
                                       kOracleStream, kResponseStream};
    CHECK(tags.size() == 5);
}

TEST_CASE("uniform_below stays in range and hits every value") {
    Rng rng(1);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++seen[v];
    }
    for (int c : seen) {
        CHECK(c > 800);
    }
    CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("Proportion and sample_stats") {
    Proportion p{25, 100};
    CHECK(p.mean() == doctest::Approx(0.25));
    CHECK(p.stderr_() == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));
    CHECK(Proportion{}.mean() == 0.0);

    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto s = sample_stats(v);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.count == 4);
    CHECK(s.stderr_ == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(64) == 6);
    CHECK(ceil_log2(65) == 7);
}
