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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qromlab {

using index_t = std::uint64_t;
using amp_t = std::complex<double>;

/// Slack used by every inequality check in the library.
inline constexpr double kInequalitySlack = 1e-9;

/// Raised when a requested table, enumeration or state exceeds a configured cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when register layouts, oracle tables or operators disagree in size.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/**
 * Counter-based seed split.
 *
 * seed(master, stream, i) = mix(mix(master ^ mix(stream)) + i), where mix is
 * the splitmix64 finalizer. Trials use stream kTrialStream and index i, so a
 * trial's randomness depends only on (master, i) and never on scheduling.
 */
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

inline constexpr std::uint64_t kTrialStream = 0x747269616cULL;       // "trial"
inline constexpr std::uint64_t kChallengeStream = 0x6368616cULL;     // "chal"
inline constexpr std::uint64_t kMeasurementStream = 0x6d656173ULL;   // "meas"
inline constexpr std::uint64_t kOracleStream = 0x6f7263ULL;          // "orc"
inline constexpr std::uint64_t kResponseStream = 0x72657370ULL;      // "resp"

inline Rng trial_rng(std::uint64_t master, std::uint64_t trial,
                     std::uint64_t stream = kTrialStream) {
    return Rng(derive_seed(master, stream, trial));
}

/// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_below(Rng &rng, std::uint64_t n);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Neumaier compensated summation.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Bernoulli frequency with its standard error.
struct Proportion {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;

    [[nodiscard]] double mean() const {
        return trials == 0 ? 0.0
                           : static_cast<double>(successes) /
                                 static_cast<double>(trials);
    }
    [[nodiscard]] double stderr_() const {
        if (trials == 0) {
            return 0.0;
        }
        const double p = mean();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }
};

/// Sample mean and standard error of the mean.
struct SampleStats {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t count = 0;
};

template <class Range> SampleStats sample_stats(const Range &values) {
    SampleStats s;
    CompensatedSum sum;
    for (double v : values) {
        sum.add(v);
        ++s.count;
    }
    if (s.count == 0) {
        return s;
    }
    s.mean = sum.value() / static_cast<double>(s.count);
    if (s.count > 1) {
        CompensatedSum sq;
        for (double v : values) {
            sq.add((v - s.mean) * (v - s.mean));
        }
        const double var = sq.value() / static_cast<double>(s.count - 1);
        s.stderr_ = std::sqrt(var / static_cast<double>(s.count));
    }
    return s;
}

/// Smallest b with 2^b >= n (0 for n <= 1).
unsigned ceil_log2(std::uint64_t n);

inline bool is_power_of_two(std::uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace qromlab
