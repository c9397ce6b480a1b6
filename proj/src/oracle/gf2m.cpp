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

#include "qromlab/oracle/gf2m.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qromlab::oracle {

namespace {

// Low-order terms (everything below x^m) of the modulus for m = 1..63.
constexpr std::array<std::uint64_t, 64> kLowTerms = {
    0x0,                 // unused
    0x1,                 // 1: x + 1
    0x3,                 // 2: x^2 + x + 1
    0x3,                 // 3: x^3 + x + 1
    0x3,                 // 4: x^4 + x + 1
    0x5,                 // 5: x^5 + x^2 + 1
    0x3,                 // 6
    0x3,                 // 7
    0x1b,                // 8: x^8 + x^4 + x^3 + x + 1
    0x3,                 // 9
    0x9,                 // 10
    0x5,                 // 11
    0x9,                 // 12
    0x1b,                // 13
    0x21,                // 14
    0x3,                 // 15
    0x2b,                // 16: x^16 + x^5 + x^3 + x + 1
    0x9,                 // 17
    0x9,                 // 18
    0x27,                // 19
    0x9,                 // 20
    0x5,                 // 21
    0x3,                 // 22
    0x21,                // 23
    0x1b,                // 24
    0x9,                 // 25
    0x1b,                // 26
    0x27,                // 27
    0x3,                 // 28
    0x5,                 // 29
    0x3,                 // 30
    0x9,                 // 31
    0x8d,                // 32: x^32 + x^7 + x^3 + x^2 + 1
    0x401,               // 33
    0x81,                // 34
    0x5,                 // 35
    0x201,               // 36
    0x53,                // 37
    0x63,                // 38
    0x11,                // 39
    0x39,                // 40
    0x9,                 // 41
    0x81,                // 42
    0x59,                // 43
    0x21,                // 44
    0x1b,                // 45
    0x3,                 // 46
    0x21,                // 47
    0x2d,                // 48
    0x201,               // 49
    0x1d,                // 50
    0x4b,                // 51
    0x9,                 // 52
    0x47,                // 53
    0x201,               // 54
    0x81,                // 55
    0x95,                // 56
    0x11,                // 57
    0x80001,             // 58
    0x95,                // 59
    0x3,                 // 60
    0x27,                // 61
    0x20000001,          // 62
    0x3,                 // 63
};

} // namespace

std::uint64_t GF2m::irreducible(unsigned m) {
    if (m == 0 || m > kMaxDegree) {
        throw std::invalid_argument("GF2m: unsupported degree " +
                                    std::to_string(m));
    }
    return (std::uint64_t{1} << m) | kLowTerms[m];
}

GF2m::GF2m(unsigned m)
    : m_(m), modulus_(irreducible(m)), top_(std::uint64_t{1} << m) {}

std::uint64_t GF2m::mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t acc = 0;
    while (b != 0) {
        if (b & 1U) {
            acc ^= a;
        }
        b >>= 1U;
        a <<= 1U;
        if (a & top_) {
            a ^= modulus_;
        }
    }
    return acc;
}

} // namespace qromlab::oracle
