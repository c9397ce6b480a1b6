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

#include "qromlab/sigma/modarith.hpp"

#include <stdexcept>

namespace qromlab::sigma {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        const __int128 quot = r / new_r;
        const __int128 tt = t - quot * new_t;
        t = new_t;
        new_t = tt;
        const __int128 rr = r - quot * new_r;
        r = new_r;
        new_r = rr;
    }
    if (r != 1) {
        throw std::domain_error("invmod: not invertible");
    }
    if (t < 0) {
        t += m;
    }
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p) {
    if (g == 0 || g >= p) {
        throw std::invalid_argument("multiplicative_order: g outside [1, p)");
    }
    const std::uint64_t n = p - 1;
    std::uint64_t best = n;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        if (d < best && powmod(g, d, p) == 1) {
            best = d;
        }
        const std::uint64_t e = n / d;
        if (e < best && powmod(g, e, p) == 1) {
            best = e;
        }
    }
    return best;
}

} // namespace qromlab::sigma
