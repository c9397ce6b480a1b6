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

#include <map>

#include "qromlab/oracle/gf2m.hpp"
#include "qromlab/oracle/oracle.hpp"

using namespace qromlab;
using namespace qromlab::oracle;

namespace {

// Schoolbook carry-less product reduced bit by bit; independent of GF2m::mul.
std::uint64_t ref_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned m) {
    unsigned __int128 prod = 0;
    for (unsigned i = 0; i < 64; ++i) {
        if ((b >> i) & 1) {
            prod ^= static_cast<unsigned __int128>(a) << i;
        }
    }
    for (int bit = 127; bit >= static_cast<int>(m); --bit) {
        if ((prod >> bit) & 1) {
            prod ^= static_cast<unsigned __int128>(f) << (bit - static_cast<int>(m));
        }
    }
    return static_cast<std::uint64_t>(prod);
}

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = degree(b);
    while (degree(a) >= db) {
        a ^= b << (degree(a) - db);
    }
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// x^(2^k) mod f.
std::uint64_t frobenius(unsigned k, std::uint64_t f, unsigned m) {
    std::uint64_t v = m > 1 ? 2 : poly_mod(2, f);
    for (unsigned i = 0; i < k; ++i) {
        v = ref_mulmod(v, v, f, m);
    }
    return v;
}

// Rabin's irreducibility test.
bool rabin_irreducible(std::uint64_t f, unsigned m) {
    const std::uint64_t x = m > 1 ? 2 : poly_mod(2, f);
    if (frobenius(m, f, m) != x) {
        return false;
    }
    for (unsigned p = 2; p <= m; ++p) {
        bool prime = true;
        for (unsigned d = 2; d * d <= p; ++d) {
            prime = prime && p % d != 0;
        }
        if (!prime || m % p != 0) {
            continue;
        }
        if (poly_gcd(f, frobenius(m / p, f, m) ^ x) != 1) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("every GF(2^m) modulus passes Rabin's irreducibility test") {
    for (unsigned m = 1; m <= GF2m::kMaxDegree; ++m) {
        const std::uint64_t f = GF2m::irreducible(m);
        CAPTURE(m);
        CHECK(degree(f) == static_cast<int>(m));
        CHECK(rabin_irreducible(f, m));
    }
}

TEST_CASE("GF(2^m) moduli are the lexicographically first low-weight choices") {
    CHECK(GF2m::irreducible(2) == 0b111);
    CHECK(GF2m::irreducible(3) == 0b1011);
    CHECK(GF2m::irreducible(8) == 0x11b);
    CHECK(GF2m::irreducible(63) == ((std::uint64_t{1} << 63) | 2 | 1));
}

TEST_CASE("GF(2^m) multiplication matches the reference and field axioms") {
    Rng rng(11);
    for (unsigned m : {1u, 2u, 5u, 8u, 13u, 32u, 47u, 63u}) {
        const GF2m f(m);
        const std::uint64_t mask = m == 64 ? ~0ULL : (std::uint64_t{1} << m) - 1;
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t a = rng() & mask;
            const std::uint64_t b = rng() & mask;
            const std::uint64_t c = rng() & mask;
            CAPTURE(m);
            CHECK(f.mul(a, b) == ref_mulmod(a, b, f.modulus(), m));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, GF2m::add(b, c)) == GF2m::add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, 1) == a);
        }
    }
    CHECK_THROWS(GF2m(0));
    CHECK_THROWS(GF2m(64));
}

TEST_CASE("sample_uniform") {
    const auto h1 = sample_uniform(1, 1, 5);
    CHECK(h1.domain_size() == 1);
    CHECK(h1(0) <= 1);
    CHECK(sample_uniform(4, 2, 9) == sample_uniform(4, 2, 9));
    CHECK_THROWS_AS(sample_uniform(std::uint64_t{1} << 20, 8, 1), CapacityError);
}

TEST_CASE("sample_uniform is uniform per point (chi-square over seeds)") {
    constexpr int kSeeds = 10000;
    for (std::uint64_t x = 0; x < 4; ++x) {
        std::vector<int> counts(64, 0);
        for (int s = 0; s < kSeeds; ++s) {
            ++counts[sample_uniform(4, 6, derive_seed(3, kOracleStream, s))(x)];
        }
        const double expect = kSeeds / 64.0;
        double chi2 = 0.0;
        for (int c : counts) {
            chi2 += (c - expect) * (c - expect) / expect;
        }
        // 63 degrees of freedom; 5 standard deviations above the mean.
        CHECK(chi2 < 63.0 + 5.0 * std::sqrt(126.0));
    }
}

TEST_CASE("reprogram") {
    const FiniteFunction h(1, {0, 1});
    CHECK(reprogram(h, 0, 1).table() == std::vector<std::uint64_t>{1, 1});
    CHECK(h.table() == std::vector<std::uint64_t>{0, 1});

    const auto g = sample_uniform(8, 3, 4);
    CHECK(reprogram(reprogram(g, 5, 1), 5, 6) == reprogram(g, 5, 6));
    for (std::uint64_t x = 0; x < 8; ++x) {
        CHECK(reprogram(g, x, g(x)) == g);
    }
    CHECK_THROWS(reprogram(g, 8, 0));
    CHECK_THROWS(reprogram(g, 0, 8));
}

TEST_CASE("restrict_to and enumerate_all") {
    const auto g = sample_uniform(8, 3, 4);
    const auto r = restrict_to(g, {7, 2});
    CHECK(r.table() == std::vector<std::uint64_t>{g(7), g(2)});
    const auto all = enumerate_all(2, 2);
    CHECK(all.size() == 16);
    CHECK(all[1].table() == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("k-wise family: trivial polynomials") {
    const KWiseFamilyMember zero(16, 3, {0, 0, 0});
    const KWiseFamilyMember constant(16, 3, {5});
    for (std::uint64_t x = 0; x < 16; ++x) {
        CHECK(zero(x) == 0);
        CHECK(constant(x) == 5);
        CHECK(evaluate_kwise(constant, x) == constant(x));
    }
    CHECK(KWiseFamilyMember::field_degree(16, 3) == 4);
    CHECK(KWiseFamilyMember::field_degree(2, 6) == 6);
}

TEST_CASE("k-wise family is exactly k-wise uniform") {
    // Over GF(2^3) with k = 2, every output pair at two distinct points is
    // hit by exactly one coefficient vector.
    for (std::uint64_t x1 = 0; x1 < 8; ++x1) {
        for (std::uint64_t x2 = 0; x2 < 8; ++x2) {
            if (x1 == x2) {
                continue;
            }
            std::map<std::pair<std::uint64_t, std::uint64_t>, int> counts;
            for (std::uint64_t c0 = 0; c0 < 8; ++c0) {
                for (std::uint64_t c1 = 0; c1 < 8; ++c1) {
                    const KWiseFamilyMember f(8, 3, {c0, c1});
                    ++counts[{f(x1), f(x2)}];
                }
            }
            REQUIRE(counts.size() == 64);
            for (const auto &[k, v] : counts) {
                CHECK(v == 1);
            }
        }
    }
    // k = 4 over GF(2^2) at all four points.
    std::map<std::vector<std::uint64_t>, int> counts;
    for (std::uint64_t code = 0; code < 256; ++code) {
        const KWiseFamilyMember f(4, 2, {code & 3, (code >> 2) & 3, (code >> 4) & 3,
                                         (code >> 6) & 3});
        ++counts[{f(0), f(1), f(2), f(3)}];
    }
    CHECK(counts.size() == 256);
}

TEST_CASE("k-wise family with truncated outputs stays pairwise uniform") {
    // m = 4, n = 2: each of the 16 output pairs appears 256/16 times.
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> counts;
    for (std::uint64_t c0 = 0; c0 < 16; ++c0) {
        for (std::uint64_t c1 = 0; c1 < 16; ++c1) {
            const KWiseFamilyMember f(16, 2, {c0, c1});
            ++counts[{f(3), f(12)}];
        }
    }
    REQUIRE(counts.size() == 16);
    for (const auto &[k, v] : counts) {
        CHECK(v == 16);
    }
}

TEST_CASE("materialize and json round trip") {
    Rng rng(2);
    const auto f = KWiseFamilyMember::sample(4, 32, 5, rng);
    const auto t = materialize(f);
    for (std::uint64_t x = 0; x < 32; ++x) {
        CHECK(t(x) == f(x));
    }
    nlohmann::json j = t;
    CHECK(finite_function_from_json(j) == t);
}
