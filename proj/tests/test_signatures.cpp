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

#include "qromlab/signatures/games.hpp"
#include "qromlab/signatures/scheme.hpp"

using namespace qromlab;
using namespace qromlab::signatures;

TEST_CASE("message codec") {
    CHECK(MessageCodec::kBits == 26);
    CHECK(MessageCodec::encode({}) == 0);
    CHECK(MessageCodec::encode({0xab}) == ((1u << 24) | 0xab0000));
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Message m = random_message(rng);
        CHECK(m.size() <= 3);
        CHECK(MessageCodec::decode(MessageCodec::encode(m)) == m);
    }
    // Trailing zero bytes are not confused with shorter messages.
    CHECK(MessageCodec::encode({0}) != MessageCodec::encode({}));
    CHECK(MessageCodec::encode({1, 0}) != MessageCodec::encode({1}));
    CHECK_THROWS(MessageCodec::encode({1, 2, 3, 4}));
}

TEST_CASE("hex") {
    CHECK(to_hex({0x00, 0xff, 0x1a}) == "00ff1a");
    CHECK(from_hex("00FF1a") == Message{0x00, 0xff, 0x1a});
    CHECK(from_hex("").empty());
    CHECK_THROWS_AS(from_hex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(from_hex("zz"), std::invalid_argument);
}

TEST_CASE("serialize and parse") {
    const Signature s{{7, 8}, {261, 66}};
    const auto bytes = serialize(s);
    CHECK(bytes.size() == 10);
    CHECK(bytes == std::vector<std::uint8_t>{7, 8, 0, 0, 1, 5, 0, 0, 0, 66});
    CHECK(parse(bytes, 2) == s);
    CHECK_FALSE(parse(bytes, 3).has_value());

    nlohmann::json j = s;
    CHECK(signature_from_json(j) == s);
    const KeyPair k{16, 1};
    nlohmann::json jk = k;
    CHECK(key_pair_from_json(jk).pk == 16);
    CHECK(key_pair_from_json(jk).w == 1);
}

TEST_CASE("keygen never yields the identity") {
    const Scheme scheme(sigma::schnorr_group_11());
    for (std::uint64_t s = 0; s < 500; ++s) {
        Rng rng(s);
        const auto k = scheme.keygen(rng);
        CHECK(k.w >= 1);
        CHECK(k.w < 11);
        CHECK(k.pk != 1);
        CHECK(scheme.schnorr().exp(k.w) == k.pk);
    }
}

TEST_CASE("sign and verify") {
    const Scheme scheme(sigma::schnorr_group_67());
    Rng rng(5);
    const auto h = scheme.sample_oracle(4, rng);
    const auto k = scheme.keygen(rng);
    const Message m{1, 2, 3};
    const auto s = scheme.sign(h, k, m, rng);
    CHECK(scheme.verify(h, k.pk, s));

    Signature other = s;
    other.m = {1, 2, 4};
    CHECK_FALSE(scheme.verify(h, k.pk, other));
    const auto k2 = scheme.keygen(rng);
    if (k2.pk != k.pk) {
        CHECK_FALSE(scheme.verify(h, k2.pk, s));
    }

    // Signing is randomized.
    int distinct = 0;
    for (int i = 0; i < 20; ++i) {
        distinct += scheme.sign(h, k, m, rng) == s ? 0 : 1;
    }
    CHECK(distinct >= 15);

    CHECK(scheme.point(k.pk, m, 5) == scheme.encoding().encode(scheme.composite(k.pk, m), 5));
    CHECK(scheme.domain_size() == std::uint64_t{1} << 44);
    CHECK(scheme.range_bits() == 6);
}

TEST_CASE("round trips and mutations") {
    const Scheme scheme(sigma::schnorr_group_67());
    const auto rt = round_trip_check(scheme, 200, 1);
    CHECK(rt.successes == 200);
    const auto mu = mutation_check(scheme, 400, 2);
    CHECK(mu.trials == 400);
    CHECK(mu.rate() <= 2.0 / 64.0);
}

TEST_CASE("signing oracle") {
    const Scheme scheme(sigma::schnorr_group_67());
    Rng rng(7);
    const auto h = scheme.sample_oracle(4, rng);
    const auto k = scheme.keygen(rng);
    SigningOracle so(scheme, h, k, 2, rng);
    const auto s1 = so.sign({1});
    so.sign({2});
    CHECK(so.answers().size() == 2);
    CHECK(so.seen(s1));
    CHECK_THROWS_AS(so.sign({3}), std::out_of_range);
}

TEST_CASE("nma game") {
    const Scheme scheme(sigma::schnorr_group_67());
    const auto honest = nma_game(scheme, HonestNmaForger{}, 200, 1);
    CHECK(honest.forgeries.successes == 200);
    const auto guess = nma_game(scheme, GuessingNmaForger(4), 4000, 2);
    CHECK(guess.oracle_k == 10);
    const double p = 4.0 / 64.0;
    CHECK(std::abs(guess.forgeries.mean() - p) <= 3.0 * std::sqrt(p * (1 - p) / 4000.0));
}

TEST_CASE("cma game never counts a replay") {
    const Scheme scheme(sigma::schnorr_group_67());
    const auto replay = cma_game(scheme, ReplayForger{}, 4, 300, 1);
    CHECK(replay.forgeries.successes == 0);
    CHECK(replay.replays == 300);
    const auto rr = cma_game(scheme, RerandomizeForger{}, 4, 1000, 2);
    CHECK(rr.forgeries.mean() <= 1.0 / 64.0 + 3.0 * std::sqrt(1.0 / 64.0 / 1000.0));
    const auto hon = cma_game(scheme, HonestCmaForger{}, 4, 100, 3);
    CHECK(hon.forgeries.successes == 100);
}

TEST_CASE("forgery pipeline is consistent") {
    const Scheme scheme(sigma::schnorr_group_11());
    const auto r = nma_extraction_pipeline(scheme, 30, 4);
    CHECK(r.consistent);
    CHECK(r.validated == r.extraction.successes);
}
