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

#include "qromlab/signatures/scheme.hpp"

#include <stdexcept>

namespace qromlab::signatures {

std::uint64_t MessageCodec::encode(const Message &m) {
    if (m.size() > kMaxBytes) {
        throw std::invalid_argument("message longer than " +
                                    std::to_string(kMaxBytes) + " bytes");
    }
    std::uint64_t code = 0;
    for (unsigned k = 0; k < kMaxBytes; ++k) {
        code = (code << 8) | (k < m.size() ? m[k] : 0);
    }
    return (std::uint64_t{m.size()} << (8 * kMaxBytes)) | code;
}

Message MessageCodec::decode(std::uint64_t code) {
    const std::size_t len = code >> (8 * kMaxBytes);
    if (len > kMaxBytes || code >> kBits != 0) {
        throw std::invalid_argument("MessageCodec::decode: bad code");
    }
    Message m(len);
    for (std::size_t k = 0; k < len; ++k) {
        m[k] = (code >> (8 * (kMaxBytes - 1 - k))) & 0xff;
    }
    return m;
}

void to_json(nlohmann::json &j, const KeyPair &k) {
    j = nlohmann::json{{"pk", k.pk}, {"w", k.w}};
}

KeyPair key_pair_from_json(const nlohmann::json &j) {
    KeyPair k;
    k.pk = j.at("pk").get<std::uint64_t>();
    k.w = j.value("w", std::uint64_t{0});
    return k;
}

void to_json(nlohmann::json &j, const Signature &s) {
    j = nlohmann::json{{"m", to_hex(s.m)}, {"a", s.proof.a}, {"z", s.proof.z}};
}

Signature signature_from_json(const nlohmann::json &j) {
    return Signature{from_hex(j.at("m").get<std::string>()),
                     sigma::FSProof{j.at("a").get<std::uint64_t>(),
                                    j.at("z").get<std::uint64_t>()}};
}

std::string to_hex(const Message &m) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    for (auto b : m) {
        s += kDigits[b >> 4];
        s += kDigits[b & 0xf];
    }
    return s;
}

Message from_hex(const std::string &s) {
    if (s.size() % 2 != 0) {
        throw std::invalid_argument("from_hex: odd length");
    }
    auto nibble = [](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("from_hex: not a hex digit");
    };
    Message m(s.size() / 2);
    for (std::size_t k = 0; k < m.size(); ++k) {
        m[k] = static_cast<std::uint8_t>(nibble(s[2 * k]) << 4 | nibble(s[2 * k + 1]));
    }
    return m;
}

std::vector<std::uint8_t> serialize(const Signature &s) {
    std::vector<std::uint8_t> out = s.m;
    for (std::uint64_t v : {s.proof.a, s.proof.z}) {
        for (int shift = 24; shift >= 0; shift -= 8) {
            out.push_back((v >> shift) & 0xff);
        }
    }
    return out;
}

std::optional<Signature> parse(const std::vector<std::uint8_t> &bytes,
                               std::size_t msg_len) {
    if (bytes.size() != msg_len + 8) {
        return std::nullopt;
    }
    Signature s;
    s.m.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(msg_len));
    auto word = [&](std::size_t off) {
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            v = (v << 8) | bytes[off + k];
        }
        return v;
    };
    s.proof.a = word(msg_len);
    s.proof.z = word(msg_len + 4);
    return s;
}

Scheme::Scheme(std::shared_ptr<const sigma::Schnorr> schnorr, std::uint64_t max_iters)
    : schnorr_(std::move(schnorr)), max_iters_(max_iters) {
    if (!schnorr_) {
        throw std::invalid_argument("Scheme: null protocol");
    }
    if (!is_power_of_two(schnorr_->challenge_space_size())) {
        throw DimensionError("Scheme: |C| must be a power of two");
    }
    (void)encoding();
}

sigma::PairEncoding Scheme::encoding() const {
    return sigma::PairEncoding::for_protocol(*schnorr_, MessageCodec::kBits);
}

std::uint64_t Scheme::domain_size() const { return encoding().domain_size(); }

unsigned Scheme::range_bits() const {
    return ceil_log2(schnorr_->challenge_space_size());
}

std::uint64_t Scheme::composite(std::uint64_t pk, const Message &m) const {
    return (pk << MessageCodec::kBits) | MessageCodec::encode(m);
}

std::uint64_t Scheme::point(std::uint64_t pk, const Message &m, std::uint64_t a) const {
    return encoding().encode(composite(pk, m), a);
}

KeyPair Scheme::keygen(Rng &rng) const {
    const std::uint64_t w = 1 + uniform_below(rng, schnorr_->r() - 1);
    return {schnorr_->exp(w), w};
}

Signature Scheme::sign(const oracle::Oracle &h, const KeyPair &sk, const Message &m,
                       Rng &rng) const {
    const auto res = sigma::fs_prove(*schnorr_, h, sk.pk, sk.w, max_iters_, rng,
                                     composite(sk.pk, m), MessageCodec::kBits);
    if (!res.proof) {
        throw std::runtime_error("sign: no accepting proof after " +
                                 std::to_string(res.iterations) + " attempts");
    }
    return Signature{m, *res.proof};
}

bool Scheme::verify(const oracle::Oracle &h, std::uint64_t pk, const Signature &s) const {
    if (s.m.size() > MessageCodec::kMaxBytes || pk >> schnorr_->instance_bits() != 0) {
        return false;
    }
    return sigma::fs_verify(*schnorr_, h, pk, s.proof, composite(pk, s.m),
                            MessageCodec::kBits);
}

oracle::KWiseFamilyMember Scheme::sample_oracle(unsigned k, Rng &rng) const {
    return oracle::KWiseFamilyMember::sample(k, domain_size(), range_bits(), rng);
}

} // namespace qromlab::signatures
