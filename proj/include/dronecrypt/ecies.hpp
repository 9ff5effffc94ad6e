/*
 * Copyright (C) 2026 The Dronecrypt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>

#include "dronecrypt/bpv.hpp"
#include "dronecrypt/keyfile.hpp"

namespace dronecrypt {

enum class SymSuite : uint8_t {
  Standard = 1,  // AES-128-CTR + HMAC-SHA256, 32-byte tag
  Light = 2,     // ChaCha20 + Poly1305, 16-byte tag
};

const char* suite_name(SymSuite s);
SymSuite suite_from_byte(uint8_t b);  // throws Error on unknown id
size_t suite_tag_len(SymSuite s);

struct KdfOutput {
  Bytes k_enc;  // 32 bytes
  Bytes k_mac;  // 32 bytes
};

// Extract-then-expand over HMAC-SHA256, salted with the fixed protocol
// label "dronecrypt-ecies-v1"; 64 bytes out, split k_enc | k_mac.
KdfOutput kdf(BytesView shared);

struct EciesCiphertext {
  GroupPoint R;  // ephemeral public point
  Bytes c;       // symmetric ciphertext
  Bytes d;       // MAC tag over c
  SymSuite suite;
};

// (r, R) from bpv_online when table is given, fresh scalar + scalar_mul
// otherwise; T = r*Y; keys from KDF(encode(T)); c = Enc(m); d = MAC(c).
// The symmetric layer runs with an all-zero nonce: every encryption uses
// fresh keys derived from a fresh T, so no (key, nonce) pair ever repeats.
EciesCiphertext ecies_encrypt(BytesView m, const GroupPoint& Y, Rng& rng, SymSuite suite,
                              const BpvTable* table = nullptr);

// T' = y*R; MAC checked (constant-time compare) before any decryption.
// nullopt is the INVALID result; tag tamper and ciphertext tamper are
// indistinguishable.
std::optional<Bytes> ecies_decrypt(const KeyPair& key, const EciesCiphertext& ct);

// Wire form, bit-exact:
//   "DCE1" | curve_id u8 | suite u8 | point 33 bytes | c_len u32 LE |
//   c bytes | d bytes (length fixed by suite). No trailing bytes.
Bytes ecies_serialize(const EciesCiphertext& ct);
EciesCiphertext ecies_parse(BytesView data);  // validates R

}  // namespace dronecrypt
