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

#include "dronecrypt/chachapoly.hpp"

#include "dronecrypt/chacha20.hpp"
#include "dronecrypt/poly1305.hpp"

namespace dronecrypt {

static Bytes mac_data(BytesView aad, BytesView ct) {
  Bytes data;
  data.reserve(((aad.size() + 15) & ~size_t(15)) + ((ct.size() + 15) & ~size_t(15)) + 16);
  append(data, aad);
  data.resize((data.size() + 15) & ~size_t(15));
  append(data, ct);
  data.resize((data.size() + 15) & ~size_t(15));
  uint8_t lens[16];
  store_le64(lens, aad.size());
  store_le64(lens + 8, ct.size());
  append(data, BytesView(lens, 16));
  return data;
}

static Bytes one_time_key(BytesView key, BytesView nonce) {
  if (key.size() != 32) throw Error("chachapoly key must be 32 bytes");
  if (nonce.size() != 12) throw Error("chachapoly nonce must be 12 bytes");
  uint8_t block[64];
  chacha20_block(key.data(), nonce.data(), 0, block);
  return Bytes(block, block + 32);
}

AeadOutput chachapoly_seal(BytesView key, BytesView nonce, BytesView aad, BytesView m) {
  Bytes otk = one_time_key(key, nonce);
  AeadOutput out;
  out.ciphertext = chacha20_xor(key, nonce, 1, m);
  out.tag = poly1305_tag(otk, mac_data(aad, out.ciphertext));
  return out;
}

std::optional<Bytes> chachapoly_open(BytesView key, BytesView nonce, BytesView aad,
                                     BytesView ciphertext, BytesView tag) {
  Bytes otk = one_time_key(key, nonce);
  Bytes expect = poly1305_tag(otk, mac_data(aad, ciphertext));
  if (!ct_equal(expect, tag)) return std::nullopt;
  return chacha20_xor(key, nonce, 1, ciphertext);
}

}  // namespace dronecrypt
