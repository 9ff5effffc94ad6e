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

#include "dronecrypt/bytes.hpp"

namespace dronecrypt {

// AES-128 with the round keys expanded once. Encryption direction only;
// the modes used here (CTR, GCM) never run the inverse cipher.
class Aes128 {
 public:
  explicit Aes128(BytesView key);  // 16 bytes
  void encrypt_block(const uint8_t in[16], uint8_t out[16]) const;

 private:
  uint8_t round_keys_[11][16];
};

Bytes aes128_block(BytesView key, BytesView block);  // single-block convenience

// CTR mode: the 16-byte IV is the first counter block, incremented as a
// big-endian 128-bit integer. Encryption and decryption are the same call.
Bytes aes_ctr_xor(BytesView key, BytesView iv, BytesView data);

}  // namespace dronecrypt
