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

#include "dronecrypt/chacha20.hpp"

#include <algorithm>

namespace dronecrypt {

static inline uint32_t rotl(uint32_t x, int n) { return x << n | x >> (32 - n); }

static inline void quarter(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
  a += b; d ^= a; d = rotl(d, 16);
  c += d; b ^= c; b = rotl(b, 12);
  a += b; d ^= a; d = rotl(d, 8);
  c += d; b ^= c; b = rotl(b, 7);
}

void chacha20_block(const uint8_t key[32], const uint8_t nonce[12], uint32_t counter,
                    uint8_t out[64]) {
  uint32_t st[16];
  st[0] = 0x61707865; st[1] = 0x3320646e; st[2] = 0x79622d32; st[3] = 0x6b206574;
  for (int i = 0; i < 8; ++i) st[4 + i] = load_le32(key + 4 * i);
  st[12] = counter;
  for (int i = 0; i < 3; ++i) st[13 + i] = load_le32(nonce + 4 * i);

  uint32_t x[16];
  for (int i = 0; i < 16; ++i) x[i] = st[i];
  for (int round = 0; round < 10; ++round) {
    quarter(x[0], x[4], x[8], x[12]);
    quarter(x[1], x[5], x[9], x[13]);
    quarter(x[2], x[6], x[10], x[14]);
    quarter(x[3], x[7], x[11], x[15]);
    quarter(x[0], x[5], x[10], x[15]);
    quarter(x[1], x[6], x[11], x[12]);
    quarter(x[2], x[7], x[8], x[13]);
    quarter(x[3], x[4], x[9], x[14]);
  }
  for (int i = 0; i < 16; ++i) store_le32(out + 4 * i, x[i] + st[i]);
}

Bytes chacha20_xor(BytesView key, BytesView nonce, uint32_t counter, BytesView data) {
  if (key.size() != 32) throw Error("chacha20 key must be 32 bytes");
  if (nonce.size() != 12) throw Error("chacha20 nonce must be 12 bytes");
  Bytes out(data.size());
  uint8_t ks[64];
  for (size_t off = 0; off < data.size(); off += 64, ++counter) {
    chacha20_block(key.data(), nonce.data(), counter, ks);
    size_t n = std::min<size_t>(64, data.size() - off);
    for (size_t i = 0; i < n; ++i) out[off + i] = data[off + i] ^ ks[i];
  }
  return out;
}

}  // namespace dronecrypt
