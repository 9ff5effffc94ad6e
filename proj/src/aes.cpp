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

#include "dronecrypt/aes.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace dronecrypt {

static uint8_t gf_mul(uint8_t a, uint8_t b) {
  uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = uint8_t(a << 1) ^ ((a & 0x80) ? 0x1b : 0);
    b >>= 1;
  }
  return r;
}

// S-box derived from its definition (inverse in GF(2^8), then the affine
// map) rather than transcribed; the published vectors pin it down.
static const std::array<uint8_t, 256>& sbox() {
  static const std::array<uint8_t, 256> table = [] {
    std::array<uint8_t, 256> s{};
    for (int x = 0; x < 256; ++x) {
      uint8_t inv = 0;
      if (x)
        for (int y = 1; y < 256; ++y)
          if (gf_mul(uint8_t(x), uint8_t(y)) == 1) {
            inv = uint8_t(y);
            break;
          }
      auto rotl8 = [](uint8_t v, int n) { return uint8_t(v << n | v >> (8 - n)); };
      s[size_t(x)] = uint8_t(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^
                             rotl8(inv, 4) ^ 0x63);
    }
    return s;
  }();
  return table;
}

Aes128::Aes128(BytesView key) {
  if (key.size() != 16) throw Error("AES-128 key must be 16 bytes");
  const auto& S = sbox();
  std::memcpy(round_keys_[0], key.data(), 16);
  uint8_t rcon = 1;
  for (int r = 1; r <= 10; ++r) {
    const uint8_t* prev = round_keys_[r - 1];
    uint8_t* rk = round_keys_[r];
    // First word: prev word 3 rotated, substituted, rcon folded in.
    rk[0] = prev[0] ^ S[prev[13]] ^ rcon;
    rk[1] = prev[1] ^ S[prev[14]];
    rk[2] = prev[2] ^ S[prev[15]];
    rk[3] = prev[3] ^ S[prev[12]];
    for (int i = 4; i < 16; ++i) rk[i] = prev[i] ^ rk[i - 4];
    rcon = gf_mul(rcon, 2);
  }
}

void Aes128::encrypt_block(const uint8_t in[16], uint8_t out[16]) const {
  const auto& S = sbox();
  uint8_t st[16];
  for (int i = 0; i < 16; ++i) st[i] = in[i] ^ round_keys_[0][i];

  for (int round = 1; round <= 10; ++round) {
    uint8_t t[16];
    // SubBytes + ShiftRows: byte at column c, row r comes from column c+r.
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) t[4 * c + r] = S[st[4 * ((c + r) & 3) + r]];
    if (round < 10) {
      for (int c = 0; c < 4; ++c) {
        uint8_t* p = t + 4 * c;
        uint8_t a0 = p[0], a1 = p[1], a2 = p[2], a3 = p[3];
        uint8_t x = a0 ^ a1 ^ a2 ^ a3;
        p[0] = a0 ^ x ^ gf_mul(a0 ^ a1, 2);
        p[1] = a1 ^ x ^ gf_mul(a1 ^ a2, 2);
        p[2] = a2 ^ x ^ gf_mul(a2 ^ a3, 2);
        p[3] = a3 ^ x ^ gf_mul(a3 ^ a0, 2);
      }
    }
    for (int i = 0; i < 16; ++i) st[i] = t[i] ^ round_keys_[round][i];
  }
  std::memcpy(out, st, 16);
}

Bytes aes128_block(BytesView key, BytesView block) {
  if (block.size() != 16) throw Error("AES block must be 16 bytes");
  Aes128 aes(key);
  Bytes out(16);
  aes.encrypt_block(block.data(), out.data());
  return out;
}

Bytes aes_ctr_xor(BytesView key, BytesView iv, BytesView data) {
  if (iv.size() != 16) throw Error("AES-CTR IV must be 16 bytes");
  Aes128 aes(key);
  uint8_t ctr[16];
  std::memcpy(ctr, iv.data(), 16);
  Bytes out(data.size());
  uint8_t ks[16];
  for (size_t off = 0; off < data.size(); off += 16) {
    aes.encrypt_block(ctr, ks);
    size_t n = std::min<size_t>(16, data.size() - off);
    for (size_t i = 0; i < n; ++i) out[off + i] = data[off + i] ^ ks[i];
    for (int i = 15; i >= 0; --i)
      if (++ctr[i]) break;
  }
  return out;
}

}  // namespace dronecrypt
