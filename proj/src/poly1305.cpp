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

#include "dronecrypt/poly1305.hpp"

#include <algorithm>
#include <cstring>

namespace dronecrypt {

// Radix-2^26 accumulator; products stay under 2^59, well inside uint64.

Bytes poly1305_tag(BytesView key, BytesView msg) {
  if (key.size() != 32) throw Error("poly1305 key must be 32 bytes");
  const uint8_t* k = key.data();

  uint32_t t0 = load_le32(k + 0) & 0x0fffffff;
  uint32_t t1 = load_le32(k + 4) & 0x0ffffffc;
  uint32_t t2 = load_le32(k + 8) & 0x0ffffffc;
  uint32_t t3 = load_le32(k + 12) & 0x0ffffffc;

  uint32_t r0 = t0 & 0x3ffffff;
  uint32_t r1 = (t0 >> 26 | t1 << 6) & 0x3ffffff;
  uint32_t r2 = (t1 >> 20 | t2 << 12) & 0x3ffffff;
  uint32_t r3 = (t2 >> 14 | t3 << 18) & 0x3ffffff;
  uint32_t r4 = t3 >> 8;

  uint32_t s1 = r1 * 5, s2 = r2 * 5, s3 = r3 * 5, s4 = r4 * 5;

  uint32_t h0 = 0, h1 = 0, h2 = 0, h3 = 0, h4 = 0;
  const uint32_t M = 0x3ffffff;

  size_t off = 0;
  while (off < msg.size()) {
    uint8_t block[16] = {0};
    size_t n = std::min<size_t>(16, msg.size() - off);
    std::memcpy(block, msg.data() + off, n);
    uint32_t hibit;
    if (n == 16) {
      hibit = 1u << 24;
    } else {
      block[n] = 1;
      hibit = 0;
    }
    off += n;

    h0 += load_le32(block + 0) & M;
    h1 += (load_le32(block + 3) >> 2) & M;
    h2 += (load_le32(block + 6) >> 4) & M;
    h3 += (load_le32(block + 9) >> 6) & M;
    h4 += (load_le32(block + 12) >> 8) | hibit;

    uint64_t d0 = uint64_t(h0) * r0 + uint64_t(h1) * s4 + uint64_t(h2) * s3 +
                  uint64_t(h3) * s2 + uint64_t(h4) * s1;
    uint64_t d1 = uint64_t(h0) * r1 + uint64_t(h1) * r0 + uint64_t(h2) * s4 +
                  uint64_t(h3) * s3 + uint64_t(h4) * s2;
    uint64_t d2 = uint64_t(h0) * r2 + uint64_t(h1) * r1 + uint64_t(h2) * r0 +
                  uint64_t(h3) * s4 + uint64_t(h4) * s3;
    uint64_t d3 = uint64_t(h0) * r3 + uint64_t(h1) * r2 + uint64_t(h2) * r1 +
                  uint64_t(h3) * r0 + uint64_t(h4) * s4;
    uint64_t d4 = uint64_t(h0) * r4 + uint64_t(h1) * r3 + uint64_t(h2) * r2 +
                  uint64_t(h3) * r1 + uint64_t(h4) * r0;

    uint64_t c = d0 >> 26; h0 = uint32_t(d0) & M;
    d1 += c; c = d1 >> 26; h1 = uint32_t(d1) & M;
    d2 += c; c = d2 >> 26; h2 = uint32_t(d2) & M;
    d3 += c; c = d3 >> 26; h3 = uint32_t(d3) & M;
    d4 += c; c = d4 >> 26; h4 = uint32_t(d4) & M;
    h0 += uint32_t(c) * 5;
    uint32_t c2 = h0 >> 26; h0 &= M; h1 += c2;
  }

  uint32_t c = h1 >> 26; h1 &= M; h2 += c;
  c = h2 >> 26; h2 &= M; h3 += c;
  c = h3 >> 26; h3 &= M; h4 += c;
  c = h4 >> 26; h4 &= M; h0 += c * 5;
  c = h0 >> 26; h0 &= M; h1 += c;

  // If h >= 2^130 - 5, take h + 5 - 2^130 instead.
  uint32_t g0 = h0 + 5; c = g0 >> 26; g0 &= M;
  uint32_t g1 = h1 + c; c = g1 >> 26; g1 &= M;
  uint32_t g2 = h2 + c; c = g2 >> 26; g2 &= M;
  uint32_t g3 = h3 + c; c = g3 >> 26; g3 &= M;
  uint32_t g4 = h4 + c;
  if (g4 >> 26) {
    h0 = g0; h1 = g1; h2 = g2; h3 = g3; h4 = g4 & M;
  }

  uint32_t w0 = h0 | h1 << 26;
  uint32_t w1 = h1 >> 6 | h2 << 20;
  uint32_t w2 = h2 >> 12 | h3 << 14;
  uint32_t w3 = h3 >> 18 | h4 << 8;

  uint64_t f = uint64_t(w0) + load_le32(k + 16);
  Bytes tag(16);
  store_le32(&tag[0], uint32_t(f));
  f = uint64_t(w1) + load_le32(k + 20) + (f >> 32);
  store_le32(&tag[4], uint32_t(f));
  f = uint64_t(w2) + load_le32(k + 24) + (f >> 32);
  store_le32(&tag[8], uint32_t(f));
  f = uint64_t(w3) + load_le32(k + 28) + (f >> 32);
  store_le32(&tag[12], uint32_t(f));
  return tag;
}

}  // namespace dronecrypt
