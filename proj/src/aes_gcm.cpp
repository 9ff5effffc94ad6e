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

#include "dronecrypt/aes_gcm.hpp"

#include <algorithm>
#include <cstring>

#include "dronecrypt/aes.hpp"

namespace dronecrypt {

// One GF(2^128) element as two big-endian 64-bit halves; bit 0 of the
// field is the most significant bit of byte 0 (the GCM convention).
struct Gf128 {
  uint64_t hi = 0, lo = 0;
};

static Gf128 gf_load(const uint8_t b[16]) {
  Gf128 x;
  for (int i = 0; i < 8; ++i) x.hi = x.hi << 8 | b[i];
  for (int i = 8; i < 16; ++i) x.lo = x.lo << 8 | b[i];
  return x;
}

static void gf_store(const Gf128& x, uint8_t b[16]) {
  store_be64(b, x.hi);
  store_be64(b + 8, x.lo);
}

static Gf128 gf_mul(const Gf128& x, const Gf128& y) {
  Gf128 z;
  Gf128 v = y;
  for (int i = 0; i < 128; ++i) {
    uint64_t bit = i < 64 ? (x.hi >> (63 - i)) & 1 : (x.lo >> (127 - i)) & 1;
    if (bit) {
      z.hi ^= v.hi;
      z.lo ^= v.lo;
    }
    uint64_t lsb = v.lo & 1;
    v.lo = v.lo >> 1 | v.hi << 63;
    v.hi >>= 1;
    if (lsb) v.hi ^= 0xe100000000000000ull;
  }
  return z;
}

static void ghash_update(Gf128& y, const Gf128& h, BytesView data) {
  uint8_t block[16];
  for (size_t off = 0; off < data.size(); off += 16) {
    size_t n = std::min<size_t>(16, data.size() - off);
    std::memset(block, 0, 16);
    std::memcpy(block, data.data() + off, n);
    Gf128 x = gf_load(block);
    y.hi ^= x.hi;
    y.lo ^= x.lo;
    y = gf_mul(y, h);
  }
}

// Counter increment on the last 32 bits only, as GCM specifies.
static void inc32(uint8_t block[16]) {
  store_be32(block + 12, load_be32(block + 12) + 1);
}

static void gctr(const Aes128& aes, uint8_t ctr[16], BytesView in, uint8_t* out) {
  uint8_t ks[16];
  for (size_t off = 0; off < in.size(); off += 16) {
    inc32(ctr);
    aes.encrypt_block(ctr, ks);
    size_t n = std::min<size_t>(16, in.size() - off);
    for (size_t i = 0; i < n; ++i) out[off + i] = in[off + i] ^ ks[i];
  }
}

static Bytes gcm_tag(const Aes128& aes, const Gf128& h, const uint8_t j0[16],
                     BytesView aad, BytesView ct) {
  Gf128 y;
  ghash_update(y, h, aad);
  ghash_update(y, h, ct);
  uint8_t lens[16];
  store_be64(lens, uint64_t(aad.size()) * 8);
  store_be64(lens + 8, uint64_t(ct.size()) * 8);
  Gf128 l = gf_load(lens);
  y.hi ^= l.hi;
  y.lo ^= l.lo;
  y = gf_mul(y, h);

  uint8_t s[16], ek[16];
  gf_store(y, s);
  aes.encrypt_block(j0, ek);
  Bytes tag(16);
  for (int i = 0; i < 16; ++i) tag[size_t(i)] = s[i] ^ ek[i];
  return tag;
}

static void gcm_setup(const Aes128& aes, BytesView iv, Gf128& h, uint8_t j0[16]) {
  if (iv.size() != 12) throw Error("AES-GCM IV must be 12 bytes");
  uint8_t zero[16] = {0}, hb[16];
  aes.encrypt_block(zero, hb);
  h = gf_load(hb);
  std::memcpy(j0, iv.data(), 12);
  j0[12] = 0; j0[13] = 0; j0[14] = 0; j0[15] = 1;
}

AeadOutput aes_gcm_seal(BytesView key, BytesView iv, BytesView aad, BytesView m) {
  Aes128 aes(key);
  Gf128 h;
  uint8_t j0[16];
  gcm_setup(aes, iv, h, j0);

  AeadOutput out;
  out.ciphertext.resize(m.size());
  uint8_t ctr[16];
  std::memcpy(ctr, j0, 16);
  gctr(aes, ctr, m, out.ciphertext.data());
  out.tag = gcm_tag(aes, h, j0, aad, out.ciphertext);
  return out;
}

std::optional<Bytes> aes_gcm_open(BytesView key, BytesView iv, BytesView aad,
                                  BytesView ciphertext, BytesView tag) {
  Aes128 aes(key);
  Gf128 h;
  uint8_t j0[16];
  gcm_setup(aes, iv, h, j0);

  Bytes expect = gcm_tag(aes, h, j0, aad, ciphertext);
  if (!ct_equal(expect, tag)) return std::nullopt;

  Bytes m(ciphertext.size());
  uint8_t ctr[16];
  std::memcpy(ctr, j0, 16);
  gctr(aes, ctr, ciphertext, m.data());
  return m;
}

}  // namespace dronecrypt
