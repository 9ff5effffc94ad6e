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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace dronecrypt {

using uint128_t = unsigned __int128;

// 256-bit unsigned integer, four saturated 64-bit limbs, little-endian
// limb order (w[0] is least significant).
struct U256 {
  uint64_t w[4] = {0, 0, 0, 0};

  static constexpr U256 zero() { return U256{}; }
  static constexpr U256 one() { return U256{{1, 0, 0, 0}}; }
  static constexpr U256 from_u64(uint64_t v) { return U256{{v, 0, 0, 0}}; }

  constexpr bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  constexpr bool is_odd() const { return w[0] & 1; }
  constexpr bool bit(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  friend constexpr bool operator==(const U256& a, const U256& b) {
    return a.w[0] == b.w[0] && a.w[1] == b.w[1] && a.w[2] == b.w[2] && a.w[3] == b.w[3];
  }
};

// Double-width product buffer.
struct U512 {
  uint64_t w[8] = {0, 0, 0, 0, 0, 0, 0, 0};
};

inline int u256_cmp(const U256& a, const U256& b) {
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
  }
  return 0;
}

// r = a + b, returns carry out.
inline uint64_t u256_add(U256& r, const U256& a, const U256& b) {
  uint128_t acc = 0;
  for (int i = 0; i < 4; ++i) {
    acc += uint128_t(a.w[i]) + b.w[i];
    r.w[i] = uint64_t(acc);
    acc >>= 64;
  }
  return uint64_t(acc);
}

// r = a - b, returns borrow out.
inline uint64_t u256_sub(U256& r, const U256& a, const U256& b) {
  uint128_t borrow = 0;
  for (int i = 0; i < 4; ++i) {
    uint128_t d = uint128_t(a.w[i]) - b.w[i] - borrow;
    r.w[i] = uint64_t(d);
    borrow = (d >> 64) & 1;
  }
  return uint64_t(borrow);
}

// Logical right shift by one bit, shifting `hi` into the top position.
inline void u256_shr1(U256& a, uint64_t hi = 0) {
  a.w[0] = (a.w[0] >> 1) | (a.w[1] << 63);
  a.w[1] = (a.w[1] >> 1) | (a.w[2] << 63);
  a.w[2] = (a.w[2] >> 1) | (a.w[3] << 63);
  a.w[3] = (a.w[3] >> 1) | (hi << 63);
}

// out = a * b (schoolbook 4x4).
inline void u256_mul_wide(U512& out, const U256& a, const U256& b) {
  uint64_t t[8] = {0};
  for (int i = 0; i < 4; ++i) {
    uint64_t carry = 0;
    for (int j = 0; j < 4; ++j) {
      uint128_t acc = uint128_t(a.w[i]) * b.w[j] + t[i + j] + carry;
      t[i + j] = uint64_t(acc);
      carry = uint64_t(acc >> 64);
    }
    t[i + 4] = carry;
  }
  for (int i = 0; i < 8; ++i) out.w[i] = t[i];
}

// Fixed 32-byte encodings.
inline void u256_to_le_bytes(const U256& a, uint8_t out[32]) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) out[8 * i + j] = uint8_t(a.w[i] >> (8 * j));
}
inline U256 u256_from_le_bytes(const uint8_t in[32]) {
  U256 r;
  for (int i = 0; i < 4; ++i) {
    uint64_t v = 0;
    for (int j = 7; j >= 0; --j) v = (v << 8) | in[8 * i + j];
    r.w[i] = v;
  }
  return r;
}
inline void u256_to_be_bytes(const U256& a, uint8_t out[32]) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) out[8 * i + j] = uint8_t(a.w[3 - i] >> (8 * (7 - j)));
}
inline U256 u256_from_be_bytes(const uint8_t in[32]) {
  U256 r;
  for (int i = 0; i < 4; ++i) {
    uint64_t v = 0;
    for (int j = 0; j < 8; ++j) v = (v << 8) | in[8 * i + j];
    r.w[3 - i] = v;
  }
  return r;
}

// Parses exactly 64 hex digits (no 0x prefix). Used for embedded constants.
U256 u256_from_hex(const char* hex64);
std::string u256_to_hex(const U256& a);

}  // namespace dronecrypt
