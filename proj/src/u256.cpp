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

#include "dronecrypt/u256.hpp"

#include <stdexcept>

namespace dronecrypt {

U256 u256_from_hex(const char* hex64) {
  U256 r;
  for (int i = 0; i < 64; ++i) {
    char c = hex64[i];
    if (c == '\0') throw std::invalid_argument("u256_from_hex: short string");
    uint64_t v;
    if (c >= '0' && c <= '9') v = uint64_t(c - '0');
    else if (c >= 'a' && c <= 'f') v = uint64_t(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v = uint64_t(c - 'A' + 10);
    else throw std::invalid_argument("u256_from_hex: bad digit");
    int bit = (63 - i) * 4;  // digit 0 is most significant
    r.w[bit >> 6] |= v << (bit & 63);
  }
  if (hex64[64] != '\0') throw std::invalid_argument("u256_from_hex: long string");
  return r;
}

std::string u256_to_hex(const U256& a) {
  static const char digits[] = "0123456789abcdef";
  std::string s(64, '0');
  for (int i = 0; i < 64; ++i) {
    int bit = (63 - i) * 4;
    s[i] = digits[(a.w[bit >> 6] >> (bit & 63)) & 0xf];
  }
  return s;
}

}  // namespace dronecrypt
