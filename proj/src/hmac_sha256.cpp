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

#include "dronecrypt/hmac_sha256.hpp"

#include <cstring>

#include "dronecrypt/sha256.hpp"

namespace dronecrypt {

Bytes hmac_sha256(BytesView key, BytesView data) {
  uint8_t k[64] = {0};
  if (key.size() > 64) {
    Bytes kh = sha256(key);
    std::memcpy(k, kh.data(), kh.size());
  } else if (!key.empty()) {
    std::memcpy(k, key.data(), key.size());
  }

  uint8_t ipad[64], opad[64];
  for (int i = 0; i < 64; ++i) {
    ipad[i] = k[i] ^ 0x36;
    opad[i] = k[i] ^ 0x5c;
  }

  Sha256 inner;
  inner.update(BytesView(ipad, 64));
  inner.update(data);
  Bytes ih = inner.finish();

  Sha256 outer;
  outer.update(BytesView(opad, 64));
  outer.update(ih);
  return outer.finish();
}

}  // namespace dronecrypt
