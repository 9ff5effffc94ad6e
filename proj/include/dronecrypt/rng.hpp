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

#include <cstdint>
#include <memory>

#include "dronecrypt/bytes.hpp"

namespace dronecrypt {

// Injected randomness source. Implementations need not be thread-safe;
// callers hold one per thread.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(uint8_t* out, size_t len) = 0;

  Bytes bytes(size_t n) {
    Bytes b(n);
    if (n) fill(b.data(), n);
    return b;
  }
};

// OS entropy (getrandom / /dev/urandom). Throws Error if neither works.
class SystemRng final : public Rng {
 public:
  void fill(uint8_t* out, size_t len) override;
};

// Deterministic stream for reproducible runs and golden files: the seed
// bytes are hashed to a 32-byte key and expanded with the ChaCha20
// keystream (zero nonce, counter from 0). Not for production secrets.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(BytesView seed);
  void fill(uint8_t* out, size_t len) override;

 private:
  uint8_t key_[32];
  uint64_t block_ = 0;   // next 64-byte block index
  uint8_t buf_[64];
  size_t buf_used_ = 64;  // consumed bytes of buf_
};

}  // namespace dronecrypt
