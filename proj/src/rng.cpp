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

#include "dronecrypt/rng.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>

#include "dronecrypt/chacha20.hpp"
#include "dronecrypt/sha256.hpp"

#if defined(__linux__)
#include <sys/random.h>
#endif

namespace dronecrypt {

void SystemRng::fill(uint8_t* out, size_t len) {
#if defined(__linux__)
  size_t got = 0;
  while (got < len) {
    ssize_t n = getrandom(out + got, len - got, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;  // fall through to /dev/urandom
    }
    got += size_t(n);
  }
  if (got == len) return;
#endif
  std::FILE* f = std::fopen("/dev/urandom", "rb");
  if (!f) throw Error("no entropy source available");
  size_t n = std::fread(out, 1, len, f);
  std::fclose(f);
  if (n != len) throw Error("short read from /dev/urandom");
}

SeededRng::SeededRng(BytesView seed) {
  Bytes k = sha256(seed);
  std::memcpy(key_, k.data(), 32);
}

void SeededRng::fill(uint8_t* out, size_t len) {
  static const uint8_t nonce[12] = {0};
  while (len) {
    if (buf_used_ == sizeof buf_) {
      if (block_ > 0xffffffffull) throw Error("seeded stream exhausted");
      chacha20_block(key_, nonce, uint32_t(block_), buf_);
      ++block_;
      buf_used_ = 0;
    }
    size_t take = std::min(len, sizeof buf_ - buf_used_);
    std::memcpy(out, buf_ + buf_used_, take);
    buf_used_ += take;
    out += take;
    len -= take;
  }
}

}  // namespace dronecrypt
