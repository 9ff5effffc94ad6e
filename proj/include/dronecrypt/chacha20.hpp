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

// 20-round ChaCha block function: writes one 64-byte keystream block.
void chacha20_block(const uint8_t key[32], const uint8_t nonce[12], uint32_t counter,
                    uint8_t out[64]);

// Keystream XOR starting at the given block counter; encryption and
// decryption are the same call. key 32 bytes, nonce 12 bytes.
Bytes chacha20_xor(BytesView key, BytesView nonce, uint32_t counter, BytesView data);

}  // namespace dronecrypt
