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

#include "dronecrypt/aead.hpp"

namespace dronecrypt {

// AES-128-GCM with a 96-bit IV and full 16-byte tag. GHASH is the plain
// shift-and-xor GF(2^128) multiply; speed is measured, not mandated.
AeadOutput aes_gcm_seal(BytesView key, BytesView iv, BytesView aad, BytesView m);
std::optional<Bytes> aes_gcm_open(BytesView key, BytesView iv, BytesView aad,
                                  BytesView ciphertext, BytesView tag);

}  // namespace dronecrypt
