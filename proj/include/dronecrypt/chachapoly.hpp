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

// ChaCha20-Poly1305 AEAD, RFC construction: one-time Poly1305 key from
// keystream block 0, payload encrypted from block 1, tag over
// aad | pad | ct | pad | len(aad) | len(ct).
AeadOutput chachapoly_seal(BytesView key, BytesView nonce, BytesView aad, BytesView m);
std::optional<Bytes> chachapoly_open(BytesView key, BytesView nonce, BytesView aad,
                                     BytesView ciphertext, BytesView tag);

}  // namespace dronecrypt
