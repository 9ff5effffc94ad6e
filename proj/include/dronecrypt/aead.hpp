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

#include <optional>

#include "dronecrypt/bytes.hpp"

namespace dronecrypt {

struct AeadOutput {
  Bytes ciphertext;
  Bytes tag;  // 16 bytes
};

// chachapoly_seal / aes_gcm_seal produce AeadOutput; the matching open
// verifies the tag before any plaintext is produced and returns nullopt
// (INVALID) on mismatch.

}  // namespace dronecrypt
