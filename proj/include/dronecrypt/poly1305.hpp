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

// One-time authenticator over 2^130 - 5. The 32-byte key is (r, s) and
// must never authenticate two different messages; enforcing that
// discipline is the caller's job.
Bytes poly1305_tag(BytesView key, BytesView msg);  // 16-byte tag

}  // namespace dronecrypt
