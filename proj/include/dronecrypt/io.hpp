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

#include <string>

#include "dronecrypt/bytes.hpp"

namespace dronecrypt {

Bytes read_file(const std::string& path);  // throws Error on any failure

// private_mode creates the file with owner-only permissions (0600 on
// POSIX) before any secret byte is written; used for private keys and
// BPV tables.
void write_file(const std::string& path, BytesView data, bool private_mode = false);

}  // namespace dronecrypt
