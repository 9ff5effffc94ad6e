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

#include "dronecrypt/group.hpp"

namespace dronecrypt {

struct KeyPair {
  Scalar y;      // private
  GroupPoint Y;  // public, always y * G
  CurveId curve;
};

KeyPair keypair_from_private(const Scalar& y);

// Key file, bit-exact:
//   "DCKY" | version u8 = 1 | curve_id u8 | kind u8 | payload
// kind 0 = private scalar (32-byte LE payload), kind 1 = public point
// (33-byte compressed payload). Private files are created with
// owner-only permissions.
Bytes private_key_serialize(const Scalar& y);
Bytes public_key_serialize(const GroupPoint& Y);
Scalar private_key_parse(BytesView data);
GroupPoint public_key_parse(BytesView data);

void save_private_key(const Scalar& y, const std::string& path);
void save_public_key(const GroupPoint& Y, const std::string& path);
Scalar load_private_key(const std::string& path);
GroupPoint load_public_key(const std::string& path);

}  // namespace dronecrypt
