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

#include "dronecrypt/keyfile.hpp"

#include "dronecrypt/io.hpp"

namespace dronecrypt {

static const uint8_t kVersion = 1;
static const uint8_t kKindPrivate = 0;
static const uint8_t kKindPublic = 1;

KeyPair keypair_from_private(const Scalar& y) {
  if (scalar_is_zero(y)) throw Error("private key must be nonzero");
  return KeyPair{y, scalar_mul(y, generator(y.curve)), y.curve};
}

static Bytes serialize(CurveId curve, uint8_t kind, BytesView payload) {
  Bytes out;
  out.reserve(7 + payload.size());
  const char magic[4] = {'D', 'C', 'K', 'Y'};
  append(out, BytesView(reinterpret_cast<const uint8_t*>(magic), 4));
  out.push_back(kVersion);
  out.push_back(uint8_t(curve));
  out.push_back(kind);
  append(out, payload);
  return out;
}

Bytes private_key_serialize(const Scalar& y) {
  return serialize(y.curve, kKindPrivate, scalar_serialize(y));
}

Bytes public_key_serialize(const GroupPoint& Y) {
  return serialize(Y.curve, kKindPublic, point_serialize(Y));
}

static CurveId parse_header(BytesView data, uint8_t want_kind, size_t payload_len) {
  if (data.size() < 7) throw Error("key file too short");
  if (data[0] != 'D' || data[1] != 'C' || data[2] != 'K' || data[3] != 'Y')
    throw Error("bad key file magic");
  if (data[4] != kVersion) throw Error("unsupported key file version");
  CurveId curve = curve_from_byte(data[5]);
  if (data[6] != want_kind)
    throw Error(want_kind == kKindPrivate ? "not a private key file" : "not a public key file");
  if (data.size() != 7 + payload_len) throw Error("key file length mismatch");
  return curve;
}

Scalar private_key_parse(BytesView data) {
  CurveId curve = parse_header(data, kKindPrivate, 32);
  Scalar y = scalar_deserialize(data.subspan(7), curve);
  if (scalar_is_zero(y)) throw Error("private key must be nonzero");
  return y;
}

GroupPoint public_key_parse(BytesView data) {
  CurveId curve = parse_header(data, kKindPublic, 33);
  return point_deserialize(data.subspan(7), curve);
}

void save_private_key(const Scalar& y, const std::string& path) {
  write_file(path, private_key_serialize(y), /*private_mode=*/true);
}

void save_public_key(const GroupPoint& Y, const std::string& path) {
  write_file(path, public_key_serialize(Y));
}

Scalar load_private_key(const std::string& path) { return private_key_parse(read_file(path)); }

GroupPoint load_public_key(const std::string& path) { return public_key_parse(read_file(path)); }

}  // namespace dronecrypt
