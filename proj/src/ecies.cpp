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

#include "dronecrypt/ecies.hpp"

#include "dronecrypt/aes.hpp"
#include "dronecrypt/chacha20.hpp"
#include "dronecrypt/hmac_sha256.hpp"
#include "dronecrypt/poly1305.hpp"

namespace dronecrypt {

const char* suite_name(SymSuite s) {
  return s == SymSuite::Standard ? "standard" : "light";
}

SymSuite suite_from_byte(uint8_t b) {
  if (b == uint8_t(SymSuite::Standard)) return SymSuite::Standard;
  if (b == uint8_t(SymSuite::Light)) return SymSuite::Light;
  throw Error("unknown suite id");
}

size_t suite_tag_len(SymSuite s) { return s == SymSuite::Standard ? 32 : 16; }

KdfOutput kdf(BytesView shared) {
  static const std::string kLabel = "dronecrypt-ecies-v1";
  Bytes prk = hmac_sha256(as_bytes(kLabel), shared);
  Bytes t1 = hmac_sha256(prk, Bytes{0x01});
  Bytes t2_input = t1;
  t2_input.push_back(0x02);
  Bytes t2 = hmac_sha256(prk, t2_input);
  return KdfOutput{t1, t2};
}

static const uint8_t kZeroIv16[16] = {0};
static const uint8_t kZeroNonce12[12] = {0};

static Bytes suite_encrypt(SymSuite suite, const KdfOutput& keys, BytesView m) {
  if (suite == SymSuite::Standard)
    return aes_ctr_xor(BytesView(keys.k_enc.data(), 16), BytesView(kZeroIv16, 16), m);
  return chacha20_xor(keys.k_enc, BytesView(kZeroNonce12, 12), 0, m);
}

static Bytes suite_mac(SymSuite suite, const KdfOutput& keys, BytesView c) {
  if (suite == SymSuite::Standard) return hmac_sha256(keys.k_mac, c);
  // k_mac is single-use here (fresh T per encryption), as Poly1305 needs.
  return poly1305_tag(keys.k_mac, c);
}

EciesCiphertext ecies_encrypt(BytesView m, const GroupPoint& Y, Rng& rng, SymSuite suite,
                              const BpvTable* table) {
  Scalar r{};
  GroupPoint R{};
  if (table) {
    if (table->params.curve != Y.curve) throw Error("BPV table curve mismatch");
    auto pair = bpv_online(*table, rng);
    r = pair.first;
    R = pair.second;
  } else {
    r = random_scalar(Y.curve, rng);
    R = scalar_mul(r, generator(Y.curve));
  }
  GroupPoint T = scalar_mul(r, Y);
  KdfOutput keys = kdf(point_serialize(T));
  EciesCiphertext ct;
  ct.R = R;
  ct.suite = suite;
  ct.c = suite_encrypt(suite, keys, m);
  ct.d = suite_mac(suite, keys, ct.c);
  return ct;
}

std::optional<Bytes> ecies_decrypt(const KeyPair& key, const EciesCiphertext& ct) {
  if (key.curve != ct.R.curve) throw Error("curve mismatch");
  GroupPoint T = scalar_mul(key.y, ct.R);
  KdfOutput keys = kdf(point_serialize(T));
  Bytes expect = suite_mac(ct.suite, keys, ct.c);
  if (!ct_equal(expect, ct.d)) return std::nullopt;
  // CTR and ChaCha20 are involutions; decrypt is the same keystream XOR.
  return suite_encrypt(ct.suite, keys, ct.c);
}

Bytes ecies_serialize(const EciesCiphertext& ct) {
  Bytes out;
  out.reserve(10 + 33 + ct.c.size() + ct.d.size());
  const char magic[4] = {'D', 'C', 'E', '1'};
  append(out, BytesView(reinterpret_cast<const uint8_t*>(magic), 4));
  out.push_back(uint8_t(ct.R.curve));
  out.push_back(uint8_t(ct.suite));
  append(out, point_serialize(ct.R));
  uint8_t len[4];
  store_le32(len, uint32_t(ct.c.size()));
  append(out, BytesView(len, 4));
  append(out, ct.c);
  append(out, ct.d);
  return out;
}

EciesCiphertext ecies_parse(BytesView data) {
  if (data.size() < 43) throw Error("ciphertext too short");
  if (data[0] != 'D' || data[1] != 'C' || data[2] != 'E' || data[3] != '1')
    throw Error("bad ciphertext magic");
  CurveId curve = curve_from_byte(data[4]);
  SymSuite suite = suite_from_byte(data[5]);
  GroupPoint R = point_deserialize(data.subspan(6, 33), curve);
  uint32_t c_len = load_le32(&data[39]);
  size_t tag_len = suite_tag_len(suite);
  if (data.size() != 43 + size_t(c_len) + tag_len) throw Error("ciphertext length mismatch");
  EciesCiphertext ct;
  ct.R = R;
  ct.suite = suite;
  ct.c.assign(data.begin() + 43, data.begin() + 43 + c_len);
  ct.d.assign(data.begin() + 43 + c_len, data.end());
  return ct;
}

}  // namespace dronecrypt
