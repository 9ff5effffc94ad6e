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

#include "dronecrypt/sigs.hpp"

#include "dronecrypt/sha256.hpp"

namespace dronecrypt {

Scalar hash_to_scalar(CurveId curve, BytesView data) {
  Bytes digest = sha256(data);
  Scalar s = scalar_from_u256(curve, u256_from_be_bytes(digest.data()));
  for (uint8_t ctr = 1; scalar_is_zero(s); ++ctr) {
    Bytes retry(data.begin(), data.end());
    retry.push_back(ctr);
    digest = sha256(retry);
    s = scalar_from_u256(curve, u256_from_be_bytes(digest.data()));
  }
  return s;
}

static Scalar challenge(CurveId curve, BytesView m, const GroupPoint& R) {
  Bytes data(m.begin(), m.end());
  append(data, point_serialize(R));
  return hash_to_scalar(curve, data);
}

SchnorrSignature schnorr_sign(BytesView m, const KeyPair& key, Rng& rng,
                              const BpvTable* table) {
  Scalar r{};
  GroupPoint R{};
  if (table) {
    if (table->params.curve != key.curve) throw Error("BPV table curve mismatch");
    auto pair = bpv_online(*table, rng);
    r = pair.first;
    R = pair.second;
  } else {
    r = random_scalar(key.curve, rng);
    R = scalar_mul(r, generator(key.curve));
  }
  Scalar e = challenge(key.curve, m, R);
  Scalar s = scalar_sub(r, scalar_mul(e, key.y));
  return SchnorrSignature{s, e};
}

bool schnorr_verify(BytesView m, const SchnorrSignature& sig, const GroupPoint& Y) {
  if (sig.s.curve != Y.curve || sig.e.curve != Y.curve) return false;
  GroupPoint r1 = scalar_mul(sig.e, Y);
  GroupPoint r2 = scalar_mul(sig.s, generator(Y.curve));
  GroupPoint R = point_add(r1, r2);
  if (point_is_identity(R)) return false;
  return scalar_equal(challenge(Y.curve, m, R), sig.e);
}

Bytes schnorr_sig_serialize(const SchnorrSignature& sig) {
  Bytes out = scalar_serialize(sig.s);
  append(out, scalar_serialize(sig.e));
  return out;
}

SchnorrSignature schnorr_sig_deserialize(BytesView data, CurveId curve) {
  if (data.size() != 64) throw Error("Schnorr signature must be 64 bytes");
  return SchnorrSignature{scalar_deserialize(data.subspan(0, 32), curve),
                          scalar_deserialize(data.subspan(32, 32), curve)};
}

// x-coordinate of a point as a scalar mod n.
static Scalar x_mod_n(const GroupPoint& p) {
  Bytes enc = point_serialize(p);  // header byte then 32-byte big-endian x
  return scalar_from_u256(p.curve, u256_from_be_bytes(&enc[1]));
}

EcdsaSignature ecdsa_sign(BytesView m, const KeyPair& key, Rng& rng) {
  if (key.curve != CurveId::BaselineWeierstrass)
    throw Error("ECDSA runs on the baseline curve only");
  Scalar z = hash_to_scalar(key.curve, m);
  for (;;) {
    Scalar k = random_scalar(key.curve, rng);
    GroupPoint R = scalar_mul(k, generator(key.curve));
    Scalar r = x_mod_n(R);
    if (scalar_is_zero(r)) continue;
    Scalar s = scalar_mul(scalar_invert(k), scalar_add(z, scalar_mul(r, key.y)));
    if (scalar_is_zero(s)) continue;
    return EcdsaSignature{r, s};
  }
}

bool ecdsa_verify(BytesView m, const EcdsaSignature& sig, const GroupPoint& Y) {
  if (Y.curve != CurveId::BaselineWeierstrass) return false;
  if (sig.r.curve != Y.curve || sig.s.curve != Y.curve) return false;
  if (scalar_is_zero(sig.r) || scalar_is_zero(sig.s)) return false;
  Scalar z = hash_to_scalar(Y.curve, m);
  Scalar w = scalar_invert(sig.s);
  GroupPoint X = point_add(scalar_mul(scalar_mul(z, w), generator(Y.curve)),
                           scalar_mul(scalar_mul(sig.r, w), Y));
  if (point_is_identity(X)) return false;
  return scalar_equal(x_mod_n(X), sig.r);
}

Bytes ecdsa_sig_serialize(const EcdsaSignature& sig) {
  Bytes out(64);
  u256_to_be_bytes(sig.r.v, &out[0]);
  u256_to_be_bytes(sig.s.v, &out[32]);
  return out;
}

EcdsaSignature ecdsa_sig_deserialize(BytesView data) {
  if (data.size() != 64) throw Error("ECDSA signature must be 64 bytes");
  CurveId curve = CurveId::BaselineWeierstrass;
  U256 r = u256_from_be_bytes(&data[0]);
  U256 s = u256_from_be_bytes(&data[32]);
  if (u256_cmp(r, group_order(curve)) >= 0 || u256_cmp(s, group_order(curve)) >= 0)
    throw Error("signature component not reduced mod n");
  if (r.is_zero() || s.is_zero()) throw Error("signature component is zero");
  return EcdsaSignature{Scalar{curve, r}, Scalar{curve, s}};
}

}  // namespace dronecrypt
