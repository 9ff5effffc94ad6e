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

#include "dronecrypt/bpv.hpp"
#include "dronecrypt/keyfile.hpp"

namespace dronecrypt {

// H: {0,1}* -> [1, n-1]. SHA-256 of the input, read big-endian, reduced
// mod n; the zero residue (never yet observed) rehashes with an appended
// counter byte.
Scalar hash_to_scalar(CurveId curve, BytesView data);

struct SchnorrSignature {
  Scalar s;
  Scalar e;
};

// Nonce (r, R): fresh random scalar plus one scalar_mul when table is
// null, bpv_online otherwise. Then e = H(m | encode(R)), s = r - e*y.
SchnorrSignature schnorr_sign(BytesView m, const KeyPair& key, Rng& rng,
                              const BpvTable* table = nullptr);

// Accepts iff e == H(m | encode(e*Y + s*G)). One code path for both nonce
// sources; nothing in the signature reveals which produced it.
bool schnorr_verify(BytesView m, const SchnorrSignature& sig, const GroupPoint& Y);

// Wire form: s | e, 64 bytes, little-endian scalars.
Bytes schnorr_sig_serialize(const SchnorrSignature& sig);
SchnorrSignature schnorr_sig_deserialize(BytesView data, CurveId curve);

// ECDSA on the baseline curve only, the standard-framework signature.
struct EcdsaSignature {
  Scalar r;
  Scalar s;
};

EcdsaSignature ecdsa_sign(BytesView m, const KeyPair& key, Rng& rng);
bool ecdsa_verify(BytesView m, const EcdsaSignature& sig, const GroupPoint& Y);

// Wire form: r | s, 64 bytes, big-endian scalars.
Bytes ecdsa_sig_serialize(const EcdsaSignature& sig);
EcdsaSignature ecdsa_sig_deserialize(BytesView data);

}  // namespace dronecrypt
