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

// Raw encoded DH point, byte-identical on both sides of an exchange.
// Key derivation on top of it is the caller's job (see ecies for the
// pattern).
using SharedSecret = Bytes;

// Standard mode (table null): fresh scalar plus one scalar_mul.
// BPV mode: one bpv_online draw, EC additions only.
KeyPair ecdh_keygen(CurveId curve, Rng& rng, const BpvTable* table = nullptr);

// encode(my_private * peer_public): the 32-byte big-endian x-coordinate
// on the Weierstrass curve, the 33-byte compressed point on Edwards.
SharedSecret ecdh_derive(const Scalar& my_private, const GroupPoint& peer_public);

}  // namespace dronecrypt
