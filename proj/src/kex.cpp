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

#include "dronecrypt/kex.hpp"

namespace dronecrypt {

KeyPair ecdh_keygen(CurveId curve, Rng& rng, const BpvTable* table) {
  if (table) {
    if (table->params.curve != curve) throw Error("BPV table curve mismatch");
    auto [a, A] = bpv_online(*table, rng);
    return KeyPair{a, A, curve};
  }
  Scalar a = random_scalar(curve, rng);
  return KeyPair{a, scalar_mul(a, generator(curve)), curve};
}

SharedSecret ecdh_derive(const Scalar& my_private, const GroupPoint& peer_public) {
  if (my_private.curve != peer_public.curve) throw Error("curve mismatch");
  GroupPoint shared = scalar_mul(my_private, peer_public);
  // A Weierstrass identity result has no x-coordinate; serialize throws.
  Bytes enc = point_serialize(shared);
  if (my_private.curve == CurveId::BaselineWeierstrass)
    return Bytes(enc.begin() + 1, enc.end());  // x-coordinate, big-endian
  return enc;
}

}  // namespace dronecrypt
