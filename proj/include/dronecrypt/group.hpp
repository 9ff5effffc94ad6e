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
#include "dronecrypt/rng.hpp"
#include "dronecrypt/u256.hpp"

namespace dronecrypt {

// Wire values; 0 is reserved so an all-zero header is never a valid curve.
enum class CurveId : uint8_t {
  BaselineWeierstrass = 1,  // secp256k1
  FastEdwards = 2,          // edwards25519
};

const char* curve_name(CurveId c);
CurveId curve_from_byte(uint8_t b);  // throws Error on unknown id

// Integer modulo the subgroup order n of its curve, always fully reduced.
struct Scalar {
  CurveId curve;
  U256 v;
};

// Element of the prime-order subgroup, identity included. Coordinates are
// an internal projective representation (Jacobian for Weierstrass,
// extended for Edwards), field elements in Montgomery form. Treat as
// opaque outside src/.
struct GroupPoint {
  CurveId curve;
  U256 x, y, z, t;
};

// Operation counters, incremented only by the public point_add and
// scalar_mul entry points below. Internal ladder steps and deserialization
// validation do not count. Thread-local; always compiled in.
struct OpCounts {
  uint64_t scalar_muls = 0;
  uint64_t point_adds = 0;
};
OpCounts op_counts_snapshot();
void op_counts_reset();

const U256& group_order(CurveId curve);
const U256& field_prime(CurveId curve);

GroupPoint generator(CurveId curve);
GroupPoint group_identity(CurveId curve);
bool point_is_identity(const GroupPoint& p);
bool point_equal(const GroupPoint& a, const GroupPoint& b);  // same curve required
GroupPoint point_negate(const GroupPoint& p);

GroupPoint point_add(const GroupPoint& a, const GroupPoint& b);   // throws on curve mismatch
GroupPoint scalar_mul(const Scalar& k, const GroupPoint& p);      // throws on curve mismatch

// Same point with z = 1 coordinates (identity returned unchanged).
GroupPoint point_normalize(const GroupPoint& p);

// Compressed encodings, 33 bytes:
//   Weierstrass: 0x02/0x03 (parity of y) then x, 32 bytes big-endian.
//   Edwards: 0x04 with the sign bit of x in the header's low bit
//   (0x04/0x05), then y, 32 bytes little-endian.
// Deserialization rejects wrong length, non-canonical coordinates,
// off-curve encodings, and (Edwards) points outside the prime-order
// subgroup via an order check.
Bytes point_serialize(const GroupPoint& p);
GroupPoint point_deserialize(BytesView enc, CurveId curve);

Scalar scalar_zero(CurveId curve);
Scalar scalar_from_u64(CurveId curve, uint64_t v);
Scalar scalar_from_u256(CurveId curve, const U256& v);  // reduces mod n
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_negate(const Scalar& a);
Scalar scalar_invert(const Scalar& a);  // throws Error on zero
inline bool scalar_is_zero(const Scalar& a) { return a.v.is_zero(); }
inline bool scalar_equal(const Scalar& a, const Scalar& b) {
  return a.curve == b.curve && a.v == b.v;
}

// Fixed 32-byte little-endian form; deserialization rejects values >= n.
Bytes scalar_serialize(const Scalar& a);
Scalar scalar_deserialize(BytesView enc, CurveId curve);

// Uniform over [1, n-1] by rejection sampling.
Scalar random_scalar(CurveId curve, Rng& rng);

}  // namespace dronecrypt
