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

#include "dronecrypt/group.hpp"
#include "dronecrypt/modarith.hpp"

// Backend internals shared between group.cpp and the two curve files.
// Nothing here touches the operation counters; counting happens only in
// the public entry points.

namespace dronecrypt::internal {

struct CurveCtx {
  CurveId id;
  ModCtx fp;  // base field
  ModCtx fn;  // subgroup order
  GroupPoint gen;
  GroupPoint ident;
  // Montgomery-form curve constants.
  U256 w_b;       // Weierstrass: b
  U256 e_d;       // Edwards: d
  U256 e_d2;      // Edwards: 2d
  U256 e_sqrtm1;  // Edwards: sqrt(-1) mod p
};

const CurveCtx& ctx(CurveId id);

// Weierstrass backend (Jacobian coordinates, infinity has z = 0).
GroupPoint w_add(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b);
GroupPoint w_dbl(const CurveCtx& c, const GroupPoint& p);
GroupPoint w_negate(const CurveCtx& c, const GroupPoint& p);
bool w_equal(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b);
Bytes w_serialize(const CurveCtx& c, const GroupPoint& p);
GroupPoint w_deserialize(const CurveCtx& c, BytesView enc);
void w_init(CurveCtx& c);

// Edwards backend (extended coordinates; identity is (0,1,1,0)).
GroupPoint e_add(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b);
GroupPoint e_dbl(const CurveCtx& c, const GroupPoint& p);
GroupPoint e_negate(const CurveCtx& c, const GroupPoint& p);
bool e_equal(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b);
Bytes e_serialize(const CurveCtx& c, const GroupPoint& p);
GroupPoint e_deserialize(const CurveCtx& c, BytesView enc);
void e_init(CurveCtx& c);

// Dispatchers, uncounted.
GroupPoint backend_add(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b);
GroupPoint backend_dbl(const CurveCtx& c, const GroupPoint& p);
bool backend_is_identity(const CurveCtx& c, const GroupPoint& p);

// Plain MSB-first double-and-add on a raw 256-bit multiplier.
GroupPoint backend_mul(const CurveCtx& c, const U256& k, const GroupPoint& p);

}  // namespace dronecrypt::internal
