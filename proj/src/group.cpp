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

#include "dronecrypt/group.hpp"

#include "curves_internal.hpp"

namespace dronecrypt {

using internal::CurveCtx;

namespace internal {

const CurveCtx& ctx(CurveId id) {
  static const CurveCtx weier = [] {
    CurveCtx c;
    c.id = CurveId::BaselineWeierstrass;
    w_init(c);
    return c;
  }();
  static const CurveCtx edw = [] {
    CurveCtx c;
    c.id = CurveId::FastEdwards;
    e_init(c);
    return c;
  }();
  return id == CurveId::BaselineWeierstrass ? weier : edw;
}

GroupPoint backend_add(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b) {
  return c.id == CurveId::BaselineWeierstrass ? w_add(c, a, b) : e_add(c, a, b);
}

GroupPoint backend_dbl(const CurveCtx& c, const GroupPoint& p) {
  return c.id == CurveId::BaselineWeierstrass ? w_dbl(c, p) : e_dbl(c, p);
}

bool backend_is_identity(const CurveCtx& c, const GroupPoint& p) {
  return c.id == CurveId::BaselineWeierstrass ? p.z.is_zero() : e_equal(c, p, c.ident);
}

GroupPoint backend_mul(const CurveCtx& c, const U256& k, const GroupPoint& p) {
  int top = 255;
  while (top >= 0 && !k.bit(unsigned(top))) --top;
  GroupPoint acc = c.ident;
  for (int i = top; i >= 0; --i) {
    acc = backend_dbl(c, acc);
    if (k.bit(unsigned(i))) acc = backend_add(c, acc, p);
  }
  return acc;
}

}  // namespace internal

const char* curve_name(CurveId c) {
  return c == CurveId::BaselineWeierstrass ? "secp256k1" : "edwards25519";
}

CurveId curve_from_byte(uint8_t b) {
  if (b == uint8_t(CurveId::BaselineWeierstrass)) return CurveId::BaselineWeierstrass;
  if (b == uint8_t(CurveId::FastEdwards)) return CurveId::FastEdwards;
  throw Error("unknown curve id");
}

static thread_local OpCounts g_op_counts;

OpCounts op_counts_snapshot() { return g_op_counts; }
void op_counts_reset() { g_op_counts = OpCounts{}; }

const U256& group_order(CurveId curve) { return internal::ctx(curve).fn.modulus(); }
const U256& field_prime(CurveId curve) { return internal::ctx(curve).fp.modulus(); }

GroupPoint generator(CurveId curve) { return internal::ctx(curve).gen; }
GroupPoint group_identity(CurveId curve) { return internal::ctx(curve).ident; }

bool point_is_identity(const GroupPoint& p) {
  return internal::backend_is_identity(internal::ctx(p.curve), p);
}

bool point_equal(const GroupPoint& a, const GroupPoint& b) {
  if (a.curve != b.curve) throw Error("curve mismatch");
  const CurveCtx& c = internal::ctx(a.curve);
  return a.curve == CurveId::BaselineWeierstrass ? internal::w_equal(c, a, b)
                                                 : internal::e_equal(c, a, b);
}

GroupPoint point_negate(const GroupPoint& p) {
  const CurveCtx& c = internal::ctx(p.curve);
  return p.curve == CurveId::BaselineWeierstrass ? internal::w_negate(c, p)
                                                 : internal::e_negate(c, p);
}

GroupPoint point_add(const GroupPoint& a, const GroupPoint& b) {
  if (a.curve != b.curve) throw Error("curve mismatch");
  ++g_op_counts.point_adds;
  return internal::backend_add(internal::ctx(a.curve), a, b);
}

GroupPoint scalar_mul(const Scalar& k, const GroupPoint& p) {
  if (k.curve != p.curve) throw Error("curve mismatch");
  ++g_op_counts.scalar_muls;
  return internal::backend_mul(internal::ctx(p.curve), k.v, p);
}

GroupPoint point_normalize(const GroupPoint& p) {
  const CurveCtx& c = internal::ctx(p.curve);
  const ModCtx& f = c.fp;
  if (p.curve == CurveId::BaselineWeierstrass) {
    if (p.z.is_zero()) return p;
    U256 zi = f.inv_mont(p.z);
    U256 zi2 = f.mont_sqr(zi);
    return GroupPoint{p.curve, f.mont_mul(p.x, zi2), f.mont_mul(p.y, f.mont_mul(zi2, zi)),
                      f.r1(), U256::zero()};
  }
  U256 zi = f.inv_mont(p.z);
  U256 x = f.mont_mul(p.x, zi);
  U256 y = f.mont_mul(p.y, zi);
  return GroupPoint{p.curve, x, y, f.r1(), f.mont_mul(x, y)};
}

Bytes point_serialize(const GroupPoint& p) {
  const CurveCtx& c = internal::ctx(p.curve);
  return p.curve == CurveId::BaselineWeierstrass ? internal::w_serialize(c, p)
                                                 : internal::e_serialize(c, p);
}

GroupPoint point_deserialize(BytesView enc, CurveId curve) {
  const CurveCtx& c = internal::ctx(curve);
  return curve == CurveId::BaselineWeierstrass ? internal::w_deserialize(c, enc)
                                               : internal::e_deserialize(c, enc);
}

Scalar scalar_zero(CurveId curve) { return Scalar{curve, U256::zero()}; }

Scalar scalar_from_u64(CurveId curve, uint64_t v) {
  return scalar_from_u256(curve, U256::from_u64(v));
}

Scalar scalar_from_u256(CurveId curve, const U256& v) {
  return Scalar{curve, internal::ctx(curve).fn.reduce(v)};
}

static const ModCtx& order_ctx(const Scalar& a, const Scalar& b) {
  if (a.curve != b.curve) throw Error("curve mismatch");
  return internal::ctx(a.curve).fn;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  return Scalar{a.curve, order_ctx(a, b).add(a.v, b.v)};
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
  return Scalar{a.curve, order_ctx(a, b).sub(a.v, b.v)};
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  return Scalar{a.curve, order_ctx(a, b).mul_plain(a.v, b.v)};
}

Scalar scalar_negate(const Scalar& a) {
  return Scalar{a.curve, internal::ctx(a.curve).fn.neg(a.v)};
}

Scalar scalar_invert(const Scalar& a) {
  if (a.v.is_zero()) throw Error("cannot invert the zero scalar");
  return Scalar{a.curve, internal::ctx(a.curve).fn.inv_plain(a.v)};
}

Bytes scalar_serialize(const Scalar& a) {
  Bytes out(32);
  u256_to_le_bytes(a.v, out.data());
  return out;
}

Scalar scalar_deserialize(BytesView enc, CurveId curve) {
  if (enc.size() != 32) throw Error("scalar encoding must be 32 bytes");
  U256 v = u256_from_le_bytes(enc.data());
  if (u256_cmp(v, group_order(curve)) >= 0) throw Error("scalar not reduced mod n");
  return Scalar{curve, v};
}

Scalar random_scalar(CurveId curve, Rng& rng) {
  const U256& n = group_order(curve);
  uint8_t buf[32];
  for (;;) {
    rng.fill(buf, sizeof buf);
    U256 v = u256_from_le_bytes(buf);
    if (!v.is_zero() && u256_cmp(v, n) < 0) return Scalar{curve, v};
  }
}

}  // namespace dronecrypt
