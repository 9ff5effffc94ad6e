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

#include "curves_internal.hpp"

// secp256k1: y^2 = x^3 + 7 over F_p, prime order (cofactor 1), Jacobian
// coordinates (X, Y, Z) with x = X/Z^2, y = Y/Z^3. Infinity is Z = 0.

namespace dronecrypt::internal {

static const char* kP = "fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f";
static const char* kN = "fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141";
static const char* kGx = "79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798";
static const char* kGy = "483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8";

void w_init(CurveCtx& c) {
  c.fp = ModCtx::make(u256_from_hex(kP));
  c.fn = ModCtx::make(u256_from_hex(kN));
  c.w_b = c.fp.to_mont(U256::from_u64(7));

  c.ident = GroupPoint{c.id, c.fp.r1(), c.fp.r1(), U256::zero(), U256::zero()};
  c.gen = GroupPoint{c.id, c.fp.to_mont(u256_from_hex(kGx)),
                     c.fp.to_mont(u256_from_hex(kGy)), c.fp.r1(), U256::zero()};
}

static bool is_inf(const GroupPoint& p) { return p.z.is_zero(); }

// dbl-2009-l, specialized to a = 0.
GroupPoint w_dbl(const CurveCtx& c, const GroupPoint& p) {
  if (is_inf(p)) return p;
  const ModCtx& f = c.fp;
  U256 a = f.mont_sqr(p.x);
  U256 b = f.mont_sqr(p.y);
  U256 cc = f.mont_sqr(b);
  U256 d = f.mont_sqr(f.add(p.x, b));
  d = f.sub(f.sub(d, a), cc);
  d = f.add(d, d);
  U256 e = f.add(f.add(a, a), a);
  U256 ff = f.mont_sqr(e);
  U256 x3 = f.sub(ff, f.add(d, d));
  U256 c8 = f.add(cc, cc);
  c8 = f.add(c8, c8);
  c8 = f.add(c8, c8);
  U256 y3 = f.sub(f.mont_mul(e, f.sub(d, x3)), c8);
  U256 yz = f.mont_mul(p.y, p.z);
  U256 z3 = f.add(yz, yz);
  return GroupPoint{c.id, x3, y3, z3, U256::zero()};
}

// add-2007-bl with the degenerate cases handled explicitly.
GroupPoint w_add(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b) {
  if (is_inf(a)) return b;
  if (is_inf(b)) return a;
  const ModCtx& f = c.fp;
  U256 z1z1 = f.mont_sqr(a.z);
  U256 z2z2 = f.mont_sqr(b.z);
  U256 u1 = f.mont_mul(a.x, z2z2);
  U256 u2 = f.mont_mul(b.x, z1z1);
  U256 s1 = f.mont_mul(f.mont_mul(a.y, b.z), z2z2);
  U256 s2 = f.mont_mul(f.mont_mul(b.y, a.z), z1z1);
  U256 h = f.sub(u2, u1);
  U256 rr = f.sub(s2, s1);
  if (h.is_zero()) {
    if (rr.is_zero()) return w_dbl(c, a);
    return c.ident;  // b = -a
  }
  rr = f.add(rr, rr);
  U256 i = f.mont_sqr(f.add(h, h));
  U256 j = f.mont_mul(h, i);
  U256 v = f.mont_mul(u1, i);
  U256 x3 = f.sub(f.sub(f.mont_sqr(rr), j), f.add(v, v));
  U256 s1j = f.mont_mul(s1, j);
  U256 y3 = f.sub(f.mont_mul(rr, f.sub(v, x3)), f.add(s1j, s1j));
  U256 z3 = f.mont_sqr(f.add(a.z, b.z));
  z3 = f.mont_mul(f.sub(f.sub(z3, z1z1), z2z2), h);
  return GroupPoint{c.id, x3, y3, z3, U256::zero()};
}

GroupPoint w_negate(const CurveCtx& c, const GroupPoint& p) {
  if (is_inf(p)) return p;
  return GroupPoint{c.id, p.x, c.fp.neg(p.y), p.z, U256::zero()};
}

bool w_equal(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b) {
  if (is_inf(a) || is_inf(b)) return is_inf(a) == is_inf(b);
  const ModCtx& f = c.fp;
  U256 z1z1 = f.mont_sqr(a.z);
  U256 z2z2 = f.mont_sqr(b.z);
  if (!(f.mont_mul(a.x, z2z2) == f.mont_mul(b.x, z1z1))) return false;
  U256 z1c = f.mont_mul(z1z1, a.z);
  U256 z2c = f.mont_mul(z2z2, b.z);
  return f.mont_mul(a.y, z2c) == f.mont_mul(b.y, z1c);
}

// (x, y) in canonical form; requires p not at infinity.
static void w_affine(const CurveCtx& c, const GroupPoint& p, U256& x, U256& y) {
  const ModCtx& f = c.fp;
  U256 zi = f.inv_mont(p.z);
  U256 zi2 = f.mont_sqr(zi);
  x = f.from_mont(f.mont_mul(p.x, zi2));
  y = f.from_mont(f.mont_mul(p.y, f.mont_mul(zi2, zi)));
}

Bytes w_serialize(const CurveCtx& c, const GroupPoint& p) {
  if (is_inf(p)) throw Error("cannot serialize the point at infinity");
  U256 x, y;
  w_affine(c, p, x, y);
  Bytes out(33);
  out[0] = y.is_odd() ? 0x03 : 0x02;
  u256_to_be_bytes(x, &out[1]);
  return out;
}

GroupPoint w_deserialize(const CurveCtx& c, BytesView enc) {
  if (enc.size() != 33) throw Error("point encoding must be 33 bytes");
  if (enc[0] != 0x02 && enc[0] != 0x03) throw Error("bad point header byte");
  const ModCtx& f = c.fp;
  U256 x = u256_from_be_bytes(&enc[1]);
  if (u256_cmp(x, f.modulus()) >= 0) throw Error("x coordinate out of range");

  U256 xm = f.to_mont(x);
  U256 rhs = f.add(f.mont_mul(f.mont_sqr(xm), xm), c.w_b);
  // p = 3 mod 4: candidate root is rhs^((p+1)/4).
  U256 e = f.modulus();
  uint64_t carry = u256_add(e, e, U256::one());
  u256_shr1(e, carry);
  u256_shr1(e);
  U256 ym = f.pow_mont(rhs, e);
  if (!(f.mont_sqr(ym) == rhs)) throw Error("point not on curve");

  U256 y = f.from_mont(ym);
  if (y.is_odd() != (enc[0] == 0x03)) {
    ym = f.neg(ym);
  }
  // Cofactor 1: every finite on-curve point lies in the prime-order subgroup.
  return GroupPoint{c.id, xm, ym, f.r1(), U256::zero()};
}

}  // namespace dronecrypt::internal
